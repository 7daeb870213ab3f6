#include "nsg/core.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>

namespace nsg {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::BadInput: return "BadInput";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::GcdNotOne: return "GcdNotOne";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotAMember: return "NotAMember";
    case ErrorCode::NotASemigroup: return "NotASemigroup";
    case ErrorCode::NotFundamentalGapSet: return "NotFundamentalGapSet";
    case ErrorCode::DegenerateInterval: return "DegenerateInterval";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::OrderViolation: return "OrderViolation";
    case ErrorCode::DepthTooLarge: return "DepthTooLarge";
    case ErrorCode::CapTooSmall: return "CapTooSmall";
    case ErrorCode::BadLambda: return "BadLambda";
    case ErrorCode::BadMu: return "BadMu";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NotPairwiseCoprime: return "NotPairwiseCoprime";
    case ErrorCode::NotMinimalTriple: return "NotMinimalTriple";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::AuditFailed: return "AuditFailed";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::FileNotFound: return "FileNotFound";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

ErrorClass classify(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInput:
    case ErrorCode::BadInput:
    case ErrorCode::ParseError:
    case ErrorCode::GcdNotOne:
    case ErrorCode::Overflow:
    case ErrorCode::NotReduced:
    case ErrorCode::OrderViolation:
    case ErrorCode::DepthTooLarge:
    case ErrorCode::ArityMismatch:
    case ErrorCode::ZeroElement:
    case ErrorCode::NotPairwiseCoprime:
    case ErrorCode::WrongDimension:
    case ErrorCode::FileNotFound:
      return ErrorClass::Input;
    case ErrorCode::BudgetExceeded:
      return ErrorClass::Budget;
    case ErrorCode::InternalInconsistency:
      return ErrorClass::Internal;
    default:
      return ErrorClass::Domain;
  }
}

std::string_view to_string(Irreducibility c) noexcept {
  switch (c) {
    case Irreducibility::Symmetric: return "symmetric";
    case Irreducibility::PseudoSymmetric: return "pseudo_symmetric";
    case Irreducibility::ReducibleOther: return "reducible_other";
  }
  return "unknown";
}

NumericalSemigroup::NumericalSemigroup() : gens_{1}, frobenius_(-1), genus_(0), members_{1} {}

NumericalSemigroup NumericalSemigroup::from_bitmap(std::vector<std::uint8_t> members) {
  NumericalSemigroup s;
  Int last_gap = -1;
  for (Int x = static_cast<Int>(members.size()) - 1; x >= 0; --x) {
    if (!members[static_cast<std::size_t>(x)]) {
      last_gap = x;
      break;
    }
  }
  s.frobenius_ = last_gap;
  members.resize(static_cast<std::size_t>(last_gap + 2), 1);
  members[static_cast<std::size_t>(last_gap + 1)] = 1;
  s.members_ = std::move(members);
  if (last_gap < 0) return s;

  s.genus_ = std::count(s.members_.begin(), s.members_.end(), std::uint8_t{0});
  Int m = 1;
  while (!s.contains(m)) ++m;

  // Minimal generators are m and the nonzero Apery elements of m that are not
  // a sum of two nonzero Apery elements.
  std::vector<Int> apery(static_cast<std::size_t>(m), -1);
  Int found = 0;
  for (Int x = 0; found < m; ++x) {
    if (s.contains(x) && apery[static_cast<std::size_t>(x % m)] < 0) {
      apery[static_cast<std::size_t>(x % m)] = x;
      ++found;
    }
  }
  std::vector<Int> nonzero(apery.begin() + 1, apery.end());
  std::sort(nonzero.begin(), nonzero.end());
  s.gens_ = {m};
  for (std::size_t i = 0; i < nonzero.size(); ++i) {
    const Int w = nonzero[i];
    bool decomposable = false;
    for (std::size_t j = 0; j < i && !decomposable; ++j) {
      const Int rest = w - nonzero[j];
      decomposable = rest > 0 && s.contains(rest);
    }
    if (!decomposable) s.gens_.push_back(w);
  }
  std::sort(s.gens_.begin(), s.gens_.end());
  return s;
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const Int> input) {
  if (input.empty()) fail(ErrorCode::EmptyInput, "generator list is empty");
  for (Int g : input) {
    if (g <= 0) fail(ErrorCode::BadInput, "generators must be positive, got " + std::to_string(g));
  }
  std::vector<Int> gens(input.begin(), input.end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gcd_of(gens) != 1) {
    fail(ErrorCode::GcdNotOne, "gcd of generators is " + std::to_string(gcd_of(gens)) + ", not 1");
  }
  if (gens.front() == 1) return NumericalSemigroup();

  // Grow the membership bitmap until m consecutive members appear; from there
  // on adding m keeps every integer inside S.
  const Int m = gens.front();
  std::vector<std::uint8_t> members;
  Int run = 0;
  for (Int x = 0; run < m; ++x) {
    if (x > kMaxConductor + m) {
      fail(ErrorCode::BudgetExceeded, "conductor exceeds " + std::to_string(kMaxConductor));
    }
    bool in = x == 0;
    for (Int g : gens) {
      if (g > x) break;
      if (members[static_cast<std::size_t>(x - g)]) {
        in = true;
        break;
      }
    }
    members.push_back(in ? 1 : 0);
    run = in ? run + 1 : 0;
  }
  return from_bitmap(std::move(members));
}

NumericalSemigroup NumericalSemigroup::from_predicate(const std::function<bool(Int)>& member,
                                                      Int bound) {
  if (bound > kMaxConductor) {
    fail(ErrorCode::BudgetExceeded, "conductor bound exceeds " + std::to_string(kMaxConductor));
  }
  const Int size = std::max<Int>(bound + 1, 1);
  std::vector<std::uint8_t> members(static_cast<std::size_t>(size));
  for (Int x = 0; x < size; ++x) members[static_cast<std::size_t>(x)] = (x == 0 || member(x)) ? 1 : 0;
  return from_bitmap(std::move(members));
}

namespace {

// First pair (a, b), a <= b, of members whose sum is a gap; empty if closed.
std::vector<Int> closure_witness(const std::vector<std::uint8_t>& members) {
  auto in = [&](Int x) {
    return x >= static_cast<Int>(members.size()) || members[static_cast<std::size_t>(x)] != 0;
  };
  for (Int h = 1; h < static_cast<Int>(members.size()); ++h) {
    if (in(h)) continue;
    for (Int a = 1; 2 * a <= h; ++a) {
      if (in(a) && in(h - a)) return {a, h - a};
    }
  }
  return {};
}

}  // namespace

NumericalSemigroup NumericalSemigroup::from_small_elements(std::vector<std::uint8_t> members) {
  if (members.empty()) members.push_back(1);
  if (!members[0]) fail(ErrorCode::NotASemigroup, "0 must be a member");
  if (static_cast<Int>(members.size()) > kMaxConductor + 1) {
    fail(ErrorCode::BudgetExceeded, "membership bitmap too large");
  }
  if (auto w = closure_witness(members); !w.empty()) {
    fail(ErrorCode::NotASemigroup,
         std::to_string(w[0]) + " + " + std::to_string(w[1]) + " is not a member", w);
  }
  return from_bitmap(std::move(members));
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::span<const Int> gaps) {
  Int top = 0;
  for (Int h : gaps) {
    if (h <= 0) fail(ErrorCode::BadInput, "gaps must be positive, got " + std::to_string(h));
    top = std::max(top, h);
  }
  if (top > kMaxConductor) fail(ErrorCode::BudgetExceeded, "gap too large");
  std::vector<std::uint8_t> members(static_cast<std::size_t>(top + 2), 1);
  for (Int h : gaps) members[static_cast<std::size_t>(h)] = 0;
  return from_small_elements(std::move(members));
}

std::vector<Int> NumericalSemigroup::gaps() const {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(genus_));
  for (Int x = 1; x <= frobenius_; ++x) {
    if (!contains(x)) out.push_back(x);
  }
  return out;
}

std::vector<Int> NumericalSemigroup::small_elements() const {
  std::vector<Int> out;
  for (Int x = 0; x <= frobenius_ + 1; ++x) {
    if (contains(x)) out.push_back(x);
  }
  return out;
}

std::vector<Int> pseudo_frobenius(const NumericalSemigroup& s) {
  if (s.is_natural()) return {-1};
  const Int limit = s.frobenius() + s.multiplicity();
  std::vector<Int> members;
  for (Int x = 1; x <= limit; ++x) {
    if (s.contains(x)) members.push_back(x);
  }
  std::vector<Int> out;
  for (Int x : s.gaps()) {
    bool pf = true;
    for (Int m : members) {
      if (!s.contains(x + m)) {
        pf = false;
        break;
      }
    }
    if (pf) out.push_back(x);
  }
  return out;
}

std::vector<Int> special_gaps(const NumericalSemigroup& s) {
  std::vector<Int> out;
  if (s.is_natural()) return out;
  for (Int x : pseudo_frobenius(s)) {
    if (s.contains(2 * x)) out.push_back(x);
  }
  return out;
}

InvariantReport invariant_report(const NumericalSemigroup& s) {
  InvariantReport r;
  r.multiplicity = s.multiplicity();
  r.embedding_dimension = s.embedding_dimension();
  r.frobenius = s.frobenius();
  r.genus = s.genus();
  r.pseudo_frobenius = pseudo_frobenius(s);
  r.type = static_cast<Int>(r.pseudo_frobenius.size());
  r.wilf_left = checked_mul(r.embedding_dimension, r.genus);
  r.wilf_right = checked_mul(r.embedding_dimension - 1, r.frobenius + 1);
  return r;
}

AperySet apery_set(const NumericalSemigroup& s, Int n) {
  if (n < 1 || !s.contains(n)) {
    fail(ErrorCode::NotAMember, std::to_string(n) + " is not a positive member");
  }
  AperySet ap;
  ap.base = n;
  ap.witnesses.assign(static_cast<std::size_t>(n), -1);
  Int found = 0;
  for (Int x = 0; found < n; ++x) {
    auto& slot = ap.witnesses[static_cast<std::size_t>(x % n)];
    if (slot < 0 && s.contains(x)) {
      slot = x;
      ++found;
    }
  }
  return ap;
}

std::vector<Int> fundamental_gaps(const NumericalSemigroup& s) {
  std::vector<Int> out;
  for (Int x : s.gaps()) {
    if (s.contains(2 * x) && s.contains(3 * x)) out.push_back(x);
  }
  return out;
}

std::vector<Int> divisor_closure(std::span<const Int> xs) {
  std::set<Int> out;
  for (Int x : xs) {
    if (x <= 0) fail(ErrorCode::BadInput, "expected positive integers, got " + std::to_string(x));
    for (Int d = 1; d * d <= x; ++d) {
      if (x % d == 0) {
        out.insert(d);
        out.insert(x / d);
      }
    }
  }
  return {out.begin(), out.end()};
}

NumericalSemigroup from_fundamental_gaps(std::span<const Int> xs) {
  std::vector<Int> wanted(xs.begin(), xs.end());
  std::sort(wanted.begin(), wanted.end());
  wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
  const auto divisors = divisor_closure(wanted);
  NumericalSemigroup candidate;
  try {
    candidate = NumericalSemigroup::from_gaps(divisors);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotASemigroup) throw;
    fail(ErrorCode::NotFundamentalGapSet,
         std::string("complement of the divisor closure is not closed: ") + e.what(), e.witness());
  }
  const auto got = fundamental_gaps(candidate);
  if (got != wanted) {
    fail(ErrorCode::NotFundamentalGapSet,
         "complement of the divisor closure has different fundamental gaps", got);
  }
  return candidate;
}

Irreducibility classify(const NumericalSemigroup& s) {
  if (s.is_natural()) return Irreducibility::Symmetric;
  const Int f = s.frobenius();
  const Int g = s.genus();
  if (2 * g == f + 1) return Irreducibility::Symmetric;
  if (f % 2 == 0 && 2 * g == f + 2) return Irreducibility::PseudoSymmetric;
  return Irreducibility::ReducibleOther;
}

bool is_subset(const NumericalSemigroup& a, const NumericalSemigroup& b) {
  const Int top = std::max(a.frobenius(), b.frobenius()) + 1;
  for (Int x = 0; x <= top; ++x) {
    if (a.contains(x) && !b.contains(x)) return false;
  }
  return true;
}

NumericalSemigroup intersection(const NumericalSemigroup& a, const NumericalSemigroup& b) {
  const Int top = std::max(a.frobenius(), b.frobenius()) + 1;
  return NumericalSemigroup::from_predicate([&](Int x) { return a.contains(x) && b.contains(x); },
                                            top);
}

NumericalSemigroup adjoin_frobenius(const NumericalSemigroup& s) {
  if (s.is_natural()) return s;
  const Int f = s.frobenius();
  return NumericalSemigroup::from_predicate([&](Int x) { return x == f || s.contains(x); }, f + 1);
}

NumericalSemigroup remove_generator(const NumericalSemigroup& s, Int x) {
  const auto& g = s.min_gens();
  if (!std::binary_search(g.begin(), g.end(), x)) {
    fail(ErrorCode::BadInput, std::to_string(x) + " is not a minimal generator");
  }
  return NumericalSemigroup::from_predicate([&](Int y) { return y != x && s.contains(y); },
                                            std::max(s.frobenius(), x) + 1);
}

NumericalSemigroup add_elements(const NumericalSemigroup& s, std::span<const Int> extra) {
  std::vector<Int> gens = s.min_gens();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return NumericalSemigroup::from_generators(gens);
}

SemigroupList oversemigroups(const NumericalSemigroup& s) {
  std::set<NumericalSemigroup> seen{s};
  std::deque<NumericalSemigroup> queue{s};
  while (!queue.empty()) {
    const NumericalSemigroup t = std::move(queue.front());
    queue.pop_front();
    for (Int x : special_gaps(t)) {
      auto up = NumericalSemigroup::from_predicate([&](Int y) { return y == x || t.contains(y); },
                                                   t.frobenius() + 1);
      if (seen.insert(up).second) queue.push_back(std::move(up));
    }
  }
  return {seen.begin(), seen.end()};
}

bool representable(Int x, std::span<const Int> gens) {
  if (x < 0) return false;
  if (x == 0) return true;
  if (x > kMaxConductor) fail(ErrorCode::BudgetExceeded, "representability scan too large");
  std::vector<std::uint8_t> reach(static_cast<std::size_t>(x + 1), 0);
  reach[0] = 1;
  for (Int y = 1; y <= x; ++y) {
    for (Int g : gens) {
      if (g > 0 && g <= y && reach[static_cast<std::size_t>(y - g)]) {
        reach[static_cast<std::size_t>(y)] = 1;
        break;
      }
    }
  }
  return reach[static_cast<std::size_t>(x)] != 0;
}

std::vector<Int> parse_int_list(std::string_view text) {
  std::vector<Int> out;
  auto trim = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t' || v.back() == '\r')) v.remove_suffix(1);
    return v;
  };
  text = trim(text);
  if (text.empty()) fail(ErrorCode::EmptyInput, "empty integer list");
  while (true) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    Int value = 0;
    const auto* end = item.data() + item.size();
    auto [ptr, ec] = std::from_chars(item.data(), end, value);
    if (item.empty() || ec != std::errc() || ptr != end) {
      fail(ErrorCode::ParseError, "cannot parse integer '" + std::string(item) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::string format_gens(const NumericalSemigroup& s) {
  std::string out = "<";
  for (std::size_t i = 0; i < s.min_gens().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.min_gens()[i]);
  }
  return out + ">";
}

}  // namespace nsg
