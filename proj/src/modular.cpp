#include "nsg/modular.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace nsg::modular {

Fraction Fraction::checked(Int num, Int den) {
  if (num < 0 || den < 0 || (num == 0 && den == 0)) {
    fail(ErrorCode::BadInput, "fraction parts must be nonnegative and not both zero");
  }
  if (std::gcd(num, den) != 1) {
    fail(ErrorCode::NotReduced,
         std::to_string(num) + "/" + std::to_string(den) + " is not reduced");
  }
  return Fraction{num, den};
}

Fraction Fraction::reduced(Int num, Int den) {
  if (num < 0 || den < 0 || (num == 0 && den == 0)) {
    fail(ErrorCode::BadInput, "fraction parts must be nonnegative and not both zero");
  }
  const Int g = std::gcd(num, den);
  return Fraction{num / g, den / g};
}

Int determinant(const Fraction& a, const Fraction& b) {
  return checked_sub(checked_mul(b.num, a.den), checked_mul(a.num, b.den));
}

std::string to_string(const Fraction& f) {
  return std::to_string(f.num) + "/" + std::to_string(f.den);
}

namespace {

Int parse_int(std::string_view item) {
  Int value = 0;
  const auto* end = item.data() + item.size();
  auto [ptr, ec] = std::from_chars(item.data(), end, value);
  if (item.empty() || ec != std::errc() || ptr != end) {
    fail(ErrorCode::ParseError, "cannot parse integer '" + std::string(item) + "'");
  }
  return value;
}

void require_positive_reduced(const Fraction& f) {
  if (f.num < 0 || f.den < 0 || (f.num == 0 && f.den == 0)) {
    fail(ErrorCode::BadInput, "malformed fraction " + to_string(f));
  }
  if (std::gcd(f.num, f.den) != 1) fail(ErrorCode::NotReduced, to_string(f) + " is not reduced");
  if (!f.is_positive()) fail(ErrorCode::OrderViolation, to_string(f) + " is not a positive rational");
}

void require_ordered(const Fraction& f1, const Fraction& f2) {
  require_positive_reduced(f1);
  require_positive_reduced(f2);
  if (!(f1 < f2)) fail(ErrorCode::OrderViolation, to_string(f1) + " is not below " + to_string(f2));
}

}  // namespace

Fraction parse_fraction(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Fraction::checked(parse_int(text), 1);
  return Fraction::checked(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string to_string(const RationalInterval& i) {
  return std::string(i.lo_open ? "(" : "[") + to_string(i.lo) + ".." + to_string(i.hi) +
         (i.hi_open ? ")" : "]");
}

RationalInterval parse_interval(std::string_view text) {
  RationalInterval out;
  if (!text.empty() && (text.front() == '(' || text.front() == '[')) {
    out.lo_open = text.front() == '(';
    text.remove_prefix(1);
  }
  if (!text.empty() && (text.back() == ')' || text.back() == ']')) {
    out.hi_open = text.back() == ')';
    text.remove_suffix(1);
  }
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) fail(ErrorCode::ParseError, "interval needs 'lo..hi'");
  out.lo = parse_fraction(text.substr(0, dots));
  out.hi = parse_fraction(text.substr(dots + 2));
  return out;
}

bool is_bezout(const std::vector<Fraction>& terms) {
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    if (!(terms[i] < terms[i + 1]) || determinant(terms[i], terms[i + 1]) != 1) return false;
  }
  return true;
}

bool is_proper_bezout(const std::vector<Fraction>& terms) {
  if (!is_bezout(terms)) return false;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 2; j < terms.size(); ++j) {
      if (determinant(terms[i], terms[j]) < 2) return false;
    }
  }
  return true;
}

bool is_convex(const std::vector<Int>& xs) {
  std::size_t i = 0;
  while (i + 1 < xs.size() && xs[i] >= xs[i + 1]) ++i;
  while (i + 1 < xs.size() && xs[i] <= xs[i + 1]) ++i;
  return i + 1 >= xs.size();
}

std::vector<Int> numerators(const BezoutSequence& seq) {
  std::vector<Int> out;
  out.reserve(seq.terms.size());
  for (const auto& f : seq.terms) out.push_back(f.num);
  return out;
}

NumericalSemigroup solve_prop_modular(Int a, Int b, Int c) {
  if (a < 0 || b < 1 || c < 1) {
    fail(ErrorCode::BadInput, "S(a,b,c) needs a >= 0 and b, c >= 1");
  }
  // a x mod b <= b - 1 <= c x as soon as x >= (b - 1) / c.
  const Int bound = ceil_div(b - 1, c);
  return NumericalSemigroup::from_predicate(
      [&](Int x) {
        const auto lhs = static_cast<Int>((static_cast<__int128>(a) * x) % b);
        return static_cast<__int128>(lhs) <= static_cast<__int128>(c) * x;
      },
      bound);
}

NumericalSemigroup semigroup_from_interval(const RationalInterval& interval) {
  const Fraction lo = interval.lo;
  const Fraction hi = interval.hi;
  require_positive_reduced(lo);
  require_positive_reduced(hi);
  if (lo == hi) fail(ErrorCode::DegenerateInterval, "interval " + to_string(interval) + " is a point");
  if (hi < lo) fail(ErrorCode::OrderViolation, "interval endpoints out of order");

  // From k0 > lo / (hi - lo) on, consecutive dilations k I and (k+1) I overlap
  // with nonempty interior, so every integer above k0 * lo is a member.
  const Int width_num = determinant(lo, hi);
  const Int k0 = checked_mul(lo.num, hi.den) / width_num + 1;
  const Int bound = checked_mul(k0, lo.num) / lo.den + 1;

  return NumericalSemigroup::from_predicate(
      [&](Int x) {
        const __int128 xh = static_cast<__int128>(x) * hi.den;
        // Smallest k with x / k <= hi (or < hi when open).
        __int128 k = interval.hi_open ? xh / hi.num + 1 : (xh + hi.num - 1) / hi.num;
        if (k < 1) k = 1;
        const __int128 klo = k * lo.num;
        const __int128 xl = static_cast<__int128>(x) * lo.den;
        return interval.lo_open ? klo < xl : klo <= xl;
      },
      bound);
}

namespace {

// Descends the Stern-Brocot tree from 1/1 and returns the first node that is
// neither too_small nor too_large. Runs of equal turns are taken in one step
// by exponential search on the run length.
Fraction stern_brocot_descend(const std::function<bool(const Fraction&)>& too_small,
                              const std::function<bool(const Fraction&)>& too_large) {
  Fraction left{0, 1};
  Fraction right{1, 0};
  auto combine = [](const Fraction& a, Int k, const Fraction& b) {
    return Fraction{checked_add(a.num, checked_mul(k, b.num)),
                    checked_add(a.den, checked_mul(k, b.den))};
  };
  while (true) {
    const Fraction node{left.num + right.num, left.den + right.den};
    if (too_small(node)) {
      // Largest k with left + k right still too small.
      Int k = 1;
      while (too_small(combine(left, 2 * k, right))) k *= 2;
      Int lo = k, hi = 2 * k;
      while (hi - lo > 1) {
        const Int mid = lo + (hi - lo) / 2;
        (too_small(combine(left, mid, right)) ? lo : hi) = mid;
      }
      left = combine(left, lo, right);
    } else if (too_large(node)) {
      Int k = 1;
      while (too_large(combine(right, 2 * k, left))) k *= 2;
      Int lo = k, hi = 2 * k;
      while (hi - lo > 1) {
        const Int mid = lo + (hi - lo) / 2;
        (too_large(combine(right, mid, left)) ? lo : hi) = mid;
      }
      right = combine(right, lo, left);
    } else {
      return node;
    }
  }
}

void refine(const Fraction& p, const Fraction& q, std::vector<Fraction>& out) {
  if (determinant(p, q) == 1) {
    out.push_back(q);
    return;
  }
  const Fraction mid = simplest_between(p, q);
  refine(p, mid, out);
  refine(mid, q, out);
}

}  // namespace

Fraction simplest_between(const Fraction& p, const Fraction& q) {
  if (!(p < q)) fail(ErrorCode::OrderViolation, to_string(p) + " is not below " + to_string(q));
  return stern_brocot_descend([&](const Fraction& f) { return f <= p; },
                              [&](const Fraction& f) { return f >= q; });
}

BezoutSequence proper_bezout_sequence(const Fraction& f1, const Fraction& f2) {
  require_ordered(f1, f2);
  std::vector<Fraction> full{f1};
  refine(f1, f2, full);

  // Keep, from each kept term, the farthest later term it is unimodular with.
  BezoutSequence seq;
  seq.terms.push_back(full.front());
  std::size_t i = 0;
  while (i + 1 < full.size()) {
    std::size_t next = i + 1;
    for (std::size_t j = full.size() - 1; j > i + 1; --j) {
      if (determinant(full[i], full[j]) == 1) {
        next = j;
        break;
      }
    }
    seq.terms.push_back(full[next]);
    i = next;
  }
  seq.proper = is_proper_bezout(seq.terms);
  if (!seq.proper || seq.terms.front() != f1 || seq.terms.back() != f2) {
    fail(ErrorCode::InternalInconsistency,
         "Bezout reduction between " + to_string(f1) + " and " + to_string(f2) + " is not proper");
  }
  return seq;
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Undecided: return "undecided";
  }
  return "undecided";
}

namespace {

bool arrange(const std::vector<Int>& gens, std::vector<Int>& seq, std::vector<bool>& used,
             bool increasing) {
  if (seq.size() == gens.size()) return true;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (used[i]) continue;
    const Int v = gens[i];
    bool now_increasing = increasing;
    if (!seq.empty()) {
      const Int last = seq.back();
      if (v > last) {
        now_increasing = true;
      } else if (increasing) {
        continue;
      }
      if (std::gcd(last, v) != 1) continue;
      if (seq.size() >= 2 && (seq[seq.size() - 2] + v) % last != 0) continue;
    }
    used[i] = true;
    seq.push_back(v);
    if (arrange(gens, seq, used, now_increasing)) return true;
    seq.pop_back();
    used[i] = false;
  }
  return false;
}

}  // namespace

PmRecognition is_proportionally_modular(const NumericalSemigroup& s) {
  PmRecognition out;
  const auto& gens = s.min_gens();
  if (static_cast<Int>(gens.size()) > out.search_limit) {
    out.verdict = Verdict::Undecided;
    return out;
  }
  std::vector<Int> seq;
  std::vector<bool> used(gens.size(), false);
  if (arrange(gens, seq, used, false)) {
    out.verdict = Verdict::Yes;
    out.witness = seq;
  } else {
    out.verdict = Verdict::No;
  }
  return out;
}

NumericalSemigroup solve_contracted(Int a, Int b, Int c, Int d) {
  if (a < 0 || d < 0 || b < 1 || c < 1) {
    fail(ErrorCode::BadInput, "contracted inequality needs a, d >= 0 and b, c >= 1");
  }
  const Int bound = ceil_div(checked_add(b - 1, d), c);
  return NumericalSemigroup::from_predicate(
      [&](Int x) {
        const auto lhs = static_cast<__int128>((static_cast<__int128>(a) * x) % b);
        return lhs <= static_cast<__int128>(c) * x - d;
      },
      bound);
}

Fraction stern_brocot_predecessor(const Fraction& f1, const Fraction& f2) {
  require_ordered(f1, f2);
  return stern_brocot_descend([&](const Fraction& f) { return f < f1; },
                              [&](const Fraction& f) { return f > f2; });
}

std::vector<Fraction> stern_brocot_row(int depth) {
  if (depth < 0) fail(ErrorCode::BadInput, "depth must be nonnegative");
  if (depth > 20) fail(ErrorCode::DepthTooLarge, "Stern-Brocot rows are capped at depth 20");
  std::vector<Fraction> row{{0, 1}, {1, 1}, {1, 0}};
  for (int d = 0; d < depth; ++d) {
    std::vector<Fraction> next;
    next.reserve(row.size() * 2 - 1);
    for (std::size_t i = 0; i + 1 < row.size(); ++i) {
      next.push_back(row[i]);
      next.push_back(Fraction{row[i].num + row[i + 1].num, row[i].den + row[i + 1].den});
    }
    next.push_back(row.back());
    row = std::move(next);
  }
  return row;
}

}  // namespace nsg::modular
