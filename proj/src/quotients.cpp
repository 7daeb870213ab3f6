#include "nsg/quotients.hpp"

#include <algorithm>
#include <functional>

namespace nsg::quot {

NumericalSemigroup quotient(const NumericalSemigroup& s, Int p) {
  if (p < 1) fail(ErrorCode::BadInput, "quotient needs p >= 1");
  if (p == 1) return s;
  const Int bound = std::max<Int>(s.frobenius() / p + 1, 0);
  return NumericalSemigroup::from_predicate([&](Int x) { return s.contains(p * x); }, bound);
}

std::vector<Int> quotient_fundamental_gaps(const NumericalSemigroup& s, Int d) {
  if (d < 1) fail(ErrorCode::BadInput, "quotient needs d >= 1");
  std::vector<Int> out;
  for (Int h : fundamental_gaps(s)) {
    if (h % d == 0) out.push_back(h / d);
  }
  if (out != fundamental_gaps(quotient(s, d))) {
    fail(ErrorCode::InternalInconsistency,
         "fundamental gaps of " + format_gens(s) + "/" + std::to_string(d) +
             " disagree with the divisible fundamental gaps of the source");
  }
  return out;
}

namespace {

constexpr std::size_t kMaxMultiples = 2'000'000;

}  // namespace

SemigroupList multiples_up_to(const NumericalSemigroup& s, Int d, Int f_cap) {
  if (d < 1) fail(ErrorCode::BadInput, "multiples need d >= 1");
  if (f_cap < s.frobenius()) {
    fail(ErrorCode::BadInput, "f_cap must be at least F(S) = " + std::to_string(s.frobenius()));
  }
  if (f_cap > 4096) fail(ErrorCode::BudgetExceeded, "f_cap above 4096 is not searched");
  SemigroupList found;
  if (checked_mul(d, s.frobenius()) > f_cap) {
    fail(ErrorCode::CapTooSmall, "every multiple has Frobenius number at least d F(S) = " +
                                     std::to_string(d * s.frobenius()));
  }

  // Positions 1..f_cap are decided in increasing order; multiples of d are
  // fixed by S, sums of earlier members are forced in, the rest branch.
  std::vector<std::uint8_t> member(static_cast<std::size_t>(f_cap + 1), 0);
  member[0] = 1;
  std::function<void(Int)> place = [&](Int y) {
    if (y > f_cap) {
      if (found.size() >= kMaxMultiples) {
        fail(ErrorCode::BudgetExceeded, "too many multiples below the cap");
      }
      found.push_back(NumericalSemigroup::from_predicate(
          [&](Int x) { return member[static_cast<std::size_t>(x)] != 0; }, f_cap));
      return;
    }
    bool forced = false;
    for (Int a = 1; 2 * a <= y && !forced; ++a) {
      forced = member[static_cast<std::size_t>(a)] && member[static_cast<std::size_t>(y - a)];
    }
    auto set = [&](bool in) {
      member[static_cast<std::size_t>(y)] = in ? 1 : 0;
      place(y + 1);
    };
    if (y % d == 0) {
      const bool want = s.contains(y / d);
      if (forced && !want) return;
      set(want);
    } else if (forced) {
      set(true);
    } else {
      set(false);
      set(true);
    }
  };
  place(1);

  if (found.empty()) {
    fail(ErrorCode::CapTooSmall, "no multiple with Frobenius number <= " + std::to_string(f_cap));
  }
  std::sort(found.begin(), found.end());
  return found;
}

MinimalMultiple min_frobenius_of_multiples(const NumericalSemigroup& s, Int d, Int max_cap) {
  Int cap = std::max<Int>({s.frobenius(), checked_mul(d, s.frobenius()), 1});
  while (true) {
    try {
      auto all = multiples_up_to(s, d, cap);
      MinimalMultiple out;
      out.cap_used = cap;
      out.frobenius = all.front().frobenius();
      for (const auto& t : all) out.frobenius = std::min(out.frobenius, t.frobenius());
      for (auto& t : all) {
        if (t.frobenius() == out.frobenius) out.witnesses.push_back(std::move(t));
      }
      return out;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CapTooSmall) throw;
    }
    if (cap >= max_cap) fail(ErrorCode::BudgetExceeded, "no multiple below the maximal cap");
    cap = std::min(cap * 2, max_cap);
  }
}

IrreducibleDecomposition irreducible_decomposition(const NumericalSemigroup& s) {
  IrreducibleDecomposition out;
  out.minimal = true;
  if (is_irreducible(s)) {
    out.components = {s};
    return out;
  }

  SemigroupList irreducible;
  for (auto& t : oversemigroups(s)) {
    if (is_irreducible(t)) irreducible.push_back(std::move(t));
  }
  SemigroupList candidates;
  for (const auto& t : irreducible) {
    const bool has_smaller = std::any_of(irreducible.begin(), irreducible.end(), [&](const auto& u) {
      return u != t && is_subset(u, t);
    });
    if (!has_smaller) candidates.push_back(t);
  }

  // A family intersects to S exactly when its gaps cover H(S).
  const auto gaps = s.gaps();
  const std::size_t words = (gaps.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> cover(candidates.size(), std::vector<std::uint64_t>(words));
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    for (std::size_t i = 0; i < gaps.size(); ++i) {
      if (!candidates[c].contains(gaps[i])) cover[c][i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }
  auto covers_all = [&](const std::vector<std::size_t>& pick) {
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t acc = 0;
      for (std::size_t c : pick) acc |= cover[c][w];
      const std::size_t bits = std::min<std::size_t>(64, gaps.size() - w * 64);
      const std::uint64_t full = bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
      if (acc != full) return false;
    }
    return true;
  };
  auto key = [&](const std::vector<std::size_t>& pick) {
    std::vector<Int> fs;
    for (std::size_t c : pick) fs.push_back(candidates[c].frobenius());
    std::sort(fs.begin(), fs.end());
    std::vector<std::vector<Int>> gens;
    for (std::size_t c : pick) gens.push_back(candidates[c].min_gens());
    std::sort(gens.begin(), gens.end());
    return std::make_pair(fs, gens);
  };

  for (std::size_t k = 2; k <= candidates.size(); ++k) {
    std::vector<std::size_t> best;
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> choose = [&](std::size_t from) {
      if (pick.size() == k) {
        if (covers_all(pick) && (best.empty() || key(pick) < key(best))) best = pick;
        return;
      }
      for (std::size_t c = from; c < candidates.size(); ++c) {
        pick.push_back(c);
        choose(c + 1);
        pick.pop_back();
      }
    };
    choose(0);
    if (!best.empty()) {
      for (std::size_t c : best) out.components.push_back(candidates[c]);
      std::sort(out.components.begin(), out.components.end());
      return out;
    }
  }
  fail(ErrorCode::InternalInconsistency, "no irreducible decomposition found for " + format_gens(s));
}

}  // namespace nsg::quot
