#include "nsg/dim3.hpp"

#include <algorithm>
#include <numeric>

#include "nsg/modular.hpp"
#include "nsg/quotients.hpp"

namespace nsg::dim3 {

namespace {

void require_dim3(const NumericalSemigroup& s) {
  if (s.embedding_dimension() != 3) {
    fail(ErrorCode::WrongDimension, format_gens(s) + " does not have embedding dimension 3",
         {s.embedding_dimension()});
  }
}

void require_pairwise_coprime(Int n1, Int n2, Int n3) {
  if (n1 < 1 || n2 < 1 || n3 < 1) fail(ErrorCode::BadInput, "entries must be positive");
  if (std::gcd(n1, n2) != 1 || std::gcd(n1, n3) != 1 || std::gcd(n2, n3) != 1) {
    fail(ErrorCode::NotPairwiseCoprime, "entries must be pairwise coprime", {n1, n2, n3});
  }
}

}  // namespace

std::optional<SymmetricWitness> symmetric3_witness(const NumericalSemigroup& s) {
  require_dim3(s);
  const auto& n = s.min_gens();
  std::optional<SymmetricWitness> found;
  constexpr int pairs[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
  for (const auto& p : pairs) {
    const Int a = std::gcd(n[p[0]], n[p[1]]);
    if (a < 2) continue;
    const Int m1 = n[p[0]] / a;
    const Int m2 = n[p[1]] / a;
    const Int target = n[p[2]];
    if (m1 < 2 || m2 < 2 || std::gcd(a, target) != 1) continue;
    for (Int b = 0; b * m1 <= target && !found; ++b) {
      const Int rest = target - b * m1;
      if (rest % m2 != 0) continue;
      const Int c = rest / m2;
      if (b + c < 2) continue;
      SymmetricWitness w{a, b, c, m1, m2, 0};
      w.predicted_frobenius = a * (m1 * m2 - m1 - m2) + (a - 1) * target;
      found = w;
    }
    if (found) break;
  }

  const bool symmetric = classify(s) == Irreducibility::Symmetric;
  if (found.has_value() != symmetric) {
    fail(ErrorCode::InternalInconsistency,
         "witness search disagrees with the gap count for " + format_gens(s));
  }
  if (found && found->predicted_frobenius != s.frobenius()) {
    fail(ErrorCode::InternalInconsistency, "Frobenius formula gives " +
                                               std::to_string(found->predicted_frobenius) + " for " +
                                               format_gens(s));
  }
  return found;
}

PseudoSymmetricTest pseudo_symmetric3_test(Int n1, Int n2, Int n3) {
  const std::vector<Int> given{n1, n2, n3};
  const auto s = NumericalSemigroup::from_generators(given);
  auto sorted = given;
  std::sort(sorted.begin(), sorted.end());
  if (s.min_gens() != sorted) {
    fail(ErrorCode::NotMinimalTriple, "{" + std::to_string(n1) + "," + std::to_string(n2) + "," +
                                          std::to_string(n3) + "} is not a minimal generating set");
  }

  PseudoSymmetricTest out;
  std::array<Int, 3> o{sorted[0], sorted[1], sorted[2]};
  do {
    const __int128 a = o[0], b = o[1], c = o[2];
    const __int128 sum = a + b + c;
    const __int128 sq = sum * sum - 4 * (a * b + a * c + b * c - a * b * c);
    if (sq < 0 || sq > INT64_MAX) continue;
    const Int delta = exact_sqrt(static_cast<Int>(sq));
    if (delta < 0) continue;
    out.delta = delta;
    const __int128 q[3][2] = {{a - b + c + delta, 2 * a}, {a + b - c + delta, 2 * b}, {-a + b + c + delta, 2 * c}};
    const bool integral = std::all_of(std::begin(q), std::end(q), [](const auto& f) {
      return f[0] >= 0 && f[0] % f[1] == 0;
    });
    if (integral) {
      out.is_pseudo_symmetric = true;
      out.predicted_frobenius = delta - static_cast<Int>(sum);
      out.order = o;
      break;
    }
  } while (std::next_permutation(o.begin(), o.end()));

  const bool pseudo = classify(s) == Irreducibility::PseudoSymmetric;
  if (out.is_pseudo_symmetric != pseudo ||
      (pseudo && out.predicted_frobenius != s.frobenius())) {
    fail(ErrorCode::InternalInconsistency, "square-root test disagrees with the gap count for " + format_gens(s));
  }
  return out;
}

RijSolution rij_solve(Int n1, Int n2, Int n3) {
  require_pairwise_coprime(n1, n2, n3);
  std::vector<RijSolution> sols;
  for (Int r12 = 1; r12 < n1; ++r12) {
    for (Int r13 = 1; r12 * r13 < n1; ++r13) {
      for (Int r23 = 1; r12 * r13 + r12 * r23 < n1; ++r23) {
        const Int rest1 = n1 - r12 * r13 - r12 * r23;
        if (rest1 % r13 != 0) continue;
        const Int r32 = rest1 / r13;
        for (Int r21 = 1; r21 * (r13 + r23) < n2; ++r21) {
          const Int rest2 = n2 - r21 * (r13 + r23);
          if (rest2 % r23 != 0) continue;
          const Int r31 = rest2 / r23;
          if (r12 * r31 + r21 * r32 + r31 * r32 == n3) sols.push_back({r12, r13, r21, r23, r31, r32});
        }
      }
    }
  }
  if (sols.empty()) {
    fail(ErrorCode::NoSolution, "no positive solution: the triple is not a minimal generating set",
         {n1, n2, n3});
  }
  if (sols.size() > 1) fail(ErrorCode::InternalInconsistency, "the positive solution is not unique");
  return sols.front();
}

std::array<Int, 3> c_values(Int n1, Int n2, Int n3) {
  const std::array<Int, 3> n{n1, n2, n3};
  std::array<Int, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    const std::array<Int, 2> others{n[(i + 1) % 3], n[(i + 2) % 3]};
    Int x = 1;
    while (!representable(checked_mul(x, n[i]), others)) ++x;
    out[i] = x;
  }
  return out;
}

std::array<Int, 3> c_values(const NumericalSemigroup& s) {
  require_dim3(s);
  const auto& n = s.min_gens();
  return c_values(n[0], n[1], n[2]);
}

PmTriple pm_representation(Int n1, Int n2, Int n3) {
  require_pairwise_coprime(n1, n2, n3);
  PmTriple out;
  out.u = 1;
  while ((out.u * n2) % n1 != 1 % n1) ++out.u;
  out.b = checked_mul(n1, n2);
  out.a = static_cast<Int>((static_cast<__int128>(out.u) * n2 % out.b) * n3 % out.b);
  out.c = n3;
  const auto lhs = modular::solve_prop_modular(out.a, out.b, out.c);
  const auto rhs = quot::quotient(NumericalSemigroup::from_generators({n1, n2}), n3);
  if (lhs != rhs) {
    fail(ErrorCode::InternalInconsistency, "S(" + std::to_string(out.a) + "," + std::to_string(out.b) + "," +
                                               std::to_string(out.c) + ") differs from the quotient");
  }
  return out;
}

FermatCheck fermat_check(Int a, Int b, Int c, Int n) {
  if (a < 2 || b < 2 || c < 2) fail(ErrorCode::BadInput, "a, b, c must be at least 2");
  if (n < 3) fail(ErrorCode::BadInput, "n must be at least 3", {n});
  if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1) {
    fail(ErrorCode::BadInput, "a, b, c must be pairwise coprime", {a, b, c});
  }
  const Int an = checked_pow(a, static_cast<int>(n));
  const Int bn = checked_pow(b, static_cast<int>(n));
  const Int cn1 = checked_pow(c, static_cast<int>(n - 1));
  FermatCheck out;
  out.forbidden = {an, bn, cn1};
  std::sort(out.forbidden.begin(), out.forbidden.end());
  out.quotient_gens = quot::quotient(NumericalSemigroup::from_generators({an, bn}), c).min_gens();
  out.holds = out.quotient_gens != out.forbidden;
  return out;
}

}  // namespace nsg::dim3
