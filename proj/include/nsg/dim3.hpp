#pragma once

#include <array>
#include <optional>

#include "nsg/core.hpp"

// Embedding dimension three.
namespace nsg::dim3 {

/// S = <a m1, a m2, b m1 + c m2>.
struct SymmetricWitness {
  Int a = 0, b = 0, c = 0, m1 = 0, m2 = 0;
  Int predicted_frobenius = 0;  // a(m1 m2 - m1 - m2) + (a - 1)(b m1 + c m2)
};

/// A witness when S is symmetric, nullopt otherwise. b or c may be zero.
/// Throws WrongDimension unless e(S) = 3; the predicted Frobenius number is
/// checked against F(S).
std::optional<SymmetricWitness> symmetric3_witness(const NumericalSemigroup& s);

struct PseudoSymmetricTest {
  bool is_pseudo_symmetric = false;
  Int delta = 0;                 // 0 when no ordering gives an integer square root
  Int predicted_frobenius = 0;   // delta - (n1 + n2 + n3)
  std::array<Int, 3> order{};    // the ordering that passed
};

/// Tries all orderings of the triple. Throws NotMinimalTriple unless the
/// three numbers are the minimal generators of the semigroup they span.
PseudoSymmetricTest pseudo_symmetric3_test(Int n1, Int n2, Int n3);

struct RijSolution {
  Int r12 = 0, r13 = 0, r21 = 0, r23 = 0, r31 = 0, r32 = 0;
};

/// The positive solution of
///   n1 = r12 r13 + r12 r23 + r13 r32
///   n2 = r13 r21 + r21 r23 + r23 r31
///   n3 = r12 r31 + r21 r32 + r31 r32
/// Throws NotPairwiseCoprime, NoSolution.
RijSolution rij_solve(Int n1, Int n2, Int n3);

/// c_i = min{ x >= 1 : x n_i in <n_j, n_k> } for a raw triple.
std::array<Int, 3> c_values(Int n1, Int n2, Int n3);
/// Same over the minimal generators. Throws WrongDimension unless e(S) = 3.
std::array<Int, 3> c_values(const NumericalSemigroup& s);

struct PmTriple {
  Int a = 0, b = 1, c = 1;
  Int u = 1;  // u n2 = 1 mod n1
};

/// (u n2 n3 mod n1 n2, n1 n2, n3), whose solution set is <n1, n2>/n3; the
/// equality is verified. Throws NotPairwiseCoprime.
PmTriple pm_representation(Int n1, Int n2, Int n3);

struct FermatCheck {
  bool holds = false;           // min gens differ from {a^n, c^(n-1), b^n}
  std::vector<Int> quotient_gens;
  std::vector<Int> forbidden;   // {a^n, c^(n-1), b^n}, sorted
};

/// Throws BadInput unless a, b, c >= 2 are pairwise coprime and n >= 3,
/// Overflow when a power leaves 64 bits.
FermatCheck fermat_check(Int a, Int b, Int c, Int n);

}  // namespace nsg::dim3
