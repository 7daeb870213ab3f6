#pragma once

#include <vector>

#include "nsg/core.hpp"

namespace nsg::quot {

/// S/p = { x : p x in S }.
NumericalSemigroup quotient(const NumericalSemigroup& s, Int p);

/// { h/d : h in FG(S), d | h }, checked against FG(S/d). A mismatch throws
/// InternalInconsistency.
std::vector<Int> quotient_fundamental_gaps(const NumericalSemigroup& s, Int d);

/// Every T with T/d = S and F(T) <= f_cap, sorted canonically.
/// Throws BadInput when f_cap < F(S), CapTooSmall when nothing fits.
SemigroupList multiples_up_to(const NumericalSemigroup& s, Int d, Int f_cap);

struct MinimalMultiple {
  Int frobenius = 0;
  Int cap_used = 0;
  SemigroupList witnesses;  // the multiples attaining the minimum
};

/// Least Frobenius number among the T with T/d = S. The search cap starts at
/// max(F(S), d F(S), 1) and doubles until a multiple appears.
MinimalMultiple min_frobenius_of_multiples(const NumericalSemigroup& s, Int d, Int max_cap = 256);

struct IrreducibleDecomposition {
  SemigroupList components;
  bool minimal = false;
};

/// A decomposition of S into irreducible oversemigroups with the fewest
/// components. Candidates are the inclusion-minimal irreducible
/// oversemigroups; ties go to the lexicographically smallest sorted list of
/// Frobenius numbers.
IrreducibleDecomposition irreducible_decomposition(const NumericalSemigroup& s);

}  // namespace nsg::quot
