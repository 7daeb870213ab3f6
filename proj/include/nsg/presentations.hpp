#pragma once

#include <utility>
#include <vector>

#include "nsg/core.hpp"

namespace nsg::pres {

/// Exponents over the minimal generators, in generator order.
using FactorizationVector = std::vector<Int>;

/// Z(n), in decreasing lexicographic order. Throws NotAMember.
std::vector<FactorizationVector> factorizations(const NumericalSemigroup& s, Int n);

Int evaluate(const NumericalSemigroup& s, const FactorizationVector& x);

struct BettiGraph {
  Int element = 0;
  std::vector<Int> vertices;                  // n_i with n - n_i in S
  std::vector<std::pair<Int, Int>> edges;     // n_i < n_j with n - n_i - n_j in S
  std::vector<std::vector<Int>> components;   // ordered by least vertex

  bool connected() const noexcept { return components.size() <= 1; }
};

/// Throws NotAMember.
BettiGraph betti_graph(const NumericalSemigroup& s, Int n);

/// Members whose graph is disconnected. Past F + n_e + n_{e-1} every graph is
/// complete, so the scan stops there.
std::vector<Int> betti_elements(const NumericalSemigroup& s);

struct Relation {
  FactorizationVector lhs;
  FactorizationVector rhs;
  Int element = 0;
};

struct Presentation {
  std::vector<Relation> relations;
};

/// For every Betti element with components V_1..V_r, relates the least
/// factorization supported on V_1 to the least one on each other V_i.
Presentation minimal_presentation(const NumericalSemigroup& s);

struct PresentationStats {
  Int cardinality = 0;
  bool is_complete_intersection = false;
  bool is_unique_minimal = false;
};

/// Unique minimal presentation: every Betti graph has two components and each
/// supports a single factorization.
PresentationStats presentation_stats(const NumericalSemigroup& s);

/// <mu A, lambda B> for A, B the minimal generators of s1, s2. Throws BadLambda,
/// BadMu, NotCoprime.
NumericalSemigroup gluing(const NumericalSemigroup& s1, const NumericalSemigroup& s2, Int lambda, Int mu);

/// Whether one-step rewrites by the relations connect Z(n) for every member
/// n <= bound.
bool generates_congruence(const NumericalSemigroup& s, const Presentation& p, Int bound);

}  // namespace nsg::pres
