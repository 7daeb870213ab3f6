#pragma once

#include <string_view>
#include <vector>

#include "nsg/core.hpp"
#include "nsg/modular.hpp"
#include "nsg/presentations.hpp"

// Non-unique factorization invariants.
namespace nsg::fact {

using pres::FactorizationVector;

struct LengthData {
  Int element = 0;
  std::vector<Int> lengths;  // L(s), ascending
  std::vector<Int> delta;    // consecutive differences, ascending, distinct
};

/// Throws NotAMember.
LengthData length_data(const NumericalSemigroup& s, Int n);

/// n_e / n_1.
modular::Fraction elasticity(const NumericalSemigroup& s);
/// max L(n) / min L(n). Throws NotAMember, ZeroElement.
modular::Fraction elasticity_of(const NumericalSemigroup& s, Int n);

/// max(|x - gcd(x,y)|, |y - gcd(x,y)|). Throws ArityMismatch.
Int distance(const FactorizationVector& x, const FactorizationVector& y);

/// Least N such that Z(n) is connected by steps of distance <= N.
Int catenary_degree(const NumericalSemigroup& s, Int n);
/// Maximum over the Betti elements.
Int catenary_by_betti(const NumericalSemigroup& s);
/// Maximum over every member n <= F + n_e + n_{e-1}.
Int catenary_direct(const NumericalSemigroup& s);
/// catenary_by_betti, after checking it against catenary_direct.
Int catenary_degree_of_semigroup(const NumericalSemigroup& s);

Int tame_degree(const NumericalSemigroup& s, Int n);
/// Maximum of tame_degree over n_i + w, w in Ap(S, n_j), j != i.
Int tame_degree_of_semigroup(const NumericalSemigroup& s);

/// Largest total degree among the minimal z with phi(z) - n in S.
/// Throws NotAMember, ZeroElement.
Int omega_primality(const NumericalSemigroup& s, Int n);
/// Maximum over the minimal generators.
Int omega_of_semigroup(const NumericalSemigroup& s);
/// omega straight from the definition, over sums of at most max_summands
/// minimal generators. Agrees with omega_primality once max_summands
/// exceeds it.
Int omega_definitional(const NumericalSemigroup& s, Int n, Int max_summands);

/// Union of the Delta(n) over members n <= bound. Throws BadInput when
/// bound < F(S).
std::vector<Int> delta_set_up_to(const NumericalSemigroup& s, Int bound);

enum class Invariant { Delta, Catenary, Tame };
std::string_view to_string(Invariant inv) noexcept;
Invariant parse_invariant(std::string_view text);

struct ProbeRow {
  Int period = 0;
  Int checked = 0;      // members n <= window
  Int agreements = 0;   // of those, how many have inv(n + period) = inv(n)
  Int stable_from = 0;  // least n0 with agreement for every member in [n0, window]
};

/// Compares the invariant at n and n + p for members n <= window. An
/// observation, not a proof of periodicity. Throws BadInput for candidates
/// outside S \ {0}.
std::vector<ProbeRow> periodicity_probe(const NumericalSemigroup& s, Invariant inv, Int window,
                                        const std::vector<Int>& candidates);

}  // namespace nsg::fact
