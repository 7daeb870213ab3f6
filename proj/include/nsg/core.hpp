#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nsg/arith.hpp"

namespace nsg {

// Largest conductor a semigroup may have before construction gives up with
// BudgetExceeded. The membership bitmap is stored densely up to F(S)+1.
inline constexpr Int kMaxConductor = Int{1} << 26;

/// A numerical semigroup: a cofinite submonoid of (N, +).
///
/// The value is canonical. It keeps the minimal system of generators, the
/// Frobenius number and a membership bitmap over [0, F(S)+1]; everything above
/// the conductor is a member and is never stored. Instances are immutable.
class NumericalSemigroup {
 public:
  /// The whole of N, i.e. <1>, with Frobenius number -1.
  NumericalSemigroup();

  /// <gens>. Duplicates and redundant generators are dropped.
  /// Throws EmptyInput, BadInput (non-positive entry), GcdNotOne,
  /// BudgetExceeded (conductor above kMaxConductor).
  static NumericalSemigroup from_generators(std::span<const Int> gens);
  static NumericalSemigroup from_generators(std::initializer_list<Int> gens) {
    return from_generators(std::span<const Int>(gens.begin(), gens.size()));
  }

  /// The semigroup whose gap set is exactly `gaps`. Throws NotASemigroup with
  /// the witness (x, y) when x + y is listed as a gap but x and y are not.
  static NumericalSemigroup from_gaps(std::span<const Int> gaps);

  /// Builds S from a membership predicate that is known to describe a
  /// numerical semigroup with every x > `bound` a member. Closure is not
  /// re-verified here; use from_small_elements for untrusted input.
  static NumericalSemigroup from_predicate(const std::function<bool(Int)>& member, Int bound);

  /// members[x] for x < members.size(); every larger x is taken as a member.
  /// Verifies additive closure (NotASemigroup) and 0 in S.
  static NumericalSemigroup from_small_elements(std::vector<std::uint8_t> members);

  bool contains(Int x) const noexcept {
    if (x < 0) return false;
    if (x > frobenius_) return true;
    return members_[static_cast<std::size_t>(x)] != 0;
  }

  const std::vector<Int>& min_gens() const noexcept { return gens_; }
  Int frobenius() const noexcept { return frobenius_; }
  Int conductor() const noexcept { return frobenius_ + 1; }
  Int genus() const noexcept { return genus_; }
  Int multiplicity() const noexcept { return gens_.front(); }
  Int embedding_dimension() const noexcept { return static_cast<Int>(gens_.size()); }
  bool is_natural() const noexcept { return frobenius_ < 0; }

  /// Membership bitmap over [0, F(S)+1].
  std::span<const std::uint8_t> membership() const noexcept { return members_; }

  std::vector<Int> gaps() const;
  /// Members in [0, F(S)+1], ascending.
  std::vector<Int> small_elements() const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.gens_ == b.gens_;
  }
  friend std::strong_ordering operator<=>(const NumericalSemigroup& a,
                                          const NumericalSemigroup& b) {
    return a.gens_ <=> b.gens_;
  }

 private:
  static NumericalSemigroup from_bitmap(std::vector<std::uint8_t> members);

  std::vector<Int> gens_;
  Int frobenius_ = -1;
  Int genus_ = 0;
  std::vector<std::uint8_t> members_;
};

using SemigroupList = std::vector<NumericalSemigroup>;

// Least member in each residue class modulo `base`.
struct AperySet {
  Int base = 1;
  std::vector<Int> witnesses;
};

struct InvariantReport {
  Int multiplicity = 1;
  Int embedding_dimension = 1;
  Int frobenius = -1;
  Int genus = 0;
  Int type = 1;
  std::vector<Int> pseudo_frobenius;
  Int wilf_left = 0;   // e * g
  Int wilf_right = 0;  // (e - 1) * (F + 1)
};

enum class Irreducibility { Symmetric, PseudoSymmetric, ReducibleOther };

std::string_view to_string(Irreducibility c) noexcept;

InvariantReport invariant_report(const NumericalSemigroup& s);

/// PF(S): gaps x with x + s in S for every nonzero member s. PF(N) = {-1}.
std::vector<Int> pseudo_frobenius(const NumericalSemigroup& s);

/// Special gaps: x in PF(S) with 2x in S. Exactly the x for which S u {x} is
/// again a numerical semigroup.
std::vector<Int> special_gaps(const NumericalSemigroup& s);

/// Throws NotAMember unless n is a positive member.
AperySet apery_set(const NumericalSemigroup& s, Int n);

std::vector<Int> fundamental_gaps(const NumericalSemigroup& s);

/// Positive divisors of the elements of xs, ascending.
std::vector<Int> divisor_closure(std::span<const Int> xs);

/// N \ D(X), accepted only when it is a semigroup whose fundamental gaps are
/// exactly X. Throws NotFundamentalGapSet otherwise.
NumericalSemigroup from_fundamental_gaps(std::span<const Int> xs);

/// N is reported as symmetric.
Irreducibility classify(const NumericalSemigroup& s);
inline bool is_irreducible(const NumericalSemigroup& s) {
  return classify(s) != Irreducibility::ReducibleOther;
}

/// All T containing S, sorted canonically. S and N are always included.
SemigroupList oversemigroups(const NumericalSemigroup& s);

bool is_subset(const NumericalSemigroup& a, const NumericalSemigroup& b);
NumericalSemigroup intersection(const NumericalSemigroup& a, const NumericalSemigroup& b);

/// S u {F(S)}; N for N.
NumericalSemigroup adjoin_frobenius(const NumericalSemigroup& s);

/// S \ {x} for a minimal generator x. Throws BadInput otherwise.
NumericalSemigroup remove_generator(const NumericalSemigroup& s, Int x);

/// <S u extra>.
NumericalSemigroup add_elements(const NumericalSemigroup& s, std::span<const Int> extra);

/// Whether x is a nonnegative integer combination of gens (any gcd).
bool representable(Int x, std::span<const Int> gens);

/// Comma-separated decimal generator list such as "3,5,7".
std::vector<Int> parse_int_list(std::string_view text);

std::string format_gens(const NumericalSemigroup& s);

}  // namespace nsg
