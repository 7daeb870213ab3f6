#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "nsg/core.hpp"

// Proportionally modular semigroups, rational intervals, Bezout sequences and
// Stern-Brocot navigation.
namespace nsg::modular {

/// A nonnegative reduced fraction. 1/0 appears only inside the Stern-Brocot
/// routines as the right sentinel.
struct Fraction {
  Int num = 0;
  Int den = 1;

  /// Throws NotReduced when gcd(num, den) != 1, BadInput on negative parts or 0/0.
  static Fraction checked(Int num, Int den);
  static Fraction reduced(Int num, Int den);

  bool is_positive() const noexcept { return num > 0 && den > 0; }

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) noexcept {
    const __int128 lhs = static_cast<__int128>(a.num) * b.den;
    const __int128 rhs = static_cast<__int128>(b.num) * a.den;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

/// b.num * a.den - a.num * b.den; equals 1 for adjacent Bezout terms a < b.
Int determinant(const Fraction& a, const Fraction& b);

std::string to_string(const Fraction& f);
/// "p/q" or "p". The result must already be reduced.
Fraction parse_fraction(std::string_view text);

struct RationalInterval {
  Fraction lo;
  Fraction hi;
  bool lo_open = false;
  bool hi_open = false;
};

std::string to_string(const RationalInterval& i);
/// "p/q..r/s" with optional '[' '(' before and ']' ')' after; parentheses mark
/// open ends.
RationalInterval parse_interval(std::string_view text);

/// Increasing fractions with a_{i+1} b_i - a_i b_{i+1} = 1 between neighbours.
struct BezoutSequence {
  std::vector<Fraction> terms;
  bool proper = false;
};

bool is_bezout(const std::vector<Fraction>& terms);
bool is_proper_bezout(const std::vector<Fraction>& terms);
/// a_1 >= ... >= a_h <= ... <= a_p for some h.
bool is_convex(const std::vector<Int>& xs);
std::vector<Int> numerators(const BezoutSequence& seq);

/// S(a,b,c) = { x : a x mod b <= c x }. Requires b, c >= 1; a = 0 gives N.
NumericalSemigroup solve_prop_modular(Int a, Int b, Int c);

/// S(I): the integers lying in some dilation k I, k >= 1, together with 0.
/// Throws DegenerateInterval when lo = hi, OrderViolation when lo > hi.
NumericalSemigroup semigroup_from_interval(const RationalInterval& interval);

/// The unique proper Bezout sequence with ends f1 < f2.
/// Throws NotReduced, OrderViolation.
BezoutSequence proper_bezout_sequence(const Fraction& f1, const Fraction& f2);

enum class Verdict { Yes, No, Undecided };
std::string_view to_string(Verdict v) noexcept;

struct PmRecognition {
  Verdict verdict = Verdict::No;
  /// A convex arrangement of the minimal generators with coprime neighbours
  /// and n_{j-1} + n_{j+1} = 0 mod n_j, when verdict is Yes.
  std::vector<Int> witness;
  /// Largest embedding dimension the arrangement search attempts.
  Int search_limit = 12;
};

PmRecognition is_proportionally_modular(const NumericalSemigroup& s);

/// {0} u { x : a x mod b <= c x - d }. Requires b, c >= 1.
NumericalSemigroup solve_contracted(Int a, Int b, Int c, Int d);

/// Smallest-denominator fraction strictly between p < q.
Fraction simplest_between(const Fraction& p, const Fraction& q);

/// First node on the Stern-Brocot descent that lies in [f1, f2]. Its numerator
/// is the multiplicity of S([f1, f2]).
Fraction stern_brocot_predecessor(const Fraction& f1, const Fraction& f2);

/// Row `depth` of the mediant expansion, sentinels 0/1 and 1/0 included.
/// Throws DepthTooLarge above 20.
std::vector<Fraction> stern_brocot_row(int depth);

}  // namespace nsg::modular
