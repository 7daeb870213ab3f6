#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nsg/core.hpp"
#include "nsg/simd/kernels.hpp"

// The tree of numerical semigroups, Frobenius varieties, Arf and saturated
// semigroups, and patterns.
namespace nsg::variety {

enum class VarietyKind { All, Arf, Saturated, Custom };

/// A membership test for a family of semigroups. Only families closed under
/// intersection and under S -> S u {F(S)} give meaningful trees; custom
/// predicates are audited before they drive an enumeration.
struct VarietyPredicate {
  VarietyKind kind = VarietyKind::All;
  std::string name = "all";
  std::function<bool(const NumericalSemigroup&)> test;

  bool operator()(const NumericalSemigroup& s) const { return !test || test(s); }
};

VarietyPredicate all_semigroups();
VarietyPredicate arf_variety();
VarietyPredicate saturated_variety();
VarietyPredicate custom_variety(std::string name, std::function<bool(const NumericalSemigroup&)> test);

/// S \ {x} for each minimal generator x > F(S), in increasing x.
SemigroupList children(const NumericalSemigroup& s);

bool is_arf(const NumericalSemigroup& s);
bool is_saturated(const NumericalSemigroup& s);
bool is_max_embedding_dimension(const NumericalSemigroup& s);

NumericalSemigroup arf_closure(const NumericalSemigroup& s);
NumericalSemigroup saturated_closure(const NumericalSemigroup& s);

struct PatternCheck {
  bool admitted = true;                // no violation with s_1 <= bound
  std::vector<Int> counterexample;     // s_1 >= ... >= s_n when !admitted
};

/// Checks a_1 s_1 + ... + a_n s_n in S for every nonincreasing member sequence
/// with s_1 <= bound. A positive answer is bounded, not a proof.
PatternCheck admits_pattern_bounded(const NumericalSemigroup& s, const std::vector<Int>& coeffs,
                                    Int bound);

/// Least family containing X closed under intersection and F-adjoin.
SemigroupList variety_generated(const SemigroupList& xs);

// ---------------------------------------------------------------------------
// Tree enumeration

/// A vertex of the semigroup tree in decomposition-number form.
struct TreeNode {
  alignas(32) std::array<std::uint8_t, simd::kDecStride> dec{};
  int conductor = 0;
  int multiplicity = 1;
  int genus = 0;

  bool contains(int y) const noexcept { return y >= conductor || dec[static_cast<std::size_t>(y)] != 0; }
};

TreeNode tree_root();
/// The son obtained by removing generator x (> F, dec[x] == 1).
TreeNode tree_child(const TreeNode& parent, int x, const simd::KernelSet& kernels);
/// Minimal generators of the node above its Frobenius number, ascending.
int tree_child_generators(const TreeNode& node, const simd::KernelSet& kernels, int* out);
NumericalSemigroup to_semigroup(const TreeNode& node);

struct EnumOptions {
  unsigned jobs = 1;
  std::int64_t budget_ms = 0;  // 0: unlimited
  std::optional<simd::Isa> isa;
};

inline constexpr int kMaxTreeGenus = 40;

struct GenusCensus {
  std::vector<std::uint64_t> counts;  // counts[g] for g = 0..g_max
  std::string predicate_name;
};

/// Counts the vertices of the (variety) tree level by level. A son is
/// expanded only if the predicate accepts it. Throws BudgetExceeded for
/// g_max > 40 or when the time budget runs out, AuditFailed when a custom
/// predicate breaks the variety axioms.
GenusCensus enumerate_tree(int g_max, const VarietyPredicate& pred, const EnumOptions& opts = {});

/// The accepted vertices with genus exactly g, sorted canonically.
SemigroupList list_tree_level(int g, const VarietyPredicate& pred, const EnumOptions& opts = {});

struct AuditReport {
  std::size_t members_sampled = 0;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  bool ok() const noexcept { return failures.empty(); }
};

/// Randomized check of the variety axioms on members of genus <= max_genus.
AuditReport audit_variety(const VarietyPredicate& pred, int max_genus = 8, std::size_t pairs = 100,
                          std::uint64_t seed = 7);

}  // namespace nsg::variety
