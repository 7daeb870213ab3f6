#include "nsg/varieties.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstring>
#include <exception>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <thread>

namespace nsg::variety {

namespace {

// Exact finite Arf test: z ranges over members <= F, and only x + y - z <= F
// can fail, which forces x, y <= F + z.
template <class Member>
bool arf_test(const Member& in, Int f) {
  for (Int z = 1; z <= f; ++z) {
    if (!in(z)) continue;
    for (Int y = z; y + y - z <= f; ++y) {
      if (!in(y)) continue;
      for (Int x = y; x + y - z <= f; ++x) {
        if (in(x) && !in(x + y - z)) return false;
      }
    }
  }
  return true;
}

// s + d(s) in S for every member s <= F, d(s) the gcd of the members in [1, s].
template <class Member>
bool saturated_test(const Member& in, Int f) {
  Int d = 0;
  for (Int s = 1; s <= f; ++s) {
    if (!in(s)) continue;
    d = std::gcd(d, s);
    if (!in(s + d)) return false;
  }
  return true;
}

}  // namespace

VarietyPredicate all_semigroups() { return {VarietyKind::All, "all", {}}; }

VarietyPredicate arf_variety() { return {VarietyKind::Arf, "arf", is_arf}; }

VarietyPredicate saturated_variety() { return {VarietyKind::Saturated, "saturated", is_saturated}; }

VarietyPredicate custom_variety(std::string name, std::function<bool(const NumericalSemigroup&)> test) {
  return {VarietyKind::Custom, std::move(name), std::move(test)};
}

SemigroupList children(const NumericalSemigroup& s) {
  SemigroupList out;
  for (Int x : s.min_gens()) {
    if (x > s.frobenius()) out.push_back(remove_generator(s, x));
  }
  return out;
}

bool is_arf(const NumericalSemigroup& s) {
  return arf_test([&](Int x) { return s.contains(x); }, s.frobenius());
}

bool is_saturated(const NumericalSemigroup& s) {
  return saturated_test([&](Int x) { return s.contains(x); }, s.frobenius());
}

bool is_max_embedding_dimension(const NumericalSemigroup& s) {
  return s.embedding_dimension() == s.multiplicity();
}

NumericalSemigroup arf_closure(const NumericalSemigroup& s) {
  NumericalSemigroup cur = s;
  while (true) {
    std::set<Int> missing;
    const Int f = cur.frobenius();
    for (Int z = 1; z <= f; ++z) {
      if (!cur.contains(z)) continue;
      for (Int y = z; y + y - z <= f; ++y) {
        if (!cur.contains(y)) continue;
        for (Int x = y; x + y - z <= f; ++x) {
          if (cur.contains(x) && !cur.contains(x + y - z)) missing.insert(x + y - z);
        }
      }
    }
    if (missing.empty()) return cur;
    cur = add_elements(cur, std::vector<Int>(missing.begin(), missing.end()));
  }
}

NumericalSemigroup saturated_closure(const NumericalSemigroup& s) {
  NumericalSemigroup cur = s;
  while (true) {
    std::vector<Int> missing;
    Int d = 0;
    for (Int x = 1; x <= cur.frobenius(); ++x) {
      if (!cur.contains(x)) continue;
      d = std::gcd(d, x);
      if (!cur.contains(x + d)) missing.push_back(x + d);
    }
    if (missing.empty()) return cur;
    cur = add_elements(cur, missing);
  }
}

PatternCheck admits_pattern_bounded(const NumericalSemigroup& s, const std::vector<Int>& coeffs,
                                    Int bound) {
  if (coeffs.empty()) fail(ErrorCode::EmptyInput, "pattern needs at least one coefficient");
  for (Int a : coeffs) {
    if (a == 0) fail(ErrorCode::BadInput, "pattern coefficients must be nonzero");
  }
  if (bound < s.frobenius() + 1) {
    fail(ErrorCode::BadInput, "bound must be at least F(S) + 1 = " + std::to_string(s.frobenius() + 1));
  }
  std::vector<Int> members;
  for (Int x = 0; x <= bound; ++x) {
    if (s.contains(x)) members.push_back(x);
  }
  PatternCheck out;
  std::vector<Int> seq(coeffs.size());
  // Sequences are visited with s_1 ascending, then s_2 ascending, and so on.
  auto visit = [&](auto&& self, std::size_t i, std::size_t limit) -> bool {
    if (i == coeffs.size()) {
      __int128 value = 0;
      for (std::size_t k = 0; k < seq.size(); ++k) value += static_cast<__int128>(coeffs[k]) * seq[k];
      if (value < 0 || !s.contains(static_cast<Int>(value))) {
        out.admitted = false;
        out.counterexample = seq;
        return true;
      }
      return false;
    }
    for (std::size_t k = 0; k <= limit; ++k) {
      seq[i] = members[k];
      if (self(self, i + 1, k)) return true;
    }
    return false;
  };
  visit(visit, 0, members.size() - 1);
  return out;
}

SemigroupList variety_generated(const SemigroupList& xs) {
  if (xs.empty()) fail(ErrorCode::EmptyInput, "variety_generated needs at least one semigroup");
  std::set<NumericalSemigroup> family;
  std::vector<NumericalSemigroup> work;
  auto add = [&](NumericalSemigroup t) {
    if (family.insert(t).second) work.push_back(std::move(t));
  };
  for (const auto& s : xs) add(s);
  while (!work.empty()) {
    const NumericalSemigroup s = work.back();
    work.pop_back();
    std::vector<NumericalSemigroup> fresh;
    if (!s.is_natural()) fresh.push_back(adjoin_frobenius(s));
    for (const auto& t : family) fresh.push_back(intersection(s, t));
    for (auto& t : fresh) add(std::move(t));
  }
  return {family.begin(), family.end()};
}

// ---------------------------------------------------------------------------

TreeNode tree_root() {
  TreeNode root;
  for (int y = 0; y < simd::kDecSize; ++y) root.dec[static_cast<std::size_t>(y)] = static_cast<std::uint8_t>(y / 2 + 1);
  root.conductor = 0;
  root.multiplicity = 1;
  root.genus = 0;
  return root;
}

TreeNode tree_child(const TreeNode& parent, int x, const simd::KernelSet& kernels) {
  TreeNode child;
  kernels.remove_generator(parent.dec.data(), child.dec.data(), x);
  child.conductor = x + 1;
  child.multiplicity = x == parent.multiplicity ? parent.multiplicity + 1 : parent.multiplicity;
  child.genus = parent.genus + 1;
  return child;
}

int tree_child_generators(const TreeNode& node, const simd::KernelSet& kernels, int* out) {
  // Every minimal generator is at most F + m; c + m itself is never one.
  const int from = std::max(node.conductor, 1);
  const int to = std::min(node.conductor + node.multiplicity, simd::kDecSize - 1);
  return kernels.collect_generators(node.dec.data(), from, to, out);
}

NumericalSemigroup to_semigroup(const TreeNode& node) {
  return NumericalSemigroup::from_predicate([&](Int y) { return node.contains(static_cast<int>(y)); },
                                            node.conductor);
}

namespace {

using NodeTest = std::function<bool(const TreeNode&)>;

NodeTest node_test_for(const VarietyPredicate& pred) {
  switch (pred.kind) {
    case VarietyKind::All:
      return {};
    case VarietyKind::Arf:
      return [](const TreeNode& n) {
        return arf_test([&](Int x) { return n.contains(static_cast<int>(x)); }, n.conductor - 1);
      };
    case VarietyKind::Saturated:
      return [](const TreeNode& n) {
        return saturated_test([&](Int x) { return n.contains(static_cast<int>(x)); }, n.conductor - 1);
      };
    case VarietyKind::Custom:
      break;
  }
  return [pred](const TreeNode& n) { return pred(to_semigroup(n)); };
}

void check_tree_request(int g_max, const VarietyPredicate& pred) {
  if (g_max < 0) fail(ErrorCode::BadInput, "genus must be nonnegative");
  if (g_max > kMaxTreeGenus) {
    fail(ErrorCode::BudgetExceeded, "tree enumeration is capped at genus " + std::to_string(kMaxTreeGenus));
  }
  if (pred.kind == VarietyKind::Custom) {
    const auto report = audit_variety(pred);
    if (!report.ok()) {
      fail(ErrorCode::AuditFailed, "predicate '" + pred.name + "' is not a Frobenius variety: " +
                                       report.failures.front());
    }
  }
}

class Walker {
 public:
  Walker(int g_max, NodeTest accept, simd::KernelSet kernels, std::atomic<bool>& stop,
         std::chrono::steady_clock::time_point deadline, bool timed)
      : g_max_(g_max),
        accept_(std::move(accept)),
        kernels_(kernels),
        stop_(stop),
        deadline_(deadline),
        timed_(timed),
        counts_(static_cast<std::size_t>(g_max) + 1, 0) {}

  void walk(const TreeNode& node) {
    if (timed_ && (++visited_ & 0xFFF) == 0 && std::chrono::steady_clock::now() > deadline_) {
      stop_.store(true, std::memory_order_relaxed);
    }
    if (stop_.load(std::memory_order_relaxed)) return;
    int gens[simd::kDecSize];
    const int n = tree_child_generators(node, kernels_, gens);
    for (int i = 0; i < n; ++i) {
      const TreeNode child = tree_child(node, gens[i], kernels_);
      if (accept_ && !accept_(child)) continue;
      ++counts_[static_cast<std::size_t>(child.genus)];
      if (child.genus < g_max_) walk(child);
    }
  }

  const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }

 private:
  int g_max_;
  NodeTest accept_;
  simd::KernelSet kernels_;
  std::atomic<bool>& stop_;
  std::chrono::steady_clock::time_point deadline_;
  bool timed_;
  std::uint64_t visited_ = 0;
  std::vector<std::uint64_t> counts_;
};

}  // namespace

GenusCensus enumerate_tree(int g_max, const VarietyPredicate& pred, const EnumOptions& opts) {
  check_tree_request(g_max, pred);
  const auto kernels = opts.isa ? simd::kernels_for(*opts.isa) : simd::best_kernels();
  const NodeTest accept = node_test_for(pred);
  const unsigned jobs = std::max(1u, opts.jobs);

  GenusCensus census;
  census.predicate_name = pred.name;
  census.counts.assign(static_cast<std::size_t>(g_max) + 1, 0);
  census.counts[0] = 1;

  // Expand breadth-first until there is enough independent work per worker.
  std::vector<TreeNode> frontier{tree_root()};
  int level = 0;
  const std::size_t target = static_cast<std::size_t>(jobs) * 64;
  while (level < g_max && !frontier.empty() && frontier.size() < target) {
    std::vector<TreeNode> next;
    int gens[simd::kDecSize];
    for (const auto& node : frontier) {
      const int n = tree_child_generators(node, kernels, gens);
      for (int i = 0; i < n; ++i) {
        TreeNode child = tree_child(node, gens[i], kernels);
        if (!accept || accept(child)) next.push_back(std::move(child));
      }
    }
    ++level;
    census.counts[static_cast<std::size_t>(level)] = next.size();
    frontier = std::move(next);
  }
  if (level == g_max || frontier.empty()) return census;

  std::atomic<bool> stop{false};
  std::atomic<std::size_t> cursor{0};
  const bool timed = opts.budget_ms > 0;
  const auto deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(opts.budget_ms);
  std::vector<std::vector<std::uint64_t>> partial(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  auto work = [&](unsigned id) {
    try {
      Walker walker(g_max, accept, kernels, stop, deadline, timed);
      for (std::size_t i; (i = cursor.fetch_add(1)) < frontier.size();) walker.walk(frontier[i]);
      partial[id] = walker.counts();
    } catch (...) {
      errors[id] = std::current_exception();
      stop.store(true);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned id = 1; id < jobs; ++id) pool.emplace_back(work, id);
  work(0);
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  if (stop.load()) {
    fail(ErrorCode::BudgetExceeded, "tree enumeration exceeded " + std::to_string(opts.budget_ms) + " ms");
  }
  // Sums are order-independent, so the result does not depend on scheduling.
  for (const auto& p : partial) {
    for (std::size_t g = 0; g < p.size(); ++g) census.counts[g] += p[g];
  }
  return census;
}

SemigroupList list_tree_level(int g, const VarietyPredicate& pred, const EnumOptions& opts) {
  check_tree_request(g, pred);
  const auto kernels = opts.isa ? simd::kernels_for(*opts.isa) : simd::best_kernels();
  const NodeTest accept = node_test_for(pred);
  SemigroupList out;
  const bool timed = opts.budget_ms > 0;
  const auto deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(opts.budget_ms);
  std::uint64_t visited = 0;
  auto walk = [&](auto&& self, const TreeNode& node) -> void {
    if (node.genus == g) {
      out.push_back(to_semigroup(node));
      return;
    }
    if (timed && (++visited & 0xFFF) == 0 && std::chrono::steady_clock::now() > deadline) {
      fail(ErrorCode::BudgetExceeded, "tree listing exceeded " + std::to_string(opts.budget_ms) + " ms");
    }
    int gens[simd::kDecSize];
    const int n = tree_child_generators(node, kernels, gens);
    for (int i = 0; i < n; ++i) {
      const TreeNode child = tree_child(node, gens[i], kernels);
      if (!accept || accept(child)) self(self, child);
    }
  };
  walk(walk, tree_root());
  std::sort(out.begin(), out.end());
  return out;
}

AuditReport audit_variety(const VarietyPredicate& pred, int max_genus, std::size_t pairs,
                          std::uint64_t seed) {
  AuditReport report;
  SemigroupList members;
  std::vector<NumericalSemigroup> level{NumericalSemigroup()};
  for (int g = 0; g <= max_genus && !level.empty(); ++g) {
    std::vector<NumericalSemigroup> next;
    for (const auto& s : level) {
      if (pred(s)) members.push_back(s);
      if (g < max_genus) {
        for (auto& c : children(s)) next.push_back(std::move(c));
      }
    }
    level = std::move(next);
  }
  report.members_sampled = members.size();
  if (members.empty()) {
    report.failures.push_back("no member of genus <= " + std::to_string(max_genus));
    return report;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
  for (std::size_t i = 0; i < pairs; ++i) {
    const auto& a = members[pick(rng)];
    const auto& b = members[pick(rng)];
    ++report.checks;
    if (!pred(intersection(a, b))) {
      report.failures.push_back("intersection of " + format_gens(a) + " and " + format_gens(b));
    }
    if (!a.is_natural()) {
      ++report.checks;
      if (!pred(adjoin_frobenius(a))) report.failures.push_back("F-adjoin of " + format_gens(a));
    }
  }
  return report;
}

}  // namespace nsg::variety
