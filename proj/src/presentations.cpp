#include "nsg/presentations.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "union_find.hpp"

namespace nsg::pres {

std::vector<FactorizationVector> factorizations(const NumericalSemigroup& s, Int n) {
  if (!s.contains(n)) fail(ErrorCode::NotAMember, std::to_string(n) + " is not in " + format_gens(s), {n});
  const auto& g = s.min_gens();
  const std::size_t e = g.size();
  std::vector<FactorizationVector> out;
  FactorizationVector x(e, 0);
  // Largest exponents first gives decreasing lexicographic order directly.
  auto walk = [&](auto&& self, std::size_t i, Int rem) -> void {
    if (i + 1 == e) {
      if (rem % g[i] == 0) {
        x[i] = rem / g[i];
        out.push_back(x);
      }
      return;
    }
    if (!s.contains(rem)) return;
    for (Int k = rem / g[i]; k >= 0; --k) {
      x[i] = k;
      self(self, i + 1, rem - k * g[i]);
    }
    x[i] = 0;
  };
  walk(walk, 0, n);
  return out;
}

Int evaluate(const NumericalSemigroup& s, const FactorizationVector& x) {
  const auto& g = s.min_gens();
  if (x.size() != g.size()) fail(ErrorCode::ArityMismatch, "factorization length differs from e(S)");
  Int total = 0;
  for (std::size_t i = 0; i < g.size(); ++i) total = checked_add(total, checked_mul(x[i], g[i]));
  return total;
}

BettiGraph betti_graph(const NumericalSemigroup& s, Int n) {
  if (!s.contains(n)) fail(ErrorCode::NotAMember, std::to_string(n) + " is not in " + format_gens(s), {n});
  const auto& g = s.min_gens();
  BettiGraph out;
  out.element = n;
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (s.contains(n - g[i])) {
      idx.push_back(i);
      out.vertices.push_back(g[i]);
    }
  }
  detail::UnionFind uf(idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      if (s.contains(n - g[idx[a]] - g[idx[b]])) {
        out.edges.emplace_back(g[idx[a]], g[idx[b]]);
        uf.unite(a, b);
      }
    }
  }
  std::map<std::size_t, std::vector<Int>> comps;
  for (std::size_t a = 0; a < idx.size(); ++a) comps[uf.find(a)].push_back(g[idx[a]]);
  for (auto& [root, c] : comps) out.components.push_back(std::move(c));
  std::sort(out.components.begin(), out.components.end());
  return out;
}

std::vector<Int> betti_elements(const NumericalSemigroup& s) {
  const auto& g = s.min_gens();
  std::vector<Int> out;
  if (g.size() < 2) return out;
  const Int bound = s.frobenius() + g[g.size() - 1] + g[g.size() - 2];
  for (Int n = 0; n <= bound; ++n) {
    if (s.contains(n) && !betti_graph(s, n).connected()) out.push_back(n);
  }
  return out;
}

namespace {

// Least factorization (increasing lexicographic order) in zs whose support
// lies inside the given generator set.
const FactorizationVector& least_supported(const NumericalSemigroup& s,
                                           const std::vector<FactorizationVector>& zs,
                                           const std::vector<Int>& component, std::size_t* count) {
  const auto& g = s.min_gens();
  const FactorizationVector* best = nullptr;
  *count = 0;
  for (const auto& z : zs) {
    bool inside = true;
    for (std::size_t i = 0; i < g.size() && inside; ++i) {
      if (z[i] > 0) inside = std::binary_search(component.begin(), component.end(), g[i]);
    }
    if (!inside) continue;
    ++*count;
    if (!best || z < *best) best = &z;
  }
  if (!best) fail(ErrorCode::InternalInconsistency, "component without a supported factorization");
  return *best;
}

}  // namespace

Presentation minimal_presentation(const NumericalSemigroup& s) {
  Presentation out;
  for (Int n : betti_elements(s)) {
    const auto graph = betti_graph(s, n);
    const auto zs = factorizations(s, n);
    std::size_t count = 0;
    const auto& anchor = least_supported(s, zs, graph.components.front(), &count);
    for (std::size_t c = 1; c < graph.components.size(); ++c) {
      out.relations.push_back({anchor, least_supported(s, zs, graph.components[c], &count), n});
    }
  }
  return out;
}

PresentationStats presentation_stats(const NumericalSemigroup& s) {
  PresentationStats out;
  out.is_unique_minimal = true;
  for (Int n : betti_elements(s)) {
    const auto graph = betti_graph(s, n);
    out.cardinality += static_cast<Int>(graph.components.size()) - 1;
    if (graph.components.size() != 2) out.is_unique_minimal = false;
    const auto zs = factorizations(s, n);
    for (const auto& c : graph.components) {
      std::size_t count = 0;
      least_supported(s, zs, c, &count);
      if (count != 1) out.is_unique_minimal = false;
    }
  }
  out.is_complete_intersection = out.cardinality == s.embedding_dimension() - 1;
  return out;
}

NumericalSemigroup gluing(const NumericalSemigroup& s1, const NumericalSemigroup& s2, Int lambda, Int mu) {
  auto is_gen = [](const NumericalSemigroup& s, Int x) {
    return std::binary_search(s.min_gens().begin(), s.min_gens().end(), x);
  };
  if (lambda <= 0 || !s1.contains(lambda) || is_gen(s1, lambda)) {
    fail(ErrorCode::BadLambda, "lambda must be a nonzero member of S1 that is not a minimal generator", {lambda});
  }
  if (mu <= 0 || !s2.contains(mu) || is_gen(s2, mu)) {
    fail(ErrorCode::BadMu, "mu must be a nonzero member of S2 that is not a minimal generator", {mu});
  }
  if (std::gcd(lambda, mu) != 1) fail(ErrorCode::NotCoprime, "gcd(lambda, mu) must be 1", {lambda, mu});
  std::vector<Int> gens;
  for (Int a : s1.min_gens()) gens.push_back(checked_mul(mu, a));
  for (Int b : s2.min_gens()) gens.push_back(checked_mul(lambda, b));
  auto glued = NumericalSemigroup::from_generators(gens);
  if (glued.embedding_dimension() != s1.embedding_dimension() + s2.embedding_dimension()) {
    fail(ErrorCode::InternalInconsistency, "glued generators are not minimal");
  }
  const Int expect = presentation_stats(s1).cardinality + presentation_stats(s2).cardinality + 1;
  if (presentation_stats(glued).cardinality != expect) {
    fail(ErrorCode::InternalInconsistency,
         "presentation of " + format_gens(glued) + " does not have " + std::to_string(expect) + " relations");
  }
  return glued;
}

bool generates_congruence(const NumericalSemigroup& s, const Presentation& p, Int bound) {
  for (Int n = 0; n <= bound; ++n) {
    if (!s.contains(n)) continue;
    const auto zs = factorizations(s, n);
    if (zs.size() < 2) continue;
    std::map<FactorizationVector, std::size_t> index;
    for (std::size_t i = 0; i < zs.size(); ++i) index.emplace(zs[i], i);
    detail::UnionFind uf(zs.size());
    for (std::size_t i = 0; i < zs.size(); ++i) {
      for (const auto& r : p.relations) {
        for (int dir = 0; dir < 2; ++dir) {
          const auto& from = dir == 0 ? r.lhs : r.rhs;
          const auto& to = dir == 0 ? r.rhs : r.lhs;
          FactorizationVector y = zs[i];
          bool ok = true;
          for (std::size_t k = 0; k < y.size() && ok; ++k) {
            y[k] += to[k] - from[k];
            ok = zs[i][k] >= from[k];
          }
          if (ok) uf.unite(i, index.at(y));
        }
      }
    }
    if (uf.components() != 1) return false;
  }
  return true;
}

}  // namespace nsg::pres
