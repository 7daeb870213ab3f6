#include "nsg/factorizations.hpp"

#include <algorithm>
#include <set>

#include "union_find.hpp"

namespace nsg::fact {

namespace {

Int length(const FactorizationVector& x) {
  Int l = 0;
  for (Int v : x) l += v;
  return l;
}

void require_member(const NumericalSemigroup& s, Int n) {
  if (!s.contains(n)) fail(ErrorCode::NotAMember, std::to_string(n) + " is not in " + format_gens(s), {n});
}

Int betti_bound(const NumericalSemigroup& s) {
  const auto& g = s.min_gens();
  if (g.size() < 2) return 0;
  return s.frobenius() + g[g.size() - 1] + g[g.size() - 2];
}

std::vector<Int> differences(const std::vector<Int>& sorted) {
  std::set<Int> d;
  for (std::size_t i = 1; i < sorted.size(); ++i) d.insert(sorted[i] - sorted[i - 1]);
  return {d.begin(), d.end()};
}

}  // namespace

LengthData length_data(const NumericalSemigroup& s, Int n) {
  LengthData out;
  out.element = n;
  std::set<Int> ls;
  for (const auto& z : pres::factorizations(s, n)) ls.insert(length(z));
  out.lengths.assign(ls.begin(), ls.end());
  out.delta = differences(out.lengths);
  return out;
}

modular::Fraction elasticity(const NumericalSemigroup& s) {
  return modular::Fraction::reduced(s.min_gens().back(), s.min_gens().front());
}

modular::Fraction elasticity_of(const NumericalSemigroup& s, Int n) {
  require_member(s, n);
  if (n == 0) fail(ErrorCode::ZeroElement, "elasticity of 0 is undefined");
  const auto ld = length_data(s, n);
  return modular::Fraction::reduced(ld.lengths.back(), ld.lengths.front());
}

Int distance(const FactorizationVector& x, const FactorizationVector& y) {
  if (x.size() != y.size()) fail(ErrorCode::ArityMismatch, "factorizations of different length");
  Int lx = 0, ly = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Int common = std::min(x[i], y[i]);
    lx += x[i] - common;
    ly += y[i] - common;
  }
  return std::max(lx, ly);
}

Int catenary_degree(const NumericalSemigroup& s, Int n) {
  const auto zs = pres::factorizations(s, n);
  if (zs.size() < 2) return 0;
  struct Edge {
    Int d;
    std::size_t a, b;
  };
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < zs.size(); ++a) {
    for (std::size_t b = a + 1; b < zs.size(); ++b) edges.push_back({distance(zs[a], zs[b]), a, b});
  }
  std::vector<Int> ds;
  for (const auto& e : edges) ds.push_back(e.d);
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  auto connected = [&](Int cap) {
    detail::UnionFind uf(zs.size());
    for (const auto& e : edges) {
      if (e.d <= cap) uf.unite(e.a, e.b);
    }
    return uf.components() == 1;
  };
  std::size_t lo = 0, hi = ds.size() - 1;  // connected(ds.back()) always holds
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (connected(ds[mid])) hi = mid;
    else lo = mid + 1;
  }
  return ds[lo];
}

Int catenary_by_betti(const NumericalSemigroup& s) {
  Int c = 0;
  for (Int b : pres::betti_elements(s)) c = std::max(c, catenary_degree(s, b));
  return c;
}

Int catenary_direct(const NumericalSemigroup& s) {
  Int c = 0;
  const Int bound = betti_bound(s);
  for (Int n = 0; n <= bound; ++n) {
    if (s.contains(n)) c = std::max(c, catenary_degree(s, n));
  }
  return c;
}

Int catenary_degree_of_semigroup(const NumericalSemigroup& s) {
  const Int by_betti = catenary_by_betti(s);
  const Int direct = catenary_direct(s);
  if (by_betti != direct) {
    fail(ErrorCode::InternalInconsistency, "catenary degree over Betti elements is " + std::to_string(by_betti) +
                                               " but the direct maximum is " + std::to_string(direct));
  }
  return by_betti;
}

Int tame_degree(const NumericalSemigroup& s, Int n) {
  const auto zs = pres::factorizations(s, n);
  const auto& g = s.min_gens();
  Int t = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!s.contains(n - g[i])) continue;
    for (const auto& x : zs) {
      if (x[i] > 0) continue;
      Int best = -1;
      for (const auto& y : zs) {
        if (y[i] == 0) continue;
        const Int d = distance(x, y);
        if (best < 0 || d < best) best = d;
      }
      t = std::max(t, best);
    }
  }
  return t;
}

Int tame_degree_of_semigroup(const NumericalSemigroup& s) {
  const auto& g = s.min_gens();
  std::set<Int> candidates;
  for (std::size_t j = 0; j < g.size(); ++j) {
    const auto ap = apery_set(s, g[j]);
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (i == j) continue;
      for (Int w : ap.witnesses) candidates.insert(g[i] + w);
    }
  }
  Int t = 0;
  for (Int n : candidates) t = std::max(t, tame_degree(s, n));
  return t;
}

namespace {

// Visits every z in N^e with phi(z) <= bound.
template <class Visit>
void for_each_vector(const std::vector<Int>& g, Int bound, Visit&& visit) {
  std::vector<Int> z(g.size(), 0);
  auto walk = [&](auto&& self, std::size_t i, Int used) -> void {
    if (i == g.size()) {
      visit(z, used);
      return;
    }
    for (Int k = 0; used + k * g[i] <= bound; ++k) {
      z[i] = k;
      self(self, i + 1, used + k * g[i]);
    }
    z[i] = 0;
  };
  walk(walk, 0, 0);
}

void require_omega_input(const NumericalSemigroup& s, Int n) {
  require_member(s, n);
  if (n == 0) fail(ErrorCode::ZeroElement, "omega is defined for nonzero members only");
}

}  // namespace

Int omega_primality(const NumericalSemigroup& s, Int n) {
  require_omega_input(s, n);
  const auto& g = s.min_gens();
  // A minimal z has phi(z) - n_i - n a gap for each used n_i.
  const Int bound = checked_add(checked_add(n, std::max<Int>(s.frobenius(), 0)), g.back());
  Int omega = 0;
  for_each_vector(g, bound, [&](const std::vector<Int>& z, Int value) {
    if (!s.contains(value - n)) return;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (z[i] > 0 && s.contains(value - g[i] - n)) return;
    }
    omega = std::max(omega, length(z));
  });
  return omega;
}

Int omega_of_semigroup(const NumericalSemigroup& s) {
  Int w = 0;
  for (Int x : s.min_gens()) w = std::max(w, omega_primality(s, x));
  return w;
}

Int omega_definitional(const NumericalSemigroup& s, Int n, Int max_summands) {
  require_omega_input(s, n);
  const auto& g = s.min_gens();
  const std::size_t e = g.size();
  // Multisets of generators as exponent vectors z with |z| <= max_summands.
  Int worst = 0;
  std::vector<Int> z(e, 0);
  auto divides = [&](const std::vector<Int>& y) {
    Int v = 0;
    for (std::size_t i = 0; i < e; ++i) v += y[i] * g[i];
    return s.contains(v - n);
  };
  auto least_sub = [&](const std::vector<Int>& top) {
    Int best = length(top);
    std::vector<Int> y(e, 0);
    auto walk = [&](auto&& self, std::size_t i) -> void {
      if (i == e) {
        if (divides(y)) best = std::min(best, length(y));
        return;
      }
      for (Int k = 0; k <= top[i]; ++k) {
        y[i] = k;
        self(self, i + 1);
      }
      y[i] = 0;
    };
    walk(walk, 0);
    return best;
  };
  auto outer = [&](auto&& self, std::size_t i, Int left) -> void {
    if (i == e) {
      if (divides(z)) worst = std::max(worst, least_sub(z));
      return;
    }
    for (Int k = 0; k <= left; ++k) {
      z[i] = k;
      self(self, i + 1, left - k);
    }
    z[i] = 0;
  };
  outer(outer, 0, max_summands);
  return worst;
}

std::vector<Int> delta_set_up_to(const NumericalSemigroup& s, Int bound) {
  if (bound < s.frobenius()) {
    fail(ErrorCode::BadInput, "bound must be at least F(S) = " + std::to_string(s.frobenius()));
  }
  const auto& g = s.min_gens();
  // lengths[n][l] is set when n has a factorization of length l.
  std::vector<std::vector<std::uint8_t>> lengths(static_cast<std::size_t>(bound + 1));
  lengths[0] = {1};
  std::set<Int> out;
  for (Int n = 1; n <= bound; ++n) {
    auto& cur = lengths[static_cast<std::size_t>(n)];
    cur.assign(static_cast<std::size_t>(n / g.front() + 1), 0);
    for (Int x : g) {
      if (x > n) break;
      const auto& prev = lengths[static_cast<std::size_t>(n - x)];
      for (std::size_t l = 0; l < prev.size(); ++l) {
        if (prev[l]) cur[l + 1] = 1;
      }
    }
    Int last = -1;
    for (std::size_t l = 0; l < cur.size(); ++l) {
      if (!cur[l]) continue;
      if (last >= 0) out.insert(static_cast<Int>(l) - last);
      last = static_cast<Int>(l);
    }
  }
  return {out.begin(), out.end()};
}

std::string_view to_string(Invariant inv) noexcept {
  switch (inv) {
    case Invariant::Delta: return "delta";
    case Invariant::Catenary: return "catenary";
    case Invariant::Tame: return "tame";
  }
  return "?";
}

Invariant parse_invariant(std::string_view text) {
  if (text == "delta") return Invariant::Delta;
  if (text == "catenary") return Invariant::Catenary;
  if (text == "tame") return Invariant::Tame;
  fail(ErrorCode::BadInput, "unknown invariant '" + std::string(text) + "'");
}

std::vector<ProbeRow> periodicity_probe(const NumericalSemigroup& s, Invariant inv, Int window,
                                        const std::vector<Int>& candidates) {
  if (window < 0) fail(ErrorCode::BadInput, "window must be nonnegative");
  for (Int p : candidates) {
    if (p <= 0 || !s.contains(p)) fail(ErrorCode::BadInput, "candidate periods must be nonzero members", {p});
  }
  const Int top = window + (candidates.empty() ? 0 : *std::max_element(candidates.begin(), candidates.end()));
  std::vector<std::vector<Int>> memo(static_cast<std::size_t>(top) + 1);
  auto value = [&](Int n) -> const std::vector<Int>& {
    auto& v = memo[static_cast<std::size_t>(n)];
    if (v.empty()) {
      switch (inv) {
        case Invariant::Delta: v = length_data(s, n).delta; break;
        case Invariant::Catenary: v = {catenary_degree(s, n)}; break;
        case Invariant::Tame: v = {tame_degree(s, n)}; break;
      }
      v.insert(v.begin(), 0);  // marks the entry as computed
    }
    return v;
  };
  std::vector<ProbeRow> rows;
  for (Int p : candidates) {
    ProbeRow row;
    row.period = p;
    row.stable_from = 0;
    for (Int n = 0; n <= window; ++n) {
      if (!s.contains(n)) continue;
      ++row.checked;
      if (value(n) == value(n + p)) ++row.agreements;
      else row.stable_from = n + 1;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace nsg::fact
