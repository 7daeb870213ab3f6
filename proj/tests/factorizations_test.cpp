#include <doctest.h>

#include <map>
#include <random>

#include "nsg/factorizations.hpp"
#include "oracles.hpp"

using namespace nsg;
using namespace nsg::fact;
using modular::Fraction;

namespace {

NumericalSemigroup gens(std::initializer_list<Int> g) { return NumericalSemigroup::from_generators(g); }

NumericalSemigroup lib(const oracle::Semi& s) { return NumericalSemigroup::from_generators(s.gens()); }

std::vector<oracle::Semi> up_to_genus(int g_max) {
  std::vector<oracle::Semi> all;
  for (int g = 0; g <= g_max; ++g) {
    for (auto& o : oracle::all_of_genus(g)) all.push_back(o);
  }
  return all;
}

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalInconsistency;
}

// omega(S, n) from the definition, over sums of at most k atoms: for every
// z with phi(z) - n in S, the fewest atoms of z whose sum still lies in n + S;
// the largest such count wins.
Int omega_oracle(const oracle::Semi& s, const oracle::Vec& g, Int n, Int k) {
  std::map<oracle::Vec, Int> best;
  Int omega = 0;
  std::vector<oracle::Vec> level{oracle::Vec(g.size(), 0)};
  best[level[0]] = n == 0 ? 0 : 1 << 30;
  for (Int size = 1; size <= k; ++size) {
    std::vector<oracle::Vec> next;
    for (const auto& z : level) {
      for (std::size_t i = 0; i < g.size(); ++i) {
        auto y = z;
        ++y[i];
        if (best.count(y)) continue;
        Int b = 1 << 30;
        Int value = 0;
        for (std::size_t j = 0; j < g.size(); ++j) {
          value += y[j] * g[j];
          if (y[j] == 0) continue;
          auto w = y;
          --w[j];
          b = std::min(b, best.at(w));
        }
        if (s.has(value - n)) {
          b = std::min(b, size);
          omega = std::max(omega, b);
        }
        best[y] = b;
        next.push_back(y);
      }
    }
    level = std::move(next);
  }
  return omega;
}

}  // namespace

TEST_CASE("lengths and elasticity fixtures") {
  const auto l = length_data(gens({3, 5, 7}), 12);
  CHECK(l.lengths == std::vector<Int>{2, 4});
  CHECK(l.delta == std::vector<Int>{2});
  CHECK(length_data(gens({3, 5, 7}), 0).lengths == std::vector<Int>{0});
  CHECK(length_data(gens({3, 5, 7}), 0).delta.empty());
  CHECK(length_data(gens({3, 5, 7}), 10).lengths == std::vector<Int>{2});
  CHECK(code_of([] { length_data(gens({3, 5, 7}), 4); }) == ErrorCode::NotAMember);

  CHECK(elasticity(gens({3, 5, 7})) == Fraction{7, 3});
  CHECK(elasticity_of(gens({2, 3}), 6) == Fraction{3, 2});
  CHECK(elasticity(NumericalSemigroup()) == Fraction{1, 1});
  CHECK(code_of([] { elasticity_of(gens({2, 3}), 0); }) == ErrorCode::ZeroElement);
}

TEST_CASE("elasticity is attained at n1 n_e (genus <= 10)") {
  for (const auto& o : up_to_genus(10)) {
    const auto s = lib(o);
    if (s.is_natural()) continue;
    const auto g = s.min_gens();
    const auto rho = elasticity(s);
    CHECK(elasticity_of(s, g.front() * g.back()) == rho);
    for (Int n = 1; n <= 5 * g.back(); ++n) {
      if (s.contains(n)) CHECK(elasticity_of(s, n) <= rho);
    }
  }
}

TEST_CASE("distance") {
  CHECK(distance({1, 0, 1}, {0, 2, 0}) == 2);
  CHECK(distance({4, 0, 0}, {0, 1, 1}) == 4);
  CHECK(distance({2, 1}, {2, 1}) == 0);
  CHECK(code_of([] { distance({1, 2}, {1}); }) == ErrorCode::ArityMismatch);
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<Int> v(0, 5);
  for (int t = 0; t < 500; ++t) {
    FactorizationVector x(4), y(4), z(4);
    for (int i = 0; i < 4; ++i) x[i] = v(rng), y[i] = v(rng), z[i] = v(rng);
    CHECK(distance(x, y) == oracle::dist(x, y));
    CHECK(distance(x, z) <= distance(x, y) + distance(y, z));
    CHECK((distance(x, y) == 0) == (x == y));
    CHECK(distance(x, y) == distance(y, x));
  }
}

TEST_CASE("catenary fixtures") {
  CHECK(catenary_degree(gens({3, 5, 7}), 10) == 2);
  CHECK(catenary_degree_of_semigroup(gens({3, 5, 7})) == 4);
  CHECK(catenary_degree(gens({3, 5, 7}), 3) == 0);
  CHECK(catenary_degree_of_semigroup(gens({2, 3})) == 3);
  CHECK(catenary_degree_of_semigroup(NumericalSemigroup()) == 0);
}

TEST_CASE("catenary degrees against the threshold oracle (genus <= 10)") {
  for (const auto& o : up_to_genus(10)) {
    const auto s = lib(o);
    const auto g = s.min_gens();
    Int direct = 0;
    const Int bound = std::max<Int>(s.frobenius(), 0) + g.back() + (g.size() > 1 ? g[g.size() - 2] : 0);
    for (Int n = 0; n <= bound; ++n) {
      if (!s.contains(n)) continue;
      const Int c = oracle::catenary(g, n);
      if (o.genus() <= 7) CHECK(catenary_degree(s, n) == c);
      direct = std::max(direct, c);
    }
    CHECK(catenary_by_betti(s) == direct);
    CHECK(catenary_direct(s) == direct);
  }
}

TEST_CASE("tame degree") {
  CHECK(tame_degree(gens({2, 3}), 6) == 3);
  CHECK(tame_degree_of_semigroup(gens({2, 3})) == 3);
  CHECK(tame_degree(gens({3, 5, 7}), 3) == 0);
  for (const auto& o : up_to_genus(8)) {
    const auto s = lib(o);
    const auto g = s.min_gens();
    Int direct = 0;
    for (Int n = 0; n <= std::max<Int>(s.frobenius(), 0) + 3 * g.back(); ++n) {
      if (!s.contains(n)) continue;
      const Int t = oracle::tame(o, g, n);
      CHECK(tame_degree(s, n) == t);
      direct = std::max(direct, t);
    }
    CHECK(tame_degree_of_semigroup(s) == direct);
  }
}

TEST_CASE("omega-primality") {
  CHECK(omega_primality(gens({2, 3}), 2) == 2);
  CHECK(omega_primality(gens({2, 3}), 3) == 3);
  CHECK(omega_of_semigroup(gens({2, 3})) == 3);
  CHECK(code_of([] { omega_primality(gens({2, 3}), 0); }) == ErrorCode::ZeroElement);
  CHECK(code_of([] { omega_primality(gens({2, 3}), 1); }) == ErrorCode::NotAMember);
  for (const auto& o : up_to_genus(8)) {
    const auto s = lib(o);
    const auto g = s.min_gens();
    for (Int n : g) {
      const Int w = omega_primality(s, n);
      CHECK(omega_oracle(o, g, n, w + 2) == w);
      CHECK(omega_definitional(s, n, std::max<Int>(6, w + 1)) == w);
    }
  }
}

TEST_CASE("omega and tame degree rarely differ (genus <= 10)") {
  int differ = 0, total = 0;
  for (const auto& o : up_to_genus(10)) {
    const auto s = lib(o);
    if (s.is_natural()) continue;
    ++total;
    differ += omega_of_semigroup(s) != tame_degree_of_semigroup(s);
  }
  MESSAGE("omega != tame for " << differ << " of " << total << " semigroups");
  CHECK(total == 477);
}

TEST_CASE("delta sets and probes") {
  CHECK(delta_set_up_to(gens({3, 5, 7}), 50) == std::vector<Int>{2});
  CHECK(delta_set_up_to(NumericalSemigroup(), 10).empty());
  CHECK(code_of([] { delta_set_up_to(gens({3, 5, 7}), 3); }) == ErrorCode::BadInput);
  for (const auto& o : up_to_genus(6)) {
    const auto s = lib(o);
    const Int bound = std::max<Int>(s.frobenius(), 0) + 30;
    std::set<Int> expect;
    for (Int n = 0; n <= bound; ++n) {
      if (!s.contains(n)) continue;
      std::set<Int> lens;
      for (const auto& z : oracle::factorizations(s.min_gens(), n)) {
        Int l = 0;
        for (Int x : z) l += x;
        lens.insert(l);
      }
      for (auto it = std::next(lens.begin()); it != lens.end(); ++it) expect.insert(*it - *std::prev(it));
    }
    CHECK(delta_set_up_to(s, bound) == std::vector<Int>(expect.begin(), expect.end()));
  }

  const auto rows = periodicity_probe(gens({2, 3}), Invariant::Catenary, 100, {2, 3});
  REQUIRE(rows.size() == 2);
  for (const auto& r : rows) {
    CHECK(r.checked == 100);
    CHECK(r.agreements <= r.checked);
    CHECK(r.agreements > 0);
  }
  CHECK(parse_invariant("tame") == Invariant::Tame);
  CHECK(code_of([] { periodicity_probe(gens({2, 3}), Invariant::Delta, 10, {1}); }) == ErrorCode::BadInput);
}
