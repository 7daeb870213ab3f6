#include <doctest.h>

#include "nsg/quotients.hpp"
#include "oracles.hpp"

using namespace nsg;
using namespace nsg::quot;

namespace {

NumericalSemigroup gens(std::initializer_list<Int> g) { return NumericalSemigroup::from_generators(g); }

NumericalSemigroup lib(const oracle::Semi& s) { return NumericalSemigroup::from_generators(s.gens()); }

oracle::Semi oracle_quotient(const oracle::Semi& s, Int p) {
  oracle::Semi q;
  for (Int x = 1; x <= std::max<Int>(s.frob(), 0); ++x) {
    if (!s.has(p * x)) q.gaps.insert(x);
  }
  return q;
}

std::vector<Int> oracle_fg(const oracle::Semi& s) {
  std::vector<Int> out;
  for (Int x : s.gaps) {
    if (s.has(2 * x) && s.has(3 * x)) out.push_back(x);
  }
  return out;
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

}  // namespace

TEST_CASE("quotient fixtures") {
  CHECK(quotient(gens({3, 5, 7}), 2) == gens({3, 4, 5}));
  CHECK(quotient(gens({3, 5, 7}), 1) == gens({3, 5, 7}));
  CHECK(quotient(gens({2, 3}), 5).is_natural());
  CHECK(quotient_fundamental_gaps(gens({3, 5, 7}), 2) == std::vector<Int>{2});
  CHECK(fundamental_gaps(gens({3, 4, 5})) == std::vector<Int>{2});
  CHECK(quotient_fundamental_gaps(gens({2, 3}), 3).empty());
  CHECK(quotient_fundamental_gaps(gens({3, 5, 7}), 1) == fundamental_gaps(gens({3, 5, 7})));
}

TEST_CASE("quotients agree with the oracle and compose for genus <= 10") {
  for (int g = 0; g <= 10; ++g) {
    for (const auto& o : oracle::all_of_genus(g)) {
      const auto s = lib(o);
      for (Int a = 1; a <= 5; ++a) {
        const auto q = quotient(s, a);
        const auto oq = oracle_quotient(o, a);
        CHECK(q.gaps() == std::vector<Int>(oq.gaps.begin(), oq.gaps.end()));
        if (!s.is_natural()) CHECK(q.frobenius() <= s.frobenius() / a);
        for (Int b = 1; b <= 5; ++b) CHECK(quotient(q, b) == quotient(s, a * b));
      }
    }
  }
}

TEST_CASE("fundamental gaps of quotients for genus <= 10") {
  for (int g = 0; g <= 10; ++g) {
    for (const auto& o : oracle::all_of_genus(g)) {
      const auto s = lib(o);
      const auto fg = oracle_fg(o);
      for (Int d = 1; d <= 4; ++d) {
        std::vector<Int> expect;
        for (Int h : fg) {
          if (h % d == 0) expect.push_back(h / d);
        }
        CHECK(oracle_fg(oracle_quotient(o, d)) == expect);
        CHECK(quotient_fundamental_gaps(s, d) == expect);
      }
    }
  }
}

TEST_CASE("doubles fixtures") {
  const auto d = multiples_up_to(gens({2, 3}), 2, 9);
  CHECK(std::find(d.begin(), d.end(), gens({4, 6, 7})) != d.end());
  CHECK(std::find(d.begin(), d.end(), gens({3, 4, 5})) != d.end());
  CHECK(multiples_up_to(gens({2, 3}), 2, 2) == SemigroupList{gens({3, 4, 5})});
  CHECK(multiples_up_to(gens({3, 5, 7}), 1, 4) == SemigroupList{gens({3, 5, 7})});
  CHECK(code_of([] { multiples_up_to(gens({3, 5, 7}), 2, 3); }) == ErrorCode::BadInput);
  CHECK(code_of([] { multiples_up_to(gens({3, 5, 7}), 3, 4); }) == ErrorCode::CapTooSmall);
}

TEST_CASE("doubles are complete within the cap") {
  // Every T with F(T) <= cap has genus <= cap, so the oracle lists them all.
  const Int cap = 9;
  std::vector<oracle::Semi> pool;
  for (int g = 0; g <= cap; ++g) {
    for (auto& t : oracle::all_of_genus(g)) {
      if (t.frob() <= cap) pool.push_back(t);
    }
  }
  for (int g = 0; g <= 3; ++g) {
    for (const auto& o : oracle::all_of_genus(g)) {
      const auto s = lib(o);
      for (Int d = 2; d <= 3; ++d) {
        if (s.frobenius() > cap) continue;
        SemigroupList expect;
        for (const auto& t : pool) {
          if (oracle_quotient(t, d).gaps == o.gaps) expect.push_back(lib(t));
        }
        std::sort(expect.begin(), expect.end());
        if (expect.empty()) continue;
        const auto got = multiples_up_to(s, d, cap);
        CHECK(got == expect);
        for (const auto& t : got) CHECK(quotient(t, d) == s);
      }
    }
  }
}

TEST_CASE("halves of pseudo-symmetric semigroups are irreducible (genus <= 12)") {
  for (int g = 1; g <= 12; ++g) {
    for (const auto& o : oracle::all_of_genus(g)) {
      if (!oracle::pseudo_symmetric(o)) continue;
      const auto half = oracle_quotient(o, 2);
      CHECK((oracle::symmetric(half) || oracle::pseudo_symmetric(half)));
      CHECK(is_irreducible(quotient(lib(o), 2)));
    }
  }
}

TEST_CASE("least symmetric doubles match the oracle (genus <= 4)") {
  // Symmetric T with F(T) <= 25 have genus <= 13; collect them once.
  const Int cap = 25;
  std::vector<oracle::Semi> sym;
  for (int g = 1; g <= 13; ++g) {
    for (auto& t : oracle::all_of_genus(g)) {
      if (t.frob() <= cap && oracle::symmetric(t)) sym.push_back(t);
    }
  }
  for (int g = 0; g <= 4; ++g) {
    for (const auto& o : oracle::all_of_genus(g)) {
      Int expect = -1;
      for (const auto& t : sym) {
        if (oracle_quotient(t, 2).gaps == o.gaps && (expect < 0 || t.frob() < expect)) expect = t.frob();
      }
      REQUIRE(expect > 0);
      const auto s = lib(o);
      Int got = -1;
      for (const auto& t : multiples_up_to(s, 2, cap)) {
        if (classify(t) == Irreducibility::Symmetric && (got < 0 || t.frobenius() < got)) got = t.frobenius();
      }
      CHECK(got == expect);
    }
  }
}

TEST_CASE("symmetric doubles within 2F(S)+4 (genus <= 5)") {
  // Fails for <2,5>, whose least symmetric double has Frobenius number 11.
  // Kept as stated; the oracle case above pins the true minima.
  int missing = 0;
  for (int g = 0; g <= 5; ++g) {
    for (const auto& o : oracle::all_of_genus(g)) {
      const auto s = lib(o);
      const auto ds = multiples_up_to(s, 2, 2 * std::max<Int>(s.frobenius(), 0) + 4);
      bool found = false;
      for (const auto& t : ds) found = found || classify(t) == Irreducibility::Symmetric;
      missing += !found;
    }
  }
  CHECK(missing == 20);
}

TEST_CASE("minimal Frobenius number of doubles") {
  const auto m = min_frobenius_of_multiples(gens({2, 3}), 2);
  CHECK(m.frobenius == 2);
  REQUIRE_FALSE(m.witnesses.empty());
  CHECK(m.witnesses.front() == gens({3, 4, 5}));
  CHECK(min_frobenius_of_multiples(NumericalSemigroup(), 2).frobenius == -1);
}

TEST_CASE("irreducible decomposition fixtures") {
  const auto d = irreducible_decomposition(gens({4, 6, 7, 9}));
  CHECK(d.minimal);
  CHECK(d.components == SemigroupList{gens({2, 7}), gens({3, 4})});
  CHECK(irreducible_decomposition(gens({4, 6, 7})).components == SemigroupList{gens({4, 6, 7})});
  CHECK(irreducible_decomposition(NumericalSemigroup()).components == SemigroupList{NumericalSemigroup()});
}

TEST_CASE("decompositions have the least size (genus <= 7)") {
  std::vector<oracle::Semi> all;
  for (int g = 0; g <= 7; ++g) {
    for (auto& o : oracle::all_of_genus(g)) all.push_back(o);
  }
  for (const auto& o : all) {
    std::vector<const oracle::Semi*> irr;
    for (const auto& t : all) {
      const bool over = std::includes(o.gaps.begin(), o.gaps.end(), t.gaps.begin(), t.gaps.end());
      if (over && (oracle::symmetric(t) || oracle::pseudo_symmetric(t))) irr.push_back(&t);
    }
    // Least k such that k irreducible oversemigroups intersect to S: the union
    // of their gap sets must be the gap set of S.
    std::size_t best = 0;
    for (std::size_t k = 1; k <= 4 && best == 0; ++k) {
      std::vector<std::size_t> idx(k);
      std::function<bool(std::size_t, std::size_t)> pick = [&](std::size_t at, std::size_t from) {
        if (at == k) {
          std::set<Int> u;
          for (auto i : idx) u.insert(irr[i]->gaps.begin(), irr[i]->gaps.end());
          return u == o.gaps;
        }
        for (std::size_t i = from; i < irr.size(); ++i) {
          idx[at] = i;
          if (pick(at + 1, i + 1)) return true;
        }
        return false;
      };
      if (pick(0, 0)) best = k;
    }
    const auto s = lib(o);
    const auto dec = irreducible_decomposition(s);
    if (best > 0) CHECK(dec.components.size() == best);
    CHECK(dec.minimal);

    NumericalSemigroup meet = dec.components.front();
    for (const auto& c : dec.components) {
      CHECK(is_irreducible(c));
      if (!c.is_natural()) CHECK_FALSE(s.contains(c.frobenius()));
      meet = intersection(meet, c);
    }
    CHECK(meet == s);
    for (std::size_t i = 0; i < dec.components.size(); ++i) {
      for (std::size_t j = 0; j < dec.components.size(); ++j) {
        if (i != j) CHECK_FALSE(is_subset(dec.components[i], dec.components[j]));
      }
    }
  }
}
