#include <doctest.h>

#include "nsg/core.hpp"
#include "oracles.hpp"

using namespace nsg;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InternalInconsistency;
}

NumericalSemigroup lib(const oracle::Semi& s) {
  const auto gens = s.gens();
  return NumericalSemigroup::from_generators(gens);
}

}  // namespace

TEST_CASE("from_generators fixtures") {
  const NumericalSemigroup n = NumericalSemigroup::from_generators({1});
  CHECK(n.is_natural());
  CHECK(n.frobenius() == -1);
  CHECK(n.genus() == 0);
  CHECK(n == NumericalSemigroup());

  const auto s23 = NumericalSemigroup::from_generators({2, 3});
  CHECK(s23.frobenius() == 1);
  CHECK(s23.genus() == 1);

  const auto s = NumericalSemigroup::from_generators({3, 5, 7, 10});
  CHECK(s.min_gens() == std::vector<Int>{3, 5, 7});
  CHECK(s.frobenius() == 4);
  CHECK(s.gaps() == std::vector<Int>{1, 2, 4});
  CHECK_FALSE(s.contains(4));
  CHECK(s.contains(0));
  CHECK_FALSE(s23.contains(1));

  CHECK(NumericalSemigroup::from_generators({7, 3, 3, 5}).min_gens() == std::vector<Int>{3, 5, 7});
  CHECK(NumericalSemigroup::from_generators({6, 10, 15}).frobenius() == 29);
}

TEST_CASE("from_generators errors") {
  CHECK(code_of([] { NumericalSemigroup::from_generators(std::vector<Int>{}); }) == ErrorCode::EmptyInput);
  CHECK(code_of([] { NumericalSemigroup::from_generators({0, 3}); }) == ErrorCode::BadInput);
  CHECK(code_of([] { NumericalSemigroup::from_generators({2, 4}); }) == ErrorCode::GcdNotOne);
  CHECK(code_of([] { NumericalSemigroup::from_generators({1 << 14, (1 << 14) + 1}); }) ==
        ErrorCode::BudgetExceeded);
}

TEST_CASE("invariant_report fixtures") {
  auto r = invariant_report(NumericalSemigroup::from_generators({2, 3}));
  CHECK(r.type == 1);
  CHECK(r.pseudo_frobenius == std::vector<Int>{1});

  r = invariant_report(NumericalSemigroup::from_generators({3, 5, 7}));
  CHECK(r.pseudo_frobenius == std::vector<Int>{2, 4});
  CHECK(r.type == 2);
  CHECK(r.wilf_left == 9);
  CHECK(r.wilf_right == 10);

  r = invariant_report(NumericalSemigroup::from_generators({4, 5, 6}));
  CHECK(r.frobenius == 7);
  CHECK(r.genus == 4);
  CHECK(r.type == 1);
}

TEST_CASE("apery sets") {
  CHECK(apery_set(NumericalSemigroup::from_generators({2, 3}), 2).witnesses == std::vector<Int>{0, 3});
  CHECK(apery_set(NumericalSemigroup::from_generators({3, 5, 7}), 3).witnesses == std::vector<Int>{0, 7, 5});
  CHECK(apery_set(NumericalSemigroup::from_generators({4, 5, 6}), 4).witnesses == std::vector<Int>{0, 5, 6, 11});
  CHECK(code_of([] { apery_set(NumericalSemigroup::from_generators({3, 5, 7}), 4); }) == ErrorCode::NotAMember);
}

TEST_CASE("from_gaps") {
  CHECK(NumericalSemigroup::from_gaps(std::vector<Int>{}).is_natural());
  CHECK(NumericalSemigroup::from_gaps(std::vector<Int>{1, 2, 4}).min_gens() == std::vector<Int>{3, 5, 7});
  CHECK(NumericalSemigroup::from_gaps(std::vector<Int>{1, 3}).min_gens() == std::vector<Int>{2, 5});
  try {
    NumericalSemigroup::from_gaps(std::vector<Int>{2});
    FAIL("accepted {2}");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotASemigroup);
    CHECK(e.witness() == std::vector<Int>{1, 1});
  }
}

TEST_CASE("fundamental gaps") {
  CHECK(fundamental_gaps(NumericalSemigroup()).empty());
  CHECK(fundamental_gaps(NumericalSemigroup::from_generators({3, 5, 7})) == std::vector<Int>{4});
  CHECK(fundamental_gaps(NumericalSemigroup::from_generators({2, 3})) == std::vector<Int>{1});
  CHECK(fundamental_gaps(NumericalSemigroup::from_generators({3, 4, 5})) == std::vector<Int>{2});

  CHECK(from_fundamental_gaps(std::vector<Int>{4}).min_gens() == std::vector<Int>{3, 5, 7});
  CHECK(from_fundamental_gaps(std::vector<Int>{}).is_natural());
  // {2}: N \ D({2}) = <3,4,5>, whose fundamental gaps are exactly {2}.
  CHECK(from_fundamental_gaps(std::vector<Int>{2}).min_gens() == std::vector<Int>{3, 4, 5});
  CHECK(code_of([] { from_fundamental_gaps(std::vector<Int>{2, 4}); }) == ErrorCode::NotFundamentalGapSet);
  CHECK(code_of([] { from_fundamental_gaps(std::vector<Int>{5}); }) == ErrorCode::NotFundamentalGapSet);
}

TEST_CASE("classify fixtures") {
  CHECK(classify(NumericalSemigroup::from_generators({4, 6, 7})) == Irreducibility::Symmetric);
  CHECK(classify(NumericalSemigroup::from_generators({3, 5, 7})) == Irreducibility::PseudoSymmetric);
  CHECK(classify(NumericalSemigroup::from_generators({4, 6, 7, 9})) == Irreducibility::ReducibleOther);
}

TEST_CASE("oversemigroups fixtures") {
  CHECK(oversemigroups(NumericalSemigroup()).size() == 1);
  const auto o23 = oversemigroups(NumericalSemigroup::from_generators({2, 3}));
  CHECK(o23.size() == 2);
  const auto o345 = oversemigroups(NumericalSemigroup::from_generators({3, 4, 5}));
  REQUIRE(o345.size() == 3);
  CHECK(std::find(o345.begin(), o345.end(), NumericalSemigroup::from_generators({2, 3})) != o345.end());
}

TEST_CASE("every semigroup of genus <= 10 agrees with the gap oracle") {
  for (int g = 0; g <= 10; ++g) {
    for (const auto& o : oracle::all_of_genus(g)) {
      const auto s = lib(o);
      REQUIRE(s.genus() == o.genus());
      CHECK(s.frobenius() == o.frob());
      CHECK(s.multiplicity() == o.mult());
      CHECK(invariant_report(s).type == oracle::type(o));
      const auto c = classify(s);
      CHECK((c == Irreducibility::Symmetric) == oracle::symmetric(o));
      CHECK((c == Irreducibility::PseudoSymmetric) == (oracle::pseudo_symmetric(o) && !o.gaps.empty()));
      const std::vector<Int> gaps(o.gaps.begin(), o.gaps.end());
      CHECK(s.gaps() == gaps);
      CHECK(NumericalSemigroup::from_gaps(gaps) == s);
    }
  }
}

TEST_CASE("fundamental gaps determine S for genus <= 8") {
  for (int g = 0; g <= 8; ++g) {
    for (const auto& o : oracle::all_of_genus(g)) {
      const auto s = lib(o);
      const auto fg = fundamental_gaps(s);
      CHECK(divisor_closure(fg) == s.gaps());
      CHECK(from_fundamental_gaps(fg) == s);
    }
  }
}

TEST_CASE("oversemigroups match the containment oracle for genus <= 6") {
  std::vector<oracle::Semi> all;
  for (int g = 0; g <= 6; ++g) {
    for (auto& o : oracle::all_of_genus(g)) all.push_back(o);
  }
  for (const auto& o : all) {
    std::size_t expect = 0;
    for (const auto& t : all) {
      expect += std::includes(o.gaps.begin(), o.gaps.end(), t.gaps.begin(), t.gaps.end());
    }
    CHECK(oversemigroups(lib(o)).size() == expect);
  }
}

TEST_CASE("set operations") {
  const auto a = NumericalSemigroup::from_generators({3, 4});
  const auto b = NumericalSemigroup::from_generators({2, 7});
  CHECK(intersection(a, b) == NumericalSemigroup::from_generators({4, 6, 7, 9}));
  CHECK(is_subset(NumericalSemigroup::from_generators({4, 6, 7, 9}), a));
  CHECK_FALSE(is_subset(a, b));
  CHECK(adjoin_frobenius(NumericalSemigroup::from_generators({3, 5, 7})) ==
        NumericalSemigroup::from_generators({3, 4, 5}));
  CHECK(adjoin_frobenius(NumericalSemigroup()).is_natural());
  CHECK(remove_generator(NumericalSemigroup::from_generators({2, 3}), 2) ==
        NumericalSemigroup::from_generators({3, 4, 5}));
  CHECK(code_of([] { remove_generator(NumericalSemigroup::from_generators({2, 3}), 4); }) == ErrorCode::BadInput);
  CHECK(representable(10, std::vector<Int>{4, 6}));
  CHECK_FALSE(representable(7, std::vector<Int>{4, 6}));
}

TEST_CASE("parse_int_list") {
  CHECK(parse_int_list("3,5,7") == std::vector<Int>{3, 5, 7});
  CHECK(parse_int_list(" 4 , 6 ") == std::vector<Int>{4, 6});
  CHECK(code_of([] { parse_int_list(""); }) == ErrorCode::EmptyInput);
  CHECK(code_of([] { parse_int_list("3,x"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_int_list("3,,5"); }) == ErrorCode::ParseError);
  CHECK(format_gens(NumericalSemigroup::from_generators({3, 5, 7})) == "<3,5,7>");
}

TEST_CASE("checked arithmetic") {
  CHECK(code_of([] { checked_mul(Int{1} << 40, Int{1} << 40); }) == ErrorCode::Overflow);
  CHECK(checked_pow(6, 3) == 216);
  CHECK(exact_sqrt(361) == 19);
  CHECK(exact_sqrt(360) == -1);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(ceil_div(7, 2) == 4);
}
