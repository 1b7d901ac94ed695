#include <doctest.h>

#include <set>

#include "hodgechase/hodge.hpp"
#include "hodgechase/rational.hpp"

using namespace hodgechase;

TEST_CASE("rational arithmetic stays normalized") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, 4) == Rational(-3, 2));
    CHECK(Rational(3, -2) == Rational(-3, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1) < Rational(1, 100));
    CHECK(Rational(7).is_integer());
    CHECK(Rational(7).as_integer() == 7);
    CHECK(Rational(14, 4).str() == "7/2");
    CHECK(Rational(-8, 2).str() == "-4");
    CHECK_THROWS_AS(Rational(1, 0), Error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
    CHECK_THROWS_AS(Rational(1, 2).as_integer(), Error);
}

TEST_CASE("bigraded dimensions behave like a sparse symmetric table") {
    BigradedDims b;
    CHECK(b.empty());
    b.set(2, 0, 1);
    b.set(0, 2, 1);
    b.add(0, 0, 2);
    CHECK(b.at(2, 0) == 1);
    CHECK(b.at(1, 1) == 0);
    CHECK(b.total() == 4);
    CHECK(b.symmetric());
    b.set(0, 0, 0);
    CHECK(b.entries().size() == 2);

    BigradedDims c = BigradedDims::weight_one(3);
    CHECK(c.at(1, 0) == 3);
    CHECK(c.at(0, 1) == 3);
    c += BigradedDims::weight_zero(1);
    CHECK(c.total() == 7);
    CHECK(c.str() == "{(0,0):1, (0,1):3, (1,0):3}");

    CHECK_THROWS_AS(b.set(0, 0, -1), Error);
    CHECK_THROWS_AS(b.set(5, 0, 1), Error);
    CHECK_THROWS_AS(b.set(0, -1, 1), Error);

    BigradedDims skew{{{1, 0}, 2}};
    CHECK_FALSE(skew.symmetric());
    CHECK_THROWS_AS(skew.validate(), Error);
}

TEST_CASE("exactly six valid Hodge types") {
    int count = 0;
    for (int r = -1; r <= 3; ++r)
        for (int s = -1; s <= 3; ++s)
            if (valid_hodge_type(r, s))
                ++count;
    CHECK(count == 6);
    CHECK_THROWS_AS(make_hodge_type(2, 1), Error);
    CHECK_THROWS_AS(make_hodge_type(-1, 0), Error);
    CHECK_THROWS_AS(make_hodge_type(0, 3), Error);
    CHECK(to_string(make_hodge_type(1, 1)) == "⟨1,1⟩");
    CHECK(dot_name(make_hodge_type(1, 1)) == "(1,1)");
}

TEST_CASE("reading the type off an H^2 diamond") {
    CHECK(hodge_type_of({{{2, 0}, 2}, {{0, 2}, 2}}) == HodgeType{0, 0});
    CHECK(hodge_type_of({{{2, 0}, 1}, {{0, 2}, 1}, {{1, 0}, 1}, {{0, 1}, 1}}) ==
          HodgeType{0, 1});
    CHECK(hodge_type_of({{{0, 0}, 2}}) == HodgeType{2, 0});
    CHECK(hodge_type_of({{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}}) == HodgeType{1, 1});

    SUBCASE("the untracked (1,1) slot does not affect the type") {
        BigradedDims with_middle{{{0, 0}, 1}, {{1, 1}, 27}};
        CHECK(hodge_type_of(with_middle) == HodgeType{1, 0});
    }
    SUBCASE("asymmetric input is rejected") {
        CHECK_THROWS_AS(hodge_type_of(BigradedDims{{{1, 0}, 1}}), Error);
    }
    SUBCASE("entries beyond the surface range are rejected") {
        CHECK_THROWS_AS(hodge_type_of(BigradedDims{{{3, 3}, 1}}), Error);
    }
    SUBCASE("overfull corner is rejected") {
        BigradedDims overfull{{{0, 0}, 2}, {{1, 0}, 1}, {{0, 1}, 1}};
        CHECK_THROWS_AS(hodge_type_of(overfull), Error);
    }
}

TEST_CASE("polarized order examples") {
    CHECK(polarized_leq({0, 0}, {2, 0}));
    CHECK(polarized_leq({0, 1}, {1, 1}));
    CHECK(polarized_leq({0, 1}, {0, 2}));
    CHECK(polarized_leq({0, 1}, {1, 0}));
    CHECK_FALSE(polarized_leq({1, 0}, {0, 1}));
    CHECK_FALSE(polarized_leq({0, 2}, {1, 0}));
    CHECK_FALSE(polarized_leq({1, 0}, {0, 2}));
    CHECK(polarized_leq({0, 2}, {1, 1}));
    CHECK(polarized_leq({1, 0}, {1, 1}));
    CHECK_FALSE(polarized_leq({1, 1}, {0, 2}));
}

TEST_CASE("the type poset is a genuine partial order with the right covers") {
    const HodgePoset poset = build_poset();
    REQUIRE(poset.elements.size() == 6);

    SUBCASE("partial order axioms over all triples") {
        for (const auto& a : poset.elements) {
            CHECK(polarized_leq(a, a));
            for (const auto& b : poset.elements) {
                if (polarized_leq(a, b) && polarized_leq(b, a))
                    CHECK(a == b);
                for (const auto& c : poset.elements)
                    if (polarized_leq(a, b) && polarized_leq(b, c))
                        CHECK(polarized_leq(a, c));
            }
        }
    }

    SUBCASE("reachability through covers matches the order") {
        for (const auto& a : poset.elements)
            for (const auto& b : poset.elements)
                CHECK(poset.leq(a, b) == polarized_leq(a, b));
    }

    SUBCASE("the six cover relations") {
        const std::set<std::pair<HodgeType, HodgeType>> expected = {
            {{0, 0}, {0, 1}}, {{0, 1}, {0, 2}}, {{0, 1}, {1, 0}},
            {{0, 2}, {1, 1}}, {{1, 0}, {1, 1}}, {{1, 1}, {2, 0}},
        };
        const std::set<std::pair<HodgeType, HodgeType>> actual(poset.covers.begin(),
                                                               poset.covers.end());
        CHECK(actual == expected);
    }

    SUBCASE("bottom and top") {
        for (const auto& t : poset.elements) {
            CHECK(poset.leq({0, 0}, t));
            CHECK(poset.leq(t, {2, 0}));
        }
    }
}
