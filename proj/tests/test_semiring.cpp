#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "hyperspace/random.hpp"
#include "hyperspace/semiring.hpp"

using namespace hyperspace;

namespace {
constexpr double inf = std::numeric_limits<double>::infinity();
}

TEST_CASE("make_semiring resolves every built-in name", "[semiring]") {
    for (auto kind : Semiring::all_kinds) {
        const Semiring s(kind);
        CHECK(make_semiring(s.name()) == s);
    }
    CHECK_THROWS_AS(make_semiring("frobnicate"), NameError);
    CHECK_THROWS_AS(make_semiring(""), NameError);
}

TEST_CASE("zero and one match the table of selected semirings", "[semiring]") {
    struct Row {
        const char* name;
        Value zero;
        Value one;
    };
    const Row rows[] = {
        {"plus.times", Value(0.0), Value(1.0)},
        {"max.plus", Value(-inf), Value(0.0)},
        {"min.plus", Value(inf), Value(0.0)},
        {"max.times", Value(0.0), Value(1.0)},
        {"min.times", Value(inf), Value(1.0)},
        {"union.intersect", Value(StringSet{}), Value(StringSet::universe())},
        {"max.min", Value(-inf), Value(inf)},
        {"min.max", Value(inf), Value(-inf)},
    };
    for (const auto& r : rows) {
        INFO(r.name);
        const Semiring s = make_semiring(r.name);
        CHECK(s.zero() == r.zero);
        CHECK(s.one() == r.one);
    }
}

TEST_CASE("add applies the semiring sum", "[semiring]") {
    CHECK(max_plus.add(2, 3) == Value(3));
    CHECK(union_intersect.add(StringSet{"a", "b"}, StringSet{"b", "c"}) == Value(StringSet{"a", "b", "c"}));
    CHECK(min_plus.add(5, inf) == Value(5));
    CHECK(plus_times.add(2, 3) == Value(5));
    CHECK(min_max.add(-inf, 7) == Value(-inf));
}

TEST_CASE("mult applies the semiring product", "[semiring]") {
    CHECK(max_plus.mult(2, 3) == Value(5));
    CHECK(union_intersect.mult(StringSet{"a", "b"}, StringSet::universe()) == Value(StringSet{"a", "b"}));
    CHECK(plus_times.mult(7, 0) == Value(0));
    CHECK(max_min.mult(3, inf) == Value(3));
}

TEST_CASE("min.times lets +inf annihilate even a finite zero", "[semiring]") {
    CHECK(min_times.mult(0, inf) == Value(inf));
    CHECK(min_times.mult(inf, 0) == Value(inf));
    CHECK(min_times.mult(0, 4) == Value(0));
}

TEST_CASE("is_zero recognizes each zero", "[semiring]") {
    CHECK(min_plus.is_zero(inf));
    CHECK(plus_times.is_zero(0));
    CHECK_FALSE(union_intersect.is_zero(StringSet{"a"}));
    CHECK(union_intersect.is_zero(StringSet{}));
    CHECK_FALSE(max_plus.is_zero(0));
}

TEST_CASE("values outside the domain are rejected", "[semiring]") {
    CHECK_THROWS_AS(max_plus.add(StringSet{"a"}, 1), DomainError);
    CHECK_THROWS_AS(union_intersect.mult(1, StringSet{"a"}), DomainError);
    CHECK_THROWS_AS(plus_times.add(inf, 1), DomainError);
    CHECK_THROWS_AS(max_plus.mult(inf, 1), DomainError);
    CHECK_THROWS_AS(min_plus.mult(-inf, 1), DomainError);
    CHECK_THROWS_AS(max_times.add(-1, 1), DomainError);
    CHECK_THROWS_AS(min_times.add(-1, 1), DomainError);
    CHECK_THROWS_AS(plus_times.is_zero(StringSet{}), DomainError);
}

TEST_CASE("text atoms act as singleton sets under union.intersect", "[semiring]") {
    CHECK(union_intersect.add(Value("red"), StringSet{"blue"}) == Value(StringSet{"blue", "red"}));
    CHECK(union_intersect.admit(Value("red")) == Value(StringSet{"red"}));
    CHECK_THROWS_AS(plus_times.add(Value("red"), 1), DomainError);
}

TEST_CASE("NaN is never representable and -0 normalizes", "[semiring][value]") {
    CHECK_THROWS_AS(Value(std::nan("")), DomainError);
    CHECK(std::signbit(Value(-0.0).number()) == false);
}

TEST_CASE("universe absorbs under union and is neutral under intersection", "[semiring][value]") {
    const StringSet u = StringSet::universe();
    const StringSet x{"q", "r"};
    CHECK(set_union(x, u) == u);
    CHECK(set_union(u, x) == u);
    CHECK(set_intersection(x, u) == x);
    CHECK(set_intersection(u, u) == u);
    CHECK(u != StringSet{});
    CHECK(u != x);
    CHECK(u.contains("anything"));
}

TEST_CASE("string sets are canonical", "[value]") {
    CHECK(StringSet{"b", "a", "b"}.items() == std::vector<std::string>{"a", "b"});
    CHECK(StringSet{"b", "a"} == StringSet{"a", "b"});
}

TEST_CASE("semiring laws hold exactly on random integer-valued triples", "[semiring][property]") {
    Generator gen(7);
    for (auto kind : Semiring::all_kinds) {
        const Semiring s(kind);
        INFO(s.name());
        for (int trial = 0; trial < 300; ++trial) {
            const Value a = gen.scalar(s), b = gen.scalar(s), c = gen.scalar(s);
            REQUIRE(s.add(a, b) == s.add(b, a));
            REQUIRE(s.add(s.add(a, b), c) == s.add(a, s.add(b, c)));
            REQUIRE(s.mult(s.mult(a, b), c) == s.mult(a, s.mult(b, c)));
            REQUIRE(s.mult(a, s.add(b, c)) == s.add(s.mult(a, b), s.mult(a, c)));
            REQUIRE(s.mult(s.add(b, c), a) == s.add(s.mult(b, a), s.mult(c, a)));
            REQUIRE(s.add(a, s.zero()) == a);
            REQUIRE(s.mult(a, s.one()) == a);
            REQUIRE(s.mult(s.one(), a) == a);
            REQUIRE(s.mult(a, s.zero()) == s.zero());
            REQUIRE(s.mult(s.zero(), a) == s.zero());
        }
    }
}
