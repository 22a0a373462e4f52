#include <catch2/catch_amalgamated.hpp>

#include "endolax/multipoly.hpp"
#include "endolax/sampling.hpp"

using namespace endolax;

namespace {
MultiPoly x(int n, int i) { return MultiPoly::variable(n, i); }
MultiPoly q(int n, const Rational& c) { return MultiPoly::constant(n, c); }
}  // namespace

TEST_CASE("multipoly arithmetic basics") {
    auto p = (x(2, 1) + x(2, 2)) * (x(2, 1) - x(2, 2));
    CHECK(p == x(2, 1) * x(2, 1) - x(2, 2) * x(2, 2));
    CHECK(to_string(p) == "x1^2 - x2^2");

    CHECK((p * MultiPoly::zero(2)).is_zero());

    auto sq = (x(2, 1) + q(2, Rational(1, 2))).pow(2);
    CHECK(sq == x(2, 1) * x(2, 1) + x(2, 1) + q(2, Rational(1, 4)));
    CHECK(to_string(sq) == "x1^2 + x1 + 1/4");

    CHECK_THROWS_AS(x(2, 1) + x(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(MultiPoly::variable(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(MultiPoly::zero(0), std::invalid_argument);
    CHECK_THROWS_AS(MultiPoly::zero(kMaxVars + 1), std::invalid_argument);
}

TEST_CASE("partial derivatives") {
    auto p = x(2, 1) * x(2, 1) * x(2, 2);  // x1^2 x2
    CHECK(p.partial(1) == Rational(2) * (x(2, 1) * x(2, 2)));
    CHECK(x(2, 1).partial(2).is_zero());
    auto cubic = Rational(1, 3) * x(2, 1).pow(3);
    CHECK(cubic.partial(1) == x(2, 1) * x(2, 1));
    CHECK_THROWS_AS(p.partial(3), std::invalid_argument);
    CHECK_THROWS_AS(p.partial(0), std::invalid_argument);
}

TEST_CASE("evaluation") {
    auto p = x(2, 1) * x(2, 2) + q(2, Rational(1));
    std::vector<Rational> pt{Rational(2), Rational(3)};
    CHECK(p.evaluate(pt) == Rational(7));
    CHECK(MultiPoly::zero(2).evaluate(pt).is_zero());
    std::vector<Rational> bad{Rational(1)};
    CHECK_THROWS_AS(p.evaluate(bad), std::invalid_argument);
}

TEST_CASE("ring laws on random polynomials") {
    Sampler smp(17);
    for (int trial = 0; trial < 40; ++trial) {
        int n = smp.uniform(1, 4);
        auto a = smp.poly(n, 3, 4), b = smp.poly(n, 3, 4), c = smp.poly(n, 3, 4);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());

        // evaluation is a ring homomorphism
        auto pt = smp.vector(n);
        CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
        CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
    }
}

TEST_CASE("canonical term order and printing") {
    // descending graded-lex: higher total degree first, then larger leading exponent
    auto p = q(3, Rational(-2)) * x(3, 1).pow(2) + x(3, 2) * x(3, 3) + x(3, 1) + q(3, Rational(5, 3));
    CHECK(to_string(p) == "-2*x1^2 + x2*x3 + x1 + 5/3");
    CHECK(to_string(MultiPoly::zero(3)) == "0");
    CHECK(to_string(q(2, Rational(-1, 2))) == "-1/2");
    CHECK(to_string(-x(2, 2)) == "-x2");
}

TEST_CASE("degree bookkeeping") {
    auto p = x(3, 1) * x(3, 2) + x(3, 3);
    CHECK(p.total_degree() == 2);
    CHECK_FALSE(p.is_homogeneous_of_degree(2));
    CHECK((x(3, 1) * x(3, 2)).is_homogeneous_of_degree(2));
    CHECK(MultiPoly::zero(3).is_homogeneous_of_degree(7));  // vacuously
}

TEST_CASE("exponent overflow is rejected") {
    auto big = x(1, 1).pow(255);
    CHECK_THROWS_AS(big * x(1, 1), std::overflow_error);
    CHECK_THROWS_AS(Monomial::var(1, 300), std::overflow_error);
}
