#include <catch2/catch_amalgamated.hpp>

#include "endolax/catalog.hpp"
#include "endolax/endo.hpp"
#include "endolax/sampling.hpp"

using namespace endolax;

namespace {
MultiPoly x(int n, int i) { return MultiPoly::variable(n, i); }

AlgebraVector qv(std::initializer_list<Rational> vals) { return AlgebraVector(vals); }
}  // namespace

TEST_CASE("canonical package construction") {
    SECTION("abelian algebras have a vanishing endomorphism field") {
        for (int n = 1; n <= 5; ++n) CHECK(build(make_abelian(n)).A.is_zero());
    }

    SECTION("so3 entries") {
        auto pkg = build(make_so(3));
        CHECK(pkg.A.at(3, 2) == x(3, 1));
        CHECK(pkg.A.at(2, 3) == -x(3, 1));
        CHECK(pkg.A.at(1, 3) == x(3, 2));
        CHECK(pkg.A.at(3, 1) == -x(3, 2));
        CHECK(pkg.A.at(2, 1) == x(3, 3));
        CHECK(pkg.A.at(1, 2) == -x(3, 3));
        for (int k = 1; k <= 3; ++k) CHECK(pkg.A.at(k, k).is_zero());
    }

    SECTION("solvable2 carries both terms of the full contraction") {
        auto pkg = build(make_solvable2());
        CHECK(pkg.A.at(2, 2) == x(2, 1));
        CHECK(pkg.A.at(2, 1) == -x(2, 2));
        CHECK(pkg.A.at(1, 1).is_zero());
        CHECK(pkg.A.at(1, 2).is_zero());
    }

    SECTION("entries are homogeneous linear and A = J -| lambda") {
        for (const auto& L : standard_test_algebras()) {
            auto pkg = build(L);
            CHECK(pkg.A == contract_vector_into_onetwo(pkg.J, pkg.lambda));
            for (int k = 1; k <= L.dim(); ++k)
                for (int j = 1; j <= L.dim(); ++j) CHECK(pkg.A.at(k, j).is_homogeneous_of_degree(1));
        }
    }
}

TEST_CASE("endo application") {
    auto pkg = build(make_so(3));

    SECTION("A J = 0 on every catalog algebra") {
        for (const auto& L : standard_test_algebras()) {
            auto p = build(L);
            CHECK(apply(p.A, p.J).is_zero());
        }
    }

    SECTION("zero endo maps everything to zero") {
        Sampler smp(1);
        CHECK(apply(EndoField::zero(3), smp.field(3)).is_zero());
    }

    SECTION("so3 column image of a coordinate field") {
        auto img = apply(pkg.A, PolyVectorField::coordinate(3, 1));
        PolyVectorField expected(3);
        expected[2] = x(3, 3);
        expected[3] = -x(3, 2);
        CHECK(img == expected);
    }
}

TEST_CASE("infinitesimal representation") {
    SECTION("so3, v = e3") {
        auto pkg = build(make_so(3));
        auto X = infinitesimal_rep(pkg, basis_vector(3, 3));
        PolyVectorField expected(3);
        expected[1] = x(3, 2);
        expected[2] = -x(3, 1);
        CHECK(X == expected);
    }

    SECTION("matches the coordinate formula x^i v^j c^k_{ij}") {
        Sampler smp(77);
        for (const auto& L : standard_test_algebras()) {
            const int n = L.dim();
            auto pkg = build(L);
            auto v = smp.vector(n);
            auto X = infinitesimal_rep(pkg, v);
            PolyVectorField oracle(n);
            for (int k = 1; k <= n; ++k) {
                MultiPoly acc = MultiPoly::zero(n);
                for (int i = 1; i <= n; ++i)
                    for (int j = 1; j <= n; ++j) {
                        Rational coef = L.c(i, j, k) * v[j - 1];
                        if (!coef.is_zero()) acc = acc + coef * x(n, i);
                    }
                oracle[k] = std::move(acc);
            }
            CHECK(X == oracle);
        }
    }

    SECTION("v = 0 gives the zero field; solvable2 e2 gives x1 d2") {
        auto pkg = build(make_solvable2());
        CHECK(infinitesimal_rep(pkg, zero_vector(2)).is_zero());
        auto X = infinitesimal_rep(pkg, basis_vector(2, 2));
        PolyVectorField expected(2);
        expected[2] = x(2, 1);
        CHECK(X == expected);
    }
}

TEST_CASE("nijenhuis bracket") {
    SECTION("constant endos have vanishing bracket") {
        CHECK(nijenhuis(EndoField::identity(4)).is_zero());
    }

    SECTION("solvable2 value") {
        auto pkg = build(make_solvable2());
        auto T = nijenhuis(pkg.A);
        CHECK(T.component(2, 1, 2) == Rational(-2) * x(2, 1));
        CHECK(T.component(1, 1, 2).is_zero());
        CHECK(T.comp.size() == 1);
    }

    SECTION("so3 value; [A,A](d_a, d_b) = -2 A([e_a, e_b])") {
        auto pkg = build(make_so(3));
        auto T = nijenhuis(pkg.A);
        CHECK(T.component(2, 1, 2) == Rational(2) * x(3, 1));
        CHECK(T.component(1, 1, 2) == Rational(-2) * x(3, 2));
        CHECK(T.component(3, 2, 3) == Rational(2) * x(3, 2));
        CHECK(T.component(2, 2, 3) == Rational(-2) * x(3, 3));
        CHECK(T.component(3, 1, 3) == Rational(2) * x(3, 1));
        CHECK(T.component(1, 1, 3) == Rational(-2) * x(3, 3));
        CHECK(T.comp.size() == 6);
    }

    SECTION("two-step nilpotent: both sides vanish separately") {
        auto pkg = build(make_heisenberg3());
        CHECK(nijenhuis(pkg.A).is_zero());
        CHECK(contract_biform_slot(pkg.lambda, pkg.A).is_zero());
    }
}

TEST_CASE("fundamental identity holds on every catalog algebra") {
    for (const auto& L : standard_test_algebras()) {
        auto pkg = build(L);
        auto report = verify_fundamental_identity(pkg);
        INFO(L.name());
        CHECK(report.all_pass());
    }
}

TEST_CASE("casimir polynomials") {
    SECTION("so3") {
        auto pkg = build(make_so(3));
        auto cs = casimirs(pkg, 2);
        CHECK(cs.I(1).is_zero());
        auto expected = Rational(-2) * (x(3, 1).pow(2) + x(3, 2).pow(2) + x(3, 3).pow(2));
        CHECK(cs.I(2) == expected);
    }

    SECTION("solvable2: I_1 = x1") {
        auto pkg = build(make_solvable2());
        CHECK(casimirs(pkg, 1).I(1) == x(2, 1));
    }

    SECTION("I_1 = chi(J) and I_2 = K(J,J) via the exact-matrix oracles") {
        for (const auto& L : standard_test_algebras()) {
            const int n = L.dim();
            auto pkg = build(L);
            auto cs = casimirs(pkg, 2);

            QVector chi = characteristic_form(L);
            MultiPoly chiJ = MultiPoly::zero(n);
            for (int a = 1; a <= n; ++a)
                if (!chi[a - 1].is_zero()) chiJ = chiJ + chi[a - 1] * x(n, a);
            CHECK(cs.I(1) == chiJ);

            QMatrix K = killing_form(L);
            MultiPoly kjj = MultiPoly::zero(n);
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b)
                    if (!K.at(a - 1, b - 1).is_zero()) kjj = kjj + K.at(a - 1, b - 1) * (x(n, a) * x(n, b));
            CHECK(cs.I(2) == kjj);
        }
    }

    SECTION("I_k is homogeneous of degree k") {
        for (const auto& L : standard_test_algebras()) {
            if (L.dim() > 6) continue;  // small algebras suffice here
            auto cs = casimirs(build(L), std::min(L.dim(), 4));
            for (int k = 1; k <= cs.max_power(); ++k) CHECK(cs.I(k).is_homogeneous_of_degree(k));
        }
    }

    SECTION("casimirs agree with explicit matrix powers on so3") {
        auto pkg = build(make_so(3));
        auto cs = casimirs(pkg, 4);
        EndoField power = EndoField::identity(3);
        for (int k = 1; k <= 4; ++k) {
            power = compose(power, pkg.A);
            CHECK(trace(power) == cs.I(k));
        }
    }

    CHECK_THROWS_AS(casimirs(build(make_so(3)), 0), std::invalid_argument);
}

TEST_CASE("structural identities hold on every catalog algebra") {
    for (const auto& L : standard_test_algebras()) {
        auto pkg = build(L);
        auto report = verify_structural(pkg);
        INFO(L.name());
        for (const auto& c : report.checks) {
            INFO(c.identity + ": " + c.witness);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("solvable2 trace equals the characteristic pairing") {
    auto pkg = build(make_solvable2());
    CHECK(trace(pkg.A) == x(2, 1));
}

TEST_CASE("orbit ranks") {
    auto pkg = build(make_so(3));
    auto r = orbit_ranks(pkg, qv({1, 0, 0}));
    CHECK(r.rank_ad == 2);
    CHECK(r.rank_ad_sq == 2);
    CHECK(r.dim_ker_cap_im == 0);
    CHECK(r.restriction_verified);

    auto zero = orbit_ranks(pkg, zero_vector(3));
    CHECK(zero.rank_ad == 0);
    CHECK(zero.rank_ad_sq == 0);
    CHECK(zero.dim_ker_cap_im == 0);
    CHECK(zero.restriction_verified);

    auto s2 = build(make_solvable2());
    auto rs = orbit_ranks(s2, qv({1, 0}));
    CHECK(rs.rank_ad == 1);
    CHECK(rs.rank_ad_sq == 1);
    CHECK(rs.dim_ker_cap_im == 0);
    CHECK(rs.restriction_verified);

    SECTION("rank relations at random points") {
        Sampler smp(13);
        for (const auto& L : standard_test_algebras()) {
            auto p = build(L);
            auto pt = smp.vector(L.dim());
            auto ranks = orbit_ranks(p, pt);
            CHECK(ranks.dim_ker_cap_im == ranks.rank_ad - ranks.rank_ad_sq);
            CHECK(ranks.restriction_verified);
        }
    }
}

TEST_CASE("integrability probe") {
    SECTION("vanishes identically on so3 and so4") {
        Sampler smp(0);
        for (int n : {3, 4}) {
            auto L = make_so(n);
            for (int trial = 0; trial < 25; ++trial) {
                auto val = integrability_probe(L, smp.vector(L.dim()), smp.vector(L.dim()), smp.vector(L.dim()));
                CHECK(val == zero_vector(L.dim()));
            }
        }
    }

    SECTION("v = w collapses the inner bracket") {
        Sampler smp(2);
        for (const auto& L : standard_test_algebras()) {
            auto x0 = smp.vector(L.dim());
            auto v = smp.vector(L.dim());
            CHECK(integrability_probe(L, x0, v, v) == zero_vector(L.dim()));
        }
    }

    SECTION("stored so5 witness is nonzero") {
        auto L = make_so(5);
        AlgebraVector x0 = qv({2, 0, 1, 1, -1, 1, 1, 2, 1, 1});
        AlgebraVector v = qv({0, 2, 0, -2, -2, 2, 0, 1, -2, 2});
        AlgebraVector w = qv({-2, 1, 2, 2, 0, 0, -2, 0, 0, -1});
        auto val = integrability_probe(L, x0, v, w);
        AlgebraVector expected = qv({-3, -21, -48, 108, -34, 63, 48, -74, -60, 9});
        CHECK(val == expected);
    }
}

TEST_CASE("almost complex structure on the so3 unit sphere") {
    auto pkg = build(make_so(3));
    // Rational points with |x| = 1 from integer quadruples a^2+b^2+c^2 = d^2.
    std::vector<std::array<int, 4>> quads = {{3, 4, 12, 13}, {1, 2, 2, 3},   {2, 3, 6, 7},   {1, 4, 8, 9},
                                             {4, 5, 20, 21}, {2, 6, 9, 11},  {6, 10, 15, 19}, {12, 9, 8, 17},
                                             {0, 3, 4, 5},   {2, 10, 11, 15}};
    for (const auto& [a, b, c, d] : quads) {
        AlgebraVector pt = qv({Rational(a, d), Rational(b, d), Rational(c, d)});
        QMatrix M = evaluate_endo(pkg.A, pt);
        // two independent tangent vectors at pt
        for (int k = 1; k <= 3; ++k) {
            AlgebraVector tangent = bracket(pkg.algebra, pt, basis_vector(3, k));
            bool trivial = true;
            for (const auto& comp : tangent) trivial = trivial && comp.is_zero();
            if (trivial) continue;
            // x . tangent = 0 by construction
            Rational dot;
            for (int i = 0; i < 3; ++i) dot += pt[i] * tangent[i];
            REQUIRE(dot.is_zero());
            auto twice = M.apply(M.apply(tangent));
            for (int i = 0; i < 3; ++i) CHECK(twice[i] == -tangent[i]);
        }
    }
}
