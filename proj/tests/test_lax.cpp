#include <catch2/catch_amalgamated.hpp>

#include "endolax/catalog.hpp"
#include "endolax/fieldlang.hpp"
#include "endolax/flow.hpp"
#include "endolax/lax.hpp"
#include "endolax/sampling.hpp"

using namespace endolax;

namespace {
MultiPoly x(int n, int i) { return MultiPoly::variable(n, i); }
}

TEST_CASE("lax fields") {
    auto pkg = build(make_so(3));

    SECTION("diagonal linear potential gives the rigid-body field") {
        PolyVectorField B(3);
        B[1] = Rational(1) * x(3, 1);
        B[2] = Rational(2) * x(3, 2);
        B[3] = Rational(3) * x(3, 3);
        auto sys = lax_field(pkg, B);
        PolyVectorField expected(3);
        expected[1] = x(3, 2) * x(3, 3);                  // (c-b) = 1
        expected[2] = Rational(-2) * (x(3, 3) * x(3, 1));  // (a-c) = -2
        expected[3] = x(3, 1) * x(3, 2);                  // (b-a) = 1
        CHECK(sys.field == expected);
        CHECK(sys.field == euler_system(Rational(1), Rational(2), Rational(3), pkg).field);

        // same potential through the expression language
        ParamMap abc{{"a", Rational(1)}, {"b", Rational(2)}, {"c", Rational(3)}};
        auto parsed = parse_field("d1: a*x1; d2: b*x2; d3: c*x3", 3, abc);
        CHECK(lax_field(pkg, parsed).field == sys.field);
    }

    SECTION("the Liouville field is a null potential everywhere") {
        for (const auto& L : standard_test_algebras()) {
            auto p = build(L);
            CHECK(lax_field(p, p.J).field.is_zero());
        }
    }

    SECTION("constant potential reduces to the infinitesimal representation") {
        auto sys = lax_field(pkg, PolyVectorField::constant(3, basis_vector(3, 3)));
        CHECK(sys.field == infinitesimal_rep(pkg, basis_vector(3, 3)));
    }

    SECTION("euler_system rejects non-so3 packages") {
        auto wrong = build(make_sl2());
        CHECK_THROWS_AS(euler_system(Rational(1), Rational(2), Rational(3), wrong), std::invalid_argument);
    }
}

TEST_CASE("deformed bracket of potentials") {
    Sampler smp(19);

    SECTION("constant potentials recover the algebra bracket") {
        for (const auto& L : standard_test_algebras()) {
            const int n = L.dim();
            auto pkg = build(L);
            auto v = smp.vector(n), w = smp.vector(n);
            auto vb = PolyVectorField::constant(n, v);
            auto wb = PolyVectorField::constant(n, w);
            auto expected = PolyVectorField::constant(n, bracket(L, v, w));
            CHECK(deformed_bracket_commutator_form(pkg, vb, wb) == expected);
            CHECK(deformed_bracket_derivative_form(pkg, vb, wb) == expected);
        }
    }

    SECTION("brackets of a field with itself vanish") {
        auto pkg = build(make_so(3));
        auto B = smp.field(3, 2, 2);
        CHECK(deformed_bracket_commutator_form(pkg, B, B).is_zero());
        CHECK(deformed_bracket_derivative_form(pkg, B, B).is_zero());
    }

    SECTION("abelian algebras kill every term") {
        auto pkg = build(make_abelian(4));
        auto B = smp.field(4, 2, 2), C = smp.field(4, 2, 2);
        CHECK(deformed_bracket_commutator_form(pkg, B, C).is_zero());
        CHECK(deformed_bracket_derivative_form(pkg, B, C).is_zero());
    }

    SECTION("the two routes agree on seeded inputs") {
        for (const auto& L : standard_test_algebras()) {
            if (L.dim() > 6) continue;  // acceptance covers the large ones
            auto pkg = build(L);
            for (int trial = 0; trial < 4; ++trial) {
                auto B = smp.field(L.dim(), 2, 2), C = smp.field(L.dim(), 2, 2);
                CHECK(deformed_bracket_commutator_form(pkg, B, C) ==
                      deformed_bracket_derivative_form(pkg, B, C));
            }
        }
    }

    SECTION("specific so3 cross-route pair") {
        auto pkg = build(make_so(3));
        auto B = PolyVectorField::constant(3, basis_vector(3, 1));
        PolyVectorField C(3);
        C[1] = x(3, 1);
        CHECK(deformed_bracket_commutator_form(pkg, B, C) == deformed_bracket_derivative_form(pkg, B, C));
    }

    SECTION("antisymmetry and bilinearity") {
        auto pkg = build(make_sl2());
        auto B = smp.field(3, 2, 2), C = smp.field(3, 2, 2), D = smp.field(3, 2, 2);
        CHECK((deformed_bracket_derivative_form(pkg, B, C) + deformed_bracket_derivative_form(pkg, C, B))
                  .is_zero());
        Rational s(3, 2);
        auto lhs = deformed_bracket_derivative_form(pkg, s * B + D, C);
        auto rhs = s * deformed_bracket_derivative_form(pkg, B, C) + deformed_bracket_derivative_form(pkg, D, C);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("homomorphism onto lax fields") {
    Sampler smp(29);
    SECTION("random polynomial potentials on so3") {
        auto pkg = build(make_so(3));
        for (int trial = 0; trial < 5; ++trial) {
            auto B = smp.field(3, 2, 2), C = smp.field(3, 2, 2);
            auto report = verify_homomorphism(pkg, B, C);
            INFO("trial " << trial);
            CHECK(report.all_pass());
        }
    }

    SECTION("constant potentials on solvable2") {
        auto pkg = build(make_solvable2());
        auto report = verify_homomorphism(pkg, PolyVectorField::constant(2, basis_vector(2, 1)),
                                          PolyVectorField::constant(2, basis_vector(2, 2)));
        CHECK(report.all_pass());
    }

    SECTION("abelian case is trivially consistent") {
        auto pkg = build(make_abelian(3));
        auto report = verify_homomorphism(pkg, smp.field(3, 2, 2), smp.field(3, 2, 2));
        CHECK(report.all_pass());
    }
}

TEST_CASE("deformed bracket satisfies the Jacobi identity") {
    Sampler smp(37);
    SECTION("so3, random degree <= 2 potentials") {
        auto pkg = build(make_so(3));
        for (int trial = 0; trial < 3; ++trial) {
            auto report = verify_jacobi_deformed(pkg, smp.field(3, 2, 2), smp.field(3, 2, 2), smp.field(3, 2, 2));
            CHECK(report.all_pass());
        }
    }

    SECTION("triple with a zero entry") {
        auto pkg = build(make_sl2());
        auto report =
            verify_jacobi_deformed(pkg, smp.field(3, 2, 2), smp.field(3, 2, 2), PolyVectorField::zero(3));
        CHECK(report.all_pass());
    }

    SECTION("strict upper triangular, random linear potentials") {
        auto pkg = build(make_strict_upper_triangular(4));
        for (int trial = 0; trial < 2; ++trial) {
            auto report = verify_jacobi_deformed(pkg, smp.field(6, 1, 2), smp.field(6, 1, 2), smp.field(6, 1, 2));
            CHECK(report.all_pass());
        }
    }
}

TEST_CASE("symmetry closure") {
    auto pkg = build(make_so(3));

    SECTION("symmetric body: rotation about the symmetry axis survives the bracket") {
        // a = b makes the axis rotation a symmetry of the rigid-body flow
        auto sys = euler_system(Rational(1), Rational(1), Rational(3), pkg);
        auto B = PolyVectorField::constant(3, basis_vector(3, 3));
        auto C = infinitesimal_rep(pkg, basis_vector(3, 3));  // a lax field reused as a potential
        auto report = symmetry_closure(pkg, sys.field, B, C);
        INFO(report.checks.front().witness);
        CHECK(report.all_pass());
    }

    SECTION("B = C passes trivially") {
        auto sys = euler_system(Rational(1), Rational(1), Rational(3), pkg);
        auto B = PolyVectorField::constant(3, basis_vector(3, 3));
        auto report = symmetry_closure(pkg, sys.field, B, B);
        CHECK(report.all_pass());
    }

    SECTION("violated hypothesis is reported, not asserted") {
        auto sys = euler_system(Rational(1), Rational(2), Rational(3), pkg);  // fully asymmetric body
        auto B = PolyVectorField::constant(3, basis_vector(3, 1));
        auto C = PolyVectorField::constant(3, basis_vector(3, 2));
        auto report = symmetry_closure(pkg, sys.field, B, C);
        CHECK_FALSE(report.all_pass());
        CHECK(report.checks.front().witness.find("hypothesis not satisfied") != std::string::npos);
    }
}

TEST_CASE("casimir conservation under lax flows (symbolic)") {
    Sampler smp(43);
    for (const auto& L : standard_test_algebras()) {
        if (L.dim() > 6) continue;  // the dim-10 cases run in the acceptance suite
        const int n = L.dim();
        auto pkg = build(L);
        auto cs = casimirs(pkg, n);
        for (int trial = 0; trial < 3; ++trial) {
            auto B = smp.field(n, 2, 2);
            auto sys = lax_field(pkg, B);
            for (int k = 1; k <= n; ++k) {
                INFO(L.name() << " trial " << trial << " k=" << k);
                CHECK(derive_along(sys.field, cs.I(k)).is_zero());
            }
        }
    }
}

TEST_CASE("convenience formulas for constant and lax potentials") {
    Sampler smp(53);
    for (const auto& L : standard_test_algebras()) {
        if (L.dim() > 6) continue;
        const int n = L.dim();
        auto pkg = build(L);
        auto v = smp.vector(n), w = smp.vector(n);
        auto vb = PolyVectorField::constant(n, v), wb = PolyVectorField::constant(n, w);
        auto br = bracket(L, v, w);

        // {v~, w~} = [v,w]~
        CHECK(deformed_bracket_derivative_form(pkg, vb, wb) == PolyVectorField::constant(n, br));

        // {X_v, w~} = X_{[v,w]}
        auto Xv = infinitesimal_rep(pkg, v);
        CHECK(deformed_bracket_derivative_form(pkg, Xv, wb) == infinitesimal_rep(pkg, br));

        // {X_v, X_w} = X_{A [v,w]} - [[X_v, X_w]]
        auto Xw = infinitesimal_rep(pkg, w);
        auto lhs = deformed_bracket_derivative_form(pkg, Xv, Xw);
        auto rhs = apply(pkg.A, infinitesimal_rep(pkg, br)) - pointwise_algebra_bracket(L, Xv, Xw);
        INFO(L.name());
        CHECK(lhs == rhs);
    }
}
