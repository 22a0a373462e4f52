#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "endolax/catalog.hpp"
#include "endolax/fieldlang.hpp"
#include "endolax/flow.hpp"
#include "endolax/sampling.hpp"

using namespace endolax;

namespace {

FlowSpec euler_spec(double t1, double dt) {
    auto pkg = build(make_so(3));
    auto sys = euler_system(Rational(1), Rational(2), Rational(3), pkg);
    FlowSpec spec;
    spec.field = sys.field;
    spec.x0 = {1.0, 1.0, 1.0};
    spec.t0 = 0.0;
    spec.t1 = t1;
    spec.dt = dt;
    return spec;
}

}  // namespace

TEST_CASE("flow input validation") {
    auto spec = euler_spec(1.0, 1e-3);
    auto cs = casimirs(build(make_so(3)), 3);
    spec.dt = -1.0;
    CHECK_THROWS_AS(integrate(spec, cs), std::invalid_argument);
    spec.dt = 1e-3;
    spec.t1 = -1.0;
    CHECK_THROWS_AS(integrate(spec, cs), std::invalid_argument);
    spec.t1 = 1.0;
    spec.x0 = {1.0};
    CHECK_THROWS_AS(integrate(spec, cs), std::invalid_argument);
}

TEST_CASE("zero potential gives a constant trajectory") {
    auto pkg = build(make_so(3));
    auto sys = lax_field(pkg, PolyVectorField::zero(3));
    FlowSpec spec;
    spec.field = sys.field;
    spec.x0 = {1.0, -2.0, 0.5};
    spec.t1 = 1.0;
    spec.dt = 1e-2;
    auto traj = integrate(spec, casimirs(pkg, 3), 10);
    REQUIRE_FALSE(traj.aborted);
    CHECK(traj.times.front() == 0.0);
    CHECK(traj.states.front() == spec.x0);
    for (const auto& row : traj.states) CHECK(row == spec.x0);
    CHECK(traj.max_casimir_drift() == 0.0);
    CHECK(traj.max_specdev() == 0.0);
}

TEST_CASE("abelian algebras never move") {
    auto pkg = build(make_abelian(3));
    Sampler smp(97);
    auto sys = lax_field(pkg, smp.field(3, 2, 2));
    CHECK(sys.field.is_zero());
    FlowSpec spec;
    spec.field = sys.field;
    spec.x0 = {0.3, 0.1, -0.7};
    spec.t1 = 0.5;
    spec.dt = 1e-2;
    auto traj = integrate(spec, casimirs(pkg, 3));
    for (const auto& row : traj.states) CHECK(row == spec.x0);
}

TEST_CASE("rigid body invariants are conserved numerically") {
    auto spec = euler_spec(2.0, 1e-3);
    auto cs = casimirs(build(make_so(3)), 3);
    auto traj = integrate(spec, cs);
    REQUIRE_FALSE(traj.aborted);

    double norm_drift = max_quadratic_drift(traj.states, {1.0, 1.0, 1.0});
    double energy_drift = max_quadratic_drift(traj.states, {1.0, 2.0, 3.0});
    CHECK(norm_drift < 1e-8);
    CHECK(energy_drift < 1e-8);
    CHECK(traj.max_casimir_drift() < 1e-7);
    CHECK(traj.max_specdev() < 1e-7);
}

TEST_CASE("convergence study") {
    auto cs = casimirs(build(make_so(3)), 3);

    SECTION("rk4 drift shrinks by about 2^4 per halving") {
        auto rows = convergence_study(euler_spec(2.0, 2e-3), 4, cs);
        REQUIRE(rows.size() == 4);
        for (std::size_t r = 0; r + 1 < rows.size(); ++r) {
            double ratio = rows[r].second / rows[r + 1].second;
            INFO("step " << r << ": " << rows[r].second << " -> " << rows[r + 1].second);
            CHECK(ratio >= 8.0);
            CHECK(ratio <= 32.0);
        }
    }

    SECTION("forward euler is first order") {
        auto spec = euler_spec(1.0, 1e-3);
        spec.method = Method::euler;
        auto rows = convergence_study(spec, 3, cs);
        for (std::size_t r = 0; r + 1 < rows.size(); ++r) {
            double ratio = rows[r].second / rows[r + 1].second;
            CHECK(ratio >= 1.5);
            CHECK(ratio <= 3.0);
        }
    }

    SECTION("zero field has identically zero drift") {
        FlowSpec spec;
        spec.field = PolyVectorField::zero(3);
        spec.x0 = {1.0, 1.0, 1.0};
        spec.t1 = 1.0;
        spec.dt = 1e-2;
        for (const auto& [dt, drift] : convergence_study(spec, 3, cs)) CHECK(drift == 0.0);
    }

    CHECK_THROWS_AS(convergence_study(euler_spec(1.0, 1e-3), 1, cs), std::invalid_argument);
}

TEST_CASE("blow-up aborts with the last good sample") {
    // d1: x1^2 escapes in finite time from x0 = 1 at t = 1
    FlowSpec spec;
    spec.field = parse_field("d1: x1^2", 1);
    spec.x0 = {1.0};
    spec.t1 = 2.0;
    spec.dt = 1e-3;
    auto pkg = build(make_abelian(1));
    auto traj = integrate(spec, casimirs(pkg, 1));
    CHECK(traj.aborted);
    CHECK_FALSE(traj.abort_reason.empty());
    CHECK_FALSE(traj.states.empty());
    for (double v : traj.states.back()) CHECK(std::isfinite(v));
}

TEST_CASE("casimir and spectral logs stay flat across catalog algebras") {
    Sampler smp(103);
    for (const auto& L : standard_test_algebras()) {
        const int n = L.dim();
        auto pkg = build(L);
        auto cs = casimirs(pkg, std::min(n, 4));
        auto sys = lax_field(pkg, smp.field(n, 2, 2));
        FlowSpec spec;
        spec.field = sys.field;
        spec.x0.assign(n, 0.0);
        for (int i = 0; i < n; ++i) spec.x0[i] = 0.2 + 0.05 * i;
        spec.t1 = 1.0;
        spec.dt = 1e-3;
        auto traj = integrate(spec, cs, 10);
        REQUIRE_FALSE(traj.aborted);
        INFO(L.name());
        CHECK(traj.max_casimir_drift() < 1e-7);
        CHECK(traj.max_specdev() < 1e-7);
    }
}

TEST_CASE("trajectory csv format") {
    auto spec = euler_spec(0.01, 1e-3);
    auto cs = casimirs(build(make_so(3)), 3);
    auto traj = integrate(spec, cs);
    std::ostringstream os;
    write_csv(traj, 3, os);
    std::istringstream is(os.str());
    std::string header;
    std::getline(is, header);
    CHECK(header == "t,x1,x2,x3,I1,I2,I3,specdev");
    std::string row;
    int rows = 0;
    while (std::getline(is, row)) {
        ++rows;
        CHECK(std::count(row.begin(), row.end(), ',') == 7);
    }
    CHECK(rows == static_cast<int>(traj.times.size()));
    // 17 significant digits survive a round trip
    std::istringstream first_row(os.str().substr(os.str().find('\n') + 1));
    std::string cell;
    std::getline(first_row, cell, ',');  // t
    std::getline(first_row, cell, ',');  // x1
    CHECK(std::stod(cell) == traj.states.front()[0]);
}
