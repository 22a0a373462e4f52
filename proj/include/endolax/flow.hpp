#pragma once

// Fixed-step numerical integration of Lax systems xdot = X_B(x) with
// invariant monitoring. The exact Casimir polynomials are compiled to a
// float form once; the characteristic-polynomial coefficients of A_x come
// from the power traces via the Newton recurrence, so no eigenvalue solver
// is involved.
//
// Drift measurement uses error-free transforms (two_sum / two_prod) for
// both the state update and the invariant evaluation. Without this the
// step-halving study bottoms out on the rounding floor of evaluating the
// invariants long before the order of the method stops being visible.

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "endolax/endo.hpp"
#include "endolax/lax.hpp"

namespace endolax {

namespace flow_detail {

inline void two_sum(double a, double b, double& s, double& e) {
    s = a + b;
    double bb = s - a;
    e = (a - (s - bb)) + (b - bb);
}

inline void two_prod(double a, double b, double& p, double& e) {
    p = a * b;
    e = std::fma(a, b, -p);
}

/// Unevaluated double-double sum hi + lo.
struct DD {
    double hi = 0.0;
    double lo = 0.0;

    void add(double v) {
        double s, e;
        two_sum(hi, v, s, e);
        hi = s;
        lo += e;
    }

    void add_prod(double a, double b) {
        double p, e;
        two_prod(a, b, p, e);
        add(p);
        lo += e;
    }

    double value() const { return hi + lo; }

    friend double diff(const DD& a, const DD& b) { return (a.hi - b.hi) + (a.lo - b.lo); }
};

}  // namespace flow_detail

/// Flat float form of a MultiPoly for inner-loop evaluation.
class CompiledPoly {
public:
    CompiledPoly() = default;
    explicit CompiledPoly(const MultiPoly& p) {
        for (const auto& [m, c] : p.terms()) {
            CTerm t;
            t.coef = to_double(c);
            for (int i = 0; i < p.nvars(); ++i)
                for (int r = 0; r < m.e[i]; ++r) t.factors.push_back(i);
            terms_.push_back(std::move(t));
        }
    }

    double operator()(const std::vector<double>& x) const {
        double sum = 0.0;
        for (const auto& t : terms_) {
            double v = t.coef;
            for (int i : t.factors) v *= x[i];
            sum += v;
        }
        return sum;
    }

    /// Compensated evaluation; the rounding error of the plain route would
    /// mask the drift this library is built to measure.
    flow_detail::DD evaluate_dd(const std::vector<double>& x) const {
        flow_detail::DD acc;
        for (const auto& t : terms_) {
            double v = t.coef;
            double verr = 0.0;
            for (int i : t.factors) {
                double p, e;
                flow_detail::two_prod(v, x[i], p, e);
                verr = verr * x[i] + e;
                v = p;
            }
            acc.add(v);
            acc.lo += verr;
        }
        return acc;
    }

private:
    struct CTerm {
        double coef = 0.0;
        std::vector<int> factors;  // variable index repeated per power
    };
    std::vector<CTerm> terms_;
};

enum class Method { rk4, euler };

struct FlowSpec {
    PolyVectorField field;
    std::vector<double> x0;
    double t0 = 0.0;
    double t1 = 1.0;
    double dt = 1e-3;
    Method method = Method::rk4;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<std::vector<double>> states;      // one row per sample
    std::vector<std::vector<double>> invariants;  // I_1..I_K per sample
    std::vector<double> specdev;                  // per sample, relative to t0
    std::vector<double> drifts;                   // compensated max |I_k(t) - I_k(t0)| per k
    bool aborted = false;
    std::string abort_reason;

    int max_power() const { return invariants.empty() ? 0 : static_cast<int>(invariants.front().size()); }

    /// Max |I_k(t) - I_k(t0)| over the logged samples, one value per k.
    const std::vector<double>& casimir_drift() const { return drifts; }

    double max_casimir_drift() const {
        double m = 0.0;
        for (double d : drifts) m = std::max(m, d);
        return m;
    }

    double max_specdev() const {
        double m = 0.0;
        for (double d : specdev) m = std::max(m, d);
        return m;
    }
};

namespace flow_detail {

/// Coefficients a_1..a_K of det(tI - A_x) from power traces p_k, via
/// a_m = -(1/m) sum_{j<=m} p_j a_{m-j}.
inline std::vector<double> charpoly_coefficients(const std::vector<double>& power_traces) {
    const int K = static_cast<int>(power_traces.size());
    std::vector<double> a(K + 1, 0.0);
    a[0] = 1.0;
    for (int m = 1; m <= K; ++m) {
        double s = 0.0;
        for (int j = 1; j <= m; ++j) s += power_traces[j - 1] * a[m - j];
        a[m] = -s / m;
    }
    return std::vector<double>(a.begin() + 1, a.end());
}

struct KahanState {
    std::vector<double> value;
    std::vector<double> comp;

    explicit KahanState(std::vector<double> v) : value(std::move(v)), comp(value.size(), 0.0) {}

    void accumulate_one(std::size_t i, double v) {
        double y = v - comp[i];
        double t = value[i] + y;
        comp[i] = (t - value[i]) - y;
        value[i] = t;
    }

    void accumulate(const std::vector<DD>& delta) {
        for (std::size_t i = 0; i < value.size(); ++i) {
            accumulate_one(i, delta[i].hi);
            accumulate_one(i, delta[i].lo);
        }
    }
};

}  // namespace flow_detail

/// Compensated max_t |Q(x(t)) - Q(x(0))| for a diagonal quadratic form
/// Q(x) = sum_i w_i x_i^2. Used to measure conservation of the norm and
/// energy integrals from trajectory states.
inline double max_quadratic_drift(const std::vector<std::vector<double>>& states,
                                  const std::vector<double>& weights) {
    if (states.empty()) return 0.0;
    auto form = [&](const std::vector<double>& s) {
        flow_detail::DD acc;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            double sq, sq_err;
            flow_detail::two_prod(s[i], s[i], sq, sq_err);
            acc.add_prod(weights[i], sq);
            acc.lo += weights[i] * sq_err;
        }
        return acc;
    };
    flow_detail::DD base = form(states.front());
    double drift = 0.0;
    for (const auto& s : states) drift = std::max(drift, std::abs(diff(form(s), base)));
    return drift;
}

/// Integrates the spec and logs the supplied Casimir polynomials (and the
/// derived characteristic coefficients) every `sample_every` steps.
inline Trajectory integrate(const FlowSpec& spec, const CasimirSet& casimir_set, int sample_every = 1) {
    const int n = spec.field.nvars;
    if (static_cast<int>(spec.x0.size()) != n) throw std::invalid_argument("x0 dimension mismatch");
    if (!(spec.dt > 0.0)) throw std::invalid_argument("dt must be positive");
    if (!(spec.t1 > spec.t0)) throw std::invalid_argument("t1 must exceed t0");
    if (sample_every < 1) throw std::invalid_argument("sample_every must be >= 1");

    std::vector<CompiledPoly> field;
    field.reserve(n);
    for (int k = 1; k <= n; ++k) field.emplace_back(spec.field[k]);
    std::vector<CompiledPoly> invariants;
    invariants.reserve(casimir_set.polys.size());
    for (const auto& p : casimir_set.polys) invariants.emplace_back(p);

    auto eval_field = [&](const std::vector<double>& x, std::vector<double>& out) {
        for (int k = 0; k < n; ++k) out[k] = field[k](x);
    };

    Trajectory traj;
    traj.drifts.assign(invariants.size(), 0.0);
    std::vector<flow_detail::DD> base_invariants;
    std::vector<double> base_coeffs;
    auto log_sample = [&](double t, const std::vector<double>& x) {
        traj.times.push_back(t);
        traj.states.push_back(x);
        std::vector<double> vals(invariants.size());
        for (std::size_t k = 0; k < invariants.size(); ++k) {
            flow_detail::DD dd = invariants[k].evaluate_dd(x);
            vals[k] = dd.value();
            if (base_invariants.size() <= k)
                base_invariants.push_back(dd);
            else
                traj.drifts[k] = std::max(traj.drifts[k], std::abs(diff(dd, base_invariants[k])));
        }
        std::vector<double> coeffs = flow_detail::charpoly_coefficients(vals);
        if (base_coeffs.empty()) base_coeffs = coeffs;
        double dev = 0.0;
        for (std::size_t m = 0; m < coeffs.size(); ++m) dev = std::max(dev, std::abs(coeffs[m] - base_coeffs[m]));
        traj.specdev.push_back(dev);
        traj.invariants.push_back(std::move(vals));
    };

    const long long nsteps = std::max(1LL, std::llround((spec.t1 - spec.t0) / spec.dt));
    const double h = (spec.t1 - spec.t0) / static_cast<double>(nsteps);

    flow_detail::KahanState state(spec.x0);
    log_sample(spec.t0, state.value);

    std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);
    std::vector<flow_detail::DD> delta(n);
    for (long long step = 1; step <= nsteps; ++step) {
        const auto& y = state.value;
        if (spec.method == Method::rk4) {
            eval_field(y, k1);
            for (int i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
            eval_field(tmp, k2);
            for (int i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
            eval_field(tmp, k3);
            for (int i = 0; i < n; ++i) tmp[i] = y[i] + h * k3[i];
            eval_field(tmp, k4);
            for (int i = 0; i < n; ++i) {
                delta[i] = flow_detail::DD{};
                delta[i].add_prod(h / 6.0, k1[i]);
                delta[i].add_prod(h / 3.0, k2[i]);
                delta[i].add_prod(h / 3.0, k3[i]);
                delta[i].add_prod(h / 6.0, k4[i]);
            }
        } else {
            eval_field(y, k1);
            for (int i = 0; i < n; ++i) {
                delta[i] = flow_detail::DD{};
                delta[i].add_prod(h, k1[i]);
            }
        }
        state.accumulate(delta);

        bool finite = true;
        for (double v : state.value) finite = finite && std::isfinite(v);
        if (!finite) {
            traj.aborted = true;
            traj.abort_reason = "non-finite state at t = " + std::to_string(spec.t0 + step * h);
            break;
        }
        if (step % sample_every == 0 || step == nsteps)
            log_sample(spec.t0 + static_cast<double>(step) * h, state.value);
    }
    return traj;
}

/// The rigid-body system on so3: potential B = R x with R = diag(a, b, c).
inline LaxSystem euler_system(const Rational& a, const Rational& b, const Rational& c,
                              const CanonicalPackage& pkg) {
    const LieAlgebra& L = pkg.algebra;
    bool is_so3 = L.dim() == 3 && L.entries().size() == 3 && L.c(1, 2, 3) == 1 && L.c(2, 3, 1) == 1 &&
                  L.c(1, 3, 2) == -1;
    if (!is_so3) throw std::invalid_argument("euler_system requires the so3 package");
    PolyVectorField B(3);
    B[1] = a * MultiPoly::variable(3, 1);
    B[2] = b * MultiPoly::variable(3, 2);
    B[3] = c * MultiPoly::variable(3, 3);
    return lax_field(pkg, B);
}

/// Repeats the integration, halving dt each time; rows are (dt, max drift).
inline std::vector<std::pair<double, double>> convergence_study(const FlowSpec& spec, int refinements,
                                                                const CasimirSet& casimir_set) {
    if (refinements < 2) throw std::invalid_argument("refinements must be >= 2");
    std::vector<std::pair<double, double>> rows;
    FlowSpec s = spec;
    for (int r = 0; r < refinements; ++r) {
        Trajectory traj = integrate(s, casimir_set);
        if (traj.aborted) throw std::runtime_error("integration aborted: " + traj.abort_reason);
        rows.emplace_back(s.dt, traj.max_casimir_drift());
        s.dt *= 0.5;
    }
    return rows;
}

/// CSV: header "t,x1,...,xn,I1,...,IK,specdev", floats with 17 significant
/// digits, one row per logged sample.
inline void write_csv(const Trajectory& traj, int nvars, std::ostream& os) {
    os << "t";
    for (int i = 1; i <= nvars; ++i) os << ",x" << i;
    for (int k = 1; k <= traj.max_power(); ++k) os << ",I" << k;
    os << ",specdev\n";
    char buf[64];
    auto put = [&](double v) {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        os << buf;
    };
    for (std::size_t row = 0; row < traj.times.size(); ++row) {
        put(traj.times[row]);
        for (double v : traj.states[row]) {
            os << ",";
            put(v);
        }
        for (double v : traj.invariants[row]) {
            os << ",";
            put(v);
        }
        os << ",";
        put(traj.specdev[row]);
        os << "\n";
    }
}

}  // namespace endolax
