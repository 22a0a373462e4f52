#pragma once

// Lax vector fields X_B = A B and the deformed bracket {B, C} on potentials,
// computed by two independent routes:
//   commutator route:  {B,C} = -[[B,C]] + [X_B, C] + [B, X_C] - X_{[B,C]}
//   derivative route:  {B,C} =  [[B,C]] + X_B |> C - X_C |> B
// Here [[ , ]] is the pointwise algebra bracket of component polynomials and
// |> the coordinate directional derivative.

#include <string>

#include "endolax/endo.hpp"
#include "endolax/fields.hpp"
#include "endolax/report.hpp"

namespace endolax {

struct LaxSystem {
    CanonicalPackage pkg;
    PolyVectorField potential;
    PolyVectorField field;  // = A potential
};

inline LaxSystem lax_field(const CanonicalPackage& pkg, const PolyVectorField& B) {
    if (B.nvars != pkg.A.nvars) throw std::invalid_argument("nvars mismatch");
    return LaxSystem{pkg, B, apply(pkg.A, B)};
}

/// [[B, C]]^m = c^m_{ij} B^i C^j with polynomial components.
inline PolyVectorField pointwise_algebra_bracket(const LieAlgebra& L, const PolyVectorField& B,
                                                 const PolyVectorField& C) {
    if (B.nvars != L.dim() || C.nvars != L.dim()) throw std::invalid_argument("nvars mismatch");
    const int n = L.dim();
    PolyVectorField out(n);
    for (const auto& [key, cval] : L.entries()) {
        const auto [i, j, m] = key;
        MultiPoly s = B[i] * C[j] - B[j] * C[i];
        if (!s.is_zero()) out[m] = out[m] + cval * s;
    }
    return out;
}

inline PolyVectorField deformed_bracket_commutator_form(const CanonicalPackage& pkg, const PolyVectorField& B,
                                                        const PolyVectorField& C) {
    PolyVectorField xb = apply(pkg.A, B);
    PolyVectorField xc = apply(pkg.A, C);
    return -pointwise_algebra_bracket(pkg.algebra, B, C) + vf_commutator(xb, C) + vf_commutator(B, xc) -
           apply(pkg.A, vf_commutator(B, C));
}

inline PolyVectorField deformed_bracket_derivative_form(const CanonicalPackage& pkg, const PolyVectorField& B,
                                                        const PolyVectorField& C) {
    PolyVectorField xb = apply(pkg.A, B);
    PolyVectorField xc = apply(pkg.A, C);
    return pointwise_algebra_bracket(pkg.algebra, B, C) + directional_derivative(xb, C) -
           directional_derivative(xc, B);
}

/// Checks that both bracket routes agree and that B -> X_B intertwines
/// {B,C} with the vector-field commutator.
inline VerificationReport verify_homomorphism(const CanonicalPackage& pkg, const PolyVectorField& B,
                                              const PolyVectorField& C) {
    VerificationReport report;
    PolyVectorField via_commutators = deformed_bracket_commutator_form(pkg, B, C);
    PolyVectorField via_derivatives = deformed_bracket_derivative_form(pkg, B, C);
    {
        PolyVectorField r = via_commutators - via_derivatives;
        report.add("homomorphism:route-equivalence", "commutator and derivative forms of {B,C} agree",
                   r.is_zero(), r.is_zero() ? "" : detail::first_nonzero_component(r));
    }
    {
        PolyVectorField r =
            vf_commutator(apply(pkg.A, B), apply(pkg.A, C)) - apply(pkg.A, via_commutators);
        report.add("homomorphism:lax-commutator", "[X_B, X_C] = X_{{B,C}}", r.is_zero(),
                   r.is_zero() ? "" : detail::first_nonzero_component(r));
    }
    return report;
}

/// Cyclic Jacobi sum of the deformed bracket, exactly zero for a Lie algebra.
inline VerificationReport verify_jacobi_deformed(const CanonicalPackage& pkg, const PolyVectorField& B,
                                                 const PolyVectorField& C, const PolyVectorField& D) {
    auto br = [&](const PolyVectorField& u, const PolyVectorField& v) {
        return deformed_bracket_derivative_form(pkg, u, v);
    };
    PolyVectorField r = br(B, br(C, D)) + br(C, br(D, B)) + br(D, br(B, C));
    VerificationReport report;
    report.add("deformed-jacobi", "{B,{C,D}} + {C,{D,B}} + {D,{B,C}} = 0", r.is_zero(),
               r.is_zero() ? "" : detail::first_nonzero_component(r));
    return report;
}

/// If X_B and X_C both commute with X, then so does X_{{B,C}}. The
/// hypothesis is checked first; a violated hypothesis is reported as a
/// failure with an explanatory witness rather than a crash.
inline VerificationReport symmetry_closure(const CanonicalPackage& pkg, const PolyVectorField& X,
                                           const PolyVectorField& B, const PolyVectorField& C) {
    VerificationReport report;
    PolyVectorField hb = vf_commutator(apply(pkg.A, B), X);
    PolyVectorField hc = vf_commutator(apply(pkg.A, C), X);
    if (!hb.is_zero() || !hc.is_zero()) {
        std::string which = !hb.is_zero() ? "[X_B, X] != 0" : "[X_C, X] != 0";
        report.add("symmetry-closure", "{B,C} generates a symmetry when B and C do", false,
                   "hypothesis not satisfied: " + which);
        return report;
    }
    PolyVectorField br = deformed_bracket_derivative_form(pkg, B, C);
    PolyVectorField r = vf_commutator(apply(pkg.A, br), X);
    report.add("symmetry-closure", "{B,C} generates a symmetry when B and C do", r.is_zero(),
               r.is_zero() ? "" : detail::first_nonzero_component(r));
    return report;
}

}  // namespace endolax
