#pragma once

// The canonical endomorphism field A = J -| lambda with matrix entries
// A^k_j = x^i c^k_{ij}, its Nijenhuis bracket, the structural identities it
// satisfies, and the Casimir trace polynomials I_k = Tr A^k.

#include <string>
#include <vector>

#include "endolax/fields.hpp"
#include "endolax/lie_algebra.hpp"
#include "endolax/report.hpp"

namespace endolax {

struct CanonicalPackage {
    LieAlgebra algebra;
    ConstantOneTwoField lambda;
    PolyVectorField J;
    EndoField A;
};

inline CanonicalPackage build(const LieAlgebra& L) {
    CanonicalPackage pkg;
    pkg.algebra = L;
    pkg.lambda = ConstantOneTwoField::from_algebra(L);
    pkg.J = PolyVectorField::liouville(L.dim());
    pkg.A = contract_vector_into_onetwo(pkg.J, pkg.lambda);
    return pkg;
}

/// X_v = A v~, the vector field x -> [x, v].
inline PolyVectorField infinitesimal_rep(const CanonicalPackage& pkg, const AlgebraVector& v) {
    pkg.algebra.check_vector(v);
    return apply(pkg.A, PolyVectorField::constant(pkg.algebra.dim(), v));
}

/// Nijenhuis bracket [A, A] by polarization on coordinate fields:
/// (1/2)[A,A](X,Y) = [AX, AY] - A[AX, Y] - A[X, AY] + A A [X, Y],
/// stored so that [A,A](d_a, d_b) = T^i_{ab} d_i.
inline VectorBiform nijenhuis(const EndoField& A) {
    const int n = A.nvars;
    VectorBiform T(n);
    std::vector<PolyVectorField> columns;
    columns.reserve(n);
    for (int a = 1; a <= n; ++a) columns.push_back(column_field(A, a));
    for (int a = 1; a <= n; ++a) {
        PolyVectorField da = PolyVectorField::coordinate(n, a);
        for (int b = a + 1; b <= n; ++b) {
            PolyVectorField db = PolyVectorField::coordinate(n, b);
            PolyVectorField half = vf_commutator(columns[a - 1], columns[b - 1]) -
                                   apply(A, vf_commutator(columns[a - 1], db)) -
                                   apply(A, vf_commutator(da, columns[b - 1]));
            // [d_a, d_b] = 0, so the A^2 term contributes nothing.
            for (int i = 1; i <= n; ++i) {
                MultiPoly c = half[i] + half[i];
                if (!c.is_zero()) T.add_term(i, a, b, c);
            }
        }
    }
    return T;
}

struct CasimirSet {
    std::vector<MultiPoly> polys;  // polys[k-1] = I_k = Tr A^k

    const MultiPoly& I(int k) const { return polys[k - 1]; }
    int max_power() const { return static_cast<int>(polys.size()); }
};

/// Power traces I_1..I_K computed row by row, so no full matrix power is
/// ever materialized (the dim-10 algebras make that worthwhile).
inline CasimirSet casimirs(const CanonicalPackage& pkg, int max_power) {
    if (max_power < 1) throw std::invalid_argument("casimir power cap must be >= 1");
    const int n = pkg.A.nvars;
    CasimirSet set;
    set.polys.assign(max_power, MultiPoly::zero(n));
    for (int i = 1; i <= n; ++i) {
        std::vector<MultiPoly> row(n, MultiPoly::zero(n));
        row[i - 1] = MultiPoly::constant(n, Rational(1));
        for (int k = 1; k <= max_power; ++k) {
            std::vector<MultiPoly> next(n, MultiPoly::zero(n));
            for (int p = 1; p <= n; ++p) {
                if (row[p - 1].is_zero()) continue;
                for (int q = 1; q <= n; ++q) {
                    const MultiPoly& apq = pkg.A.at(p, q);
                    if (apq.is_zero()) continue;
                    next[q - 1] = next[q - 1] + row[p - 1] * apq;
                }
            }
            row = std::move(next);
            if (!row[i - 1].is_zero()) set.polys[k - 1] = set.polys[k - 1] + row[i - 1];
        }
    }
    return set;
}

namespace detail {

inline std::string first_nonzero_component(const VectorBiform& T) {
    const auto& [key, p] = *T.comp.begin();
    return "component (i=" + std::to_string(key[0]) + ", a=" + std::to_string(key[1]) +
           ", b=" + std::to_string(key[2]) + ") = " + to_string(p);
}

inline std::string first_nonzero_component(const EndoField& A) {
    for (int k = 1; k <= A.nvars; ++k)
        for (int j = 1; j <= A.nvars; ++j)
            if (!A.at(k, j).is_zero())
                return "entry (" + std::to_string(k) + "," + std::to_string(j) + ") = " + to_string(A.at(k, j));
    return "";
}

inline std::string first_nonzero_component(const PolyVectorField& X) {
    for (int k = 1; k <= X.nvars; ++k)
        if (!X[k].is_zero()) return "component d" + std::to_string(k) + " = " + to_string(X[k]);
    return "";
}

}  // namespace detail

/// Checks [A, A] + 2 (lambda -| A) = 0 as an exact polynomial identity.
inline VerificationReport verify_fundamental_identity(const CanonicalPackage& pkg) {
    VerificationReport report;
    VectorBiform residual = nijenhuis(pkg.A) + Rational(2) * contract_biform_slot(pkg.lambda, pkg.A);
    report.add("fundamental", "[A,A] = -2 lambda -| A", residual.is_zero(),
               residual.is_zero() ? "" : detail::first_nonzero_component(residual));
    return report;
}

/// The bundle of structural identities of the endomorphism field.
inline VerificationReport verify_structural(const CanonicalPackage& pkg) {
    const int n = pkg.algebra.dim();
    VerificationReport report;

    {
        EndoField r = lie_derivative_endo(pkg.J, pkg.A) - pkg.A;
        report.add("structural:scale-invariance", "L_J A = A", r.is_zero(),
                   r.is_zero() ? "" : detail::first_nonzero_component(r));
    }
    {
        PolyVectorField r = apply(pkg.A, pkg.J);
        report.add("structural:radial-kernel", "A J = 0", r.is_zero(),
                   r.is_zero() ? "" : detail::first_nonzero_component(r));
    }
    {
        bool ok = true;
        std::string witness;
        for (int a = 1; a <= n && ok; ++a) {
            EndoField r = lie_derivative_endo(infinitesimal_rep(pkg, basis_vector(n, a)), pkg.A);
            if (!r.is_zero()) {
                ok = false;
                witness = "v = e" + std::to_string(a) + ": " + detail::first_nonzero_component(r);
            }
        }
        report.add("structural:adjoint-invariance", "L_{X_v} A = 0", ok, witness);
    }
    {
        QVector chi = characteristic_form(pkg.algebra);
        MultiPoly chiJ = MultiPoly::zero(n);
        for (int a = 1; a <= n; ++a)
            if (!chi[a - 1].is_zero()) chiJ = chiJ + chi[a - 1] * MultiPoly::variable(n, a);
        MultiPoly r = trace(pkg.A) - chiJ;
        report.add("structural:trace-characteristic", "Tr A = chi(J)", r.is_zero(),
                   r.is_zero() ? "" : to_string(r));
    }
    QMatrix K = killing_form(pkg.algebra);
    {
        MultiPoly kjj = MultiPoly::zero(n);
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                if (!K.at(a - 1, b - 1).is_zero())
                    kjj = kjj + K.at(a - 1, b - 1) * (MultiPoly::variable(n, a) * MultiPoly::variable(n, b));
        MultiPoly r = trace(compose(pkg.A, pkg.A)) - kjj;
        report.add("structural:trace-square-killing", "Tr(A o A) = K(J,J)", r.is_zero(),
                   r.is_zero() ? "" : to_string(r));
    }
    {
        // K A + A^T K = 0: skew-symmetry of A for the Killing product.
        EndoField r(n);
        for (int k = 1; k <= n; ++k)
            for (int j = 1; j <= n; ++j) {
                MultiPoly acc = MultiPoly::zero(n);
                for (int p = 1; p <= n; ++p) {
                    if (!K.at(k - 1, p - 1).is_zero()) acc = acc + K.at(k - 1, p - 1) * pkg.A.at(p, j);
                    if (!K.at(p - 1, j - 1).is_zero()) acc = acc + K.at(p - 1, j - 1) * pkg.A.at(p, k);
                }
                r.at(k, j) = std::move(acc);
            }
        report.add("structural:killing-skew", "K(Av, w) = -K(v, Aw)", r.is_zero(),
                   r.is_zero() ? "" : detail::first_nonzero_component(r));
    }
    {
        CasimirSet set = casimirs(pkg, std::min(n, 4));
        bool ok = true;
        std::string witness;
        for (int k = 1; k <= set.max_power() && ok; ++k) {
            std::vector<MultiPoly> grad;
            grad.reserve(n);
            for (int j = 1; j <= n; ++j) grad.push_back(set.I(k).partial(j));
            std::vector<MultiPoly> pulled = pullback_covector(pkg.A, grad);
            for (int j = 1; j <= n && ok; ++j) {
                if (!pulled[j - 1].is_zero()) {
                    ok = false;
                    witness = "k = " + std::to_string(k) + ", slot " + std::to_string(j) + ": " +
                              to_string(pulled[j - 1]);
                }
            }
        }
        report.add("structural:casimir-annihilation", "A -| dI_k = 0", ok, witness);
    }
    {
        // [A,A](d_a, d_b) = -2 A([e_a, e_b]~) on every coordinate pair.
        VectorBiform nij = nijenhuis(pkg.A);
        bool ok = true;
        std::string witness;
        for (int a = 1; a <= n && ok; ++a)
            for (int b = a + 1; b <= n && ok; ++b) {
                AlgebraVector br = bracket(pkg.algebra, basis_vector(n, a), basis_vector(n, b));
                PolyVectorField r = nij.on_coordinates(a, b) + Rational(2) * infinitesimal_rep(pkg, br);
                if (!r.is_zero()) {
                    ok = false;
                    witness = "(a,b) = (" + std::to_string(a) + "," + std::to_string(b) + "): " +
                              detail::first_nonzero_component(r);
                }
            }
        report.add("structural:bracket-compatibility", "[A,A](v,w) = -2 A([v,w])", ok, witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (int a = 1; a <= n && ok; ++a)
            for (int b = a + 1; b <= n && ok; ++b) {
                AlgebraVector br = bracket(pkg.algebra, basis_vector(n, a), basis_vector(n, b));
                PolyVectorField r = vf_commutator(infinitesimal_rep(pkg, basis_vector(n, a)),
                                                  infinitesimal_rep(pkg, basis_vector(n, b))) -
                                    infinitesimal_rep(pkg, br);
                if (!r.is_zero()) {
                    ok = false;
                    witness = "(a,b) = (" + std::to_string(a) + "," + std::to_string(b) + "): " +
                              detail::first_nonzero_component(r);
                }
            }
        report.add("structural:basis-homomorphism", "[X_v, X_w] = X_{[v,w]}", ok, witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (int a = 1; a <= n && ok; ++a)
            for (int b = 1; b <= n && ok; ++b) {
                AlgebraVector br = bracket(pkg.algebra, basis_vector(n, a), basis_vector(n, b));
                PolyVectorField r = vf_commutator(infinitesimal_rep(pkg, basis_vector(n, a)),
                                                  PolyVectorField::constant(n, basis_vector(n, b))) -
                                    PolyVectorField::constant(n, br);
                if (!r.is_zero()) {
                    ok = false;
                    witness = "(a,b) = (" + std::to_string(a) + "," + std::to_string(b) + "): " +
                              detail::first_nonzero_component(r);
                }
            }
        report.add("structural:constant-field-bracket", "[X_v, w~] = [v,w]~", ok, witness);
    }
    return report;
}

struct OrbitRanks {
    int rank_ad = 0;
    int rank_ad_sq = 0;
    int dim_ker_cap_im = 0;
    bool restriction_verified = false;  // ad_x(Im ad_x) spans Im ad_x^2
};

/// Exact ranks of ad_x and ad_x^2 at a point, plus dim(Ker ad_x n Im ad_x),
/// all over the rationals.
inline OrbitRanks orbit_ranks(const CanonicalPackage& pkg, const AlgebraVector& x) {
    pkg.algebra.check_vector(x);
    const int n = pkg.algebra.dim();
    QMatrix M = ad_matrix(pkg.algebra, x);
    QMatrix M2 = M * M;

    OrbitRanks out;
    out.rank_ad = rank(M);
    out.rank_ad_sq = rank(M2);

    std::vector<QVector> ker = kernel_basis(M);
    std::vector<QVector> im = column_space_basis(M);
    QMatrix joint = hstack(from_columns(n, ker), from_columns(n, im));
    out.dim_ker_cap_im = static_cast<int>(ker.size() + im.size()) - rank(joint);

    // The restriction of ad_x to its image must span exactly Im ad_x^2.
    QMatrix im_mapped = M * from_columns(n, im);
    out.restriction_verified =
        rank(im_mapped) == out.rank_ad_sq && rank(hstack(im_mapped, M2)) == out.rank_ad_sq;
    return out;
}

/// Nested bracket [x, [[x,v], [x,w]]]; identically zero exactly when the
/// endomorphism field restricted to the orbits of L is integrable.
inline AlgebraVector integrability_probe(const LieAlgebra& L, const AlgebraVector& x, const AlgebraVector& v,
                                         const AlgebraVector& w) {
    return bracket(L, x, bracket(L, bracket(L, x, v), bracket(L, x, w)));
}

}  // namespace endolax
