#pragma once

// Dual-side objects: the linear Poisson bivector Omega^{ij} = x_k c^k_{ij}
// on the dual space, the induced bracket of polynomial functions, and
// Hamiltonian vector fields. Both sides are flattened to coordinates
// x1..xn; index placement distinguishes them only in the notation.
//
// Sign convention: X_H g = {H, g}.

#include <map>

#include "endolax/fields.hpp"
#include "endolax/lie_algebra.hpp"
#include "endolax/report.hpp"

namespace endolax {

struct PoissonPackage {
    LieAlgebra algebra;
    std::map<std::array<int, 2>, MultiPoly> bivector;  // {i, j} -> Omega^{ij}, i < j
};

inline PoissonPackage poisson_package(const LieAlgebra& L) {
    PoissonPackage pp;
    pp.algebra = L;
    const int n = L.dim();
    for (const auto& [key, cval] : L.entries()) {
        const auto [i, j, k] = key;
        MultiPoly term = cval * MultiPoly::variable(n, k);
        auto it = pp.bivector.find({i, j});
        if (it == pp.bivector.end())
            pp.bivector.emplace(std::array<int, 2>{i, j}, std::move(term));
        else
            it->second = it->second + term;
    }
    std::erase_if(pp.bivector, [](const auto& kv) { return kv.second.is_zero(); });
    return pp;
}

/// {f, g} = Omega^{ij} (d_i f)(d_j g), exact.
inline MultiPoly poisson_bracket(const PoissonPackage& pp, const MultiPoly& f, const MultiPoly& g) {
    const int n = pp.algebra.dim();
    if (f.nvars() != n || g.nvars() != n) throw std::invalid_argument("nvars mismatch");
    MultiPoly acc = MultiPoly::zero(n);
    for (const auto& [key, omega] : pp.bivector) {
        const auto [i, j] = key;
        MultiPoly s = f.partial(i) * g.partial(j) - f.partial(j) * g.partial(i);
        if (!s.is_zero()) acc = acc + omega * s;
    }
    return acc;
}

/// X_H = dH -| Omega with components X_H^j = Omega^{ij} d_i H.
inline PolyVectorField hamiltonian_field(const PoissonPackage& pp, const MultiPoly& H) {
    const int n = pp.algebra.dim();
    if (H.nvars() != n) throw std::invalid_argument("nvars mismatch");
    PolyVectorField X(n);
    for (const auto& [key, omega] : pp.bivector) {
        const auto [i, j] = key;
        MultiPoly di = H.partial(i);
        MultiPoly dj = H.partial(j);
        if (!di.is_zero()) X[j] = X[j] + omega * di;
        if (!dj.is_zero()) X[i] = X[i] - omega * dj;
    }
    return X;
}

inline VerificationReport verify_poisson_jacobi(const PoissonPackage& pp, const MultiPoly& f, const MultiPoly& g,
                                                const MultiPoly& h) {
    MultiPoly r = poisson_bracket(pp, f, poisson_bracket(pp, g, h)) +
                  poisson_bracket(pp, g, poisson_bracket(pp, h, f)) +
                  poisson_bracket(pp, h, poisson_bracket(pp, f, g));
    VerificationReport report;
    report.add("poisson-jacobi", "{f,{g,h}} + {g,{h,f}} + {h,{f,g}} = 0", r.is_zero(),
               r.is_zero() ? "" : to_string(r));
    return report;
}

}  // namespace endolax
