#pragma once

// Built-in algebras. Basis conventions are part of the contract and are
// repeated by `list` in the CLI:
//   so(n)   e_(p,q) = E_qp - E_pq for p < q, pairs ordered lexicographically;
//           for n = 3 this is the vector-product basis, c^k_{ij} = eps_{ijk}.
//   sut(n)  elementary matrices E_pq, p < q, lexicographic.
//   sl2     (h, e, f) with [h,e] = 2e, [h,f] = -2f, [e,f] = h.

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "endolax/lie_algebra.hpp"

namespace endolax {

namespace detail {

// Expands [B_i, B_j] of explicit basis matrices into structure constants.
// `coordinate(M, a, b)` must read off the coefficient of basis element (a, b).
template <typename Coord>
void constants_from_matrices(LieAlgebra& L, const std::vector<QMatrix>& basis,
                             const std::vector<std::pair<int, int>>& labels, Coord coordinate) {
    const int n = static_cast<int>(basis.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            QMatrix m = basis[i] * basis[j] - basis[j] * basis[i];
            for (int k = 0; k < n; ++k) {
                Rational coef = coordinate(m, labels[k].first, labels[k].second);
                if (!coef.is_zero()) L.set(i + 1, j + 1, k + 1, coef);
            }
        }
}

}  // namespace detail

inline LieAlgebra make_abelian(int n) {
    if (n < 1 || n > kMaxDim) throw std::invalid_argument("abelian(n) supports 1 <= n <= " + std::to_string(kMaxDim));
    LieAlgebra L("abelian" + std::to_string(n), n);
    L.set_basis_note("zero bracket");
    return L;
}

inline LieAlgebra make_solvable2() {
    LieAlgebra L("solvable2", 2);
    L.set(1, 2, 2, 1);
    L.set_basis_note("[e1,e2] = e2");
    return L;
}

inline LieAlgebra make_heisenberg3() {
    LieAlgebra L("heisenberg3", 3);
    L.set(1, 2, 3, 1);
    L.set_basis_note("[e1,e2] = e3, e3 central");
    return L;
}

inline LieAlgebra make_so(int n) {
    if (n < 2 || n > 6) throw std::invalid_argument("so(n) supports 2 <= n <= 6");
    std::vector<std::pair<int, int>> labels;
    std::vector<QMatrix> basis;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            QMatrix m(n, n);
            m.at(q, p) = 1;
            m.at(p, q) = -1;
            labels.emplace_back(p, q);
            basis.push_back(std::move(m));
        }
    LieAlgebra L("so" + std::to_string(n), static_cast<int>(basis.size()));
    detail::constants_from_matrices(L, basis, labels,
                                    [](const QMatrix& m, int p, int q) { return m.at(q, p); });
    L.set_basis_note("e_(p,q) = E_qp - E_pq, p<q lexicographic" +
                     std::string(n == 3 ? "; c^k_{ij} = eps_{ijk}" : ""));
    return L;
}

inline LieAlgebra make_sl2() {
    LieAlgebra L("sl2", 3);
    L.set(1, 2, 2, 2);   // [h,e] = 2e
    L.set(1, 3, 3, -2);  // [h,f] = -2f
    L.set(2, 3, 1, 1);   // [e,f] = h
    L.set_basis_note("(h, e, f): [h,e]=2e, [h,f]=-2f, [e,f]=h");
    return L;
}

inline LieAlgebra make_strict_upper_triangular(int n) {
    if (n < 2 || n > 6) throw std::invalid_argument("strict_upper_triangular(n) supports 2 <= n <= 6");
    std::vector<std::pair<int, int>> labels;
    std::vector<QMatrix> basis;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            QMatrix m(n, n);
            m.at(p, q) = 1;
            labels.emplace_back(p, q);
            basis.push_back(std::move(m));
        }
    LieAlgebra L("strict_upper_triangular" + std::to_string(n), static_cast<int>(basis.size()));
    detail::constants_from_matrices(L, basis, labels,
                                    [](const QMatrix& m, int p, int q) { return m.at(p, q); });
    L.set_basis_note("E_pq, p<q lexicographic (nilpotent)");
    return L;
}

inline LieAlgebra catalog(const std::string& name, std::optional<int> param = std::nullopt) {
    auto need = [&](const char* what) -> int {
        if (!param) throw std::invalid_argument(std::string(what) + " requires an integer parameter");
        return *param;
    };
    if (name == "abelian") return make_abelian(need("abelian"));
    if (name == "solvable2") return make_solvable2();
    if (name == "heisenberg3") return make_heisenberg3();
    if (name == "so") return make_so(need("so"));
    if (name == "sl2") return make_sl2();
    if (name == "strict_upper_triangular" || name == "sut") return make_strict_upper_triangular(need("sut"));
    throw std::invalid_argument("unknown catalog algebra: '" + name + "'");
}

/// Resolves compact names such as "so3", "abelian4", "sut5".
inline LieAlgebra catalog_by_name(const std::string& compact) {
    std::size_t split = compact.size();
    while (split > 0 && std::isdigit(static_cast<unsigned char>(compact[split - 1]))) --split;
    std::string stem = compact.substr(0, split);
    std::optional<int> param;
    if (split < compact.size()) {
        long v = std::strtol(compact.c_str() + split, nullptr, 10);
        param = static_cast<int>(v);
    }
    if (stem == "solvable" && param == 2) return make_solvable2();
    if (stem == "heisenberg" && param == 3) return make_heisenberg3();
    if (stem == "sl" && param == 2) return make_sl2();
    return catalog(stem, param);
}

struct CatalogEntry {
    std::string name;
    std::string dims;
    std::string basis;
};

inline std::vector<CatalogEntry> catalog_listing() {
    return {
        {"abelian<n>", "dim n, n<=" + std::to_string(kMaxDim), make_abelian(2).basis_note()},
        {"solvable2", "dim 2", make_solvable2().basis_note()},
        {"heisenberg3", "dim 3", make_heisenberg3().basis_note()},
        {"so<n>", "dim n(n-1)/2, n<=6", make_so(3).basis_note()},
        {"sl2", "dim 3", make_sl2().basis_note()},
        {"strict_upper_triangular<n>", "dim n(n-1)/2, n<=6 (alias sut<n>)",
         make_strict_upper_triangular(3).basis_note()},
    };
}

/// The algebras exercised by the verification and test suites.
inline std::vector<LieAlgebra> standard_test_algebras() {
    std::vector<LieAlgebra> all;
    for (int n = 1; n <= 5; ++n) all.push_back(make_abelian(n));
    all.push_back(make_solvable2());
    all.push_back(make_heisenberg3());
    all.push_back(make_so(3));
    all.push_back(make_so(4));
    all.push_back(make_so(5));
    all.push_back(make_sl2());
    for (int n = 3; n <= 5; ++n) all.push_back(make_strict_upper_triangular(n));
    return all;
}

}  // namespace endolax
