#pragma once

// Finite-dimensional Lie algebra given by sparse exact structure constants.
// Storage keeps only keys with i < j; the i > j values follow from
// antisymmetry and cannot get out of sync.

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "endolax/qmatrix.hpp"
#include "endolax/rational.hpp"

namespace endolax {

/// Largest supported dimension (bounded by the polynomial variable cap).
inline constexpr int kMaxDim = 24;

using AlgebraVector = QVector;

class LieAlgebra {
public:
    LieAlgebra() = default;
    LieAlgebra(std::string name, int dim) : name_(std::move(name)), dim_(dim) {
        if (dim < 1 || dim > kMaxDim)
            throw std::invalid_argument("algebra dimension must be in [1, " + std::to_string(kMaxDim) + "]");
    }

    const std::string& name() const { return name_; }
    const std::string& basis_note() const { return basis_note_; }
    void set_basis_note(std::string note) { basis_note_ = std::move(note); }
    int dim() const { return dim_; }

    /// Inserts c^k_{ij} (requires i < j; zero values are dropped).
    void set(int i, int j, int k, const Rational& value) {
        check_index(i);
        check_index(j);
        check_index(k);
        if (i >= j) throw std::invalid_argument("structure constant keys must satisfy i < j");
        if (value.is_zero())
            coeffs_.erase({i, j, k});
        else
            coeffs_[{i, j, k}] = value;
    }

    /// c^k_{ij} with antisymmetry in (i, j); absent entries are zero.
    Rational c(int i, int j, int k) const {
        check_index(i);
        check_index(j);
        check_index(k);
        if (i == j) return Rational(0);
        if (i < j) {
            auto it = coeffs_.find({i, j, k});
            return it == coeffs_.end() ? Rational(0) : it->second;
        }
        auto it = coeffs_.find({j, i, k});
        return it == coeffs_.end() ? Rational(0) : -it->second;
    }

    /// Canonical (i < j) entries only.
    const std::map<std::array<int, 3>, Rational>& entries() const { return coeffs_; }

    void check_vector(const AlgebraVector& v) const {
        if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("vector dimension mismatch");
    }

private:
    void check_index(int i) const {
        if (i < 1 || i > dim_) throw std::invalid_argument("basis index out of range");
    }

    std::string name_;
    std::string basis_note_;
    int dim_ = 0;
    std::map<std::array<int, 3>, Rational> coeffs_;
};

inline AlgebraVector zero_vector(int n) { return AlgebraVector(n); }

inline AlgebraVector basis_vector(int n, int i) {
    AlgebraVector v(n);
    v[i - 1] = 1;
    return v;
}

inline AlgebraVector bracket(const LieAlgebra& L, const AlgebraVector& v, const AlgebraVector& w) {
    L.check_vector(v);
    L.check_vector(w);
    AlgebraVector out(L.dim());
    for (const auto& [key, cval] : L.entries()) {
        const auto [i, j, k] = key;
        Rational s = v[i - 1] * w[j - 1] - v[j - 1] * w[i - 1];
        if (!s.is_zero()) out[k - 1] += cval * s;
    }
    return out;
}

/// Matrix of ad_v; column j is bracket(v, e_j).
inline QMatrix ad_matrix(const LieAlgebra& L, const AlgebraVector& v) {
    L.check_vector(v);
    const int n = L.dim();
    QMatrix m(n, n);
    for (const auto& [key, cval] : L.entries()) {
        const auto [i, j, k] = key;
        // c^k_{ij}: contributes v^i to column j and -v^j to column i.
        if (!v[i - 1].is_zero()) m.at(k - 1, j - 1) += v[i - 1] * cval;
        if (!v[j - 1].is_zero()) m.at(k - 1, i - 1) -= v[j - 1] * cval;
    }
    return m;
}

/// Cyclic-sum tensor over (i < j < l, m); empty exactly when Jacobi holds.
inline std::map<std::array<int, 4>, Rational> jacobi_defect(const LieAlgebra& L) {
    const int n = L.dim();
    std::map<std::array<int, 4>, Rational> defect;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int l = j + 1; l <= n; ++l)
                for (int m = 1; m <= n; ++m) {
                    Rational sum;
                    for (int p = 1; p <= n; ++p) {
                        sum += L.c(i, p, m) * L.c(j, l, p);
                        sum += L.c(j, p, m) * L.c(l, i, p);
                        sum += L.c(l, p, m) * L.c(i, j, p);
                    }
                    if (!sum.is_zero()) defect[{i, j, l, m}] = sum;
                }
    return defect;
}

inline QMatrix killing_form(const LieAlgebra& L) {
    const int n = L.dim();
    std::vector<QMatrix> ads;
    ads.reserve(n);
    for (int a = 1; a <= n; ++a) ads.push_back(ad_matrix(L, basis_vector(n, a)));
    QMatrix K(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            Rational t = (ads[a] * ads[b]).trace();
            K.at(a, b) = t;
            K.at(b, a) = t;
        }
    return K;
}

/// Components of the characteristic form, chi_a = Tr ad(e_a).
inline QVector characteristic_form(const LieAlgebra& L) {
    const int n = L.dim();
    QVector chi(n);
    for (int a = 1; a <= n; ++a) chi[a - 1] = ad_matrix(L, basis_vector(n, a)).trace();
    return chi;
}

inline Rational lie_three_form(const LieAlgebra& L, const AlgebraVector& v, const AlgebraVector& w,
                               const AlgebraVector& z) {
    return (ad_matrix(L, bracket(L, v, w)) * ad_matrix(L, z)).trace();
}

}  // namespace endolax
