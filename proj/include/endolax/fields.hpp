#pragma once

// Polynomial-coefficient tensor fields on the algebra seen as a flat
// manifold: vector fields, endomorphism fields (1,1), vector-valued biforms
// (1,2 antisymmetric), and the constant structure tensor.
//
// Wedge convention: (dx^a ^ dx^b)(v, w) = v^a w^b - v^b w^a, no 1/2 factor.

#include <map>
#include <sstream>
#include <vector>

#include "endolax/lie_algebra.hpp"
#include "endolax/multipoly.hpp"

namespace endolax {

// ---------------------------------------------------------------------------
// Vector fields

struct PolyVectorField {
    int nvars = 1;
    std::vector<MultiPoly> comp;  // comp[k-1] multiplies d/dx_k

    PolyVectorField() = default;
    explicit PolyVectorField(int n) : nvars(n), comp(n, MultiPoly::zero(n)) {}

    static PolyVectorField zero(int n) { return PolyVectorField(n); }

    /// Constant field extending an algebra vector.
    static PolyVectorField constant(int n, const AlgebraVector& v) {
        if (static_cast<int>(v.size()) != n) throw std::invalid_argument("vector dimension mismatch");
        PolyVectorField X(n);
        for (int k = 1; k <= n; ++k) X.comp[k - 1] = MultiPoly::constant(n, v[k - 1]);
        return X;
    }

    /// The radial field x^i d_i.
    static PolyVectorField liouville(int n) {
        PolyVectorField X(n);
        for (int k = 1; k <= n; ++k) X.comp[k - 1] = MultiPoly::variable(n, k);
        return X;
    }

    static PolyVectorField coordinate(int n, int a) {
        PolyVectorField X(n);
        X.comp[a - 1] = MultiPoly::constant(n, Rational(1));
        return X;
    }

    const MultiPoly& operator[](int k) const { return comp[k - 1]; }
    MultiPoly& operator[](int k) { return comp[k - 1]; }

    bool is_zero() const {
        for (const auto& p : comp)
            if (!p.is_zero()) return false;
        return true;
    }

    friend bool operator==(const PolyVectorField& a, const PolyVectorField& b) {
        return a.nvars == b.nvars && a.comp == b.comp;
    }

    friend PolyVectorField operator+(const PolyVectorField& a, const PolyVectorField& b) {
        check_same(a, b);
        PolyVectorField r(a.nvars);
        for (int k = 0; k < a.nvars; ++k) r.comp[k] = a.comp[k] + b.comp[k];
        return r;
    }

    friend PolyVectorField operator-(const PolyVectorField& a, const PolyVectorField& b) {
        check_same(a, b);
        PolyVectorField r(a.nvars);
        for (int k = 0; k < a.nvars; ++k) r.comp[k] = a.comp[k] - b.comp[k];
        return r;
    }

    PolyVectorField operator-() const {
        PolyVectorField r(nvars);
        for (int k = 0; k < nvars; ++k) r.comp[k] = -comp[k];
        return r;
    }

    friend PolyVectorField operator*(const Rational& c, const PolyVectorField& X) {
        PolyVectorField r(X.nvars);
        for (int k = 0; k < X.nvars; ++k) r.comp[k] = c * X.comp[k];
        return r;
    }

    static void check_same(const PolyVectorField& a, const PolyVectorField& b) {
        if (a.nvars != b.nvars) throw std::invalid_argument("nvars mismatch");
    }
};

inline AlgebraVector evaluate_field(const PolyVectorField& X, std::span<const Rational> x) {
    AlgebraVector out(X.nvars);
    for (int k = 0; k < X.nvars; ++k) out[k] = X.comp[k].evaluate(x);
    return out;
}

/// Directional derivative (X |> Y)^j = X^i d_i Y^j.
inline PolyVectorField directional_derivative(const PolyVectorField& X, const PolyVectorField& Y) {
    PolyVectorField::check_same(X, Y);
    PolyVectorField r(X.nvars);
    for (int j = 1; j <= X.nvars; ++j) {
        MultiPoly acc = MultiPoly::zero(X.nvars);
        for (int i = 1; i <= X.nvars; ++i) {
            if (X[i].is_zero()) continue;
            MultiPoly d = Y[j].partial(i);
            if (!d.is_zero()) acc = acc + X[i] * d;
        }
        r[j] = std::move(acc);
    }
    return r;
}

/// Lie commutator [X,Y]^j = X^i d_i Y^j - Y^i d_i X^j.
inline PolyVectorField vf_commutator(const PolyVectorField& X, const PolyVectorField& Y) {
    return directional_derivative(X, Y) - directional_derivative(Y, X);
}

/// Applies X to a scalar as a derivation: X f = X^i d_i f.
inline MultiPoly derive_along(const PolyVectorField& X, const MultiPoly& f) {
    if (X.nvars != f.nvars()) throw std::invalid_argument("nvars mismatch");
    MultiPoly acc = MultiPoly::zero(X.nvars);
    for (int i = 1; i <= X.nvars; ++i) {
        if (X[i].is_zero()) continue;
        MultiPoly d = f.partial(i);
        if (!d.is_zero()) acc = acc + X[i] * d;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Endomorphism fields

struct EndoField {
    int nvars = 1;
    std::vector<MultiPoly> data;  // row-major n x n; (k, j) multiplies dx^j (x) d_k

    EndoField() = default;
    explicit EndoField(int n) : nvars(n), data(static_cast<std::size_t>(n) * n, MultiPoly::zero(n)) {}

    static EndoField zero(int n) { return EndoField(n); }

    static EndoField identity(int n) {
        EndoField a(n);
        for (int k = 1; k <= n; ++k) a.at(k, k) = MultiPoly::constant(n, Rational(1));
        return a;
    }

    MultiPoly& at(int k, int j) { return data[static_cast<std::size_t>(k - 1) * nvars + (j - 1)]; }
    const MultiPoly& at(int k, int j) const { return data[static_cast<std::size_t>(k - 1) * nvars + (j - 1)]; }

    bool is_zero() const {
        for (const auto& p : data)
            if (!p.is_zero()) return false;
        return true;
    }

    friend bool operator==(const EndoField& a, const EndoField& b) {
        return a.nvars == b.nvars && a.data == b.data;
    }

    friend EndoField operator+(const EndoField& a, const EndoField& b) {
        check_same(a, b);
        EndoField r(a.nvars);
        for (std::size_t i = 0; i < a.data.size(); ++i) r.data[i] = a.data[i] + b.data[i];
        return r;
    }

    friend EndoField operator-(const EndoField& a, const EndoField& b) {
        check_same(a, b);
        EndoField r(a.nvars);
        for (std::size_t i = 0; i < a.data.size(); ++i) r.data[i] = a.data[i] - b.data[i];
        return r;
    }

    static void check_same(const EndoField& a, const EndoField& b) {
        if (a.nvars != b.nvars) throw std::invalid_argument("nvars mismatch");
    }
};

/// (A X)^k = A^k_j X^j.
inline PolyVectorField apply(const EndoField& A, const PolyVectorField& X) {
    if (A.nvars != X.nvars) throw std::invalid_argument("nvars mismatch");
    const int n = A.nvars;
    PolyVectorField r(n);
    for (int k = 1; k <= n; ++k) {
        MultiPoly acc = MultiPoly::zero(n);
        for (int j = 1; j <= n; ++j) {
            if (A.at(k, j).is_zero() || X[j].is_zero()) continue;
            acc = acc + A.at(k, j) * X[j];
        }
        r[k] = std::move(acc);
    }
    return r;
}

/// Column j of A as a vector field (the image of the coordinate field d_j).
inline PolyVectorField column_field(const EndoField& A, int j) {
    PolyVectorField r(A.nvars);
    for (int k = 1; k <= A.nvars; ++k) r[k] = A.at(k, j);
    return r;
}

/// Matrix composition (A o B)^k_j = A^k_p B^p_j.
inline EndoField compose(const EndoField& A, const EndoField& B) {
    EndoField::check_same(A, B);
    const int n = A.nvars;
    EndoField r(n);
    for (int k = 1; k <= n; ++k)
        for (int j = 1; j <= n; ++j) {
            MultiPoly acc = MultiPoly::zero(n);
            for (int p = 1; p <= n; ++p) {
                if (A.at(k, p).is_zero() || B.at(p, j).is_zero()) continue;
                acc = acc + A.at(k, p) * B.at(p, j);
            }
            r.at(k, j) = std::move(acc);
        }
    return r;
}

inline MultiPoly trace(const EndoField& A) {
    MultiPoly t = MultiPoly::zero(A.nvars);
    for (int k = 1; k <= A.nvars; ++k) t = t + A.at(k, k);
    return t;
}

/// (L_X A)^i_j = X^k d_k A^i_j - A^k_j d_k X^i + A^i_k d_j X^k.
inline EndoField lie_derivative_endo(const PolyVectorField& X, const EndoField& A) {
    if (X.nvars != A.nvars) throw std::invalid_argument("nvars mismatch");
    const int n = A.nvars;
    EndoField r(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            MultiPoly acc = MultiPoly::zero(n);
            for (int k = 1; k <= n; ++k) {
                if (!X[k].is_zero()) {
                    MultiPoly d = A.at(i, j).partial(k);
                    if (!d.is_zero()) acc = acc + X[k] * d;
                }
                if (!A.at(k, j).is_zero()) {
                    MultiPoly d = X[i].partial(k);
                    if (!d.is_zero()) acc = acc - A.at(k, j) * d;
                }
                if (!A.at(i, k).is_zero()) {
                    MultiPoly d = X[k].partial(j);
                    if (!d.is_zero()) acc = acc + A.at(i, k) * d;
                }
            }
            r.at(i, j) = std::move(acc);
        }
    return r;
}

/// Pullback of a covector with components alpha_k: (A* alpha)_j = A^k_j alpha_k.
inline std::vector<MultiPoly> pullback_covector(const EndoField& A, const std::vector<MultiPoly>& alpha) {
    if (static_cast<int>(alpha.size()) != A.nvars) throw std::invalid_argument("covector dimension mismatch");
    const int n = A.nvars;
    std::vector<MultiPoly> out(n, MultiPoly::zero(n));
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
            if (A.at(k, j).is_zero() || alpha[k - 1].is_zero()) continue;
            out[j - 1] = out[j - 1] + A.at(k, j) * alpha[k - 1];
        }
    return out;
}

inline QMatrix evaluate_endo(const EndoField& A, std::span<const Rational> x) {
    QMatrix m(A.nvars, A.nvars);
    for (int k = 1; k <= A.nvars; ++k)
        for (int j = 1; j <= A.nvars; ++j) m.at(k - 1, j - 1) = A.at(k, j).evaluate(x);
    return m;
}

// ---------------------------------------------------------------------------
// Constant (1,2) structure field and vector-valued biforms

/// The structure tensor prolonged to a constant field on the manifold.
struct ConstantOneTwoField {
    int nvars = 1;
    std::map<std::array<int, 3>, Rational> coeffs;  // {i, j, k} -> c^k_{ij}, i < j

    static ConstantOneTwoField from_algebra(const LieAlgebra& L) {
        return ConstantOneTwoField{L.dim(), L.entries()};
    }
};

/// T^i_{ab} (dx^a ^ dx^b) (x) d_i with canonical a < b keys.
struct VectorBiform {
    int nvars = 1;
    std::map<std::array<int, 3>, MultiPoly> comp;  // key {i, a, b}, a < b

    VectorBiform() = default;
    explicit VectorBiform(int n) : nvars(n) {}

    void add_term(int i, int a, int b, const MultiPoly& p) {
        if (a == b || p.is_zero()) return;
        int sa = a, sb = b;
        MultiPoly q = p;
        if (sa > sb) {
            std::swap(sa, sb);
            q = -q;
        }
        auto it = comp.find({i, sa, sb});
        if (it == comp.end()) {
            comp.emplace(std::array<int, 3>{i, sa, sb}, std::move(q));
        } else {
            it->second = it->second + q;
            if (it->second.is_zero()) comp.erase(it);
        }
    }

    MultiPoly component(int i, int a, int b) const {
        if (a == b) return MultiPoly::zero(nvars);
        bool flip = a > b;
        if (flip) std::swap(a, b);
        auto it = comp.find({i, a, b});
        if (it == comp.end()) return MultiPoly::zero(nvars);
        return flip ? -it->second : it->second;
    }

    /// Value on the coordinate pair (d_a, d_b) as a vector field.
    PolyVectorField on_coordinates(int a, int b) const {
        PolyVectorField r(nvars);
        for (int i = 1; i <= nvars; ++i) r[i] = component(i, a, b);
        return r;
    }

    bool is_zero() const { return comp.empty(); }

    friend bool operator==(const VectorBiform& a, const VectorBiform& b) {
        return a.nvars == b.nvars && a.comp == b.comp;
    }

    friend VectorBiform operator+(const VectorBiform& a, const VectorBiform& b) {
        if (a.nvars != b.nvars) throw std::invalid_argument("nvars mismatch");
        VectorBiform r = a;
        for (const auto& [key, p] : b.comp) r.add_term(key[0], key[1], key[2], p);
        return r;
    }

    friend VectorBiform operator*(const Rational& c, const VectorBiform& t) {
        VectorBiform r(t.nvars);
        if (c.is_zero()) return r;
        for (const auto& [key, p] : t.comp) r.comp.emplace(key, c * p);
        return r;
    }
};

/// T(v, w) at the point x, for constant tangent vectors v, w.
inline AlgebraVector evaluate_biform(const VectorBiform& T, std::span<const Rational> x, const AlgebraVector& v,
                                     const AlgebraVector& w) {
    AlgebraVector out(T.nvars);
    for (const auto& [key, p] : T.comp) {
        const auto [i, a, b] = key;
        Rational pair = v[a - 1] * w[b - 1] - v[b - 1] * w[a - 1];
        if (!pair.is_zero()) out[i - 1] += p.evaluate(x) * pair;
    }
    return out;
}

/// v -| lambda: the endomorphism with entries (k, j) = sum_i v^i c^k_{ij}.
inline EndoField contract_vector_into_onetwo(const PolyVectorField& v, const ConstantOneTwoField& lam) {
    if (v.nvars != lam.nvars) throw std::invalid_argument("nvars mismatch");
    EndoField A(lam.nvars);
    for (const auto& [key, cval] : lam.coeffs) {
        const auto [i, j, k] = key;
        // c^k_{ij} with i < j contributes v^i to (k, j) and -v^j to (k, i).
        if (!v[i].is_zero()) A.at(k, j) = A.at(k, j) + cval * v[i];
        if (!v[j].is_zero()) A.at(k, i) = A.at(k, i) - cval * v[j];
    }
    return A;
}

/// lambda -| A: the biform with components T^i_{ab} = sum_p A^i_p c^p_{ab}.
inline VectorBiform contract_biform_slot(const ConstantOneTwoField& lam, const EndoField& A) {
    if (A.nvars != lam.nvars) throw std::invalid_argument("nvars mismatch");
    VectorBiform T(lam.nvars);
    for (const auto& [key, cval] : lam.coeffs) {
        const auto [a, b, p] = key;  // c^p_{ab}, a < b
        for (int i = 1; i <= lam.nvars; ++i) {
            if (A.at(i, p).is_zero()) continue;
            T.add_term(i, a, b, cval * A.at(i, p));
        }
    }
    return T;
}

inline std::string to_string(const VectorBiform& T) {
    if (T.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, p] : T.comp) {
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(p) << ")*dx" << key[1] << "^dx" << key[2] << "@d" << key[0];
    }
    return os.str();
}

inline std::string to_string(const PolyVectorField& X) {
    if (X.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 1; k <= X.nvars; ++k) {
        if (X[k].is_zero()) continue;
        if (!first) os << "; ";
        first = false;
        os << "d" << k << ": " << to_string(X[k]);
    }
    return os.str();
}

}  // namespace endolax
