#pragma once

// Sparse multivariate polynomials over exact rationals. Terms are kept in
// descending graded-lex order with no zero coefficients, so equality is
// structural and printing is a single pass. Variable indices are 1-based
// (x1..xn) to match the coordinate labels used everywhere else.

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "endolax/rational.hpp"

namespace endolax {

inline constexpr int kMaxVars = 24;

struct Monomial {
    std::array<std::uint8_t, kMaxVars> e{};

    int degree() const {
        int d = 0;
        for (auto v : e) d += v;
        return d;
    }

    int exponent(int i) const { return e[i - 1]; }

    static Monomial one() { return Monomial{}; }

    static Monomial var(int i, int power = 1) {
        Monomial m;
        if (power < 0 || power > 255) throw std::overflow_error("monomial exponent out of range");
        m.e[i - 1] = static_cast<std::uint8_t>(power);
        return m;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial m;
        for (int i = 0; i < kMaxVars; ++i) {
            int s = a.e[i] + b.e[i];
            if (s > 255) throw std::overflow_error("monomial exponent overflow");
            m.e[i] = static_cast<std::uint8_t>(s);
        }
        return m;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

/// True when a precedes b in the canonical order (higher degree first,
/// then lexicographically larger exponent vector first).
inline bool monomial_precedes(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.e > b.e;
}

class MultiPoly {
public:
    using Term = std::pair<Monomial, Rational>;

    MultiPoly() = default;
    explicit MultiPoly(int nvars) : nvars_(check_nvars(nvars)) {}

    static MultiPoly zero(int nvars) { return MultiPoly(nvars); }

    static MultiPoly constant(int nvars, Rational c) {
        MultiPoly p(nvars);
        if (!c.is_zero()) p.terms_.emplace_back(Monomial::one(), std::move(c));
        return p;
    }

    static MultiPoly variable(int nvars, int i) {
        MultiPoly p(nvars);
        p.check_var(i);
        p.terms_.emplace_back(Monomial::var(i), Rational(1));
        return p;
    }

    static MultiPoly from_term(int nvars, const Monomial& m, Rational c) {
        MultiPoly p(nvars);
        if (!c.is_zero()) p.terms_.emplace_back(m, std::move(c));
        return p;
    }

    /// Builds from an arbitrary term list (sorts, combines, drops zeros).
    static MultiPoly from_terms(int nvars, std::vector<Term> terms) {
        MultiPoly p(nvars);
        p.terms_ = std::move(terms);
        p.normalize();
        return p;
    }

    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int total_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    bool is_homogeneous_of_degree(int d) const {
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        check_same(a, b);
        MultiPoly r(a.nvars_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (ia != a.terms_.end() && ib != b.terms_.end()) {
            if (ia->first == ib->first) {
                Rational c = ia->second + ib->second;
                if (!c.is_zero()) r.terms_.emplace_back(ia->first, std::move(c));
                ++ia;
                ++ib;
            } else if (monomial_precedes(ia->first, ib->first)) {
                r.terms_.push_back(*ia++);
            } else {
                r.terms_.push_back(*ib++);
            }
        }
        r.terms_.insert(r.terms_.end(), ia, a.terms_.end());
        r.terms_.insert(r.terms_.end(), ib, b.terms_.end());
        return r;
    }

    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

    MultiPoly operator-() const {
        MultiPoly r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    /// Product by a single term; preserves term order.
    MultiPoly times_term(const Monomial& m, const Rational& c) const {
        MultiPoly r(nvars_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& [tm, tc] : terms_) r.terms_.emplace_back(tm * m, tc * c);
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        check_same(a, b);
        if (a.is_zero() || b.is_zero()) return MultiPoly(a.nvars_);
        const MultiPoly& small = a.terms_.size() <= b.terms_.size() ? a : b;
        const MultiPoly& big = a.terms_.size() <= b.terms_.size() ? b : a;
        MultiPoly acc(a.nvars_);
        for (const auto& [m, c] : small.terms_) acc = acc + big.times_term(m, c);
        return acc;
    }

    friend MultiPoly operator*(const Rational& c, const MultiPoly& p) {
        MultiPoly r(p.nvars_);
        if (c.is_zero()) return r;
        r.terms_.reserve(p.terms_.size());
        for (const auto& [m, tc] : p.terms_) r.terms_.emplace_back(m, c * tc);
        return r;
    }

    MultiPoly pow(unsigned k) const {
        MultiPoly r = constant(nvars_, Rational(1));
        MultiPoly base = *this;
        while (k != 0) {
            if (k & 1u) r = r * base;
            if ((k >>= 1u) != 0) base = base * base;
        }
        return r;
    }

    /// Formal partial derivative with respect to x_i.
    MultiPoly partial(int i) const {
        check_var(i);
        MultiPoly r(nvars_);
        r.terms_.reserve(terms_.size());
        for (const auto& [m, c] : terms_) {
            int e = m.e[i - 1];
            if (e == 0) continue;
            Monomial dm = m;
            dm.e[i - 1] = static_cast<std::uint8_t>(e - 1);
            r.terms_.emplace_back(dm, c * e);
        }
        return r;
    }

    Rational evaluate(std::span<const Rational> x) const {
        if (static_cast<int>(x.size()) != nvars_) throw std::invalid_argument("evaluation point dimension mismatch");
        Rational sum;
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (int i = 0; i < nvars_; ++i)
                if (m.e[i] != 0) t *= qpow(x[i], m.e[i]);
            sum += t;
        }
        return sum;
    }

    double evaluate_double(std::span<const double> x) const {
        if (static_cast<int>(x.size()) != nvars_) throw std::invalid_argument("evaluation point dimension mismatch");
        double sum = 0.0;
        for (const auto& [m, c] : terms_) {
            double t = to_double(c);
            for (int i = 0; i < nvars_; ++i)
                for (int rep = 0; rep < m.e[i]; ++rep) t *= x[i];
            sum += t;
        }
        return sum;
    }

private:
    static int check_nvars(int n) {
        if (n < 1 || n > kMaxVars)
            throw std::invalid_argument("nvars must be in [1, " + std::to_string(kMaxVars) + "]");
        return n;
    }

    void check_var(int i) const {
        if (i < 1 || i > nvars_) throw std::invalid_argument("variable index out of range");
    }

    static void check_same(const MultiPoly& a, const MultiPoly& b) {
        if (a.nvars_ != b.nvars_) throw std::invalid_argument("nvars mismatch");
    }

    void normalize() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return monomial_precedes(a.first, b.first); });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().first == t.first)
                out.back().second += t.second;
            else
                out.push_back(std::move(t));
        }
        std::erase_if(out, [](const Term& t) { return t.second.is_zero(); });
        terms_ = std::move(out);
    }

    int nvars_ = 1;
    std::vector<Term> terms_;
};

/// Canonical rendering: descending graded-lex, "p/q" rationals, '*' and '^'.
inline std::string to_string(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::string vars;
        for (int i = 1; i <= p.nvars(); ++i) {
            int e = m.exponent(i);
            if (e == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += "x" + std::to_string(i);
            if (e > 1) vars += "^" + std::to_string(e);
        }
        if (vars.empty()) {
            os << mag;
        } else {
            if (mag != 1) os << mag << "*";
            os << vars;
        }
    }
    return os.str();
}

}  // namespace endolax
