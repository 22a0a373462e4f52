#pragma once

// Seeded generators for random rationals, vectors, polynomials, and fields.
// Coefficients stay small (|p| <= 3) so exact arithmetic stays fast and
// failures reproduce byte-for-byte. Draws use the raw mt19937_64 stream,
// not std distributions, to keep outputs stable across standard libraries.

#include <random>

#include "endolax/fields.hpp"
#include "endolax/multipoly.hpp"

namespace endolax {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : eng_(seed) {}

    int uniform(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rational rational(int max_abs_num = 3, int max_den = 3) {
        int num = uniform(-max_abs_num, max_abs_num);
        int den = uniform(1, max_den);
        return Rational(num, den);
    }

    Rational nonzero_rational(int max_abs_num = 3, int max_den = 3) {
        Rational q = rational(max_abs_num, max_den);
        while (q.is_zero()) q = rational(max_abs_num, max_den);
        return q;
    }

    AlgebraVector vector(int n, int max_abs_num = 3, int max_den = 3) {
        AlgebraVector v(n);
        for (auto& c : v) c = rational(max_abs_num, max_den);
        return v;
    }

    AlgebraVector integer_vector(int n, int max_abs = 3) {
        AlgebraVector v(n);
        for (auto& c : v) c = Rational(uniform(-max_abs, max_abs));
        return v;
    }

    Monomial monomial(int nvars, int max_degree) {
        Monomial m;
        int d = uniform(0, max_degree);
        for (int r = 0; r < d; ++r) {
            int var = uniform(1, nvars);
            m = m * Monomial::var(var);
        }
        return m;
    }

    MultiPoly poly(int nvars, int max_degree = 2, int max_terms = 3, int max_abs_coef = 3) {
        std::vector<MultiPoly::Term> terms;
        int count = uniform(1, max_terms);
        for (int t = 0; t < count; ++t) {
            Rational c(uniform(-max_abs_coef, max_abs_coef));
            if (c.is_zero()) c = 1;
            terms.emplace_back(monomial(nvars, max_degree), c);
        }
        return MultiPoly::from_terms(nvars, std::move(terms));
    }

    PolyVectorField field(int nvars, int max_degree = 2, int max_terms = 2) {
        PolyVectorField X(nvars);
        for (int k = 1; k <= nvars; ++k) X[k] = poly(nvars, max_degree, max_terms);
        return X;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace endolax
