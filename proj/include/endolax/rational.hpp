#pragma once

// Exact scalar type used across the library. All algebra-level computations
// run in arbitrary-precision rational arithmetic; floats appear only in the
// flow integrator.

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>

namespace endolax {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses a rational literal "p" or "p/q" (q > 0). Rejects anything else.
inline Rational parse_rational(const std::string& text) {
    auto fail = [&] { throw std::invalid_argument("invalid rational literal: '" + text + "'"); };
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    std::size_t num_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == num_begin) fail();
    Int num(text.substr(0, pos));
    if (pos == text.size()) return Rational(num);
    if (text[pos] != '/') fail();
    ++pos;
    std::size_t den_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == den_begin || pos != text.size()) fail();
    Int den(text.substr(den_begin));
    if (den == 0) throw std::invalid_argument("zero denominator in rational literal: '" + text + "'");
    return Rational(num, den);
}

inline std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

inline double to_double(const Rational& q) {
    return q.template convert_to<double>();
}

/// q^e by repeated squaring; e >= 0.
inline Rational qpow(Rational base, unsigned e) {
    Rational r(1);
    while (e != 0) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

}  // namespace endolax
