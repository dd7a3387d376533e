#ifndef MDO_RATIONAL_HPP
#define MDO_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <string>

#include "error.hpp"

namespace mdo {

// Arbitrary-precision rational, always kept in lowest terms with a positive
// denominator. Expression templates are off so `auto` is safe.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    if (den == 0) throw error("zero denominator");
    // cpp_rational in Boost 1.74 rejects a negative denominator.
    BigInt n(num), d(den);
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rational(n, d);
}

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator_of(r) == 1; }

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r) { return r.str(); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Complex number with rational parts. Used to evaluate polynomials at
/// alpha + beta*i exactly.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational real, Rational imag = Rational(0)) : re(std::move(real)), im(std::move(imag)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    GaussianRational conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }

    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.norm();
        if (n == 0) throw error("division by zero");
        GaussianRational t = a * b.conj();
        return {t.re / n, t.im / n};
    }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
};

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    os << z.re;
    if (z.im >= 0)
        os << "+" << z.im << "i";
    else
        os << z.im << "i";
    return os;
}

} // namespace mdo

#endif
