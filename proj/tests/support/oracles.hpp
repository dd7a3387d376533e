#ifndef MDO_TESTS_ORACLES_HPP
#define MDO_TESTS_ORACLES_HPP

// Independent reference computations. None of these call the code path
// they are used to check.

#include <cstdint>
#include <vector>

#include "mdo/forcing.hpp"
#include "mdo/matrix.hpp"
#include "mdo/ratpoly.hpp"

namespace mdo::testing {

/// Schoolbook product of integer coefficient lists (lowest power first).
inline std::vector<std::int64_t> int_poly_mul(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

/// Five-point central difference with step 1 on exact values; exact for
/// polynomials of degree <= 4.
inline Rational five_point_derivative(const RatPoly& p, const Rational& x) {
    auto f = [&](int off) { return poly_eval(p, x + off); };
    return (f(-2) - 8 * f(-1) + 8 * f(1) - f(2)) / 12;
}

inline RatMatrix naive_power(const RatMatrix& m, unsigned n) {
    RatMatrix acc = RatMatrix::identity(m.rows());
    for (unsigned i = 0; i < n; ++i) acc = acc * m;
    return acc;
}

/// The generalized inverse [[0, R^-1], [0, 0]] of A = [[P, Q], [R, S]]
/// where R is the regular bottom-left block of order r. A is m x n with P
/// of size (m - r) x r; the result is n x m.
inline RatMatrix block_pseudoinverse(const RatMatrix& a, std::size_t r) {
    const std::size_t m = a.rows(), n = a.cols();
    RatMatrix rblock = a.block(m - r, 0, r, r);
    // Gauss-Jordan on [R | I], written out here so the oracle does not share
    // the library's invert().
    RatMatrix aug(r, 2 * r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) aug(i, j) = rblock(i, j);
        aug(i, r + i) = 1;
    }
    for (std::size_t c = 0; c < r; ++c) {
        std::size_t p = c;
        while (aug(p, c) == 0) ++p;
        for (std::size_t j = 0; j < 2 * r; ++j) std::swap(aug(p, j), aug(c, j));
        Rational inv = 1 / aug(c, c);
        for (std::size_t j = 0; j < 2 * r; ++j) aug(c, j) *= inv;
        for (std::size_t i = 0; i < r; ++i) {
            if (i == c) continue;
            Rational f = aug(i, c);
            for (std::size_t j = 0; j < 2 * r; ++j) aug(i, j) -= f * aug(c, j);
        }
    }
    RatMatrix x(n, m);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) x(i, m - r + j) = aug(i, r + j);
    return x;
}

inline double central_difference(const ForcingFunction& f, double x, double h) {
    return (evaluate_numeric(f, x + h) - evaluate_numeric(f, x - h)) / (2 * h);
}

/// phi(D) y - f at x, with symbolic derivatives evaluated in floating point.
inline double numeric_residual(const RatPoly& phi, const ForcingFunction& y, const ForcingFunction& f, double x) {
    double acc = -evaluate_numeric(f, x);
    ForcingFunction dj = y;
    const auto& a = phi.coefficients();
    for (std::size_t j = 0; j < a.size(); ++j) {
        acc += to_double(a[j]) * evaluate_numeric(dj, x);
        dj = differentiate(dj);
    }
    return acc;
}

} // namespace mdo::testing

#endif
