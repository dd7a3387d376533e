#ifndef MDO_RATPOLY_HPP
#define MDO_RATPOLY_HPP

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace mdo {

/// Dense univariate polynomial with rational coefficients, lowest power
/// first. The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
class RatPoly {
public:
    RatPoly() = default;

    explicit RatPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

    RatPoly(std::initializer_list<std::int64_t> coefficients) {
        coeffs_.reserve(coefficients.size());
        for (auto c : coefficients) coeffs_.emplace_back(c);
        trim();
    }

    static RatPoly constant(Rational c) { return RatPoly(std::vector<Rational>{std::move(c)}); }

    /// The monomial c * k^n.
    static RatPoly monomial(std::size_t n, Rational c = Rational(1)) {
        std::vector<Rational> v(n + 1);
        v[n] = std::move(c);
        return RatPoly(std::move(v));
    }

    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of k^i; zero beyond the degree.
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

    const Rational& leading() const {
        if (is_zero()) throw error("zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    /// Index of the lowest nonzero coefficient (multiplicity of 0 as a root).
    std::size_t lowest_power() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return i;
        throw error("zero polynomial");
    }

    friend bool operator==(const RatPoly&, const RatPoly&) = default;

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
        std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
        return RatPoly(std::move(v));
    }

    friend RatPoly operator-(const RatPoly& a) {
        std::vector<Rational> v = a.coeffs_;
        for (auto& c : v) c = -c;
        return RatPoly(std::move(v));
    }

    friend RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

    friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return RatPoly(std::move(v));
    }

    friend RatPoly operator*(const Rational& s, const RatPoly& p) {
        std::vector<Rational> v = p.coeffs_;
        for (auto& c : v) c *= s;
        return RatPoly(std::move(v));
    }

    RatPoly pow(unsigned n) const {
        RatPoly result = constant(Rational(1));
        RatPoly base = *this;
        while (n) {
            if (n & 1u) result = result * base;
            n >>= 1u;
            if (n) base = base * base;
        }
        return result;
    }

    /// Drops the factor k^t: returns p(k) / k^t where t = lowest_power().
    RatPoly shifted_down(std::size_t t) const {
        if (t > coeffs_.size()) return {};
        return RatPoly(std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(t), coeffs_.end()));
    }

    /// Renders as a polynomial in `var`, highest power first ("D^2 - 4*D + 13").
    std::string str(char var = 'D') const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const Rational& c = coeffs_[i];
            if (c == 0) continue;
            Rational mag = c < 0 ? Rational(-c) : c;
            if (first)
                os << (c < 0 ? "-" : "");
            else
                os << (c < 0 ? " - " : " + ");
            first = false;
            if (i == 0) {
                os << mag;
                continue;
            }
            if (mag != 1) os << mag << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        return os.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const RatPoly& p) { return os << p.str(); }

/// Horner evaluation at a Gaussian rational.
inline GaussianRational poly_eval(const RatPoly& p, const GaussianRational& z) {
    GaussianRational acc;
    const auto& c = p.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + GaussianRational(c[i]);
    return acc;
}

inline Rational poly_eval(const RatPoly& p, const Rational& z) {
    Rational acc;
    const auto& c = p.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
}

inline RatPoly poly_derivative(const RatPoly& p) {
    const auto& c = p.coefficients();
    if (c.size() <= 1) return {};
    std::vector<Rational> v(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) v[i - 1] = c[i] * static_cast<long long>(i);
    return RatPoly(std::move(v));
}

/// Smallest k with p^(k)(z) != 0; a non-root has multiplicity 0.
inline unsigned root_multiplicity(const RatPoly& p, const GaussianRational& z) {
    if (p.is_zero()) throw error("undefined multiplicity");
    unsigned k = 0;
    RatPoly d = p;
    while (poly_eval(d, z).is_zero()) {
        d = poly_derivative(d);
        ++k;
    }
    return k;
}

} // namespace mdo

#endif
