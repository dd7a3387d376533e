#ifndef MDO_FORCING_HPP
#define MDO_FORCING_HPP

#include <cmath>
#include <compare>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace mdo {

enum class TrigKind { One, Sin, Cos };

inline const char* trig_name(TrigKind t) {
    switch (t) {
    case TrigKind::Sin: return "sin";
    case TrigKind::Cos: return "cos";
    default: return "one";
    }
}

/// c * x^power * e^(alpha x) * trig(beta x). In canonical form beta >= 0,
/// and beta == 0 exactly when trig == One.
struct ForcingTerm {
    Rational coef;
    unsigned power = 0;
    Rational alpha;
    Rational beta;
    TrigKind trig = TrigKind::One;

    friend bool operator==(const ForcingTerm&, const ForcingTerm&) = default;
};

/// Identity of a term up to its coefficient, ordered canonically:
/// alpha ascending, beta ascending, power descending, sin before cos.
struct TermKey {
    unsigned power = 0;
    Rational alpha;
    Rational beta;
    TrigKind trig = TrigKind::One;

    friend bool operator==(const TermKey&, const TermKey&) = default;

    friend bool operator<(const TermKey& a, const TermKey& b) {
        if (a.alpha != b.alpha) return a.alpha < b.alpha;
        if (a.beta != b.beta) return a.beta < b.beta;
        if (a.power != b.power) return a.power > b.power;
        return static_cast<int>(a.trig) < static_cast<int>(b.trig);
    }
};

inline TermKey key_of(const ForcingTerm& t) { return {t.power, t.alpha, t.beta, t.trig}; }

class ForcingFunction;
ForcingFunction canonicalize(std::vector<ForcingTerm> terms);

/// Canonical sum of forcing terms; the empty sum is the zero function.
/// Only `canonicalize` produces instances, so every value is canonical.
class ForcingFunction {
public:
    ForcingFunction() = default;

    const std::vector<ForcingTerm>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// True when every term is a plain power of x.
    bool is_polynomial() const {
        for (const auto& t : terms_)
            if (t.alpha != 0 || t.beta != 0) return false;
        return true;
    }

    unsigned max_power() const {
        unsigned m = 0;
        for (const auto& t : terms_) m = std::max(m, t.power);
        return m;
    }

    friend bool operator==(const ForcingFunction&, const ForcingFunction&) = default;

    friend ForcingFunction operator+(const ForcingFunction& a, const ForcingFunction& b) {
        std::vector<ForcingTerm> v = a.terms_;
        v.insert(v.end(), b.terms_.begin(), b.terms_.end());
        return canonicalize(std::move(v));
    }

    friend ForcingFunction operator*(const Rational& s, const ForcingFunction& f) {
        std::vector<ForcingTerm> v = f.terms_;
        for (auto& t : v) t.coef *= s;
        return canonicalize(std::move(v));
    }

    friend ForcingFunction operator-(const ForcingFunction& a) { return Rational(-1) * a; }
    friend ForcingFunction operator-(const ForcingFunction& a, const ForcingFunction& b) { return a + (-b); }

private:
    friend ForcingFunction canonicalize(std::vector<ForcingTerm> terms);
    std::vector<ForcingTerm> terms_;
};

/// Merges like terms, drops zeros, folds negative beta by parity
/// (sin(-bx) = -sin(bx), cos(-bx) = cos(bx)) and sorts.
inline ForcingFunction canonicalize(std::vector<ForcingTerm> terms) {
    std::map<TermKey, Rational> acc;
    for (auto& t : terms) {
        if (t.trig == TrigKind::One && t.beta != 0)
            throw error("term without sin/cos must have beta = 0");
        if (t.beta < 0) {
            t.beta = -t.beta;
            if (t.trig == TrigKind::Sin) t.coef = -t.coef;
        }
        if (t.trig != TrigKind::One && t.beta == 0) {
            if (t.trig == TrigKind::Sin) continue; // sin(0x) == 0
            t.trig = TrigKind::One;
        }
        if (t.coef == 0) continue;
        acc[key_of(t)] += t.coef;
    }
    ForcingFunction f;
    for (auto& [k, c] : acc) {
        if (c == 0) continue;
        f.terms_.push_back({c, k.power, k.alpha, k.beta, k.trig});
    }
    return f;
}

inline ForcingFunction make_function(std::initializer_list<ForcingTerm> terms) {
    return canonicalize(std::vector<ForcingTerm>(terms));
}

/// Exact derivative via the product rule; each term yields at most three.
inline ForcingFunction differentiate(const ForcingFunction& f) {
    std::vector<ForcingTerm> out;
    out.reserve(3 * f.size());
    for (const auto& t : f.terms()) {
        if (t.power > 0)
            out.push_back({t.coef * static_cast<long long>(t.power), t.power - 1, t.alpha, t.beta, t.trig});
        if (t.alpha != 0) out.push_back({t.coef * t.alpha, t.power, t.alpha, t.beta, t.trig});
        if (t.trig == TrigKind::Sin)
            out.push_back({t.coef * t.beta, t.power, t.alpha, t.beta, TrigKind::Cos});
        else if (t.trig == TrigKind::Cos)
            out.push_back({-t.coef * t.beta, t.power, t.alpha, t.beta, TrigKind::Sin});
    }
    return canonicalize(std::move(out));
}

inline ForcingFunction nth_derivative(ForcingFunction f, unsigned n) {
    for (unsigned i = 0; i < n; ++i) f = differentiate(f);
    return f;
}

/// Terms sharing one (alpha, beta) pair; solved independently.
struct Mode {
    Rational alpha;
    Rational beta;
    unsigned max_degree = 0;
    ForcingFunction terms;
};

inline std::vector<Mode> split_modes(const ForcingFunction& f) {
    std::vector<Mode> modes;
    std::vector<ForcingTerm> bucket;
    auto flush = [&] {
        if (bucket.empty()) return;
        Mode m;
        m.alpha = bucket.front().alpha;
        m.beta = bucket.front().beta;
        for (const auto& t : bucket) m.max_degree = std::max(m.max_degree, t.power);
        m.terms = canonicalize(std::move(bucket));
        modes.push_back(std::move(m));
        bucket.clear();
    };
    // canonical order keeps each (alpha, beta) group contiguous
    for (const auto& t : f.terms()) {
        if (!bucket.empty() && (bucket.front().alpha != t.alpha || bucket.front().beta != t.beta)) flush();
        bucket.push_back(t);
    }
    flush();
    return modes;
}

inline double evaluate_numeric(const ForcingFunction& f, double x) {
    double sum = 0.0;
    for (const auto& t : f.terms()) {
        double v = to_double(t.coef) * std::pow(x, static_cast<double>(t.power));
        if (t.alpha != 0) v *= std::exp(to_double(t.alpha) * x);
        if (t.trig == TrigKind::Sin)
            v *= std::sin(to_double(t.beta) * x);
        else if (t.trig == TrigKind::Cos)
            v *= std::cos(to_double(t.beta) * x);
        sum += v;
    }
    return sum;
}

/// Plain-text form accepted back by `parse_forcing`, e.g.
/// "1/6*x^2*e^(2x)*sin(3x) + 1/18*x*e^(2x)*cos(3x)".
inline std::string to_text(const ForcingFunction& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : f.terms()) {
        bool neg = t.coef < 0;
        Rational mag = neg ? Rational(-t.coef) : t.coef;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;

        std::vector<std::string> factors;
        if (t.power == 1)
            factors.emplace_back("x");
        else if (t.power > 1)
            factors.push_back("x^" + std::to_string(t.power));
        if (t.alpha != 0) factors.push_back("e^(" + to_string(t.alpha) + "x" + ")");
        if (t.trig != TrigKind::One)
            factors.push_back(std::string(trig_name(t.trig)) + "(" + to_string(t.beta) + "x" + ")");

        if (factors.empty()) {
            os << to_string(mag);
            continue;
        }
        if (mag != 1) os << to_string(mag) << "*";
        for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const ForcingFunction& f) { return os << to_text(f); }

} // namespace mdo

#endif
