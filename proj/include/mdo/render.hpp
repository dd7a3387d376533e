#ifndef MDO_RENDER_HPP
#define MDO_RENDER_HPP

#include <sstream>
#include <string>

#include <json.hpp>

#include "forcing.hpp"
#include "solver.hpp"

namespace mdo {

enum class Format { Text, Latex, Json };

namespace detail {

inline std::string latex_rational(const Rational& r) {
    if (is_integer(r)) return to_string(r);
    std::string s = r < 0 ? "-" : "";
    BigInt num = numerator_of(r);
    if (num < 0) num = -num;
    return s + "\\frac{" + num.str() + "}{" + denominator_of(r).str() + "}";
}

inline std::string latex_rate(const Rational& r) {
    if (r == 1) return "x";
    if (r == -1) return "-x";
    return latex_rational(r) + "x";
}

} // namespace detail

/// Compact LaTeX, e.g. "\frac{1}{24}x^{2}e^{2x}".
inline std::string to_latex(const ForcingFunction& f) {
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

        std::string factors;
        if (t.power == 1)
            factors += "x";
        else if (t.power > 1)
            factors += "x^{" + std::to_string(t.power) + "}";
        if (t.alpha != 0) factors += "e^{" + detail::latex_rate(t.alpha) + "}";
        if (t.trig != TrigKind::One)
            factors += std::string("\\") + trig_name(t.trig) + "{" + detail::latex_rate(t.beta) + "}";

        if (factors.empty())
            os << detail::latex_rational(mag);
        else
            os << (mag == 1 ? "" : detail::latex_rational(mag)) << factors;
    }
    return os.str();
}

inline nlohmann::ordered_json to_json(const Solution& s) {
    nlohmann::ordered_json j;
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& t : s.expression.terms()) {
        nlohmann::ordered_json term;
        term["coef"] = to_string(t.coef);
        term["power"] = t.power;
        term["alpha"] = to_string(t.alpha);
        term["beta"] = to_string(t.beta);
        term["trig"] = trig_name(t.trig);
        j["terms"].push_back(std::move(term));
    }
    j["residual_zero"] = s.residual.is_zero();
    j["method"] = method_name(s.method);
    return j;
}

inline std::string render(const Solution& s, Format format) {
    switch (format) {
    case Format::Latex: return to_latex(s.expression);
    case Format::Json: return to_json(s).dump();
    default: return to_text(s.expression);
    }
}

/// Intermediate matrices of each mode solve, in the order a hand
/// calculation would show them.
inline std::string render_work(const Solution& s) {
    std::ostringstream os;
    if (s.method == Method::Maclaurin) {
        os << "Maclaurin coefficients of 1/phi(D):";
        for (const auto& c : s.maclaurin) os << " " << to_string(c);
        os << "\n";
        return os.str();
    }
    for (std::size_t i = 0; i < s.per_mode.size(); ++i) {
        const ModeSolution& m = s.per_mode[i];
        os << "mode " << i + 1 << " (k = " << m.k << ")\nB = {";
        for (std::size_t j = 0; j < m.basis.size(); ++j)
            os << (j ? ", " : "") << to_text(m.basis[j].as_function());
        os << "}\nD_B =\n" << m.derivative;
        os << "phi(D_B) =\n" << m.operator_matrix;
        os << inverse_kind_name(m.kind) << " =\n" << m.inverse;
        os << "f_B = " << m.rhs << "\ny_B = " << m.coords << "\n";
    }
    return os.str();
}

} // namespace mdo

#endif
