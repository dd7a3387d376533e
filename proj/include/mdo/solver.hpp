#ifndef MDO_SOLVER_HPP
#define MDO_SOLVER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "forcing.hpp"
#include "opspace.hpp"
#include "pinv.hpp"
#include "ratpoly.hpp"

namespace mdo {

enum class Method {
    MatrixMultiplicity, // basis size from the root multiplicity of alpha + beta i
    MatrixAdaptive,     // grow the basis by x until the system becomes solvable
    Maclaurin           // power series of 1/phi(D), polynomial right-hand sides only
};

inline const char* method_name(Method m) {
    switch (m) {
    case Method::MatrixAdaptive: return "adaptive";
    case Method::Maclaurin: return "maclaurin";
    default: return "matrix";
    }
}

/// Per-mode result of a matrix solve, including the intermediate matrices
/// for the work log.
struct ModeSolution {
    unsigned k = 0; // extra powers of x
    Basis basis;
    RatVector coords;
    RatVector rhs;
    RatMatrix derivative;  // D_B
    RatMatrix operator_matrix; // phi(D_B)
    RatMatrix inverse;     // inverse or pseudoinverse of phi(D_B)
    InverseKind kind = InverseKind::Inverse;
};

struct Solution {
    ForcingFunction expression;
    std::vector<ModeSolution> per_mode;
    ForcingFunction residual; // phi(D) expression - f; zero on success
    Method method = Method::MatrixMultiplicity;
    std::vector<Rational> maclaurin; // series coefficients, Maclaurin method only
};

struct SolveOptions {
    /// Throw verification_error on a nonzero residual. The residual is
    /// always computed.
    bool verify = true;
};

/// sum_j a_j y^(j) - f, canonicalized.
inline ForcingFunction verify_particular(const RatPoly& phi, const ForcingFunction& y, const ForcingFunction& f) {
    ForcingFunction acc = -f;
    ForcingFunction dj = y;
    const auto& a = phi.coefficients();
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] != 0) acc = acc + a[j] * dj;
        if (j + 1 < a.size()) dj = differentiate(dj);
    }
    return acc;
}

namespace detail {

inline ModeSolution solve_in_basis(const RatPoly& phi, const Mode& mode, unsigned k) {
    ModeSolution out;
    out.k = k;
    out.basis = build_basis(mode.alpha, mode.beta, mode.max_degree, k);
    MatrixOperator d = build_matrix_operator(out.basis);
    MatrixOperator p = operator_polynomial(phi, d);
    out.rhs = coordinates(mode.terms, out.basis);
    LinearSolution ls = solve_detailed(p.entries, out.rhs);
    out.coords = std::move(ls.x);
    out.inverse = std::move(ls.inverse);
    out.kind = ls.kind;
    out.derivative = std::move(d.entries);
    out.operator_matrix = std::move(p.entries);
    return out;
}

} // namespace detail

/// Solves one mode in the basis x^k e^(alpha x) Q_m(x) {sin, cos}, with k
/// the multiplicity of alpha + beta i as a root of phi.
inline ModeSolution solve_mode_multiplicity(const RatPoly& phi, const Mode& mode) {
    if (mode.terms.is_zero()) throw error("empty mode");
    const unsigned k = root_multiplicity(phi, GaussianRational(mode.alpha, mode.beta));
    ModeSolution sol;
    try {
        sol = detail::solve_in_basis(phi, mode, k);
    } catch (const unsolvable_error&) {
        throw error("internal: multiplicity basis produced an unsolvable system");
    }
    if (k > 0) {
        // phi(D_B) = [[0, 0], [R, 0]] with d*k zero rows on top, d*k zero columns on the right
        const std::size_t dk = (mode.beta == 0 ? 1u : 2u) * k;
        const RatMatrix& a = sol.operator_matrix;
        for (std::size_t i = 0; i < dk; ++i)
            if (!a.row_is_zero(i) || !a.col_is_zero(a.cols() - 1 - i))
                throw error("internal: operator matrix is not in shell form");
    }
    return sol;
}

/// Starts from k = 0 and multiplies the span by x while the system is
/// unsolvable. Default limit is deg(phi) escalations.
inline ModeSolution solve_mode_adaptive(const RatPoly& phi, const Mode& mode,
                                        std::optional<unsigned> max_escalations = std::nullopt) {
    if (mode.terms.is_zero()) throw error("empty mode");
    const unsigned limit = max_escalations.value_or(static_cast<unsigned>(std::max(phi.degree(), 0)));
    for (unsigned k = 0; k <= limit; ++k) {
        try {
            return detail::solve_in_basis(phi, mode, k);
        } catch (const unsolvable_error&) {
        }
    }
    throw solve_error("escalation limit exceeded");
}

/// Coefficients c_0..c_{count-1} of 1/phi(D) = c_0 + c_1 D + ..., from
/// c_0 = 1/a_0 and c_k = -(a_1 c_{k-1} + ... + a_n c_{k-n}) / a_0.
inline std::vector<Rational> maclaurin_coefficients(const RatPoly& phi, std::size_t count) {
    if (phi.coeff(0) == 0) throw solve_error("maclaurin expansion needs a nonzero constant term");
    const Rational a0 = phi.coeff(0);
    const std::size_t n = static_cast<std::size_t>(phi.degree());
    std::vector<Rational> c;
    c.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        if (k == 0) {
            c.push_back(1 / a0);
            continue;
        }
        Rational s;
        for (std::size_t i = 1; i <= n && i <= k; ++i) s -= phi.coeff(i) * c[k - i];
        c.push_back(s / a0);
    }
    return c;
}

inline ForcingFunction antiderivative_polynomial(const ForcingFunction& p) {
    std::vector<ForcingTerm> out;
    for (const auto& t : p.terms()) {
        if (t.alpha != 0 || t.beta != 0) throw error("antiderivative_polynomial: not a polynomial");
        out.push_back({t.coef / static_cast<long long>(t.power + 1), t.power + 1, t.alpha, t.beta, t.trig});
    }
    return canonicalize(std::move(out));
}

/// y = sum_j c_j D^j P. When a_0 = ... = a_{t-1} = 0 the series is taken for
/// phi / D^t and the result is integrated t times with zero constants.
inline ForcingFunction solve_poly_maclaurin(const RatPoly& phi, const ForcingFunction& p,
                                            std::vector<Rational>* coefficients_out = nullptr) {
    if (phi.is_zero()) throw zero_operator_error();
    if (!p.is_polynomial()) throw solve_error("maclaurin method requires a polynomial right-hand side");
    const std::size_t t = phi.lowest_power();
    const RatPoly reduced = phi.shifted_down(t);
    auto c = maclaurin_coefficients(reduced, p.max_power() + 1);
    ForcingFunction y;
    ForcingFunction dj = p;
    for (std::size_t j = 0; j < c.size() && !dj.is_zero(); ++j) {
        y = y + c[j] * dj;
        dj = differentiate(dj);
    }
    for (std::size_t i = 0; i < t; ++i) y = antiderivative_polynomial(y);
    if (coefficients_out) *coefficients_out = std::move(c);
    return y;
}

/// Particular solution of phi(D) y = f, summed over the (alpha, beta) modes
/// of f and checked by substitution.
inline Solution particular_solution(const RatPoly& phi, const ForcingFunction& f,
                                    Method method = Method::MatrixMultiplicity, SolveOptions opts = {}) {
    if (phi.is_zero()) throw zero_operator_error();
    Solution sol;
    sol.method = method;
    if (method == Method::Maclaurin) {
        sol.expression = solve_poly_maclaurin(phi, f, &sol.maclaurin);
    } else {
        for (const Mode& mode : split_modes(f)) {
            ModeSolution ms = method == Method::MatrixAdaptive ? solve_mode_adaptive(phi, mode)
                                                               : solve_mode_multiplicity(phi, mode);
            sol.expression = sol.expression + from_coordinates(ms.coords, ms.basis);
            sol.per_mode.push_back(std::move(ms));
        }
    }
    sol.residual = verify_particular(phi, sol.expression, f);
    if (opts.verify && !sol.residual.is_zero())
        throw verification_error("nonzero residual: " + to_text(sol.residual));
    return sol;
}

/// An antiderivative of f (the constant of integration is left to the caller).
inline ForcingFunction integrate(const ForcingFunction& f) {
    return particular_solution(RatPoly::monomial(1), f).expression;
}

} // namespace mdo

#endif
