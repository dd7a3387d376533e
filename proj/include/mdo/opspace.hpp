#ifndef MDO_OPSPACE_HPP
#define MDO_OPSPACE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "forcing.hpp"
#include "matrix.hpp"
#include "ratpoly.hpp"

namespace mdo {

/// x^power * e^(alpha x) * trig(beta x) with unit coefficient.
struct BasisFunction {
    unsigned power = 0;
    Rational alpha;
    Rational beta;
    TrigKind trig = TrigKind::One;

    friend bool operator==(const BasisFunction&, const BasisFunction&) = default;

    ForcingFunction as_function() const { return make_function({{Rational(1), power, alpha, beta, trig}}); }
    TermKey key() const { return {power, alpha, beta, trig}; }
};

/// Ordered basis sharing one (alpha, beta): power descending, sin before cos.
class Basis {
public:
    Basis() = default;

    explicit Basis(std::vector<BasisFunction> functions) : functions_(std::move(functions)) {
        for (std::size_t i = 0; i < functions_.size(); ++i) {
            auto [it, inserted] = index_.emplace(functions_[i].key(), i);
            if (!inserted) throw error("basis functions must be distinct");
        }
    }

    const std::vector<BasisFunction>& functions() const noexcept { return functions_; }
    std::size_t size() const noexcept { return functions_.size(); }
    const BasisFunction& operator[](std::size_t i) const { return functions_[i]; }

    std::optional<std::size_t> index_of(const TermKey& k) const {
        auto it = index_.find(k);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    friend bool operator==(const Basis& a, const Basis& b) { return a.functions_ == b.functions_; }

private:
    std::vector<BasisFunction> functions_;
    std::map<TermKey, std::size_t> index_;
};

/// {x^(k+m), ..., x, 1} * e^(alpha x), or with each power split into a
/// sin/cos pair when beta > 0. Size (k+m+1) or 2(k+m+1).
inline Basis build_basis(const Rational& alpha, const Rational& beta, unsigned m, unsigned k) {
    if (beta < 0) throw error("beta must be nonnegative");
    std::vector<BasisFunction> fs;
    for (unsigned p = k + m + 1; p-- > 0;) {
        if (beta == 0) {
            fs.push_back({p, alpha, beta, TrigKind::One});
        } else {
            fs.push_back({p, alpha, beta, TrigKind::Sin});
            fs.push_back({p, alpha, beta, TrigKind::Cos});
        }
    }
    return Basis(std::move(fs));
}

/// [f]_B; throws span_error naming the first term outside span(B).
inline RatVector coordinates(const ForcingFunction& f, const Basis& basis) {
    RatVector v(basis.size());
    for (const auto& t : f.terms()) {
        auto idx = basis.index_of(key_of(t));
        if (!idx) throw span_error("term " + to_text(make_function({t})) + " is outside the basis span");
        v[*idx] = t.coef;
    }
    return v;
}

inline ForcingFunction from_coordinates(const RatVector& v, const Basis& basis) {
    if (v.size() != basis.size()) throw dimension_error("coordinate vector length mismatch");
    std::vector<ForcingTerm> terms;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& b = basis[i];
        terms.push_back({v[i], b.power, b.alpha, b.beta, b.trig});
    }
    return canonicalize(std::move(terms));
}

/// A square matrix acting on coordinates in `basis`.
struct MatrixOperator {
    Basis basis;
    RatMatrix entries;
};

/// D_B: column j holds the coordinates of the derivative of basis function j.
inline MatrixOperator build_matrix_operator(const Basis& basis) {
    const std::size_t n = basis.size();
    MatrixOperator op{basis, RatMatrix(n, n)};
    for (std::size_t j = 0; j < n; ++j) {
        RatVector col;
        try {
            col = coordinates(differentiate(basis[j].as_function()), basis);
        } catch (const span_error& e) {
            throw error(std::string("basis is not closed under differentiation: ") + e.what());
        }
        for (std::size_t i = 0; i < n; ++i) op.entries(i, j) = col[i];
    }
    return op;
}

/// phi(D_B) = a_n D_B^n + ... + a_1 D_B + a_0 I by Horner's scheme.
inline MatrixOperator operator_polynomial(const RatPoly& phi, const MatrixOperator& d) {
    const std::size_t n = d.basis.size();
    const RatMatrix id = RatMatrix::identity(n);
    RatMatrix acc(n, n);
    const auto& c = phi.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * d.entries + c[i] * id;
    return {d.basis, std::move(acc)};
}

inline RatVector apply(const MatrixOperator& m, const RatVector& v) { return m.entries * v; }

} // namespace mdo

#endif
