#ifndef MDO_PINV_HPP
#define MDO_PINV_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "error.hpp"
#include "matrix.hpp"

namespace mdo {

/// An n x n matrix of the form [[0, 0], [R, 0]]: the first n - r rows and
/// the last n - r columns are zero and the bottom-left r x r block R is
/// regular.
struct ShellShape {
    std::size_t r = 0;
    std::size_t n = 0;

    friend bool operator==(const ShellShape&, const ShellShape&) = default;
};

/// Recognizes the shell pattern. Regular matrices and the zero matrix are
/// not shells.
inline std::optional<ShellShape> detect_shell(const RatMatrix& a) {
    if (!a.is_square()) return std::nullopt;
    const std::size_t n = a.rows();
    const std::size_t r = rank(a);
    if (r == 0 || r == n) return std::nullopt;
    for (std::size_t i = 0; i < n - r; ++i)
        if (!a.row_is_zero(i)) return std::nullopt;
    for (std::size_t j = r; j < n; ++j)
        if (!a.col_is_zero(j)) return std::nullopt;
    // with the zero rows/columns in place, rank(R) == rank(A) == r
    return ShellShape{r, n};
}

/// Moore-Penrose inverse of a shell matrix: [[0, R^-1], [0, 0]].
inline RatMatrix pinv_shell(const RatMatrix& a, const ShellShape& s) {
    const std::size_t k = s.n - s.r;
    RatMatrix x(s.n, s.n);
    x.set_block(0, k, invert(a.block(k, 0, s.r, s.r)));
    return x;
}

/// Moore-Penrose inverse of any matrix through the full-rank factorization
/// A = C F (C = pivot columns of A, F = nonzero rows of rref(A)):
///   A+ = F^T (F F^T)^-1 (C^T C)^-1 C^T.
inline RatMatrix pinv_general(const RatMatrix& a) {
    RowEchelon e = rref(a);
    const std::size_t r = e.pivots.size();
    if (r == 0) return RatMatrix(a.cols(), a.rows());
    RatMatrix c = a.select_columns(e.pivots);
    RatMatrix f = e.reduced.block(0, 0, r, a.cols());
    RatMatrix ft = f.transpose();
    RatMatrix ct = c.transpose();
    return ft * invert(f * ft) * invert(ct * c) * ct;
}

struct PenroseResult {
    bool axa = false;       // A X A = A
    bool xax = false;       // X A X = X
    bool ax_symmetric = false;
    bool xa_symmetric = false;

    bool all() const { return axa && xax && ax_symmetric && xa_symmetric; }
};

inline PenroseResult penrose_check(const RatMatrix& a, const RatMatrix& x) {
    if (x.rows() != a.cols() || x.cols() != a.rows())
        throw dimension_error("pseudoinverse candidate has the wrong shape");
    RatMatrix ax = a * x;
    RatMatrix xa = x * a;
    return {ax * a == a, xa * x == x, ax.transpose() == ax, xa.transpose() == xa};
}

enum class InverseKind { Inverse, ShellPseudoinverse, GeneralPseudoinverse };

inline const char* inverse_kind_name(InverseKind k) {
    switch (k) {
    case InverseKind::Inverse: return "inverse";
    case InverseKind::ShellPseudoinverse: return "Moore-Penrose pseudoinverse (shell block form)";
    default: return "Moore-Penrose pseudoinverse (rank factorization)";
    }
}

struct LinearSolution {
    RatVector x;
    RatMatrix inverse;   // A^-1 or A^+
    InverseKind kind = InverseKind::Inverse;
};

/// Solves A x = b. Tries the exact inverse, then the shell pseudoinverse,
/// then the general one; x = A+ b is accepted only when A A+ b == b.
inline LinearSolution solve_detailed(const RatMatrix& a, const RatVector& b) {
    if (b.size() != a.rows()) throw dimension_error("right-hand side length mismatch");
    LinearSolution out;
    if (a.is_square() && rank(a) == a.rows()) {
        out.inverse = invert(a);
        out.kind = InverseKind::Inverse;
        out.x = out.inverse * b;
        return out;
    }
    if (auto shell = detect_shell(a)) {
        out.inverse = pinv_shell(a, *shell);
        out.kind = InverseKind::ShellPseudoinverse;
    } else {
        out.inverse = pinv_general(a);
        out.kind = InverseKind::GeneralPseudoinverse;
    }
    out.x = out.inverse * b;
    if (a * out.x != b) throw unsolvable_error();
    return out;
}

inline RatVector solve(const RatMatrix& a, const RatVector& b) { return solve_detailed(a, b).x; }

} // namespace mdo

#endif
