#include <gtest/gtest.h>

#include "mdo/opspace.hpp"
#include "mdo/pinv.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace mdo;
using mdo::testing::Gen;

namespace {

RatMatrix r(std::int64_t n, std::int64_t d) {
    RatMatrix m(1, 1);
    m(0, 0) = make_rational(n, d);
    return m;
}

RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    RatMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

Rational q(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

// phi(D_B) for (D^2+1)^2 on the sin/cos basis of degree 2: rank 2 shell.
RatMatrix double_resonance() {
    return RatMatrix{{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0},
                     {0, 0, 0, 0, 0, 0}, {-8, 0, 0, 0, 0, 0}, {0, -8, 0, 0, 0, 0}};
}

// phi(D_B) for D^2 - 4D + 13 on the e^{2x} sin/cos 3x basis of degree 2.
RatMatrix simple_resonance() {
    return RatMatrix{{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, -12, 0, 0, 0, 0},
                     {12, 0, 0, 0, 0, 0}, {2, 0, 0, -6, 0, 0}, {0, 2, 6, 0, 0, 0}};
}

} // namespace

TEST(Rank, Examples) {
    EXPECT_EQ(rank(RatMatrix::identity(3)), 3u);
    EXPECT_EQ(rank(RatMatrix(3, 4)), 0u);
    EXPECT_EQ(rank(double_resonance()), 2u);
    EXPECT_EQ(rank(simple_resonance()), 4u);
    EXPECT_EQ(rank(RatMatrix{{1, 2}, {2, 4}}), 1u);
}

TEST(Rank, DerivedOperatorMatchesLiteral) {
    auto d = build_matrix_operator(build_basis(Rational(0), Rational(1), 0, 2));
    EXPECT_EQ(operator_polynomial(RatPoly{1, 0, 2, 0, 1}, d).entries, double_resonance());
    auto d7 = build_matrix_operator(build_basis(Rational(2), Rational(3), 1, 1));
    EXPECT_EQ(operator_polynomial(RatPoly{13, -4, 1}, d7).entries, simple_resonance());
}

TEST(Invert, Examples) {
    RatMatrix a{{6, 0}, {5, -4}};
    EXPECT_EQ(invert(a), from_rows({{q(1, 6), q(0)}, {q(5, 24), q(-1, 4)}}));
    RatMatrix b{{6, 0}, {7, 6}};
    EXPECT_EQ(invert(b), from_rows({{q(1, 6), q(0)}, {q(-7, 36), q(1, 6)}}));

    RatMatrix d{{2, -3, 0, 0}, {3, 2, 0, 0}, {1, 0, 2, -3}, {0, 1, 3, 2}};
    EXPECT_EQ(invert(d), from_rows({{q(2, 13), q(3, 13), q(0), q(0)},
                                    {q(-3, 13), q(2, 13), q(0), q(0)},
                                    {q(5, 169), q(-12, 169), q(2, 13), q(3, 13)},
                                    {q(12, 169), q(5, 169), q(-3, 13), q(2, 13)}}));
    EXPECT_EQ(invert(RatMatrix::identity(5)), RatMatrix::identity(5));
    EXPECT_EQ(invert(RatMatrix{{2}}), r(1, 2));
}

TEST(Invert, Errors) {
    EXPECT_THROW(invert(RatMatrix{{1, 2}, {2, 4}}), singular_matrix_error);
    EXPECT_THROW(invert(RatMatrix(2, 3)), dimension_error);
}

TEST(DetectShell, Examples) {
    auto s1 = detect_shell(RatMatrix{{0, 0, 0}, {0, 0, 0}, {2, 0, 0}});
    ASSERT_TRUE(s1);
    EXPECT_EQ(s1->r, 1u);
    EXPECT_EQ(s1->n, 3u);
    auto s2 = detect_shell(simple_resonance());
    ASSERT_TRUE(s2);
    EXPECT_EQ(s2->r, 4u);
    auto s3 = detect_shell(double_resonance());
    ASSERT_TRUE(s3);
    EXPECT_EQ(s3->r, 2u);
    EXPECT_FALSE(detect_shell(RatMatrix::identity(3)));
    EXPECT_FALSE(detect_shell(RatMatrix(3, 3)));
    EXPECT_FALSE(detect_shell(RatMatrix{{0, 0}, {1, 1}}));   // last column not zero
    EXPECT_FALSE(detect_shell(RatMatrix{{1, 0}, {1, 0}}));   // first row not zero
    EXPECT_FALSE(detect_shell(RatMatrix(2, 3)));
}

TEST(PinvShell, DisplayedPseudoinverses) {
    RatMatrix a{{0, 0, 0}, {0, 0, 0}, {2, 0, 0}};
    EXPECT_EQ(pinv_shell(a, *detect_shell(a)), from_rows({{q(0), q(0), q(1, 2)}, {q(0), q(0), q(0)}, {q(0), q(0), q(0)}}));

    RatMatrix b = double_resonance();
    RatMatrix bp(6, 6);
    bp(0, 4) = q(-1, 8);
    bp(1, 5) = q(-1, 8);
    EXPECT_EQ(pinv_shell(b, *detect_shell(b)), bp);

    RatMatrix c = simple_resonance();
    RatMatrix cp(6, 6);
    cp(0, 3) = q(1, 12);
    cp(1, 2) = q(-1, 12);
    cp(2, 2) = q(1, 36);
    cp(2, 5) = q(1, 6);
    cp(3, 3) = q(1, 36);
    cp(3, 4) = q(-1, 6);
    EXPECT_EQ(pinv_shell(c, *detect_shell(c)), cp);
}

TEST(PinvGeneral, Examples) {
    EXPECT_EQ(pinv_general(RatMatrix(2, 3)), RatMatrix(3, 2));
    RatMatrix a{{2, 1}, {1, 1}};
    EXPECT_EQ(pinv_general(a), invert(a));
    RatMatrix b = double_resonance();
    EXPECT_EQ(pinv_general(b), pinv_shell(b, *detect_shell(b)));
    // rank-one rectangular: A+ = A^T / ||A||_F^2
    RatMatrix c{{1, 2, 2}};
    EXPECT_EQ(pinv_general(c), from_rows({{q(1, 9)}, {q(2, 9)}, {q(2, 9)}}));
}

TEST(PenroseCheck, Examples) {
    EXPECT_TRUE(penrose_check(RatMatrix::identity(3), RatMatrix::identity(3)).all());
    EXPECT_THROW(penrose_check(RatMatrix(2, 3), RatMatrix(2, 3)), dimension_error);
}

TEST(PenroseCheck, BlockInverseWithNonzeroCornerIsOnlyGeneralized) {
    // [[P, Q], [R, S]] with every block [1]; the block formula gives
    // [[0, R^-1], [0, 0]] which is a {1,2}-inverse but not Moore-Penrose.
    RatMatrix a{{1, 1}, {1, 1}};
    RatMatrix x = mdo::testing::block_pseudoinverse(a, 1);
    EXPECT_EQ(x, (RatMatrix{{0, 1}, {0, 0}}));
    auto p = penrose_check(a, x);
    EXPECT_TRUE(p.axa);
    EXPECT_TRUE(p.xax);
    EXPECT_FALSE(p.ax_symmetric);
    EXPECT_FALSE(p.xa_symmetric);
    EXPECT_TRUE(penrose_check(a, pinv_general(a)).all());
}

TEST(Solve, Examples) {
    RatVector b{q(0), q(0), q(0), q(2), q(0), q(0)};
    auto sol = solve_detailed(simple_resonance(), b);
    EXPECT_EQ(sol.x, (RatVector{q(1, 6), q(0), q(0), q(1, 18), q(0), q(0)}));
    EXPECT_EQ(sol.kind, InverseKind::ShellPseudoinverse);

    EXPECT_THROW(solve(RatMatrix{{0, 0}, {1, 0}}, RatVector{q(1), q(0)}), unsolvable_error);
    RatVector v{q(3), q(-1, 2), q(7)};
    EXPECT_EQ(solve(RatMatrix::identity(3), v), v);
    EXPECT_EQ(solve_detailed(RatMatrix::identity(3), v).kind, InverseKind::Inverse);
    EXPECT_THROW(solve(RatMatrix::identity(3), RatVector(2)), dimension_error);
}

TEST(Solve, NonShellSingularUsesGeneralInverse) {
    RatMatrix a{{1, 1}, {1, 1}};
    auto sol = solve_detailed(a, RatVector{q(2), q(2)});
    EXPECT_EQ(sol.kind, InverseKind::GeneralPseudoinverse);
    EXPECT_EQ(sol.x, (RatVector{q(1), q(1)}));
    EXPECT_THROW(solve(a, RatVector{q(1), q(2)}), unsolvable_error);
}

TEST(LinalgProperties, GeneralPseudoinverseSatisfiesPenrose) {
    Gen g(101);
    for (int i = 0; i < 120; ++i) {
        std::size_t m = static_cast<std::size_t>(g.uniform(1, 6)), n = static_cast<std::size_t>(g.uniform(1, 6));
        RatMatrix a = g.coin() ? g.matrix(m, n) : g.low_rank(m, n, static_cast<std::size_t>(g.uniform(1, 3)));
        RatMatrix x = pinv_general(a);
        ASSERT_EQ(x.rows(), n);
        ASSERT_EQ(x.cols(), m);
        EXPECT_TRUE(penrose_check(a, x).all());
    }
}

TEST(LinalgProperties, ShellFormulaAgreesWithGeneralAndOracle) {
    Gen g(111);
    for (int i = 0; i < 80; ++i) {
        std::size_t n = static_cast<std::size_t>(g.uniform(2, 7));
        std::size_t rk = static_cast<std::size_t>(g.uniform(1, static_cast<int>(n) - 1));
        RatMatrix a = g.shell(n, rk);
        auto s = detect_shell(a);
        ASSERT_TRUE(s);
        EXPECT_EQ(s->r, rk);
        RatMatrix x = pinv_shell(a, *s);
        EXPECT_EQ(x, mdo::testing::block_pseudoinverse(a, rk));
        EXPECT_EQ(x, pinv_general(a));
        EXPECT_TRUE(penrose_check(a, x).all());
    }
}

TEST(LinalgProperties, InverseTimesMatrixIsIdentity) {
    Gen g(121);
    for (int i = 0; i < 80; ++i) {
        std::size_t n = static_cast<std::size_t>(g.uniform(1, 6));
        RatMatrix a = g.regular(n);
        RatMatrix x = invert(a);
        EXPECT_EQ(x * a, RatMatrix::identity(n));
        EXPECT_EQ(a * x, RatMatrix::identity(n));
    }
}

TEST(LinalgProperties, SolutionIsMinimumNormWhenSingular) {
    // x = A+ b lies in the row space, so it is orthogonal to null(A).
    Gen g(131);
    int singular = 0;
    for (int i = 0; i < 150; ++i) {
        std::size_t n = static_cast<std::size_t>(g.uniform(2, 6));
        RatMatrix a = g.coin() ? g.shell(n, static_cast<std::size_t>(g.uniform(1, static_cast<int>(n) - 1)))
                               : g.low_rank(n, n, static_cast<std::size_t>(g.uniform(1, static_cast<int>(n) - 1)));
        RatVector x0(n);
        for (auto& v : x0) v = g.rational(-4, 4, 3);
        RatVector b = a * x0;   // consistent by construction
        auto sol = solve_detailed(a, b);
        EXPECT_EQ(a * sol.x, b);
        if (sol.kind == InverseKind::Inverse) continue;
        ++singular;
        for (const auto& z : null_space(a)) {
            EXPECT_EQ(a * z, RatVector(n));
            EXPECT_EQ(dot(sol.x, z), 0);
        }
    }
    EXPECT_GT(singular, 100);
}

TEST(LinalgProperties, ShellRankMatchesRegularBlock) {
    // rank(phi(D_B)) = dim B - d k for the resonant operator.
    Gen g(141);
    for (int i = 0; i < 40; ++i) {
        auto key = mdo::testing::random_mode_key(g);
        RatPoly factor = mdo::testing::characteristic_factor(key);
        unsigned k = static_cast<unsigned>(g.uniform(1, 2));
        RatPoly phi = factor.pow(k) * RatPoly::constant(g.nonzero_rational(-3, 3, 2));
        unsigned m = static_cast<unsigned>(g.uniform(0, 2));
        Basis b = build_basis(key.first, key.second, m, k);
        auto a = operator_polynomial(phi, build_matrix_operator(b)).entries;
        std::size_t dk = (key.second == 0 ? 1u : 2u) * k;
        EXPECT_EQ(rank(a), b.size() - dk);
        auto s = detect_shell(a);
        ASSERT_TRUE(s);
        EXPECT_EQ(s->r, b.size() - dk);
    }
}
