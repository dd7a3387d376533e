// Walks through a resonant solve by hand: the forcing rate 2 + 3i is a
// simple root of k^2 - 4k + 13, so the solution space needs an extra factor
// of x and phi(D_B) is singular.

#include <iostream>

#include "mdo/mdo.hpp"

int main() {
    using namespace mdo;

    const RatPoly phi = parse_operator("D^2 - 4D + 13");
    const ForcingFunction f = parse_forcing("2x e^(2x) cos(3x)");

    std::cout << "phi(D) = " << phi.str() << "\n";
    std::cout << "f(x)   = " << f << "\n\n";

    for (const Mode& mode : split_modes(f)) {
        const unsigned k = root_multiplicity(phi, GaussianRational(mode.alpha, mode.beta));
        std::cout << "alpha + beta i = " << GaussianRational(mode.alpha, mode.beta) << " is a " << k
                  << "-fold root\n\n";

        // Escalate by hand to show why the k = 0 space is too small.
        for (unsigned trial = 0; trial <= k; ++trial) {
            Basis b = build_basis(mode.alpha, mode.beta, mode.max_degree, trial);
            RatMatrix a = operator_polynomial(phi, build_matrix_operator(b)).entries;
            RatVector rhs = coordinates(mode.terms, b);
            std::cout << "dim B = " << b.size() << ", rank phi(D_B) = " << rank(a);
            try {
                solve(a, rhs);
                std::cout << ", solvable\n";
            } catch (const unsolvable_error&) {
                std::cout << ", no solution in this span\n";
            }
        }
        std::cout << "\n";
    }

    const Solution sol = particular_solution(phi, f);
    std::cout << render_work(sol) << "\n";
    std::cout << "y_p = " << render(sol, Format::Text) << "\n";
    std::cout << "      " << render(sol, Format::Latex) << "\n";
    std::cout << "phi(D) y_p - f = " << sol.residual << "\n";
    return 0;
}
