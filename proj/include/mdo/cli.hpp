#ifndef MDO_CLI_HPP
#define MDO_CLI_HPP

#include <algorithm>
#include <future>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "parse.hpp"
#include "render.hpp"
#include "solver.hpp"

namespace mdo {

enum ExitCode : int { exit_ok = 0, exit_parse = 1, exit_solve = 2, exit_verify = 3 };

struct RunConfig {
    std::string operator_text;
    std::string rhs_text;
    Method method = Method::MatrixMultiplicity;
    Format format = Format::Text;
    bool show_work = false;
    bool verify = true;
    bool integrate_mode = false; // operator is forced to D
};

inline std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

/// Splits "LHS = RHS" into its two sides.
inline std::pair<std::string, std::string> split_ode(std::string_view text) {
    auto eq = text.find('=');
    if (eq == std::string_view::npos) throw parse_error("expected '='", text.size());
    if (text.find('=', eq + 1) != std::string_view::npos) throw parse_error("more than one '='", text.rfind('='));
    return {trim(text.substr(0, eq)), trim(text.substr(eq + 1))};
}

/// Solves one problem. The solution goes to `out`, diagnostics to `err`.
/// Returns 0 on success, 1 on a parse error, 2 on a solve error and 3
/// when substitute-back verification fails.
inline int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    RatPoly phi;
    ForcingFunction rhs;
    try {
        phi = config.integrate_mode ? RatPoly::monomial(1) : parse_operator(config.operator_text);
    } catch (const parse_error& e) {
        err << "error: operator: " << e.what() << "\n";
        return exit_parse;
    } catch (const zero_operator_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_solve;
    }
    try {
        rhs = parse_forcing(config.rhs_text);
    } catch (const error& e) {
        err << "error: right-hand side: " << e.what() << "\n";
        return exit_parse;
    }
    if (config.method == Method::Maclaurin && !rhs.is_polynomial()) {
        err << "error: the maclaurin method needs a polynomial right-hand side\n";
        return exit_solve;
    }

    Solution sol;
    try {
        sol = particular_solution(phi, rhs, config.method, SolveOptions{config.verify});
    } catch (const verification_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_verify;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return exit_solve;
    }

    if (config.show_work && config.format != Format::Json) out << render_work(sol);
    out << render(sol, config.format);
    if (config.integrate_mode && config.format != Format::Json) out << " + C";
    out << "\n";
    if (!config.verify && !sol.residual.is_zero()) err << "warning: nonzero residual " << to_text(sol.residual) << "\n";
    return exit_ok;
}

/// One problem per line, "op ; rhs" (just "rhs" in integrate mode). Blank
/// lines and lines starting with '#' are skipped. Lines are solved
/// concurrently; output keeps input order. Returns the largest exit code.
inline int run_batch(std::istream& in, const RunConfig& base, std::ostream& out, std::ostream& err) {
    struct LineResult {
        int code = exit_ok;
        std::string out, err;
    };
    std::vector<std::future<LineResult>> jobs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        RunConfig cfg = base;
        if (!base.integrate_mode) {
            auto semi = t.find(';');
            if (semi == std::string::npos) {
                std::promise<LineResult> p;
                p.set_value({exit_parse, "", "error: line " + std::to_string(lineno) + ": expected 'op ; rhs'\n"});
                jobs.push_back(p.get_future());
                continue;
            }
            cfg.operator_text = trim(std::string_view(t).substr(0, semi));
            cfg.rhs_text = trim(std::string_view(t).substr(semi + 1));
        } else {
            cfg.rhs_text = t;
        }
        jobs.push_back(std::async(std::launch::async, [cfg, lineno] {
            std::ostringstream o, e;
            LineResult r;
            r.code = run(cfg, o, e);
            r.out = o.str();
            r.err = e.str();
            if (!r.err.empty()) r.err = "line " + std::to_string(lineno) + ": " + r.err;
            return r;
        }));
    }
    int worst = exit_ok;
    for (auto& j : jobs) {
        LineResult r = j.get();
        out << r.out;
        err << r.err;
        worst = std::max(worst, r.code);
    }
    return worst;
}

} // namespace mdo

#endif
