// mdo-solve: particular solutions of constant-coefficient linear ODEs.
//
//   mdo-solve --op "D^2 - 4D + 13" --rhs "2*x*e^(2x)*cos(3x)"
//   mdo-solve --ode "y'' + 3y' - 4y = x*e^(2x)" --format latex --show-work
//   mdo-solve --integrate --rhs "cos(x)"
//   mdo-solve --batch problems.txt

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "mdo/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Particular solutions of linear ODEs with constant coefficients via matrix differential operators"};

    std::string op, rhs, ode, batch;
    mdo::RunConfig config;
    bool no_verify = false;

    auto* op_opt = app.add_option("--op", op, "operator polynomial in D, or a y-form left-hand side");
    auto* rhs_opt = app.add_option("--rhs", rhs, "right-hand side f(x)");
    auto* ode_opt = app.add_option("--ode", ode, "whole equation \"LHS = RHS\"");
    auto* batch_opt = app.add_option("--batch", batch, "file with one 'op ; rhs' problem per line ('-' for stdin)");
    ode_opt->excludes(op_opt)->excludes(rhs_opt)->excludes(batch_opt);

    const std::map<std::string, mdo::Method> methods{{"matrix", mdo::Method::MatrixMultiplicity},
                                                     {"adaptive", mdo::Method::MatrixAdaptive},
                                                     {"maclaurin", mdo::Method::Maclaurin}};
    const std::map<std::string, mdo::Format> formats{
        {"text", mdo::Format::Text}, {"latex", mdo::Format::Latex}, {"json", mdo::Format::Json}};
    app.add_option("--method", config.method, "matrix | adaptive | maclaurin")
        ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
    app.add_option("--format", config.format, "text | latex | json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_flag("--show-work", config.show_work, "print D_B, phi(D_B), the (pseudo)inverse and coordinates");
    app.add_flag("--no-verify", no_verify, "do not fail on a nonzero substitute-back residual");
    auto* integrate_opt = app.add_flag("--integrate", config.integrate_mode, "antiderivative of --rhs (operator D)");
    integrate_opt->excludes(op_opt)->excludes(ode_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : mdo::exit_parse;
    }
    config.verify = !no_verify;

    if (!batch.empty()) {
        if (batch == "-") return mdo::run_batch(std::cin, config, std::cout, std::cerr);
        std::ifstream in(batch);
        if (!in) {
            std::cerr << "error: cannot open " << batch << "\n";
            return mdo::exit_parse;
        }
        return mdo::run_batch(in, config, std::cout, std::cerr);
    }

    if (!ode.empty()) {
        try {
            std::tie(op, rhs) = mdo::split_ode(ode);
        } catch (const mdo::parse_error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return mdo::exit_parse;
        }
    }
    if (rhs.empty() || (op.empty() && !config.integrate_mode)) {
        std::cerr << "error: need --op and --rhs, --ode, --integrate --rhs, or --batch\n";
        return mdo::exit_parse;
    }
    config.operator_text = op;
    config.rhs_text = rhs;
    return mdo::run(config, std::cout, std::cerr);
}
