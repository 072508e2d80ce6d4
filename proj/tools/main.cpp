// Command-line front end: expression evaluator, REPL, equivalence checker,
// law-suite runner, equation solver, and matrix commands.
//
// Exit codes: 0 success (or equivalent / all laws pass), 1 non-equivalent or
// law failure, 2 syntax error, 3 evaluation error.

#include "calpanic/errors.hpp"
#include "calpanic/expr.hpp"
#include "calpanic/laws.hpp"
#include "calpanic/matrix.hpp"
#include "calpanic/polynomial.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#ifdef _WIN32
#include <io.h>
#define CALPANIC_ISATTY _isatty(_fileno(stdin))
#else
#include <unistd.h>
#define CALPANIC_ISATTY isatty(fileno(stdin))
#endif

namespace {

using namespace calpanic;

int run_guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const SyntaxError& err) {
        std::cerr << err.what() << "\n";
        return 2;
    } catch (const EvalError& err) {
        std::cerr << err.what() << "\n";
        return 3;
    } catch (const DomainError& err) {
        std::cerr << err.what() << "\n";
        return 3;
    }
}

MulMode mode_from_flag(const std::string& mode) {
    return mode == "paper" ? MulMode::paper_display
                           : MulMode::strict_conservation;
}

int cmd_eval(const std::string& text, bool json) {
    CalpanicNumber value = evaluate(*parse(text));
    std::cout << render(value) << "\n";
    if (json) std::cout << to_json(value) << "\n";
    return 0;
}

int cmd_repl() {
    const bool interactive = CALPANIC_ISATTY;
    if (interactive)
        std::cout << "enter expressions; :history shows the session, "
                     ":quit leaves\n";
    std::vector<std::string> history;
    std::string line;
    while (true) {
        if (interactive) std::cout << "> " << std::flush;
        if (!std::getline(std::cin, line)) break;
        std::size_t begin = line.find_first_not_of(" \t");
        if (begin == std::string::npos) continue;
        std::string trimmed = line.substr(begin);
        if (trimmed == ":quit" || trimmed == ":q") break;
        if (trimmed == ":history") {
            for (const std::string& past : history)
                std::cout << past << "\n";
            continue;
        }
        // Stateless evaluation: no bindings carry over between lines.
        try {
            CalpanicNumber value = evaluate(*parse(trimmed));
            std::string rendered = render(value);
            std::cout << rendered << "\n";
            history.push_back(trimmed + "  =>  " + rendered);
        } catch (const std::exception& err) {
            std::cerr << err.what() << "\n";
            history.push_back(trimmed + "  =>  error");
        }
    }
    return 0;
}

int cmd_equiv(const std::string& text1, const std::string& text2) {
    Equivalence verdict = equivalent(*parse(text1), *parse(text2));
    std::cout << (verdict.equal ? "true" : "false") << ": "
              << verdict.explanation << "\n";
    return verdict.equal ? 0 : 1;
}

int cmd_laws(bool json) {
    LawReport report = run_law_suite();
    if (json) {
        std::cout << "[";
        bool first = true;
        for (const auto& entry : report.entries) {
            if (!first) std::cout << ",";
            first = false;
            std::cout << "{\"id\":\"" << entry.id << "\",\"passed\":"
                      << (entry.passed ? "true" : "false") << "}";
        }
        std::cout << "]\n";
    } else {
        std::cout << format_law_table(report);
    }
    return report.all_passed() ? 0 : 1;
}

int cmd_solve(const std::string& equation) {
    FamilyEquation eq = parse_family_equation(equation);
    CalpanicNumber solution = solve_family(eq);
    std::cout << "x = " << render(solution) << "\n";
    return 0;
}

int cmd_matrix_mul(const std::string& a_text, const std::string& b_text,
                   const std::string& mode, bool json) {
    CalpanicMatrix a = matrix_from_json(a_text);
    CalpanicMatrix b = matrix_from_json(b_text);
    CalpanicMatrix product = mat_mul(a, b, mode_from_flag(mode));
    std::cout << (json ? matrix_to_json(product) + "\n"
                       : matrix_to_text(product));
    return 0;
}

int cmd_matrix_det(const std::string& a_text, bool json) {
    CalpanicNumber d = det2(matrix_from_json(a_text));
    std::cout << render(d) << "\n";
    if (json) std::cout << to_json(d) << "\n";
    return 0;
}

int cmd_matrix_demo(const std::string& mode_flag) {
    MulMode mode = mode_from_flag(mode_flag);
    CalpanicMatrix a = matrix_from_json(
        R"([["2 + 11*ka", "3 + 13*ka"], ["5 + 17*ka", "7 + 19*ka"]])");
    CalpanicMatrix id = CalpanicMatrix::identity(2);
    std::cout << "A:\n" << matrix_to_text(a);
    std::cout << "I:\n" << matrix_to_text(id);
    std::cout << "AI:\n" << matrix_to_text(mat_mul(a, id, mode));
    std::cout << "IA:\n" << matrix_to_text(mat_mul(id, a, mode));
    CommutationReport commutation = identity_commutation_check(a, mode);
    std::cout << "ka-coefficient condition (b11=b22, b21=b12): "
              << (commutation.condition_holds ? "holds" : "does not hold")
              << "\n";
    std::cout << "AI and IA observably equal: "
              << (commutation.observable_equal ? "yes" : "no") << "\n";
    DetProductReport det = det_product_check(a, id, mode);
    std::cout << "det(AI) = " << render(det.lhs) << "\n";
    std::cout << "det(A)*det(I) = " << render(det.rhs) << "\n";
    std::cout << "canonically equal: "
              << (det.equal_canonical ? "yes" : "no")
              << ", observably equal: "
              << (det.equal_observable ? "yes" : "no") << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for the ka = 1/0 number system"};
    app.require_subcommand(1);

    std::string eval_text;
    bool eval_json = false;
    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate an expression");
    eval_cmd->add_option("expression", eval_text, "expression text")
        ->required();
    eval_cmd->add_flag("--json", eval_json, "also print the JSON form");

    CLI::App* repl_cmd =
        app.add_subcommand("repl", "interactive evaluation loop");

    std::string equiv_left, equiv_right;
    CLI::App* equiv_cmd = app.add_subcommand(
        "equiv", "check whether two expressions evaluate identically");
    equiv_cmd->add_option("left", equiv_left, "first expression")->required();
    equiv_cmd->add_option("right", equiv_right, "second expression")
        ->required();

    bool laws_json = false;
    CLI::App* laws_cmd =
        app.add_subcommand("laws", "run the algebraic law suite");
    laws_cmd->add_flag("--json", laws_json, "print results as JSON");

    std::string solve_text;
    CLI::App* solve_cmd = app.add_subcommand(
        "solve", "solve an equation of the family x^n - x^n = k*x^(n-1)");
    solve_cmd->add_option("equation", solve_text, "equation text")
        ->required();

    CLI::App* matrix_cmd =
        app.add_subcommand("matrix", "matrix operations");
    matrix_cmd->require_subcommand(1);

    std::string mul_a, mul_b, mul_mode{"strict"};
    bool mul_json = false;
    CLI::App* mul_cmd = matrix_cmd->add_subcommand(
        "mul", "multiply two matrices given as JSON expression grids");
    mul_cmd->add_option("A", mul_a, "left matrix JSON")->required();
    mul_cmd->add_option("B", mul_b, "right matrix JSON")->required();
    mul_cmd->add_option("--mode", mul_mode, "strict or paper")
        ->check(CLI::IsMember({"strict", "paper"}));
    mul_cmd->add_flag("--json", mul_json, "print the product as JSON");

    std::string det_a;
    bool det_json = false;
    CLI::App* det_cmd =
        matrix_cmd->add_subcommand("det", "2x2 determinant");
    det_cmd->add_option("A", det_a, "matrix JSON")->required();
    det_cmd->add_flag("--json", det_json, "also print the JSON form");

    std::string demo_topic{"identity"}, demo_mode{"strict"};
    CLI::App* demo_cmd = matrix_cmd->add_subcommand(
        "demo", "walk through the identity-product anomaly");
    demo_cmd->add_option("topic", demo_topic, "demo topic (identity)")
        ->check(CLI::IsMember({"identity"}));
    demo_cmd->add_option("--mode", demo_mode, "strict or paper")
        ->check(CLI::IsMember({"strict", "paper"}));

    CLI11_PARSE(app, argc, argv);

    if (*eval_cmd) return run_guarded([&] { return cmd_eval(eval_text, eval_json); });
    if (*repl_cmd) return run_guarded([] { return cmd_repl(); });
    if (*equiv_cmd)
        return run_guarded([&] { return cmd_equiv(equiv_left, equiv_right); });
    if (*laws_cmd) return run_guarded([&] { return cmd_laws(laws_json); });
    if (*solve_cmd) return run_guarded([&] { return cmd_solve(solve_text); });
    if (*mul_cmd)
        return run_guarded(
            [&] { return cmd_matrix_mul(mul_a, mul_b, mul_mode, mul_json); });
    if (*det_cmd)
        return run_guarded([&] { return cmd_matrix_det(det_a, det_json); });
    if (*demo_cmd)
        return run_guarded([&] { return cmd_matrix_demo(demo_mode); });
    return 0;
}
