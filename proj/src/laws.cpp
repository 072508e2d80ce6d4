#include "calpanic/laws.hpp"

#include "calpanic/expr.hpp"
#include "calpanic/matrix.hpp"
#include "calpanic/number.hpp"
#include "calpanic/polynomial.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <sstream>
#include <utility>

namespace calpanic {

namespace {

CalpanicNumber ev(const std::string& text) { return evaluate(*parse(text)); }

bool same(const std::string& text, const CalpanicNumber& want) {
    return equals_canonical(ev(text), want);
}

bool renders_to(const std::string& text, const std::string& want) {
    return render(ev(text)) == want;
}

using CheckFn = std::function<std::pair<bool, std::string>()>;

LawCheck run_check(const std::string& id, const std::string& statement,
                   const CheckFn& fn) {
    LawCheck entry{id, statement, "", false};
    try {
        auto [passed, witness] = fn();
        entry.passed = passed;
        entry.witness = witness;
    } catch (const std::exception& err) {
        entry.passed = false;
        entry.witness = std::string("unexpected error: ") + err.what();
    }
    return entry;
}

std::pair<bool, std::string> eval_pair(const std::string& a,
                                       const std::string& b, bool ok) {
    return {ok, a + " = " + render(ev(a)) + " ; " + b + " = " + render(ev(b))};
}

} // namespace

bool LawReport::all_passed() const {
    for (const auto& entry : entries)
        if (!entry.passed) return false;
    return true;
}

LawReport run_law_suite() {
    LawReport report;
    auto law = [&report](const std::string& id, const std::string& statement,
                         const CheckFn& fn) {
        report.entries.push_back(run_check(id, statement, fn));
    };

    law("reciprocal-closure",
        "ka*0 = 0*ka = 1, 1/0 = ka, 1/ka = +0, ka*(-0) = -1",
        []() -> std::pair<bool, std::string> {
            bool ok = renders_to("ka*0", "1") && renders_to("0*ka", "1") &&
                      renders_to("1/0", "ka") && renders_to("1/ka", "+0") &&
                      renders_to("ka*(-0)", "-1");
            return {ok, "1/0 = " + render(ev("1/0")) +
                            " ; 1/ka = " + render(ev("1/ka"))};
        });

    law("signed-zero", "1 - 1 = +0 and -1 + 1 = -0 are distinct values",
        []() -> std::pair<bool, std::string> {
            bool ok = renders_to("1-1", "+0") && renders_to("-1+1", "-0") &&
                      !equals_canonical(ev("1-1"), ev("-1+1"));
            return eval_pair("1-1", "-1+1", ok);
        });

    law("graded-zero",
        "0 - 0 = 0^2; 0+0 is 2*0 but neither 0 nor 0*0 equals 0",
        []() -> std::pair<bool, std::string> {
            bool ok = renders_to("0-0", "1*0^2") &&
                      equivalent(*parse("0+0"), *parse("2*0")).equal &&
                      !equivalent(*parse("0+0"), *parse("0")).equal &&
                      !equivalent(*parse("0*0"), *parse("0")).equal;
            return eval_pair("0-0", "0+0", ok);
        });

    law("zero-merge",
        "like zeros merge (0+0+0 = 3*0) and a leading zero survives real "
        "sums (0+5+7 = 12 + 0)",
        []() -> std::pair<bool, std::string> {
            bool ok = equivalent(*parse("0+0+0"), *parse("3*0")).equal &&
                      equivalent(*parse("0+5+7"), *parse("12+0")).equal;
            return eval_pair("0+0+0", "0+5+7", ok);
        });

    law("add-noncommutative", "addition is not commutative",
        []() -> std::pair<bool, std::string> {
            bool ok = !equals_canonical(ev("1-1"), ev("-1+1")) &&
                      !equals_canonical(ev("ka-ka"), ev("-ka+ka"));
            return eval_pair("ka-ka", "-ka+ka", ok);
        });

    law("add-nonassociative", "addition is not necessarily associative",
        []() -> std::pair<bool, std::string> {
            bool ok = renders_to("(ka-ka)+ka", "ka + 1") &&
                      renders_to("ka+(-ka+ka)", "ka - 1") &&
                      !equals_canonical(ev("(ka-ka)+ka"), ev("ka+(-ka+ka)"));
            return eval_pair("(ka-ka)+ka", "ka+(-ka+ka)", ok);
        });

    law("demotion",
        "self-subtraction demotes one order: c*ka^n - c*ka^n = c*ka^(n-1)",
        []() -> std::pair<bool, std::string> {
            const Rational cs[] = {Rational(1), Rational(-2), Rational(7),
                                   Rational(5, 3)};
            for (int n = 1; n <= 6; ++n) {
                for (const Rational& c : cs) {
                    CalpanicNumber x = make_term(Coefficient(c), n);
                    if (!equals_canonical(subtract(x, x),
                                          make_term(Coefficient(c), n - 1)))
                        return {false, "failed at order " +
                                           std::to_string(n) + ", c = " +
                                           rational_str(c)};
                }
            }
            return {true, "checked orders 1..6 over a rational grid; "
                          "ka-ka = " + render(ev("ka-ka"))};
        });

    law("no-transposition",
        "A + B - D need not equal C even when A + B = C + D classically",
        []() -> std::pair<bool, std::string> {
            bool ok = renders_to("2+3-1", "4 + 0") &&
                      !equivalent(*parse("2+3-1"), *parse("4")).equal;
            return eval_pair("2+3-1", "4", ok);
        });

    law("self-subtraction",
        "(a0 + a1*ka) - (a0 + a1*ka) collapses to a1, not 0",
        []() -> std::pair<bool, std::string> {
            bool ok =
                renders_to("real((2+5*ka) - (2+5*ka))", "5") &&
                same("(2+5*ka) - (2+5*ka)",
                     add(make_real(Coefficient(5)),
                         make_term(Coefficient(2), -1)));
            return eval_pair("(2+5*ka) - (2+5*ka)",
                             "real((2+5*ka) - (2+5*ka))", ok);
        });

    law("log-antisymmetry", "log(+0) = -log(ka); log(ka^n) = n*L",
        []() -> std::pair<bool, std::string> {
            LogValue zero_log = log_ka(ev("0"));
            LogValue ka_log = log_ka(ev("ka"));
            bool ok = zero_log == -ka_log && ka_log == LogValue{1} &&
                      log_ka(ev("ka^2")) == LogValue{2} &&
                      log_ka(ev("0^3")) == LogValue{-3};
            return {ok, "log(+0) = " + zero_log.str() +
                            " ; log(ka) = " + ka_log.str()};
        });

    law("zero-exponent", "any pure zero exponent collapses a power to one",
        []() -> std::pair<bool, std::string> {
            bool ok = renders_to("ka^(+0)", "1") &&
                      renders_to("ka^(-0)", "1") &&
                      renders_to("ka^(0-0)", "1") &&
                      renders_to("0^(1-1)", "1");
            return eval_pair("ka^(+0)", "ka^(-0)", ok);
        });

    law("mul-noncommutative", "multiplication is not necessarily commutative",
        []() -> std::pair<bool, std::string> {
            bool ok =
                !equals_canonical(ev("(1+ka)*(1-ka)"), ev("(1-ka)*(1+ka)"));
            return eval_pair("(1+ka)*(1-ka)", "(1-ka)*(1+ka)", ok);
        });

    law("sum-product-formulas",
        "(a0+a1*ka) + (b0+b1*ka) = (a0+b0) + (a1+b1)*ka and the product "
        "expands through ka^2",
        []() -> std::pair<bool, std::string> {
            bool ok = renders_to("(2+3*ka) + (5+7*ka)", "10*ka + 7") &&
                      renders_to("(2+3*ka) * (5+7*ka)",
                                 "21*ka^2 + 29*ka + 10");
            return eval_pair("(2+3*ka) + (5+7*ka)", "(2+3*ka) * (5+7*ka)",
                             ok);
        });

    law("structural-conservation",
        "zero-coefficient terms cannot be constructed, only demoted",
        []() -> std::pair<bool, std::string> {
            try {
                make_term(Coefficient(0), 1);
            } catch (const DomainError& err) {
                return {err.code() == Errc::zero_coefficient,
                        std::string("make_term(0, 1) -> ") +
                            errc_name(err.code())};
            }
            return {false, "make_term(0, 1) unexpectedly succeeded"};
        });

    law("family-solutions",
        "x = k*ka solves x^n - x^n = k*x^(n-1); other monomials fail",
        []() -> std::pair<bool, std::string> {
            FamilyEquation e1 = parse_family_equation("x - x = 5");
            FamilyEquation e3 = parse_family_equation("x^3 - x^3 = 2*x^2");
            bool ok = verify_solution(e1, solve_family(e1)) &&
                      verify_solution(e3, solve_family(e3)) &&
                      !verify_solution(e1, make_term(Coefficient(4), 1));
            return {ok, "x - x = 5 -> x = " + render(solve_family(e1)) +
                            " ; x^3 - x^3 = 2*x^2 -> x = " +
                            render(solve_family(e3))};
        });

    law("identity-anomaly",
        "multiplying by the identity is not the identity map once any entry "
        "carries ka",
        []() -> std::pair<bool, std::string> {
            CalpanicMatrix a(2, 2, make_real(Coefficient(1)));
            a.at(0, 0) = ev("1 + 2*ka");
            a.at(0, 1) = ev("3");
            a.at(1, 0) = ev("5");
            a.at(1, 1) = ev("7");
            bool anomaly_strict = false;
            bool anomaly_paper = false;
            for (MulMode mode : {MulMode::strict_conservation,
                                 MulMode::paper_display}) {
                CalpanicMatrix ai =
                    mat_mul(a, CalpanicMatrix::identity(2), mode);
                bool entrywise = true;
                for (std::size_t r = 0; r < 2; ++r)
                    for (std::size_t c = 0; c < 2; ++c)
                        entrywise = entrywise &&
                                    equals_canonical(ai.at(r, c), a.at(r, c));
                (mode == MulMode::strict_conservation ? anomaly_strict
                                                      : anomaly_paper) =
                    !entrywise;
            }
            CalpanicMatrix ai = mat_mul(a, CalpanicMatrix::identity(2),
                                        MulMode::strict_conservation);
            return {anomaly_strict && anomaly_paper,
                    "A12 = " + render(a.at(0, 1)) + " but (AI)12 = " +
                        render(ai.at(0, 1))};
        });

    law("commutation-condition",
        "equal diagonal and equal off-diagonal ka-coefficients make AI and "
        "IA observably equal",
        []() -> std::pair<bool, std::string> {
            CalpanicMatrix a(2, 2, make_real(Coefficient(1)));
            a.at(0, 0) = ev("2 + ka");
            a.at(0, 1) = ev("3 + 2*ka");
            a.at(1, 0) = ev("5 + 2*ka");
            a.at(1, 1) = ev("7 + ka");
            CommutationReport good =
                identity_commutation_check(a, MulMode::strict_conservation);
            a.at(1, 0) = ev("5 + 3*ka");
            CommutationReport bad =
                identity_commutation_check(a, MulMode::strict_conservation);
            bool ok = good.condition_holds && good.observable_equal &&
                      !bad.condition_holds && !bad.observable_equal;
            return {ok, "matched ka-parts commute observably; a 3-vs-2 "
                        "off-diagonal mismatch breaks it"};
        });

    law("det-nonmultiplicative",
        "det(AB) need not equal det(A)*det(B)",
        []() -> std::pair<bool, std::string> {
            CalpanicMatrix a(2, 2, ev("ka"));
            DetProductReport r = det_product_check(
                a, CalpanicMatrix::identity(2), MulMode::strict_conservation);
            bool ok = !r.equal_canonical && !r.equal_observable;
            return {ok, "A all-ka, B = I: det(AB) = " + render(r.lhs) +
                            " ; det(A)*det(B) = " + render(r.rhs)};
        });

    return report;
}

std::string format_law_table(const LawReport& report) {
    std::size_t id_width = 0;
    for (const auto& entry : report.entries)
        id_width = std::max(id_width, entry.id.size());
    std::ostringstream out;
    for (const auto& entry : report.entries) {
        out << (entry.passed ? "pass" : "FAIL") << "  " << entry.id
            << std::string(id_width - entry.id.size() + 2, ' ')
            << entry.statement << "\n";
        if (!entry.witness.empty()) out << "      " << entry.witness << "\n";
    }
    out << (report.all_passed() ? "all laws hold" : "LAW FAILURES PRESENT")
        << "\n";
    return out.str();
}

} // namespace calpanic
