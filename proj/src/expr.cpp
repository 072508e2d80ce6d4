#include "calpanic/expr.hpp"

#include "calpanic/errors.hpp"

#include <cctype>
#include <sstream>
#include <utility>
#include <vector>

namespace calpanic {

namespace {

// ---- lexer -----------------------------------------------------------------

enum class Tok {
    number,
    ka,
    imag,
    real_kw,
    unknown_kw,
    plus,
    minus,
    star,
    slash,
    caret,
    lparen,
    rparen,
    end,
};

struct Token {
    Tok kind;
    std::size_t offset;
    Rational value;        // number tokens
    bool is_integer = false; // number written without a decimal point
    std::string text;
};

bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)) != 0) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            std::size_t j = i;
            while (j < n && std::isdigit(static_cast<unsigned char>(text[j])) != 0) ++j;
            Integer int_part(std::string(text.substr(i, j - i)));
            Rational value(int_part);
            bool integral = true;
            if (j < n && text[j] == '.') {
                ++j;
                std::size_t frac_start = j;
                while (j < n && std::isdigit(static_cast<unsigned char>(text[j])) != 0) ++j;
                if (j == frac_start)
                    throw SyntaxError(j, "a digit after the decimal point");
                Integer frac(std::string(text.substr(frac_start, j - frac_start)));
                Integer scale = 1;
                for (std::size_t d = 0; d < j - frac_start; ++d) scale *= 10;
                value += Rational(frac, scale);
                integral = false;
            }
            out.push_back({Tok::number, start, std::move(value), integral,
                           std::string(text.substr(start, j - start))});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
            std::size_t j = i;
            while (j < n && is_word_char(text[j])) ++j;
            std::string word(text.substr(i, j - i));
            Tok kind;
            if (word == "ka")
                kind = Tok::ka;
            else if (word == "i")
                kind = Tok::imag;
            else if (word == "real")
                kind = Tok::real_kw;
            else if (word == "x")
                kind = Tok::unknown_kw;
            else
                throw SyntaxError(start, "'ka', 'i', 'real', 'x', or a number"
                                         " (got the name '" + word + "')");
            out.push_back({kind, start, Rational(0), false, std::move(word)});
            i = j;
            continue;
        }
        // The native glyph for ka (three UTF-8 bytes).
        if (static_cast<unsigned char>(c) == 0xE0 && i + 2 < n &&
            static_cast<unsigned char>(text[i + 1]) == 0xA4 &&
            static_cast<unsigned char>(text[i + 2]) == 0x95) {
            out.push_back({Tok::ka, start, Rational(0), false, "ka"});
            i += 3;
            continue;
        }
        Tok kind;
        switch (c) {
        case '+': kind = Tok::plus; break;
        case '-': kind = Tok::minus; break;
        case '*': kind = Tok::star; break;
        case '/': kind = Tok::slash; break;
        case '^': kind = Tok::caret; break;
        case '(': kind = Tok::lparen; break;
        case ')': kind = Tok::rparen; break;
        default:
            throw SyntaxError(start, "a number, name, operator, or"
                                     " parenthesis");
        }
        out.push_back({kind, start, Rational(0), false, std::string(1, c)});
        ++i;
    }
    out.push_back({Tok::end, n, Rational(0), false, ""});
    return out;
}

// ---- parser ----------------------------------------------------------------

ExprPtr make_node(ExprKind kind, std::size_t offset) {
    auto e = std::make_unique<Expr>();
    e->kind = kind;
    e->offset = offset;
    return e;
}

struct Parser {
    const std::vector<Token>& toks;
    const ParseOptions& options;
    std::size_t pos = 0;

    const Token& peek() const { return toks[pos]; }
    Token take() { return toks[pos++]; }

    ExprPtr parse_expr() {
        ExprPtr node = parse_term();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            Token op = take();
            ExprPtr rhs = parse_term();
            ExprPtr bin = make_node(
                op.kind == Tok::plus ? ExprKind::add : ExprKind::subtract,
                op.offset);
            bin->lhs = std::move(node);
            bin->rhs = std::move(rhs);
            node = std::move(bin);
        }
        return node;
    }

    ExprPtr parse_term() {
        ExprPtr node = parse_factor();
        while (peek().kind == Tok::star || peek().kind == Tok::slash) {
            Token op = take();
            ExprPtr rhs = parse_factor();
            ExprPtr bin = make_node(
                op.kind == Tok::star ? ExprKind::multiply : ExprKind::divide,
                op.offset);
            bin->lhs = std::move(node);
            bin->rhs = std::move(rhs);
            node = std::move(bin);
        }
        return node;
    }

    ExprPtr parse_factor() {
        if (peek().kind == Tok::minus) {
            Token op = take();
            ExprPtr node = make_node(ExprKind::negate, op.offset);
            node->lhs = parse_power();
            return node;
        }
        if (peek().kind == Tok::plus) {
            take(); // unary plus: lets the rendered "+0" re-parse
            return parse_power();
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_atom();
        if (peek().kind != Tok::caret) return base;
        Token caret = take();
        if (peek().kind == Tok::number && peek().is_integer) {
            Token exp = take();
            ExprPtr node = make_node(ExprKind::power_int, caret.offset);
            node->lhs = std::move(base);
            node->int_exponent =
                numerator(exp.value).convert_to<long long>();
            return node;
        }
        ExprPtr node = make_node(ExprKind::power_expr, caret.offset);
        node->lhs = std::move(base);
        node->rhs = parse_atom();
        return node;
    }

    ExprPtr parse_atom() {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::number: {
            Token tok = take();
            ExprPtr node = make_node(ExprKind::rational_literal, tok.offset);
            node->literal = std::move(tok.value);
            return node;
        }
        case Tok::ka:
            return make_node(ExprKind::ka_symbol, take().offset);
        case Tok::imag:
            return make_node(ExprKind::imaginary_unit, take().offset);
        case Tok::unknown_kw: {
            if (!options.allow_unknown)
                throw SyntaxError(t.offset,
                                  "a value ('x' is only meaningful inside an"
                                  " equation)");
            return make_node(ExprKind::unknown_symbol, take().offset);
        }
        case Tok::lparen: {
            take();
            ExprPtr inner = parse_expr();
            if (peek().kind != Tok::rparen)
                throw SyntaxError(peek().offset, "')'");
            take();
            return inner;
        }
        case Tok::real_kw: {
            Token kw = take();
            if (peek().kind != Tok::lparen)
                throw SyntaxError(peek().offset, "'(' after 'real'");
            take();
            ExprPtr node = make_node(ExprKind::real_collapse, kw.offset);
            node->lhs = parse_expr();
            if (peek().kind != Tok::rparen)
                throw SyntaxError(peek().offset, "')'");
            take();
            return node;
        }
        default:
            throw SyntaxError(t.offset,
                              "a number, 'ka', 'i', '(', or 'real('");
        }
    }
};

} // namespace

ExprPtr parse(std::string_view text, const ParseOptions& options) {
    std::vector<Token> toks = lex(text);
    Parser p{toks, options};
    ExprPtr node = p.parse_expr();
    if (p.peek().kind != Tok::end)
        throw SyntaxError(p.peek().offset, "an operator or end of input");
    return node;
}

// ---- evaluation ------------------------------------------------------------

CalpanicNumber evaluate(const Expr& e) {
    switch (e.kind) {
    case ExprKind::rational_literal:
        return make_real(Coefficient(e.literal));
    case ExprKind::imaginary_unit:
        return make_real(Coefficient(Rational(0), Rational(1)));
    case ExprKind::ka_symbol:
        return make_term(Coefficient(1), 1);
    case ExprKind::unknown_symbol:
        throw EvalError(DomainError(Errc::unbound_symbol,
                                    "the unknown 'x' has no value here"),
                        e.offset);
    case ExprKind::negate:
        return negate(evaluate(*e.lhs));
    case ExprKind::add: {
        CalpanicNumber l = evaluate(*e.lhs);
        CalpanicNumber r = evaluate(*e.rhs);
        return add(l, r);
    }
    case ExprKind::subtract: {
        CalpanicNumber l = evaluate(*e.lhs);
        CalpanicNumber r = evaluate(*e.rhs);
        return subtract(l, r);
    }
    case ExprKind::multiply: {
        CalpanicNumber l = evaluate(*e.lhs);
        CalpanicNumber r = evaluate(*e.rhs);
        return multiply(l, r);
    }
    case ExprKind::divide: {
        CalpanicNumber l = evaluate(*e.lhs);
        CalpanicNumber r = evaluate(*e.rhs);
        try {
            return divide(l, r);
        } catch (const DomainError& err) {
            throw EvalError(err, e.offset);
        }
    }
    case ExprKind::power_int: {
        CalpanicNumber base = evaluate(*e.lhs);
        try {
            return pow_int(base, e.int_exponent);
        } catch (const DomainError& err) {
            throw EvalError(err, e.offset);
        }
    }
    case ExprKind::power_expr: {
        CalpanicNumber base = evaluate(*e.lhs);
        CalpanicNumber exponent = evaluate(*e.rhs);
        try {
            return pow_zero_exponent(base, exponent);
        } catch (const DomainError& err) {
            throw EvalError(err, e.offset);
        }
    }
    case ExprKind::real_collapse: {
        CalpanicNumber inner = evaluate(*e.lhs);
        try {
            return make_real(real_collapse(inner));
        } catch (const DomainError& err) {
            throw EvalError(err, e.offset);
        }
    }
    }
    throw DomainError(Errc::unsupported_operand, "unreachable node kind");
}

bool contains_unknown(const Expr& e) {
    if (e.kind == ExprKind::unknown_symbol) return true;
    if (e.lhs && contains_unknown(*e.lhs)) return true;
    if (e.rhs && contains_unknown(*e.rhs)) return true;
    return false;
}

Equivalence equivalent(const Expr& e1, const Expr& e2) {
    CalpanicNumber v1 = evaluate(e1);
    CalpanicNumber v2 = evaluate(e2);
    if (equals_canonical(v1, v2))
        return {true, "both evaluate to " + render(v1)};
    // Walk the union of occupied orders from the top down to the first
    // disagreement.
    auto i1 = v1.terms().begin();
    auto i2 = v2.terms().begin();
    int order = 0;
    std::string left = "(nothing)";
    std::string right = "(nothing)";
    for (;;) {
        bool has1 = i1 != v1.terms().end();
        bool has2 = i2 != v2.terms().end();
        if (has1 && (!has2 || i1->first > i2->first)) {
            order = i1->first;
            left = coefficient_str(i1->second);
            right = "(nothing)";
            break;
        }
        if (has2 && (!has1 || i2->first > i1->first)) {
            order = i2->first;
            left = "(nothing)";
            right = coefficient_str(i2->second);
            break;
        }
        // Same order on both sides (the loop only runs while a difference
        // exists somewhere, so this cannot fall off the end).
        if (i1->second != i2->second) {
            order = i1->first;
            left = coefficient_str(i1->second);
            right = coefficient_str(i2->second);
            break;
        }
        ++i1;
        ++i2;
    }
    std::ostringstream why;
    why << "first difference at order " << order << ": left has " << left
        << ", right has " << right << " (left = " << render(v1)
        << ", right = " << render(v2) << ")";
    return {false, why.str()};
}

// ---- rendering -------------------------------------------------------------

namespace {

// One rendered term: its sign for joining, and the body without the sign.
struct RenderedTerm {
    int sign; // +1 or -1
    std::string body;
    bool explicit_plus = false; // "+0" keeps its plus even when leading
};

std::string magnitude_str(const Rational& q) { return rational_str(abs_of(q)); }

// Coefficient body for a coefficient that is real or purely imaginary,
// magnitude only (sign handled by the caller): "3", "3/4", "2*i", "i".
std::string simple_coeff_body(const Coefficient& c, bool* unit) {
    if (c.is_real()) {
        *unit = abs_of(c.re) == 1;
        return magnitude_str(c.re);
    }
    *unit = false;
    if (abs_of(c.im) == 1) return "i";
    return magnitude_str(c.im) + "*i";
}

// Parenthesized full-complex body, e.g. "(3 + 2*i)", "(1/2 - i)".
std::string complex_body(const Coefficient& c) {
    std::string im_mag = abs_of(c.im) == 1 ? "i" : magnitude_str(c.im) + "*i";
    return "(" + rational_str(c.re) + (c.im > 0 ? " + " : " - ") + im_mag +
           ")";
}

std::string ka_power(int order) {
    return order == 1 ? "ka" : "ka^" + std::to_string(order);
}

std::string zero_power(int order) {
    int m = -order;
    return m == 1 ? "0" : "0^" + std::to_string(m);
}

RenderedTerm render_term(int order, const Coefficient& c) {
    // Mixed complex coefficients keep both parts inside parentheses and
    // join with "+".
    if (c.re != 0 && c.im != 0) {
        std::string body = complex_body(c);
        if (order > 0) return {+1, body + "*" + ka_power(order)};
        if (order < 0) return {+1, body + "*" + zero_power(order)};
        return {+1, body};
    }
    int sign = c.is_real() ? sign_of(c.re) : sign_of(c.im);
    bool unit = false;
    std::string coeff = simple_coeff_body(c, &unit);
    if (order == 0) return {sign, coeff};
    if (order > 0) {
        if (unit) return {sign, ka_power(order)};
        return {sign, coeff + "*" + ka_power(order)};
    }
    // Zeros: the unit first-order zero renders as a bare signed "0"; any
    // deeper or scaled zero keeps its coefficient so the magnitude survives
    // a round trip ("1*0^2", "7*0", "i*0").
    if (unit && order == -1) return {sign, "0", /*explicit_plus=*/true};
    return {sign, coeff + "*" + zero_power(order)};
}

} // namespace

std::string render(const CalpanicNumber& x) {
    std::string out;
    bool first = true;
    for (const auto& [order, coeff] : x.terms()) {
        RenderedTerm t = render_term(order, coeff);
        if (first) {
            if (t.sign < 0)
                out += "-";
            else if (t.explicit_plus)
                out += "+";
            out += t.body;
            first = false;
            continue;
        }
        out += t.sign < 0 ? " - " : " + ";
        out += t.body;
    }
    return out;
}

std::string to_json(const CalpanicNumber& x) {
    std::ostringstream out;
    out << "{\"terms\":[";
    bool first = true;
    for (const auto& [order, coeff] : x.terms()) {
        if (!first) out << ",";
        first = false;
        out << "{\"order\":" << order << ",\"re\":\"" << rational_str(coeff.re)
            << "\",\"im\":\"" << rational_str(coeff.im) << "\"}";
    }
    out << "]}";
    return out.str();
}

} // namespace calpanic
