#include "artin/parser.hpp"

#include <cctype>
#include <cstddef>
#include <map>
#include <utility>

#include "artin/errors.hpp"

namespace artin {

PolyExpr PolyExpr::number(BigRational v) {
    PolyExpr e;
    e.kind = Kind::Number;
    e.value = std::move(v);
    return e;
}

PolyExpr PolyExpr::series_var(int index) {
    PolyExpr e;
    e.kind = Kind::SeriesVar;
    e.index = index;
    return e;
}

PolyExpr PolyExpr::unknown_var(int index) {
    PolyExpr e;
    e.kind = Kind::UnknownVar;
    e.index = index;
    return e;
}

PolyExpr PolyExpr::add(PolyExpr a, PolyExpr b) {
    PolyExpr e;
    e.kind = Kind::Add;
    e.children.push_back(std::move(a));
    e.children.push_back(std::move(b));
    return e;
}

PolyExpr PolyExpr::sub(PolyExpr a, PolyExpr b) {
    PolyExpr e;
    e.kind = Kind::Sub;
    e.children.push_back(std::move(a));
    e.children.push_back(std::move(b));
    return e;
}

PolyExpr PolyExpr::mul(PolyExpr a, PolyExpr b) {
    PolyExpr e;
    e.kind = Kind::Mul;
    e.children.push_back(std::move(a));
    e.children.push_back(std::move(b));
    return e;
}

PolyExpr PolyExpr::neg(PolyExpr a) {
    PolyExpr e;
    e.kind = Kind::Neg;
    e.children.push_back(std::move(a));
    return e;
}

PolyExpr PolyExpr::pow(PolyExpr base, long exponent) {
    PolyExpr e;
    e.kind = Kind::Pow;
    e.exponent = exponent;
    e.children.push_back(std::move(base));
    return e;
}

bool operator==(const PolyExpr& a, const PolyExpr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case PolyExpr::Kind::Number:
            return a.value == b.value;
        case PolyExpr::Kind::SeriesVar:
        case PolyExpr::Kind::UnknownVar:
            return a.index == b.index;
        case PolyExpr::Kind::Pow:
            if (a.exponent != b.exponent) return false;
            break;
        default:
            break;
    }
    if (a.children.size() != b.children.size()) return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!(a.children[i] == b.children[i])) return false;
    return true;
}

namespace {

enum class Tok {
    Integer,
    Ident,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    Semi,
    End
};

struct Token {
    Tok kind;
    std::string text;
    BigInt number;
    int line;
    int col;
};

std::string describe(const Token& t) {
    return t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
}

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    int line = 1;
    int col = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (ch == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (ch == ' ' || ch == '\t' || ch == '\r') {
            ++col;
            ++i;
            continue;
        }
        int tl = line;
        int tc = col;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::string digits;
            while (i < text.size() &&
                   std::isdigit(static_cast<unsigned char>(text[i]))) {
                digits += text[i];
                ++i;
                ++col;
            }
            out.push_back({Tok::Integer, digits, BigInt(digits), tl, tc});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::string name;
            while (i < text.size() &&
                   std::isalnum(static_cast<unsigned char>(text[i]))) {
                name += text[i];
                ++i;
                ++col;
            }
            out.push_back({Tok::Ident, name, BigInt(0), tl, tc});
            continue;
        }
        Tok k;
        switch (ch) {
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '^': k = Tok::Caret; break;
            case '/': k = Tok::Slash; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            case ';': k = Tok::Semi; break;
            default:
                throw SyntaxError(std::string("unexpected character '") + ch +
                                      "'",
                                  tl, tc);
        }
        out.push_back({k, std::string(1, ch), BigInt(0), tl, tc});
        ++i;
        ++col;
    }
    out.push_back({Tok::End, "", BigInt(0), line, col});
    return out;
}

// largest accepted '^' literal; anything bigger is a typo, not a polynomial
constexpr long kMaxExponent = 1000000;

class Parser {
public:
    Parser(std::vector<Token> toks, int N, int n)
        : toks_(std::move(toks)), N_(N), n_(n) {}

    PolyExpr parse_single() {
        PolyExpr e = parse_expr();
        expect_end();
        return e;
    }

    std::vector<PolyExpr> parse_list() {
        std::vector<PolyExpr> out;
        out.push_back(parse_expr());
        while (peek().kind == Tok::Semi) {
            advance();
            if (peek().kind == Tok::End) break;
            out.push_back(parse_expr());
        }
        expect_end();
        return out;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& advance() { return toks_[pos_++]; }

    void expect_end() const {
        if (peek().kind != Tok::End)
            throw SyntaxError("expected end of input, found " + describe(peek()),
                              peek().line, peek().col);
    }

    PolyExpr parse_expr() {
        PolyExpr e = parse_term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            Tok op = advance().kind;
            PolyExpr rhs = parse_term();
            e = op == Tok::Plus ? PolyExpr::add(std::move(e), std::move(rhs))
                                : PolyExpr::sub(std::move(e), std::move(rhs));
        }
        return e;
    }

    PolyExpr parse_term() {
        PolyExpr e = parse_factor();
        while (peek().kind == Tok::Star) {
            advance();
            e = PolyExpr::mul(std::move(e), parse_factor());
        }
        return e;
    }

    PolyExpr parse_factor() {
        if (peek().kind == Tok::Minus) {
            advance();
            return PolyExpr::neg(parse_factor());
        }
        PolyExpr base = parse_primary();
        if (peek().kind == Tok::Caret) {
            advance();
            return PolyExpr::pow(std::move(base), parse_exponent());
        }
        return base;
    }

    long parse_exponent() {
        const Token& t = peek();
        if (t.kind == Tok::Minus)
            throw NegativeExponent("negative exponent at line " +
                                   std::to_string(t.line) + ", col " +
                                   std::to_string(t.col));
        if (t.kind != Tok::Integer)
            throw SyntaxError("expected integer exponent, found " + describe(t),
                              t.line, t.col);
        advance();
        if (t.number > kMaxExponent)
            throw SyntaxError("exponent too large", t.line, t.col);
        return t.number.convert_to<long>();
    }

    PolyExpr parse_primary() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Integer: {
                advance();
                if (peek().kind == Tok::Slash) {
                    advance();
                    const Token& den = peek();
                    if (den.kind != Tok::Integer)
                        throw SyntaxError(
                            "expected integer denominator, found " +
                                describe(den),
                            den.line, den.col);
                    advance();
                    if (den.number == 0)
                        throw SyntaxError("zero denominator in rational literal",
                                          den.line, den.col);
                    return PolyExpr::number(BigRational(t.number, den.number));
                }
                return PolyExpr::number(BigRational(t.number));
            }
            case Tok::Ident:
                advance();
                return resolve_variable(t);
            case Tok::LParen: {
                advance();
                PolyExpr e = parse_expr();
                if (peek().kind != Tok::RParen)
                    throw SyntaxError("expected ')', found " + describe(peek()),
                                      peek().line, peek().col);
                advance();
                return e;
            }
            default:
                throw SyntaxError(
                    "expected a number, a variable or '(', found " +
                        describe(t),
                    t.line, t.col);
        }
    }

    PolyExpr resolve_variable(const Token& t) const {
        const std::string& name = t.text;
        std::string at = " at line " + std::to_string(t.line) + ", col " +
                         std::to_string(t.col);
        char head = name[0];
        std::string tail = name.substr(1);

        if (tail.empty()) {
            switch (head) {
                case 'T':
                    if (N_ == 1) return PolyExpr::series_var(1);
                    throw UnknownVariable(
                        "'T' only names T1 when N = 1; declared N = " +
                        std::to_string(N_) + at);
                case 'X':
                    if (n_ <= 3) return PolyExpr::unknown_var(1);
                    throw UnknownVariable(
                        "alias 'X' is reserved for n <= 3, use X1..Xn" + at);
                case 'Y':
                    if (n_ >= 2 && n_ <= 3) return PolyExpr::unknown_var(2);
                    throw UnknownVariable(
                        "alias 'Y' needs 2 <= n <= 3; declared n = " +
                        std::to_string(n_) + at);
                case 'Z':
                    if (n_ == 3) return PolyExpr::unknown_var(3);
                    throw UnknownVariable(
                        "alias 'Z' needs n = 3; declared n = " +
                        std::to_string(n_) + at);
                default:
                    break;
            }
            throw UnknownVariable("unknown variable '" + name + "'" + at);
        }

        bool tail_numeric = true;
        for (char c : tail)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                tail_numeric = false;
        if ((head == 'T' || head == 'X') && tail_numeric) {
            long idx = 0;
            try {
                idx = std::stol(tail);
            } catch (const std::exception&) {
                idx = -1;
            }
            if (head == 'T') {
                if (idx >= 1 && idx <= N_) return PolyExpr::series_var(
                    static_cast<int>(idx));
                throw UnknownVariable("series variable '" + name +
                                      "' out of range, declared N = " +
                                      std::to_string(N_) + at);
            }
            if (idx >= 1 && idx <= n_)
                return PolyExpr::unknown_var(static_cast<int>(idx));
            throw UnknownVariable("unknown '" + name +
                                  "' out of range, declared n = " +
                                  std::to_string(n_) + at);
        }
        throw UnknownVariable("unknown variable '" + name + "'" + at);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    int N_;
    int n_;
};

void check_arities(int N, int n) {
    if (N < 1 || n < 1)
        throw BadParameters("parse needs N >= 1 series variables and n >= 1 "
                            "unknowns");
}

int precedence(PolyExpr::Kind k) {
    switch (k) {
        case PolyExpr::Kind::Add:
        case PolyExpr::Kind::Sub:
            return 1;
        case PolyExpr::Kind::Mul:
            return 2;
        case PolyExpr::Kind::Neg:
            return 3;
        case PolyExpr::Kind::Pow:
            return 4;
        default:
            return 5;
    }
}

void render_into(const PolyExpr& e, int min_prec, std::string& out) {
    // hand-built negative literals render through a minus sign, which keeps
    // the emitted text inside the grammar (parser output is never negative)
    bool negative_literal =
        e.kind == PolyExpr::Kind::Number && e.value < 0;
    int own = negative_literal ? 3 : precedence(e.kind);
    bool parens = own < min_prec;
    if (parens) out += '(';
    switch (e.kind) {
        case PolyExpr::Kind::Number:
            if (negative_literal) {
                out += '-';
                out += BigRational(-e.value).str();
            } else {
                out += e.value.str();
            }
            break;
        case PolyExpr::Kind::SeriesVar:
            out += 'T';
            out += std::to_string(e.index);
            break;
        case PolyExpr::Kind::UnknownVar:
            out += 'X';
            out += std::to_string(e.index);
            break;
        case PolyExpr::Kind::Add:
            render_into(e.children[0], 1, out);
            out += " + ";
            render_into(e.children[1], 2, out);
            break;
        case PolyExpr::Kind::Sub:
            render_into(e.children[0], 1, out);
            out += " - ";
            render_into(e.children[1], 2, out);
            break;
        case PolyExpr::Kind::Mul:
            render_into(e.children[0], 2, out);
            out += '*';
            render_into(e.children[1], 3, out);
            break;
        case PolyExpr::Kind::Neg:
            out += '-';
            render_into(e.children[0], 3, out);
            break;
        case PolyExpr::Kind::Pow:
            render_into(e.children[0], 5, out);
            out += '^';
            out += std::to_string(e.exponent);
            break;
    }
    if (parens) out += ')';
}

// -- lowering to series-coefficient polynomials -----------------------------

using LoweredPoly = std::map<UnknownKey, GradedSeries>;

void lower_accumulate(LoweredPoly& into, const UnknownKey& key,
                      const GradedSeries& c) {
    if (c.is_exact_zero()) return;
    auto it = into.find(key);
    if (it == into.end()) {
        into.emplace(key, c);
        return;
    }
    GradedSeries merged = add(it->second, c);
    if (merged.is_exact_zero())
        into.erase(it);
    else
        it->second = merged;
}

LoweredPoly lower_add(const LoweredPoly& a, const LoweredPoly& b, bool minus) {
    LoweredPoly out = a;
    for (const auto& [k, c] : b) lower_accumulate(out, k, minus ? negate(c) : c);
    return out;
}

LoweredPoly lower_mul(const LoweredPoly& a, const LoweredPoly& b) {
    LoweredPoly out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            UnknownKey k(ka.size());
            for (std::size_t i = 0; i < ka.size(); ++i) k[i] = ka[i] + kb[i];
            lower_accumulate(out, k, mul(ca, cb));
        }
    return out;
}

LoweredPoly lower(const PolyExpr& e, int N, int n, const FieldDescriptor& d) {
    const UnknownKey unit(static_cast<std::size_t>(n), 0);
    switch (e.kind) {
        case PolyExpr::Kind::Number: {
            LoweredPoly out;
            FieldScalar c = FieldScalar::from_rational(d, e.value);
            if (!c.is_zero()) out.emplace(unit, GradedSeries::constant(c, N));
            return out;
        }
        case PolyExpr::Kind::SeriesVar: {
            LoweredPoly out;
            out.emplace(unit,
                        GradedSeries::monomial(FieldScalar::one(d),
                                               ExponentVector::unit(
                                                   N, e.index - 1)));
            return out;
        }
        case PolyExpr::Kind::UnknownVar: {
            LoweredPoly out;
            UnknownKey k = unit;
            k[static_cast<std::size_t>(e.index - 1)] = 1;
            out.emplace(k, GradedSeries::constant(FieldScalar::one(d), N));
            return out;
        }
        case PolyExpr::Kind::Add:
            return lower_add(lower(e.children[0], N, n, d),
                             lower(e.children[1], N, n, d), false);
        case PolyExpr::Kind::Sub:
            return lower_add(lower(e.children[0], N, n, d),
                             lower(e.children[1], N, n, d), true);
        case PolyExpr::Kind::Mul:
            return lower_mul(lower(e.children[0], N, n, d),
                             lower(e.children[1], N, n, d));
        case PolyExpr::Kind::Neg: {
            LoweredPoly out;
            for (const auto& [k, c] : lower(e.children[0], N, n, d))
                out.emplace(k, negate(c));
            return out;
        }
        case PolyExpr::Kind::Pow: {
            LoweredPoly base = lower(e.children[0], N, n, d);
            LoweredPoly acc;
            acc.emplace(unit,
                        GradedSeries::constant(FieldScalar::one(d), N));
            for (long i = 0; i < e.exponent; ++i) acc = lower_mul(acc, base);
            return acc;
        }
    }
    throw Error("unreachable expression kind");
}

}  // namespace

PolyExpr parse_expr(const std::string& text, int N, int n) {
    check_arities(N, n);
    return Parser(lex(text), N, n).parse_single();
}

std::vector<PolyExpr> parse_expr_list(const std::string& text, int N, int n) {
    check_arities(N, n);
    return Parser(lex(text), N, n).parse_list();
}

std::string render(const PolyExpr& e) {
    std::string out;
    render_into(e, 1, out);
    return out;
}

PolySystem parse_poly(const std::string& text, int N, int n,
                      const FieldDescriptor& d) {
    std::vector<PolyExpr> exprs = parse_expr_list(text, N, n);
    PolySystem sys{d, N, n, {}};
    for (const PolyExpr& e : exprs) {
        SeriesPolynomial p(d, N, n);
        for (const auto& [key, coeff] : lower(e, N, n, d))
            p.add_term(key, coeff);
        sys.polys.push_back(std::move(p));
    }
    return sys;
}

}  // namespace artin
