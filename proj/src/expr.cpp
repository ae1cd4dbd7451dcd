#include "weakid/expr.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace weakid::expr {

using freealg::Letter;

ParseError::ParseError(Position pos, const std::string& msg)
    : std::runtime_error("line " + std::to_string(pos.line) + ", column " + std::to_string(pos.column) + ": " + msg),
      pos_(pos), detail_(msg)
{
}

namespace {

struct Token {
    enum class Type { Int, Ident, Sym, End } type;
    std::string text;
    Position pos;
};

std::vector<Token> tokenize(std::string_view src)
{
    std::vector<Token> out;
    Position pos;
    std::size_t i = 0;
    auto advance = [&] {
        if (src[i] == '\n') {
            ++pos.line;
            pos.column = 1;
        } else {
            ++pos.column;
        }
        ++i;
    };
    while (i < src.size()) {
        const auto c = static_cast<unsigned char>(src[i]);
        if (std::isspace(c)) {
            advance();
            continue;
        }
        Token t{Token::Type::Sym, {}, pos};
        if (std::isdigit(c)) {
            t.type = Token::Type::Int;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
                t.text += src[i];
                advance();
            }
        } else if (std::isalpha(c)) {
            t.type = Token::Type::Ident;
            while (i < src.size() && std::isalnum(static_cast<unsigned char>(src[i]))) {
                t.text += src[i];
                advance();
            }
        } else if (std::string_view("+-*^()[],/").find(static_cast<char>(c)) != std::string_view::npos) {
            t.text = std::string(1, static_cast<char>(c));
            advance();
        } else {
            throw ParseError(pos, std::string("unexpected character '") + static_cast<char>(c) + "'");
        }
        out.push_back(std::move(t));
    }
    out.push_back({Token::Type::End, {}, pos});
    return out;
}

unsigned to_nat(const Token& t, unsigned limit, const char* what)
{
    unsigned long long v = 0;
    for (char ch : t.text) {
        v = v * 10 + static_cast<unsigned>(ch - '0');
        if (v > limit)
            throw ParseError(t.pos, std::string(what) + " " + t.text + " is too large");
    }
    return static_cast<unsigned>(v);
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Expr parse_all()
    {
        Expr e = expr();
        if (peek().type != Token::Type::End)
            unexpected();
        return e;
    }

private:
    const Token& peek() const { return toks_[at_]; }
    const Token& next() { return toks_[at_++]; }

    bool is_sym(char c) const { return peek().type == Token::Type::Sym && peek().text[0] == c; }

    bool accept(char c)
    {
        if (!is_sym(c))
            return false;
        ++at_;
        return true;
    }

    void expect(char c)
    {
        if (!accept(c))
            throw ParseError(peek().pos, std::string("expected '") + c + "' but found " + describe(peek()));
    }

    static std::string describe(const Token& t)
    {
        if (t.type == Token::Type::End)
            return "end of input";
        return "'" + t.text + "'";
    }

    [[noreturn]] void unexpected() const { throw ParseError(peek().pos, "unexpected " + describe(peek())); }

    static Expr node(Expr::Kind k, Position pos, std::vector<Expr> args = {})
    {
        Expr e;
        e.kind = k;
        e.pos = pos;
        e.args = std::move(args);
        return e;
    }

    Expr expr()
    {
        const Position start = peek().pos;
        Expr lhs;
        if (accept('-')) {
            std::vector<Expr> a;
            a.push_back(term());
            lhs = node(Expr::Kind::Neg, start, std::move(a));
        } else {
            lhs = term();
        }
        while (is_sym('+') || is_sym('-')) {
            const Token& op = next();
            std::vector<Expr> a;
            a.push_back(std::move(lhs));
            a.push_back(term());
            lhs = node(op.text[0] == '+' ? Expr::Kind::Sum : Expr::Kind::Diff, op.pos, std::move(a));
        }
        return lhs;
    }

    Expr term()
    {
        Expr lhs = factor();
        while (is_sym('*')) {
            const Position pos = next().pos;
            std::vector<Expr> a;
            a.push_back(std::move(lhs));
            a.push_back(factor());
            lhs = node(Expr::Kind::Product, pos, std::move(a));
        }
        return lhs;
    }

    Expr factor()
    {
        Expr base = atom();
        if (!is_sym('^'))
            return base;
        const Position pos = next().pos;
        if (peek().type != Token::Type::Int)
            throw ParseError(peek().pos, "expected a natural exponent after '^'");
        const unsigned e = to_nat(next(), 1000, "exponent");
        std::vector<Expr> a;
        a.push_back(std::move(base));
        Expr p = node(Expr::Kind::Power, pos, std::move(a));
        p.nat = e;
        return p;
    }

    std::vector<Expr> call_args()
    {
        expect('(');
        std::vector<Expr> args;
        args.push_back(expr());
        while (accept(','))
            args.push_back(expr());
        expect(')');
        return args;
    }

    Expr atom()
    {
        const Token& t = peek();
        switch (t.type) {
        case Token::Type::Int:
            return number();
        case Token::Type::Ident:
            return identifier();
        case Token::Type::Sym:
            if (accept('(')) {
                Expr e = expr();
                expect(')');
                return e;
            }
            if (accept('[')) {
                std::vector<Expr> args;
                args.push_back(expr());
                while (accept(','))
                    args.push_back(expr());
                if (args.size() < 2)
                    throw ParseError(t.pos, "a commutator needs at least two entries");
                expect(']');
                return node(Expr::Kind::Bracket, t.pos, std::move(args));
            }
            unexpected();
        case Token::Type::End:
            break;
        }
        unexpected();
    }

    Expr number()
    {
        const Token& t = next();
        Expr e = node(Expr::Kind::Number, t.pos);
        mpz_class num(t.text);
        mpz_class den = 1;
        if (accept('/')) {
            if (peek().type != Token::Type::Int)
                throw ParseError(peek().pos, "expected a denominator after '/'");
            const Token& d = next();
            den = mpz_class(d.text);
            if (den == 0)
                throw ParseError(d.pos, "zero denominator");
        }
        e.number = exactla::Rational(num, den);
        e.number.canonicalize();
        return e;
    }

    Expr identifier()
    {
        const Token& t = next();
        const std::string& s = t.text;
        if (s == "x" || s == "y") {
            Expr e = node(Expr::Kind::Var, t.pos);
            e.var = s == "x" ? freealg::kX : freealg::kY;
            return e;
        }
        auto digits_after = [&](std::size_t k) {
            return s.size() > k && std::all_of(s.begin() + static_cast<std::ptrdiff_t>(k), s.end(),
                                               [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
        };
        if (s[0] == 'x' && digits_after(1)) {
            const unsigned v = to_nat({Token::Type::Int, s.substr(1), t.pos}, std::numeric_limits<Letter>::max(),
                                      "variable index");
            if (v == 0)
                throw ParseError(t.pos, "variable indices start at x1");
            Expr e = node(Expr::Kind::Var, t.pos);
            e.var = static_cast<Letter>(v);
            return e;
        }
        if (s == "o" && is_sym('(')) {
            auto args = call_args();
            if (args.size() != 2)
                throw ParseError(t.pos, "o( ) takes 2 arguments, got " + std::to_string(args.size()));
            return node(Expr::Kind::Circle, t.pos, std::move(args));
        }
        if (s[0] == 'S' && digits_after(1) && is_sym('(')) {
            const unsigned k = to_nat({Token::Type::Int, s.substr(1), t.pos}, 12, "standard polynomial degree");
            if (k == 0)
                throw ParseError(t.pos, "S0 is not defined");
            auto args = call_args();
            if (args.size() != k)
                throw ParseError(t.pos, s + " takes " + std::to_string(k) + " arguments, got " +
                                            std::to_string(args.size()));
            Expr e = node(Expr::Kind::Standard, t.pos, std::move(args));
            e.nat = k;
            return e;
        }
        if (s == "ad" && is_sym('(')) {
            next();
            std::vector<Expr> args;
            args.push_back(expr());
            expect(',');
            args.push_back(expr());
            expect(',');
            if (peek().type != Token::Type::Int)
                throw ParseError(peek().pos, "ad( ) takes a natural repeat count as its third argument");
            const unsigned m = to_nat(next(), 1000, "repeat count");
            if (!is_sym(')'))
                throw ParseError(t.pos, "ad( ) takes 3 arguments");
            next();
            Expr e = node(Expr::Kind::Ad, t.pos, std::move(args));
            e.nat = m;
            return e;
        }
        throw ParseError(t.pos, "unknown identifier '" + s + "'");
    }

    std::vector<Token> toks_;
    std::size_t at_ = 0;
};

} // namespace

Expr parse(std::string_view src) { return Parser(tokenize(src)).parse_all(); }

NcPoly elaborate(const Expr& e)
{
    auto arg = [&](std::size_t i) { return elaborate(e.args[i]); };
    auto all = [&] {
        std::vector<NcPoly> v;
        for (const auto& a : e.args)
            v.push_back(elaborate(a));
        return v;
    };
    switch (e.kind) {
    case Expr::Kind::Number:
        return NcPoly::constant(e.number);
    case Expr::Kind::Var:
        return NcPoly::var(e.var);
    case Expr::Kind::Neg:
        return -arg(0);
    case Expr::Kind::Sum:
        return arg(0) + arg(1);
    case Expr::Kind::Diff:
        return arg(0) - arg(1);
    case Expr::Kind::Product:
        return arg(0) * arg(1);
    case Expr::Kind::Power:
        return freealg::power(arg(0), e.nat);
    case Expr::Kind::Bracket:
        return freealg::left_normed(all());
    case Expr::Kind::Circle:
        return freealg::circ(arg(0), arg(1));
    case Expr::Kind::Standard:
        return freealg::standard(all());
    case Expr::Kind::Ad: {
        const NcPoly f = arg(0);
        NcPoly g = arg(1);
        for (unsigned i = 0; i < e.nat; ++i)
            g = freealg::comm(g, f);
        return g;
    }
    }
    throw std::logic_error("elaborate: unknown node");
}

NcPoly parse_poly(std::string_view src) { return elaborate(parse(src)); }

} // namespace weakid::expr
