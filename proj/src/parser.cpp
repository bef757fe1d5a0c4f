#include "hahn/parser.hpp"

#include <cctype>

#include "hahn/analytic.hpp"
#include "hahn/derivation.hpp"

namespace hahn {

namespace {

struct Lexer {
    const std::string& src;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }
    char get() {
        char c = peek();
        if (pos < src.size()) ++pos;
        return c;
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw SyntaxError(pos, std::string("expected '") + c + "'");
    }
    Integer integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (pos == start) throw SyntaxError(pos, "expected a number");
        return Integer(src.substr(start, pos - start));
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
            ++pos;
        return src.substr(start, pos - start);
    }
};

struct Parser {
    Lexer lex;

    ExprPtr make(Expr e) { return std::make_shared<Expr>(std::move(e)); }
    ExprPtr node(Expr::Kind k, std::vector<ExprPtr> args) {
        Expr e;
        e.kind = k;
        e.args = std::move(args);
        return make(std::move(e));
    }

    ExprPtr expr() {
        ExprPtr left = term();
        for (;;) {
            if (lex.accept('+'))
                left = node(Expr::Kind::Add, {left, term()});
            else if (lex.accept('-'))
                left = node(Expr::Kind::Sub, {left, term()});
            else
                return left;
        }
    }

    ExprPtr term() {
        ExprPtr left = unary();
        for (;;) {
            if (lex.accept('*'))
                left = node(Expr::Kind::Mul, {left, unary()});
            else if (lex.accept('/'))
                left = node(Expr::Kind::Div, {left, unary()});
            else
                return left;
        }
    }

    ExprPtr unary() {
        if (lex.accept('-')) return node(Expr::Kind::Neg, {unary()});
        return postfix();
    }

    ExprPtr postfix() {
        ExprPtr base = atom();
        if (lex.peek() == '^') {
            lex.get();
            Expr e;
            e.kind = Expr::Kind::Pow;
            e.exponent = exponent_literal();
            e.args = {base};
            return make(std::move(e));
        }
        return base;
    }

    // ^3, ^-3, ^(1/2), ^(-3/2)
    Rational exponent_literal() {
        bool paren = lex.accept('(');
        bool negative = lex.accept('-');
        Integer p = lex.integer();
        Rational q(p);
        if (paren && lex.accept('/')) {
            Integer d = lex.integer();
            if (d == 0) throw SyntaxError(lex.pos, "zero denominator");
            q = Rational(p, d);
        }
        if (negative) q = -q;
        if (paren) lex.expect(')');
        return q;
    }

    // [-] [p] x [/ q] inside e^(...)
    Rational exp_rate() {
        bool negative = lex.accept('-');
        Rational p = 1;
        if (std::isdigit(static_cast<unsigned char>(lex.peek()))) p = Rational(lex.integer());
        std::string id = lex.ident();
        if (id != "x") throw SyntaxError(lex.pos, "expected 'x' in exponential");
        if (lex.accept('/')) {
            Integer d = lex.integer();
            if (d == 0) throw SyntaxError(lex.pos, "zero denominator");
            p /= d;
        }
        return negative ? -p : p;
    }

    ExprPtr atom() {
        char c = lex.peek();
        if (c == '(') {
            lex.get();
            ExprPtr e = expr();
            lex.expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Expr e;
            e.kind = Expr::Kind::Number;
            e.value = Rational(lex.integer());
            return make(std::move(e));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id = lex.ident();
            if (id == "e" && lex.peek() == '^') {
                lex.get();
                Expr e;
                e.kind = Expr::Kind::ExpX;
                if (lex.accept('(')) {
                    e.exponent = exp_rate();
                    lex.expect(')');
                } else {
                    std::string x = lex.ident();
                    if (x != "x") throw SyntaxError(lex.pos, "expected 'x' after e^");
                    e.exponent = 1;
                }
                return make(std::move(e));
            }
            auto fn = [&](Expr::Kind k) {
                lex.expect('(');
                ExprPtr a = expr();
                lex.expect(')');
                return node(k, {a});
            };
            if (id == "abs") return fn(Expr::Kind::Abs);
            if (id == "exp") return fn(Expr::Kind::Exp);
            if (id == "log1p") return fn(Expr::Kind::Log1p);
            if (id == "inv") return fn(Expr::Kind::Inv);
            if (id == "D") return fn(Expr::Kind::Derive);
            if (id == "logd") return fn(Expr::Kind::LogD);
            if (id == "exp1") {
                Expr e;
                e.kind = Expr::Kind::ExpX;
                e.exponent = 1;
                return make(std::move(e));
            }
            Expr e;
            e.kind = Expr::Kind::Symbol;
            e.name = std::move(id);
            return make(std::move(e));
        }
        throw SyntaxError(lex.pos, "unexpected character");
    }
};

Series int_pow(const Series& f, const Integer& p, const Rational& N) {
    if (p == 0) return Series::constant(f.context(), 1);
    Series base = p < 0 ? f.invert(N) : f;
    Integer n = p < 0 ? Integer(-p) : p;
    Series r = base;
    for (Integer i = 1; i < n; ++i) r = r * base;
    return r;
}

} // namespace

ExprPtr parse(const std::string& src) {
    Parser p{Lexer{src}};
    ExprPtr e = p.expr();
    if (p.lex.peek() != '\0') throw SyntaxError(p.lex.pos, "trailing input");
    return e;
}

Series eval_expr(const ExprPtr& e, const ContextPtr& ctx, const Rational& N) {
    auto ev = [&](const ExprPtr& a) { return eval_expr(a, ctx, N); };
    switch (e->kind) {
    case Expr::Kind::Number:
        return Series::constant(ctx, e->value);
    case Expr::Kind::Symbol: {
        int i = ctx->index_of(e->name);
        if (i >= 0) return Series::generator(ctx, static_cast<std::size_t>(i));
        if (e->name == "x") {
            for (std::size_t k = 0; k < ctx->size(); ++k)
                if (ctx->gen(k).display.kind == GeneratorDisplay::Kind::Inverse &&
                    ctx->gen(k).display.base == "x")
                    return Series::generator(ctx, k, -1);
        }
        throw UnknownSymbol(e->name);
    }
    case Expr::Kind::ExpX: {
        for (std::size_t k = 0; k < ctx->size(); ++k) {
            const auto& d = ctx->gen(k).display;
            if (d.kind == GeneratorDisplay::Kind::ExpRate)
                return Series::generator(ctx, k, e->exponent / d.rate);
        }
        throw UnknownSymbol("e^x (no exponential generator in this session)");
    }
    case Expr::Kind::Add:
        return ev(e->args[0]) + ev(e->args[1]);
    case Expr::Kind::Sub:
        return ev(e->args[0]) - ev(e->args[1]);
    case Expr::Kind::Mul:
        return ev(e->args[0]) * ev(e->args[1]);
    case Expr::Kind::Div:
        return ev(e->args[0]) * ev(e->args[1]).invert(N);
    case Expr::Kind::Neg:
        return -ev(e->args[0]);
    case Expr::Kind::Pow: {
        Series f = ev(e->args[0]);
        if (den(e->exponent) == 1) return int_pow(f, num(e->exponent), N);
        return power(f, e->exponent, N);
    }
    case Expr::Kind::Abs:
        return ev(e->args[0]).abs();
    case Expr::Kind::Exp:
        return eval_power_series(exp_series(ctx), ev(e->args[0]), N);
    case Expr::Kind::Log1p:
        return eval_power_series(log1p_series(ctx), ev(e->args[0]), N);
    case Expr::Kind::Inv:
        return ev(e->args[0]).invert(N);
    case Expr::Kind::Derive:
        return derive(ev(e->args[0]));
    case Expr::Kind::LogD:
        return log_derivative(ev(e->args[0]), N);
    }
    throw PreconditionFailed("unreachable expression kind");
}

Series eval_expr(const std::string& src, const ContextPtr& ctx, const Rational& N) {
    return eval_expr(parse(src), ctx, N);
}

} // namespace hahn
