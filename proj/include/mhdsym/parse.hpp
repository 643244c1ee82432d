#pragma once

// Recursive-descent parser for the expression surface syntax:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' exponent)?
//   base   := number | ident ['(' args ')'] | '(' expr ')'
// Derivative suffixes follow '_' (rho_ts, sigma_rho, f1_v); single-argument
// function symbols also accept primes (S'', F').

#include "expr.hpp"

namespace mhdsym {

struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(const std::string& m, size_t p)
        : std::runtime_error(m + " (at offset " + std::to_string(p) + ")"), pos(p) {}
};

class Parser {
  public:
    Parser(Ctx ctx, std::string_view text) : ctx_(std::move(ctx)), s_(text) {}

    Expr parse() {
        Expr e = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
        return e;
    }

  private:
    Expr parse_expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (next() == '-');
        Expr acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                next();
                Expr t = parse_term();
                acc = (c == '+') ? acc + t : acc - t;
            } else
                break;
        }
        return acc;
    }

    Expr parse_term() {
        Expr acc = parse_factor();
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '*' || c == '/') {
                next();
                Expr f = parse_factor();
                acc = (c == '*') ? acc * f : acc / f;
            } else
                break;
        }
        return acc;
    }

    Expr parse_factor() {
        Expr b = parse_base();
        skip_ws();
        if (peek() == '^') {
            next();
            Frac e = parse_exponent();
            return b.pow(e);
        }
        return b;
    }

    Frac parse_exponent() {
        skip_ws();
        size_t at = pos_;
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            next();
            skip_ws();
        }
        Expr e;
        if (peek() == '(') {
            next();
            e = parse_expr();
            expect(')');
        } else if (isdigit(peek())) {
            e = Expr::constant(ctx_, Frac(parse_number()));
        } else if (isalpha(peek()) || peek() == '_') {
            e = parse_base();
        } else {
            throw ParseError("expected exponent", pos_);
        }
        Frac f;
        try {
            f = e.as_frac();
        } catch (const ExprError&) {
            throw ParseError("exponent must be constants-only", at);
        }
        return neg ? -f : f;
    }

    Expr parse_base() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            next();
            Expr e = parse_expr();
            expect(')');
            return e;
        }
        if (isdigit(c)) return Expr::constant(ctx_, Frac(parse_number()));
        if (isalpha(c) || c == '_') return parse_ident();
        throw ParseError("expected expression", pos_);
    }

    Rat parse_number() {
        size_t start = pos_;
        while (pos_ < s_.size() && isdigit(s_[pos_])) ++pos_;
        return Rat(BigInt(std::string(s_.substr(start, pos_ - start))));
    }

    Expr parse_ident() {
        size_t start = pos_;
        while (pos_ < s_.size() && (isalnum(s_[pos_]) || s_[pos_] == '_')) ++pos_;
        std::string word(s_.substr(start, pos_ - start));
        int primes = 0;
        while (pos_ < s_.size() && s_[pos_] == '\'') {
            ++primes;
            ++pos_;
        }

        // longest declared prefix at '_' boundaries
        std::string base = word;
        std::string suffix;
        while (!ctx_->find_indep(base) && !ctx_->find_dep(base) && !ctx_->find_func(base) &&
               !ctx_->find_const(base)) {
            size_t cut = base.rfind('_');
            if (cut == std::string::npos)
                throw ParseError("undeclared identifier: " + word, start);
            suffix = base.substr(cut + 1) + (suffix.empty() ? "" : "_" + suffix);
            base = base.substr(0, cut);
        }

        if (auto id = ctx_->find_const(base)) {
            if (!suffix.empty() || primes)
                throw ParseError("constant " + base + " takes no derivative suffix", start);
            return Expr::constant(ctx_, Frac::var(*id));
        }
        if (auto id = ctx_->find_indep(base)) {
            if (!suffix.empty() || primes)
                throw ParseError("independent variable " + base + " takes no suffix", start);
            return Expr::indep(ctx_, base);
        }
        if (auto id = ctx_->find_dep(base)) {
            int dt = 0, ds = 0;
            char c0 = ctx_->indep_name(0)[0];
            char c1 = ctx_->n_indeps() > 1 ? ctx_->indep_name(1)[0] : '\0';
            for (char ch : suffix) {
                if (ch == c0)
                    ++dt;
                else if (ch == c1)
                    ++ds;
                else if (ch != '_')
                    throw ParseError("malformed derivative suffix on " + base, start);
            }
            if (primes)
                throw ParseError("dependent " + base + " takes derivative suffixes, not primes",
                                 start);
            return Expr::jet(ctx_, base, dt, ds);
        }
        int fid = *ctx_->find_func(base);
        const FuncDecl& d = ctx_->func(fid);
        std::vector<int> fder(d.slots.size(), 0);
        if (!suffix.empty()) {
            size_t p = 0;
            while (p < suffix.size()) {
                size_t q = suffix.find('_', p);
                std::string part = suffix.substr(p, q == std::string::npos ? q : q - p);
                auto it = std::find(d.slots.begin(), d.slots.end(), part);
                if (it == d.slots.end())
                    throw ParseError("unknown slot '" + part + "' of function " + base, start);
                ++fder[it - d.slots.begin()];
                p = (q == std::string::npos) ? suffix.size() : q + 1;
            }
        }
        if (primes) {
            if (d.slots.size() != 1)
                throw ParseError("primes need a single-argument function: " + base, start);
            fder[0] += primes;
        }
        skip_ws();
        std::shared_ptr<const std::vector<Expr>> args;
        if (peek() == '(') {
            next();
            std::vector<Expr> list;
            skip_ws();
            if (peek() != ')') {
                list.push_back(parse_expr());
                skip_ws();
                while (peek() == ',') {
                    next();
                    list.push_back(parse_expr());
                    skip_ws();
                }
            }
            expect(')');
            args = std::make_shared<const std::vector<Expr>>(std::move(list));
        }
        return Expr::func_id(ctx_, fid, std::move(fder), std::move(args));
    }

    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n')) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char next() { return s_[pos_++]; }
    void expect(char c) {
        skip_ws();
        if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        next();
    }

    Ctx ctx_;
    std::string_view s_;
    size_t pos_ = 0;
};

inline Expr parse_expression(const Ctx& ctx, std::string_view text) {
    return Parser(ctx, text).parse();
}

// Context factory: declarations plus function signatures whose default
// arguments are given as source strings over the declared variables.
struct FuncSpec {
    std::string name;
    std::vector<std::string> slots;
    std::vector<std::string> args;
    bool self_derivative = false;
};

struct ContextSpec {
    std::vector<std::string> indeps;
    std::vector<std::string> deps;
    std::vector<std::string> consts;
    std::vector<FuncSpec> funcs;
};

inline Ctx make_context(const ContextSpec& spec) {
    auto ctx = std::make_shared<Context>();
    for (auto& n : spec.indeps) ctx->add_indep(n);
    for (auto& n : spec.deps) ctx->add_dep(n);
    for (auto& n : spec.consts) ctx->add_const(n);
    for (auto& f : spec.funcs) ctx->add_func(f.name, f.slots, f.self_derivative);
    Ctx frozen = ctx;  // share ownership so parsed args reference the ctx
    for (size_t i = 0; i < spec.funcs.size(); ++i) {
        std::vector<Expr> args;
        for (auto& a : spec.funcs[i].args) args.push_back(parse_expression(frozen, a));
        if (args.size() != spec.funcs[i].slots.size())
            throw ExprError("function " + spec.funcs[i].name + ": args/slots mismatch");
        ctx->set_func_args((int)i, std::move(args));
    }
    return frozen;
}

}  // namespace mhdsym
