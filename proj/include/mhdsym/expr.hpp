#pragma once

// Canonical symbolic expressions over jet variables and arbitrary-function
// symbols. An Expr is always in normal form: a sum of monomials, each a
// scalar coefficient (Frac over the declared symbolic constants) times a
// sorted power product of atoms. Exponents are Frac as well, which covers
// rho^gamma, phi_s^(1-gamma) and the rational-in-constants exponents of the
// classification tables. Zero testing is therefore structural.

#include "field.hpp"

#include <cassert>
#include <memory>
#include <optional>
#include <sstream>

namespace mhdsym {

class Expr;
class Context;
using Ctx = std::shared_ptr<const Context>;

struct ExprError : std::runtime_error {
    explicit ExprError(const std::string& m) : std::runtime_error(m) {}
};

enum class AtomKind : uint8_t { Indep = 0, Jet = 1, Func = 2 };

struct FuncDecl {
    std::string name;
    std::vector<std::string> slots;  // slot names (render partials as _slot / primes)
    std::vector<Expr> args;          // default arguments, canonical
    bool self_derivative = false;    // derivative w.r.t. its slot is itself (exp_s)
};

// A variable space: independents, dependents, symbolic constants (field
// variables) and function symbols. Immutable once exprs start referencing it.
class Context {
  public:
    int add_indep(const std::string& n) { return add(indeps_, n); }
    int add_dep(const std::string& n) { return add(deps_, n); }
    int add_const(const std::string& n) { return add(consts_, n); }
    int add_func(const std::string& n, std::vector<std::string> slots, bool self_der = false) {
        names_.emplace(n, std::pair{AtomKind::Func, (int)funcs_.size()});
        funcs_.push_back(FuncDecl{n, std::move(slots), {}, self_der});
        return (int)funcs_.size() - 1;
    }
    void set_func_args(int fid, std::vector<Expr> args) { funcs_[fid].args = std::move(args); }

    int n_indeps() const { return (int)indeps_.size(); }
    int n_deps() const { return (int)deps_.size(); }
    int n_consts() const { return (int)consts_.size(); }
    int n_funcs() const { return (int)funcs_.size(); }
    const std::string& indep_name(int i) const { return indeps_[i]; }
    const std::string& dep_name(int i) const { return deps_[i]; }
    const std::string& const_name(int i) const { return consts_[i]; }
    const FuncDecl& func(int i) const { return funcs_[i]; }

    std::optional<std::pair<AtomKind, int>> find(const std::string& n) const {
        auto it = names_.find(n);
        if (it == names_.end()) {
            auto c = const_ids_.find(n);
            if (c != const_ids_.end()) return std::pair{AtomKind::Indep, -2 - c->second};
            return std::nullopt;
        }
        return it->second;
    }
    std::optional<int> find_const(const std::string& n) const {
        auto c = const_ids_.find(n);
        if (c == const_ids_.end()) return std::nullopt;
        return c->second;
    }
    std::optional<int> find_dep(const std::string& n) const {
        auto it = names_.find(n);
        if (it == names_.end() || it->second.first != AtomKind::Jet) return std::nullopt;
        return it->second.second;
    }
    std::optional<int> find_func(const std::string& n) const {
        auto it = names_.find(n);
        if (it == names_.end() || it->second.first != AtomKind::Func) return std::nullopt;
        return it->second.second;
    }
    std::optional<int> find_indep(const std::string& n) const {
        auto it = names_.find(n);
        if (it == names_.end() || it->second.first != AtomKind::Indep) return std::nullopt;
        return it->second.second;
    }

  private:
    int add(std::vector<std::string>& v, const std::string& n) {
        AtomKind k = (&v == &indeps_) ? AtomKind::Indep
                     : (&v == &deps_) ? AtomKind::Jet
                                      : AtomKind::Func;  // unused for consts
        if (&v == &consts_) {
            const_ids_.emplace(n, (int)v.size());
        } else {
            names_.emplace(n, std::pair{k, (int)v.size()});
        }
        v.push_back(n);
        return (int)v.size() - 1;
    }

    std::vector<std::string> indeps_, deps_, consts_;
    std::vector<FuncDecl> funcs_;
    std::map<std::string, std::pair<AtomKind, int>> names_;
    std::map<std::string, int> const_ids_;
};

struct Atom {
    AtomKind kind;
    int id = 0;
    int dt = 0, ds = 0;                              // jet orders
    std::vector<int> fder;                           // per-slot derivative counts
    std::shared_ptr<const std::vector<Expr>> args;   // function arguments

    static Atom indep(int id) { return Atom{AtomKind::Indep, id, 0, 0, {}, nullptr}; }
    static Atom jet(int dep, int dt, int ds) { return Atom{AtomKind::Jet, dep, dt, ds, {}, nullptr}; }

    bool is_jet0() const { return kind == AtomKind::Jet && dt == 0 && ds == 0; }
    int order() const { return dt + ds; }
};

int atom_cmp(const Atom& a, const Atom& b);
int expr_cmp(const Expr& a, const Expr& b);

struct PowerF {
    Atom a;
    Frac e;
};

struct Mono {
    Frac c;
    std::vector<PowerF> f;  // sorted by atom_cmp, exponents nonzero
};

inline int factors_cmp(const std::vector<PowerF>& x, const std::vector<PowerF>& y) {
    size_t n = std::min(x.size(), y.size());
    for (size_t i = 0; i < n; ++i) {
        int c = atom_cmp(x[i].a, y[i].a);
        if (c) return c;
        c = frac_cmp(x[i].e, y[i].e);
        if (c) return c;
    }
    if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
    return 0;
}

class Expr {
  public:
    Expr() = default;

    static Expr zero(Ctx c) { return Expr(std::move(c), {}); }
    static Expr constant(Ctx c, Frac v) {
        if (v.is_zero()) return zero(std::move(c));
        return Expr(std::move(c), {Mono{std::move(v), {}}});
    }
    static Expr integer(Ctx c, long v) { return constant(std::move(c), Frac(v)); }
    static Expr sym_const(Ctx c, const std::string& name) {
        auto id = c->find_const(name);
        if (!id) throw ExprError("undeclared constant: " + name);
        return constant(std::move(c), Frac::var(*id));
    }
    static Expr indep(Ctx c, const std::string& name) {
        auto id = c->find_indep(name);
        if (!id) throw ExprError("undeclared independent: " + name);
        return atom(std::move(c), Atom::indep(*id));
    }
    static Expr jet(Ctx c, const std::string& dep, int dt = 0, int ds = 0) {
        auto id = c->find_dep(dep);
        if (!id) throw ExprError("undeclared dependent: " + dep);
        return atom(std::move(c), Atom::jet(*id, dt, ds));
    }
    // function atom with the declared default arguments
    static Expr func(Ctx c, const std::string& name, std::vector<int> fder = {}) {
        auto id = c->find_func(name);
        if (!id) throw ExprError("undeclared function: " + name);
        return func_id(std::move(c), *id, std::move(fder));
    }
    static Expr func_id(Ctx c, int fid, std::vector<int> fder = {},
                        std::shared_ptr<const std::vector<Expr>> args = nullptr) {
        const FuncDecl& d = c->func(fid);
        if (fder.empty()) fder.assign(d.slots.size(), 0);
        if (fder.size() != d.slots.size()) throw ExprError("bad derivative multi-index for " + d.name);
        Atom a{AtomKind::Func, fid, 0, 0, std::move(fder), nullptr};
        if (args)
            a.args = std::move(args);
        else
            a.args = std::make_shared<const std::vector<Expr>>(d.args);
        if (a.args->size() != d.slots.size())
            throw ExprError("function " + d.name + " expects " + std::to_string(d.slots.size()) +
                            " arguments");
        if (d.self_derivative) {  // collapse: derivative equals itself
            for (auto& k : a.fder) k = 0;
        }
        return atom(std::move(c), std::move(a));
    }
    static Expr atom(Ctx c, Atom a) {
        return Expr(std::move(c), {Mono{Frac(1), {PowerF{std::move(a), Frac(1)}}}});
    }
    static Expr from_monos(Ctx c, std::vector<Mono> ms) {
        std::sort(ms.begin(), ms.end(),
                  [](const Mono& x, const Mono& y) { return factors_cmp(x.f, y.f) < 0; });
        std::vector<Mono> out;
        for (auto& m : ms) {
            if (m.c.is_zero()) continue;
            if (!out.empty() && factors_cmp(out.back().f, m.f) == 0)
                out.back().c += m.c;
            else
                out.push_back(std::move(m));
        }
        std::erase_if(out, [](const Mono& m) { return m.c.is_zero(); });
        return Expr(std::move(c), std::move(out));
    }

    const Ctx& ctx() const { return ctx_; }
    const std::vector<Mono>& terms() const {
        static const std::vector<Mono> empty;
        return t_ ? *t_ : empty;
    }
    bool is_zero() const { return terms().empty(); }

    // the scalar value of a constants-only expression
    Frac as_frac() const {
        Frac acc(0);
        for (auto& m : terms()) {
            if (!m.f.empty()) throw ExprError("expression is not constants-only");
            acc += m.c;
        }
        return acc;
    }

    friend Expr operator+(const Expr& a, const Expr& b) {
        Ctx c = merge_ctx(a, b);
        std::vector<Mono> out;
        const auto& x = a.terms();
        const auto& y = b.terms();
        size_t i = 0, j = 0;
        while (i < x.size() || j < y.size()) {
            int cmp = i == x.size()   ? 1
                      : j == y.size() ? -1
                                      : factors_cmp(x[i].f, y[j].f);
            if (cmp < 0)
                out.push_back(x[i++]);
            else if (cmp > 0)
                out.push_back(y[j++]);
            else {
                Mono m = x[i++];
                m.c += y[j++].c;
                if (!m.c.is_zero()) out.push_back(std::move(m));
            }
        }
        return Expr(std::move(c), std::move(out));
    }
    friend Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }
    Expr operator-() const {
        std::vector<Mono> out = terms();
        for (auto& m : out) m.c = -m.c;
        return Expr(ctx_, std::move(out));
    }
    friend Expr operator*(const Expr& a, const Expr& b) {
        Ctx c = merge_ctx(a, b);
        std::vector<Mono> out;
        out.reserve(a.terms().size() * b.terms().size());
        for (auto& ma : a.terms())
            for (auto& mb : b.terms()) out.push_back(mono_mul(ma, mb));
        return from_monos(std::move(c), std::move(out));
    }
    Expr& operator+=(const Expr& o) { return *this = *this + o; }
    Expr& operator-=(const Expr& o) { return *this = *this - o; }
    Expr& operator*=(const Expr& o) { return *this = *this * o; }

    friend Expr operator*(const Expr& a, const Frac& s) {
        if (s.is_zero()) return zero(a.ctx_);
        std::vector<Mono> out = a.terms();
        for (auto& m : out) m.c *= s;
        return Expr(a.ctx_, std::move(out));
    }
    friend Expr operator*(const Frac& s, const Expr& a) { return a * s; }

    Expr pow(const Frac& e) const {
        if (e.is_zero()) return integer(ctx_, 1);
        if (e.is_rational() && e.as_rational() == 1) return *this;
        if (e.is_integer()) {
            long n = e.as_long();
            if (n > 0 && terms().size() > 1) {
                Expr r = integer(ctx_, 1), b = *this;
                while (n) {
                    if (n & 1) r *= b;
                    if (n >>= 1) b *= b;
                }
                return r;
            }
        }
        if (terms().size() != 1)
            throw ExprError("exponent outside the supported fragment: non-monomial base");
        const Mono& m = terms()[0];
        Mono out;
        if (e.is_integer())
            out.c = m.c.pow(e.as_long());
        else if (m.c == Frac(1))
            out.c = Frac(1);
        else
            throw ExprError("exponent outside the supported fragment: symbolic power of coefficient");
        for (auto& pf : m.f) {
            Frac ne = pf.e * e;
            if (!ne.is_zero()) out.f.push_back(PowerF{pf.a, std::move(ne)});
        }
        return Expr(ctx_, {std::move(out)});
    }

    friend Expr operator/(const Expr& a, const Expr& b) {
        if (b.is_zero()) throw ExprError("division by zero");
        if (b.terms().size() == 1) return a * b.pow(Frac(-1));
        // constants-only denominator folds into the field
        Frac f = b.as_frac();
        return a * (Frac(1) / f);
    }

    bool operator==(const Expr& o) const { return expr_cmp(*this, o) == 0; }

    std::string str() const;

    // all distinct atoms occurring at top level of the power products
    std::vector<Atom> top_atoms() const {
        std::vector<Atom> out;
        for (auto& m : terms())
            for (auto& pf : m.f) {
                bool seen = false;
                for (auto& a : out)
                    if (atom_cmp(a, pf.a) == 0) {
                        seen = true;
                        break;
                    }
                if (!seen) out.push_back(pf.a);
            }
        return out;
    }

  private:
    Expr(Ctx c, std::vector<Mono> t)
        : ctx_(std::move(c)), t_(std::make_shared<const std::vector<Mono>>(std::move(t))) {}

    Expr terms_as_expr() const { return *this; }

    static Ctx merge_ctx(const Expr& a, const Expr& b) {
        if (a.ctx_ && b.ctx_ && a.ctx_ != b.ctx_)
            throw ExprError("mixing expressions from different contexts");
        return a.ctx_ ? a.ctx_ : b.ctx_;
    }

    static Mono mono_mul(const Mono& a, const Mono& b) {
        Mono r;
        r.c = a.c * b.c;
        r.f.reserve(a.f.size() + b.f.size());
        size_t i = 0, j = 0;
        while (i < a.f.size() || j < b.f.size()) {
            int c = i == a.f.size()   ? 1
                    : j == b.f.size() ? -1
                                      : atom_cmp(a.f[i].a, b.f[j].a);
            if (c < 0)
                r.f.push_back(a.f[i++]);
            else if (c > 0)
                r.f.push_back(b.f[j++]);
            else {
                Frac e = a.f[i].e + b.f[j].e;
                if (!e.is_zero()) r.f.push_back(PowerF{a.f[i].a, std::move(e)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    Ctx ctx_;
    std::shared_ptr<const std::vector<Mono>> t_;
};

inline int atom_cmp(const Atom& a, const Atom& b) {
    if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
    if (a.id != b.id) return a.id < b.id ? -1 : 1;
    if (a.kind == AtomKind::Jet) {
        if (a.dt != b.dt) return a.dt < b.dt ? -1 : 1;
        if (a.ds != b.ds) return a.ds < b.ds ? -1 : 1;
        return 0;
    }
    if (a.kind == AtomKind::Func) {
        if (a.fder != b.fder) return a.fder < b.fder ? -1 : 1;
        const auto& x = *a.args;
        const auto& y = *b.args;
        if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
        for (size_t i = 0; i < x.size(); ++i) {
            int c = expr_cmp(x[i], y[i]);
            if (c) return c;
        }
    }
    return 0;
}

inline int expr_cmp(const Expr& a, const Expr& b) {
    const auto& x = a.terms();
    const auto& y = b.terms();
    if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
    for (size_t i = 0; i < x.size(); ++i) {
        int c = factors_cmp(x[i].f, y[i].f);
        if (c) return c;
        c = frac_cmp(x[i].c, y[i].c);
        if (c) return c;
    }
    return 0;
}

struct AtomLess {
    bool operator()(const Atom& a, const Atom& b) const { return atom_cmp(a, b) < 0; }
};

// ---------------------------------------------------------------------------
// Rendering. The output re-parses to the same canonical form.

namespace render_detail {

inline std::string poly_str(const Poly& p, const Context& ctx) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& ts = p.terms();
    for (size_t k = ts.size(); k-- > 0;) {  // leading term first
        const auto& [m, c] = ts[k];
        Rat mag = c < 0 ? Rat(-c) : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        std::string factors;
        for (auto& [v, e] : m.v) {
            if (!factors.empty()) factors += "*";
            factors += ctx.const_name(v);
            if (e != 1) factors += "^" + std::to_string(e);
        }
        if (factors.empty())
            out += rat_str(mag);
        else if (mag == 1)
            out += factors;
        else
            out += rat_str(mag) + "*" + factors;
    }
    return out;
}

inline std::string frac_str(const Frac& f, const Context& ctx, bool in_product) {
    if (f.is_rational()) {
        Rat r = f.as_rational();
        std::string s = rat_str(r < 0 ? Rat(-r) : r);
        return (r < 0 ? "-" : "") + s;  // caller handles sign when in sums
    }
    std::string num = poly_str(f.num(), ctx);
    if (f.den().is_constant() && f.den().as_constant() == 1) {
        bool simple = f.num().terms().size() == 1;
        if (simple && !in_product) return num;
        return "(" + num + ")";
    }
    return "((" + num + ")/(" + poly_str(f.den(), ctx) + "))";
}

inline std::string atom_str(const Atom& a, const Context& ctx) {
    switch (a.kind) {
        case AtomKind::Indep:
            return ctx.indep_name(a.id);
        case AtomKind::Jet: {
            std::string s = ctx.dep_name(a.id);
            if (a.dt || a.ds) {
                s += "_";
                s += std::string(a.dt, ctx.indep_name(0)[0]);
                if (a.ds) s += std::string(a.ds, ctx.indep_name(1)[0]);
            }
            return s;
        }
        case AtomKind::Func: {
            const FuncDecl& d = ctx.func(a.id);
            std::string s = d.name;
            if (d.slots.size() == 1) {
                for (int k = 0; k < a.fder[0]; ++k) s += "'";
            } else {
                for (size_t i = 0; i < a.fder.size(); ++i)
                    for (int k = 0; k < a.fder[i]; ++k) s += "_" + d.slots[i];
            }
            bool default_args = a.args->size() == d.args.size();
            if (default_args)
                for (size_t i = 0; i < d.args.size(); ++i)
                    if (expr_cmp((*a.args)[i], d.args[i]) != 0) {
                        default_args = false;
                        break;
                    }
            if (!default_args) {
                s += "(";
                for (size_t i = 0; i < a.args->size(); ++i) {
                    if (i) s += ",";
                    s += (*a.args)[i].str();
                }
                s += ")";
            }
            return s;
        }
    }
    return "?";
}

}  // namespace render_detail

inline std::string Expr::str() const {
    if (is_zero()) return "0";
    const Context& cx = *ctx_;
    std::string out;
    for (auto& m : terms()) {
        bool neg = m.c.is_rational() && m.c.as_rational() < 0;
        Frac mag = neg ? -m.c : m.c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string prod;
        for (auto& pf : m.f) {
            if (!prod.empty()) prod += "*";
            prod += render_detail::atom_str(pf.a, cx);
            if (!(pf.e.is_rational() && pf.e.as_rational() == 1)) {
                if (pf.e.is_integer() && pf.e.as_long() > 0)
                    prod += "^" + std::to_string(pf.e.as_long());
                else
                    prod += "^(" + render_detail::frac_str(pf.e, cx, false) + ")";
            }
        }
        bool unit = mag.is_rational() && mag.as_rational() == 1;
        if (prod.empty())
            out += render_detail::frac_str(mag, cx, false);
        else if (unit)
            out += prod;
        else
            out += render_detail::frac_str(mag, cx, true) + "*" + prod;
    }
    return out;
}

}  // namespace mhdsym
