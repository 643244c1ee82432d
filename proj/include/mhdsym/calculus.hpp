#pragma once

// Differentiation and substitution on canonical expressions.
//
// Everything is built on one primitive: an expression is a function of its
// top-level atoms, so any derivation D satisfies
//     D(e) = sum_a  formal_partial(e, a) * D(a),
// and the different operators (formal partials, chain-rule partials, total
// derivatives, generator actions) differ only in what D does to an atom.

#include "expr.hpp"

#include <cmath>
#include <functional>

namespace mhdsym {

// d e / d atom with every atom treated as an independent coordinate
inline Expr formal_partial(const Expr& e, const Atom& a) {
    std::vector<Mono> out;
    for (auto& m : e.terms()) {
        for (size_t i = 0; i < m.f.size(); ++i) {
            if (atom_cmp(m.f[i].a, a) != 0) continue;
            Mono d;
            d.c = m.c * m.f[i].e;
            for (size_t j = 0; j < m.f.size(); ++j) {
                if (j == i) {
                    Frac ne = m.f[i].e - Frac(1);
                    if (!ne.is_zero()) d.f.push_back(PowerF{m.f[i].a, std::move(ne)});
                } else
                    d.f.push_back(m.f[j]);
            }
            // factor list may need resorting when the derived factor vanished
            std::sort(d.f.begin(), d.f.end(),
                      [](const PowerF& x, const PowerF& y) { return atom_cmp(x.a, y.a) < 0; });
            out.push_back(std::move(d));
            break;  // atoms are unique within a monomial
        }
    }
    return Expr::from_monos(e.ctx(), std::move(out));
}

// generic first-order derivation; weight(a) = D(a)
template <class W>
Expr derive(const Expr& e, W&& weight) {
    Expr acc = Expr::zero(e.ctx());
    for (auto& a : e.top_atoms()) {
        Expr w = weight(a);
        if (w.is_zero()) continue;
        acc += formal_partial(e, a) * w;
    }
    return acc;
}

// the derivative atom of a function symbol w.r.t. one of its slots
inline Expr func_slot_derivative(const Ctx& ctx, const Atom& a, size_t slot) {
    const FuncDecl& d = ctx->func(a.id);
    if (d.self_derivative) return Expr::atom(ctx, a);
    std::vector<int> fder = a.fder;
    ++fder[slot];
    return Expr::func_id(ctx, a.id, std::move(fder), a.args);
}

// chain-rule partial derivative w.r.t. a declared atom (jet or independent):
// function symbols differentiate through their arguments.
inline Expr partial_derivative(const Expr& e, const Atom& wrt) {
    return derive(e, [&](const Atom& a) -> Expr {
        if (atom_cmp(a, wrt) == 0) return Expr::integer(e.ctx(), 1);
        if (a.kind == AtomKind::Func) {
            Expr acc = Expr::zero(e.ctx());
            for (size_t s = 0; s < a.args->size(); ++s) {
                Expr da = partial_derivative((*a.args)[s], wrt);
                if (!da.is_zero()) acc += func_slot_derivative(e.ctx(), a, s) * da;
            }
            return acc;
        }
        return Expr::zero(e.ctx());
    });
}

// partial derivative w.r.t. a symbolic constant (field variable); defined on
// the fragment where the constant does not occur in any exponent.
inline Expr partial_derivative_const(const Expr& e, int const_id) {
    std::vector<Mono> out;
    for (auto& m : e.terms()) {
        for (auto& pf : m.f) {
            std::vector<int> vars;
            pf.e.collect_vars(vars);
            if (std::find(vars.begin(), vars.end(), const_id) != vars.end())
                throw ExprError("constant occurs in an exponent: derivative leaves the fragment");
        }
        Mono d = m;
        d.c = m.c.derivative(const_id);
        if (!d.c.is_zero()) out.push_back(std::move(d));
    }
    Expr base = Expr::from_monos(e.ctx(), std::move(out));
    // chain through function arguments
    Expr chain = derive(e, [&](const Atom& a) -> Expr {
        if (a.kind != AtomKind::Func) return Expr::zero(e.ctx());
        Expr acc = Expr::zero(e.ctx());
        for (size_t s = 0; s < a.args->size(); ++s) {
            Expr da = partial_derivative_const((*a.args)[s], const_id);
            if (!da.is_zero()) acc += func_slot_derivative(e.ctx(), a, s) * da;
        }
        return acc;
    });
    return base + chain;
}

// total derivative on the free jet space; dir is an independent-variable id
inline Expr total_derivative(const Expr& e, int dir) {
    const Ctx& ctx = e.ctx();
    return derive(e, [&](const Atom& a) -> Expr {
        switch (a.kind) {
            case AtomKind::Indep:
                return a.id == dir ? Expr::integer(ctx, 1) : Expr::zero(ctx);
            case AtomKind::Jet:
                return Expr::atom(ctx, Atom::jet(a.id, a.dt + (dir == 0 ? 1 : 0),
                                                 a.ds + (dir == 1 ? 1 : 0)));
            case AtomKind::Func: {
                Expr acc = Expr::zero(ctx);
                for (size_t s = 0; s < a.args->size(); ++s) {
                    Expr da = total_derivative((*a.args)[s], dir);
                    if (!da.is_zero()) acc += func_slot_derivative(ctx, a, s) * da;
                }
                return acc;
            }
        }
        return Expr::zero(ctx);
    });
}

inline Expr D_t(const Expr& e) { return total_derivative(e, 0); }
inline Expr D_s(const Expr& e) { return total_derivative(e, 1); }

// ---------------------------------------------------------------------------
// Simultaneous substitution.

struct Bindings {
    std::vector<std::pair<Atom, Expr>> atoms;
    std::vector<std::pair<int, Frac>> consts;

    void bind(Atom a, Expr v) { atoms.emplace_back(std::move(a), std::move(v)); }
    void bind_const(int id, Frac v) { consts.emplace_back(id, std::move(v)); }

    const Expr* image(const Atom& a) const {
        for (auto& [k, v] : atoms)
            if (atom_cmp(k, a) == 0) return &v;
        return nullptr;
    }
    Frac apply_consts(Frac f) const {
        for (auto& [id, v] : consts) f = f.subst(id, v);
        return f;
    }
    bool empty() const { return atoms.empty() && consts.empty(); }
};

inline Expr substitute(const Expr& e, const Bindings& b) {
    if (b.empty()) return e;
    const Ctx& ctx = e.ctx();
    Expr acc = Expr::zero(ctx);
    for (auto& m : e.terms()) {
        Expr term = Expr::constant(ctx, b.apply_consts(m.c));
        for (auto& pf : m.f) {
            Frac ex = b.apply_consts(pf.e);
            if (const Expr* img = b.image(pf.a)) {
                term *= img->pow(ex);
            } else if (pf.a.kind == AtomKind::Func) {
                std::vector<Expr> nargs;
                bool changed = false;
                for (auto& arg : *pf.a.args) {
                    nargs.push_back(substitute(arg, b));
                    if (expr_cmp(nargs.back(), arg) != 0) changed = true;
                }
                Atom na = pf.a;
                if (changed)
                    na.args = std::make_shared<const std::vector<Expr>>(std::move(nargs));
                term *= Expr::atom(ctx, std::move(na)).pow(ex);
            } else {
                term *= Expr::atom(ctx, pf.a).pow(ex);
            }
        }
        acc += term;
    }
    return acc;
}

inline Expr substitute_atom(const Expr& e, const Atom& a, const Expr& v) {
    Bindings b;
    b.bind(a, v);
    return substitute(e, b);
}

// numeric evaluation (used by the simulator for sigma models and profiles)
inline double eval_double(const Expr& e, const std::map<std::string, double>& vars) {
    const Context& cx = *e.ctx();
    std::map<int, double> consts;
    for (int i = 0; i < cx.n_consts(); ++i) {
        auto it = vars.find(cx.const_name(i));
        if (it != vars.end()) consts[i] = it->second;
    }
    double acc = 0;
    for (auto& m : e.terms()) {
        double v = m.c.eval_double(consts);
        for (auto& pf : m.f) {
            std::string name;
            switch (pf.a.kind) {
                case AtomKind::Indep: name = cx.indep_name(pf.a.id); break;
                case AtomKind::Jet:
                    if (pf.a.dt || pf.a.ds) throw ExprError("eval_double: derivative atom");
                    name = cx.dep_name(pf.a.id);
                    break;
                case AtomKind::Func: throw ExprError("eval_double: function symbol present");
            }
            auto it = vars.find(name);
            if (it == vars.end()) throw ExprError("eval_double: unbound variable " + name);
            double ex = pf.e.eval_double(consts);
            v *= std::pow(it->second, ex);
        }
        acc += v;
    }
    return acc;
}

}  // namespace mhdsym
