#pragma once

// Point vector fields on a jet space, their prolongations, and generator
// actions. A Generator may also carry actions on arbitrary elements (function
// symbols such as sigma(rho,p) or S(s)); those are prolonged over the
// element's own argument space, which is what the equivalence-transformation
// checks need. Without such an action a function symbol transforms through
// its arguments by the chain rule.

#include "calculus.hpp"
#include "parse.hpp"

namespace mhdsym {

struct Generator {
    Ctx ctx;
    Expr xi_t, xi_s;
    std::vector<Expr> eta;         // one per dependent (dep id order)
    std::map<int, Expr> elem_eta;  // function id -> action on the element
    std::string label;

    Expr eta_of(int dep) const { return eta[dep]; }
};

namespace detail {

inline void check_point_coefficient(const Expr& e) {
    for (auto& m : e.terms())
        for (auto& pf : m.f) {
            if (pf.a.kind == AtomKind::Jet && pf.a.order() > 0)
                throw ExprError("point generator coefficient depends on derivative " +
                                render_detail::atom_str(pf.a, *e.ctx()));
            if (pf.a.kind == AtomKind::Func)
                for (auto& arg : *pf.a.args) check_point_coefficient(arg);
        }
}

}  // namespace detail

// Build a generator from coefficient source strings; unmentioned coordinates
// get zero coefficients.
inline Generator make_generator(const Ctx& ctx, const std::string& label,
                                const std::map<std::string, std::string>& coeffs) {
    Generator g;
    g.ctx = ctx;
    g.label = label;
    g.xi_t = Expr::zero(ctx);
    g.xi_s = Expr::zero(ctx);
    g.eta.assign(ctx->n_deps(), Expr::zero(ctx));
    for (auto& [name, src] : coeffs) {
        Expr e = parse_expression(ctx, src);
        if (name == "t")
            g.xi_t = e;
        else if (name == "s")
            g.xi_s = e;
        else if (auto dep = ctx->find_dep(name))
            g.eta[*dep] = e;
        else if (auto fid = ctx->find_func(name))
            g.elem_eta[*fid] = e;
        else
            throw ExprError("generator coefficient for unknown coordinate: " + name);
    }
    detail::check_point_coefficient(g.xi_t);
    detail::check_point_coefficient(g.xi_s);
    for (auto& e : g.eta) detail::check_point_coefficient(e);
    return g;
}

inline Generator generator_linear_combination(const std::vector<std::pair<Frac, Generator>>& parts) {
    if (parts.empty()) throw ExprError("empty generator combination");
    const Ctx& ctx = parts[0].second.ctx;
    Generator g;
    g.ctx = ctx;
    g.xi_t = Expr::zero(ctx);
    g.xi_s = Expr::zero(ctx);
    g.eta.assign(ctx->n_deps(), Expr::zero(ctx));
    for (auto& [c, part] : parts) {
        g.xi_t += part.xi_t * c;
        g.xi_s += part.xi_s * c;
        for (int i = 0; i < ctx->n_deps(); ++i) g.eta[i] += part.eta[i] * c;
        for (auto& [fid, act] : part.elem_eta) {
            auto it = g.elem_eta.find(fid);
            if (it == g.elem_eta.end())
                g.elem_eta.emplace(fid, act * c);
            else
                it->second += act * c;
        }
        if (!g.label.empty()) g.label += " + ";
        g.label += (c == Frac(1) ? "" : "(..)*") + part.label;
    }
    return g;
}

// ---------------------------------------------------------------------------
// Prolongation: eta coefficients for jets, computed lazily by the recursion
//   zeta_{J,k} = D_k(zeta_J) - u_{J+t} D_k(xi_t) - u_{J+s} D_k(xi_s).

class Prolongation {
  public:
    Prolongation(const Generator& g, int max_order = 2) : g_(g), max_order_(max_order) {}

    const Expr& jet_coeff(const Atom& a) {
        if (a.order() > max_order_)
            throw ExprError("prolongation order " + std::to_string(a.order()) + " > requested " +
                            std::to_string(max_order_));
        auto it = cache_.find(a);
        if (it != cache_.end()) return it->second;
        Expr val = Expr::zero(g_.ctx);
        if (a.order() == 0) {
            val = g_.eta[a.id];
        } else {
            int dir = a.dt > 0 ? 0 : 1;  // reduce along t first, then s
            Atom parent = a;
            (dir == 0 ? parent.dt : parent.ds) -= 1;
            Expr zp = jet_coeff(parent);
            Expr jt = Expr::atom(g_.ctx, Atom::jet(a.id, parent.dt + 1, parent.ds));
            Expr js = Expr::atom(g_.ctx, Atom::jet(a.id, parent.dt, parent.ds + 1));
            val = total_derivative(zp, dir) - jt * total_derivative(g_.xi_t, dir) -
                  js * total_derivative(g_.xi_s, dir);
        }
        return cache_.emplace(a, std::move(val)).first->second;
    }

    // coefficient for a derivative atom of an arbitrary element under the
    // generator's element action, prolonged over the element's own arguments
    const Expr& elem_coeff(const Atom& a) {
        auto it = ecache_.find(a);
        if (it != ecache_.end()) return it->second;
        const Ctx& ctx = g_.ctx;
        const FuncDecl& decl = ctx->func(a.id);
        Expr val = Expr::zero(ctx);
        bool base = true;
        for (int k : a.fder) base = base && k == 0;
        if (base) {
            val = g_.elem_eta.at(a.id);
        } else {
            size_t slot = 0;
            std::vector<int> parent = a.fder;
            for (size_t i = 0; i < parent.size(); ++i)
                if (parent[i] > 0) {
                    slot = i;
                    parent[i] -= 1;
                    break;
                }
            Atom pa = a;
            pa.fder = parent;
            Expr zp = elem_coeff(pa);
            val = elem_total_derivative(zp, a.id, slot);
            for (size_t j = 0; j < decl.slots.size(); ++j) {
                std::vector<int> up = parent;
                ++up[j];
                Atom aj = a;
                aj.fder = up;
                const Expr& arg_coeff = coefficient_of_plain(decl.args[j]);
                val -= Expr::func_id(ctx, a.id, std::move(up), a.args) *
                       elem_total_derivative(arg_coeff, a.id, slot);
            }
        }
        return ecache_.emplace(a, std::move(val)).first->second;
    }

    // X applied to an expression (prolonged action)
    Expr apply(const Expr& e) {
        return derive(e, [&](const Atom& a) -> Expr {
            switch (a.kind) {
                case AtomKind::Indep:
                    return a.id == 0 ? g_.xi_t : g_.xi_s;
                case AtomKind::Jet:
                    return jet_coeff(a);
                case AtomKind::Func: {
                    if (g_.elem_eta.count(a.id)) return elem_coeff(a);
                    Expr acc = Expr::zero(g_.ctx);
                    for (size_t s = 0; s < a.args->size(); ++s) {
                        Expr da = apply((*a.args)[s]);
                        if (!da.is_zero()) acc += func_slot_derivative(g_.ctx, a, s) * da;
                    }
                    return acc;
                }
            }
            return Expr::zero(g_.ctx);
        });
    }

  private:
    // generator coefficient of a plain coordinate expression (t, s or a
    // zeroth-order jet) appearing as an element argument
    const Expr& coefficient_of_plain(const Expr& arg) {
        const auto& ms = arg.terms();
        if (ms.size() != 1 || ms[0].f.size() != 1 || !(ms[0].c == Frac(1)))
            throw ExprError("element argument must be a plain coordinate for prolongation");
        const Atom& a = ms[0].f[0].a;
        if (a.kind == AtomKind::Indep) return a.id == 0 ? g_.xi_t : g_.xi_s;
        if (a.kind == AtomKind::Jet && a.order() == 0) return g_.eta[a.id];
        throw ExprError("element argument must be a plain coordinate for prolongation");
    }

    // total derivative on the element's argument space (slot direction)
    Expr elem_total_derivative(const Expr& e, int fid, size_t slot) {
        const Ctx& ctx = g_.ctx;
        const FuncDecl& decl = ctx->func(fid);
        const Expr& slot_arg = decl.args[slot];
        const auto& ms = slot_arg.terms();
        const Atom& coord = ms[0].f[0].a;
        return derive(e, [&](const Atom& a) -> Expr {
            if (atom_cmp(a, coord) == 0) return Expr::integer(ctx, 1);
            if (a.kind == AtomKind::Func && a.id == fid) {
                std::vector<int> up = a.fder;
                ++up[slot];
                return Expr::func_id(ctx, fid, std::move(up), a.args);
            }
            return Expr::zero(ctx);
        });
    }

    const Generator& g_;
    int max_order_;
    std::map<Atom, Expr, AtomLess> cache_;
    std::map<Atom, Expr, AtomLess> ecache_;
};

inline Expr apply_generator(const Generator& g, const Expr& e, int order = 2) {
    Prolongation p(g, order);
    return p.apply(e);
}

// [g1, g2]: coefficients g1(coeffs of g2) - g2(coeffs of g1)
inline Generator commutator(const Generator& g1, const Generator& g2) {
    if (g1.ctx != g2.ctx) throw ExprError("commutator: different contexts");
    const Ctx& ctx = g1.ctx;
    Prolongation p1(g1, 0), p2(g2, 0);
    Generator r;
    r.ctx = ctx;
    r.label = "[" + g1.label + "," + g2.label + "]";
    r.xi_t = p1.apply(g2.xi_t) - p2.apply(g1.xi_t);
    r.xi_s = p1.apply(g2.xi_s) - p2.apply(g1.xi_s);
    r.eta.reserve(ctx->n_deps());
    for (int i = 0; i < ctx->n_deps(); ++i) r.eta.push_back(p1.apply(g2.eta[i]) - p2.apply(g1.eta[i]));
    for (auto& [fid, act2] : g2.elem_eta) {
        Expr v = p1.apply(act2);
        auto it1 = g1.elem_eta.find(fid);
        if (it1 != g1.elem_eta.end()) v -= p2.apply(it1->second);
        if (!v.is_zero()) r.elem_eta.emplace(fid, std::move(v));
    }
    for (auto& [fid, act1] : g1.elem_eta) {
        if (g2.elem_eta.count(fid)) continue;
        Expr v = -p2.apply(act1);
        if (!v.is_zero()) r.elem_eta.emplace(fid, std::move(v));
    }
    return r;
}

}  // namespace mhdsym
