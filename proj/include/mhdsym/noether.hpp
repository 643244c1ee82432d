#pragma once

// First-order Lagrangians, the variational (Euler) operator, Noether
// operators, the Noether identity, and symmetry classification of a
// generator with respect to a Lagrangian.

#include "generator.hpp"

#include <set>

namespace mhdsym {

struct Lagrangian {
    Ctx ctx;
    Expr density;
    std::vector<int> deps;  // dependent ids entering the variational principle
    std::string label;
};

inline Lagrangian make_lagrangian(const Ctx& ctx, const std::string& label,
                                  const std::string& density,
                                  const std::vector<std::string>& deps) {
    Lagrangian L;
    L.ctx = ctx;
    L.label = label;
    L.density = parse_expression(ctx, density);
    for (auto& d : deps) {
        auto id = ctx->find_dep(d);
        if (!id) throw ExprError("lagrangian dependent not declared: " + d);
        L.deps.push_back(*id);
    }
    for (auto& m : L.density.terms())
        for (auto& pf : m.f)
            if (pf.a.kind == AtomKind::Jet && pf.a.order() > 1)
                throw ExprError("lagrangian must be first order");
    return L;
}

// delta L / delta phi_i = dL/dphi - D_t dL/dphi_t - D_s dL/dphi_s
inline Expr euler_operator(const Lagrangian& L, int dep) {
    Expr r = partial_derivative(L.density, Atom::jet(dep, 0, 0));
    r -= D_t(partial_derivative(L.density, Atom::jet(dep, 1, 0)));
    r -= D_s(partial_derivative(L.density, Atom::jet(dep, 0, 1)));
    return r;
}

// (N^t L, N^s L) with N^t = xi_t + (eta^i - xi_t phi^i_t - xi_s phi^i_s) d/dphi^i_t
inline std::pair<Expr, Expr> noether_operators(const Generator& g, const Lagrangian& L) {
    const Ctx& ctx = L.ctx;
    Expr nt = g.xi_t * L.density;
    Expr ns = g.xi_s * L.density;
    for (int dep : L.deps) {
        Expr w = g.eta[dep] - g.xi_t * Expr::atom(ctx, Atom::jet(dep, 1, 0)) -
                 g.xi_s * Expr::atom(ctx, Atom::jet(dep, 0, 1));
        nt += w * partial_derivative(L.density, Atom::jet(dep, 1, 0));
        ns += w * partial_derivative(L.density, Atom::jet(dep, 0, 1));
    }
    return {nt, ns};
}

// X L + L (D_t xi_t + D_s xi_s) - sum_i (eta - xi phi_t - xi phi_s) dL/dphi_i
//   - D_t(N^t L) - D_s(N^s L);  identically zero for every pair (g, L)
inline Expr noether_identity_residual(const Generator& g, const Lagrangian& L) {
    const Ctx& ctx = L.ctx;
    Expr r = apply_generator(g, L.density, 1) +
             L.density * (D_t(g.xi_t) + D_s(g.xi_s));
    for (int dep : L.deps) {
        Expr w = g.eta[dep] - g.xi_t * Expr::atom(ctx, Atom::jet(dep, 1, 0)) -
                 g.xi_s * Expr::atom(ctx, Atom::jet(dep, 0, 1));
        r -= w * euler_operator(L, dep);
    }
    auto [nt, ns] = noether_operators(g, L);
    r -= D_t(nt) + D_s(ns);
    return r;
}

struct DivergencePair {
    Expr B1, B2;
};

enum class SymKind { Variational, Divergence, None };

struct SymmetryClass {
    SymKind kind;
    std::optional<DivergencePair> pair;
    Expr residual;  // X L + L (D xi); diagnostic when kind == None
};

inline SymmetryClass symmetry_class(const Generator& g, const Lagrangian& L,
                                    const std::optional<DivergencePair>& candidate = {}) {
    Expr r = apply_generator(g, L.density, 1) + L.density * (D_t(g.xi_t) + D_s(g.xi_s));
    if (r.is_zero()) return {SymKind::Variational, std::nullopt, r};
    if (candidate) {
        Expr d = r - D_t(candidate->B1) - D_s(candidate->B2);
        if (d.is_zero()) return {SymKind::Divergence, candidate, r};
    }
    return {SymKind::None, std::nullopt, r};
}

struct ConservationLaw {
    Expr Tt, Ts;
    std::set<std::string> requires_aux;
    std::string label;
    std::string note;
};

// Theorem: a variational/divergence symmetry yields the conserved pair
// (N^t L - B1, N^s L - B2).
inline ConservationLaw conservation_from_symmetry(const Generator& g, const Lagrangian& L,
                                                  const std::optional<DivergencePair>& pair = {}) {
    SymmetryClass sc = symmetry_class(g, L, pair);
    if (sc.kind == SymKind::None)
        throw ExprError("generator " + g.label + " is not a variational or divergence symmetry of " +
                        L.label);
    auto [nt, ns] = noether_operators(g, L);
    ConservationLaw cl;
    cl.Tt = nt;
    cl.Ts = ns;
    if (sc.kind == SymKind::Divergence) {
        cl.Tt -= sc.pair->B1;
        cl.Ts -= sc.pair->B2;
    }
    cl.label = "noether(" + g.label + ")";
    return cl;
}

}  // namespace mhdsym
