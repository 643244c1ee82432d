#pragma once

// Oriented PDE systems (lead derivative -> right-hand side) and reduction of
// expressions modulo a system. Reduction substitutes every occurrence of a
// lead jet, including derivative prolongations of the rules, until no lead
// remains; for well-oriented systems this terminates.

#include "noether.hpp"

#include <functional>

namespace mhdsym {

struct Rule {
    Atom lead;  // jet atom
    Expr rhs;
};

struct PdeSystem {
    Ctx ctx;
    std::string name;
    std::vector<Rule> rules;      // differential rules (time leads)
    std::vector<Rule> algebraic;  // order-zero leads (E^y, E^z orientations)
    std::map<std::string, std::vector<Rule>> aux;  // tag -> gated rules

    std::vector<const Rule*> active_rules(const std::set<std::string>& use_aux) const {
        std::vector<const Rule*> out;
        for (auto& r : rules) out.push_back(&r);
        for (auto& r : algebraic) out.push_back(&r);
        for (auto& tag : use_aux) {
            auto it = aux.find(tag);
            if (it == aux.end()) throw ExprError("system " + name + " has no aux tag '" + tag + "'");
            for (auto& r : it->second) out.push_back(&r);
        }
        return out;
    }
};

inline Rule make_rule(const Ctx& ctx, const std::string& lead, const std::string& rhs) {
    Expr l = parse_expression(ctx, lead);
    const auto& ms = l.terms();
    if (ms.size() != 1 || ms[0].f.size() != 1 || !(ms[0].c == Frac(1)) ||
        !(ms[0].f[0].e == Frac(1)) || ms[0].f[0].a.kind != AtomKind::Jet)
        throw ExprError("rule lead must be a single jet variable: " + lead);
    return Rule{ms[0].f[0].a, parse_expression(ctx, rhs)};
}

inline Expr reduce_mod_system(const Expr& e, const PdeSystem& sys,
                              const std::set<std::string>& use_aux = {}, int guard = 64) {
    auto rules = sys.active_rules(use_aux);
    Expr cur = e;
    for (int pass = 0; pass < guard; ++pass) {
        // find reducible atoms: jet (i, J) with J >= lead.J componentwise
        Bindings b;
        std::function<void(const Expr&)> scan = [&](const Expr& x) {
            for (auto& m : x.terms())
                for (auto& pf : m.f) {
                    if (pf.a.kind == AtomKind::Func) {
                        for (auto& arg : *pf.a.args) scan(arg);
                        continue;
                    }
                    if (pf.a.kind != AtomKind::Jet) continue;
                    if (b.image(pf.a)) continue;
                    for (const Rule* r : rules) {
                        if (r->lead.id != pf.a.id || pf.a.dt < r->lead.dt || pf.a.ds < r->lead.ds)
                            continue;
                        Expr rhs = r->rhs;
                        for (int k = r->lead.dt; k < pf.a.dt; ++k) rhs = D_t(rhs);
                        for (int k = r->lead.ds; k < pf.a.ds; ++k) rhs = D_s(rhs);
                        b.bind(pf.a, std::move(rhs));
                        break;
                    }
                }
        };
        scan(cur);
        if (b.atoms.empty()) return cur;
        cur = substitute(cur, b);
    }
    throw ExprError("reduce_mod_system: termination guard exceeded in system " + sys.name +
                    " (mis-oriented rules?)");
}

// divergence of the pair modulo the system; zero iff the law holds
inline Expr verify_conservation_law(const ConservationLaw& cl, const PdeSystem& sys) {
    return reduce_mod_system(D_t(cl.Tt) + D_s(cl.Ts), sys, cl.requires_aux);
}

// trivial-law equivalence: the difference pair is itself a conservation law
inline bool trivially_equivalent(const ConservationLaw& a, const ConservationLaw& b,
                                 const PdeSystem& sys) {
    ConservationLaw d;
    d.Tt = a.Tt - b.Tt;
    d.Ts = a.Ts - b.Ts;
    d.requires_aux = a.requires_aux;
    for (auto& t : b.requires_aux) d.requires_aux.insert(t);
    return verify_conservation_law(d, sys).is_zero();
}

}  // namespace mhdsym
