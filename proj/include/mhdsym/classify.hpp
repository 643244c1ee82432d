#pragma once

// Symmetry verification: invariance residuals of prolonged generators on a
// system, the classifying equations evaluated against conductivity/entropy
// candidates, and mechanical verification of the classification tables
// (including necessity: perturbed arbitrary elements must fail).

#include "corpus_ext.hpp"

namespace mhdsym {

inline int system_order(const PdeSystem& sys) {
    int ord = 1;
    for (auto& r : sys.rules) ord = std::max(ord, r.lead.order());
    return ord;
}

// one residual per equation (differential rules first, then algebraic)
inline std::vector<Expr> invariance_residuals(const Generator& g, const PdeSystem& sys) {
    int ord = system_order(sys);
    Prolongation p(g, ord + 1);
    std::vector<Expr> out;
    auto run = [&](const std::vector<Rule>& rules) {
        for (auto& r : rules) {
            Expr F = Expr::atom(sys.ctx, r.lead) - r.rhs;
            out.push_back(reduce_mod_system(p.apply(F), sys));
        }
    };
    run(sys.rules);
    run(sys.algebraic);
    return out;
}

inline bool is_admitted(const Generator& g, const PdeSystem& sys) {
    for (auto& r : invariance_residuals(g, sys))
        if (!r.is_zero()) return false;
    return true;
}

struct ClassifyingReport {
    std::string label;
    std::vector<Expr> residuals;
    bool admitted = false;
    std::vector<Expr> conditions;  // the residuals that are not identically zero
};

inline ClassifyingReport classify_generator(const Generator& g, const PdeSystem& sys) {
    ClassifyingReport rep;
    rep.label = g.label;
    rep.residuals = invariance_residuals(g, sys);
    rep.admitted = true;
    for (auto& r : rep.residuals)
        if (!r.is_zero()) {
            rep.admitted = false;
            rep.conditions.push_back(r);
        }
    return rep;
}

// the classifying equations for the finite-conductivity classification:
//   2 (a6 - a7 + a8) rho sigma_rho + 2 a8 p sigma_p = (a6 - 2 a7) sigma,
//   H0 a8 = 0                        (only when H0 != 0)
// evaluated for given generator coefficients and a sigma candidate
inline std::vector<Expr> classifying_residuals(const std::map<std::string, std::string>& coeffs,
                                               const std::string& sigma, bool h0_nonzero) {
    Ctx ctx = case_context(h0_nonzero ? CaseId::FiniteH0nz : CaseId::FiniteH0zero);
    Bindings b;
    for (auto& nm : {"a5", "a6", "a7", "a8"}) {
        auto it = coeffs.find(nm);
        Frac v = it == coeffs.end() ? Frac(0) : parse_expression(ctx, it->second).as_frac();
        b.bind_const(*ctx->find_const(nm), v);
    }
    if (!sigma.empty())
        bind_function_subst(b, ctx, "sigma", parse_expression(ctx, sigma), 2);
    std::vector<Expr> out;
    out.push_back(substitute(parse_expression(ctx,
                                              "2*(a6 - a7 + a8)*rho*sigma_rho"
                                              " + 2*a8*p*sigma_p - (a6 - 2*a7)*sigma"),
                             b));
    if (h0_nonzero) out.push_back(substitute(parse_expression(ctx, "H0*a8"), b));
    return out;
}

// ---------------------------------------------------------------------------
// Table verification

struct RowReport {
    std::string table;
    int row = 0;
    bool admitted = false;
    bool perturbed_fails = false;
    std::vector<std::string> residuals;  // rendered nonzero residuals, if any
    std::string note;
};

namespace classify_detail {

inline Bindings row_bindings(const Ctx& ctx, const std::map<std::string, std::string>& elem,
                             const std::map<std::string, std::string>& consts) {
    Bindings bc;
    for (auto& [cn, v] : consts) {
        auto id = ctx->find_const(cn);
        if (!id) throw ExprError("table condition constant not declared: " + cn);
        bc.bind_const(*id, parse_expression(ctx, v).as_frac());
    }
    Bindings b = bc;
    for (auto& [f, img] : elem)
        bind_function_subst(b, ctx, f, substitute(parse_expression(ctx, img), bc));
    return b;
}

inline std::vector<Generator> row_generators(const TableRow& row) {
    Ctx ctx = case_context(row.cse);
    std::vector<Generator> gens;
    if (!row.combos.empty()) {
        GeneratorGroup basis = extended_algebra(row.cse);
        auto find = [&](const std::string& label) -> const Generator& {
            for (auto& g : basis.gens)
                if (g.label == label) return g;
            throw ExprError("unknown basis label " + label);
        };
        for (auto& combo : row.combos) {
            std::vector<std::pair<Frac, Generator>> parts;
            for (auto& [coef, label] : combo)
                parts.emplace_back(parse_expression(ctx, coef).as_frac(), find(label));
            Generator g = generator_linear_combination(parts);
            g.label = row.table + " row " + std::to_string(row.row);
            gens.push_back(std::move(g));
        }
    }
    for (auto& m : row.direct) {
        Generator g = make_generator(ctx, row.table + " row " + std::to_string(row.row), m);
        gens.push_back(std::move(g));
    }
    return gens;
}

// residuals of one instantiated row; empty strings if everything vanishes
inline std::vector<std::string> row_residuals(const TableRow& row,
                                              const std::map<std::string, std::string>& elem,
                                              const std::map<std::string, std::string>& consts) {
    Ctx ctx = case_context(row.cse);
    Bindings b = row_bindings(ctx, elem, consts);
    std::vector<std::string> bad;
    std::vector<Generator> gens = row_generators(row);
    for (auto& g : gens) {
        Generator gs = g;
        gs.xi_t = substitute(gs.xi_t, b);
        gs.xi_s = substitute(gs.xi_s, b);
        for (auto& e : gs.eta) e = substitute(e, b);
        if (row.variational) {
            Lagrangian L = builtin_lagrangian(row.cse);
            L.density = substitute(L.density, b);
            SymmetryClass sc = symmetry_class(gs, L);
            if (sc.kind != SymKind::Variational) bad.push_back(sc.residual.str());
        } else {
            PdeSystem sys = build_system(row.cse);
            for (auto& r : sys.rules) r.rhs = substitute(r.rhs, b);
            for (auto& r : sys.algebraic) r.rhs = substitute(r.rhs, b);
            for (auto& r : invariance_residuals(gs, sys))
                if (!r.is_zero()) bad.push_back(r.str());
        }
    }
    return bad;
}

}  // namespace classify_detail

inline RowReport verify_table_row(const TableRow& row) {
    RowReport rep;
    rep.table = row.table;
    rep.row = row.row;
    rep.note = row.note;
    rep.residuals = classify_detail::row_residuals(row, row.elem, row.consts);
    rep.admitted = rep.residuals.empty();
    auto elem_p = row.elem_perturbed.empty() ? row.elem : row.elem_perturbed;
    auto consts_p = row.consts_perturbed.empty() ? row.consts : row.consts_perturbed;
    rep.perturbed_fails = !classify_detail::row_residuals(row, elem_p, consts_p).empty();
    return rep;
}

inline std::vector<RowReport> verify_table(const std::string& table_id) {
    std::vector<RowReport> out;
    for (auto& row : table_rows(table_id)) out.push_back(verify_table_row(row));
    return out;
}

}  // namespace mhdsym
