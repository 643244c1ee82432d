#pragma once

// The model corpus: variable spaces, oriented PDE systems, Lagrangians and
// conservation laws for plane one-dimensional MHD flows in mass Lagrangian
// coordinates, for finite and infinite conductivity, H0 zero or not, and the
// variational potential forms. Everything is addressable by stable string
// ids used by the CLI and the golden reports.

#include "system.hpp"

#include <array>
#include <functional>

namespace mhdsym {

enum class CaseId {
    FiniteH0nz,
    FiniteH0zero,
    FiniteH0zeroRest,
    InfiniteH0nz,
    InfiniteH0zero,
    VarH0nz,
    VarH0zero,
    VarGamma2,
};

inline const std::array<std::pair<CaseId, const char*>, 8>& case_table() {
    static const std::array<std::pair<CaseId, const char*>, 8> t = {{
        {CaseId::FiniteH0nz, "finite-h0nz"},
        {CaseId::FiniteH0zero, "finite-h0zero"},
        {CaseId::FiniteH0zeroRest, "finite-h0zero-rest"},
        {CaseId::InfiniteH0nz, "infinite-h0nz"},
        {CaseId::InfiniteH0zero, "infinite-h0zero"},
        {CaseId::VarH0nz, "var-h0nz"},
        {CaseId::VarH0zero, "var-h0zero"},
        {CaseId::VarGamma2, "var-gamma2"},
    }};
    return t;
}

inline std::string case_id_str(CaseId c) {
    for (auto& [k, v] : case_table())
        if (k == c) return v;
    return "?";
}

inline std::optional<CaseId> case_from_id(const std::string& s) {
    for (auto& [k, v] : case_table())
        if (s == v) return k;
    return std::nullopt;
}

// physical-variable companion spaces for the variational cases
enum class PhysSpace { EntropyH0nz, EntropyH0zero, PhysH0zero, PhysGamma2, Eulerian };

// ---------------------------------------------------------------------------
// Contexts

inline Ctx case_context(CaseId c) {
    static const auto make = [](CaseId id) -> Ctx {
        switch (id) {
            case CaseId::FiniteH0nz:
                return make_context({
                    {"t", "s"},
                    {"rho", "u", "v", "w", "p", "Hy", "Hz", "Ey", "Ez", "x", "y", "z"},
                    {"gamma", "C", "alpha", "beta", "a1", "a2", "a3", "a4", "a5", "a6", "a7",
                     "a8", "b1", "b2"},
                    {
                        {"sigma", {"rho", "p"}, {"rho", "p"}},
                        {"H0", {}, {}},
                        {"h1", {"s"}, {"s"}},
                        {"h2", {"s"}, {"s"}},
                        {"F", {"p"}, {"p"}},
                        {"f1", {"s", "v", "w", "m", "n"}, {"s", "v", "w", "y - t*v", "z - t*w"}},
                        {"f2", {"s", "v", "w", "m", "n"}, {"s", "v", "w", "y - t*v", "z - t*w"}},
                        {"f3", {"s", "v", "w", "m", "n"}, {"s", "v", "w", "y - t*v", "z - t*w"}},
                        {"f4", {"s", "v", "w", "m", "n"}, {"s", "v", "w", "y - t*v", "z - t*w"}},
                    },
                });
            case CaseId::FiniteH0zero:
                return make_context({
                    {"t", "s"},
                    {"rho", "u", "p", "Hy", "Hz", "Ey", "Ez", "x"},
                    {"gamma", "C", "alpha", "beta", "a1", "a2", "a3", "a4", "a5", "a6", "a7",
                     "a8"},
                    {
                        {"sigma", {"rho", "p"}, {"rho", "p"}},
                        {"F", {"p"}, {"p"}},
                        {"Fq", {"q"}, {"rho*p^(beta - alpha - 1)"}},
                    },
                });
            case CaseId::FiniteH0zeroRest:
                return make_context({
                    {"t", "s"},
                    {"v", "w", "y", "z"},
                    {},
                    {
                        {"Tt", {"a", "b", "m", "n"}, {"v", "w", "y - t*v", "z - t*w"}},
                    },
                });
            case CaseId::InfiniteH0nz:
                return make_context({
                    {"t", "s"},
                    {"rho", "u", "v", "w", "p", "Hy", "Hz", "x", "y", "z"},
                    {"gamma"},
                    {
                        {"H0", {}, {}},
                        {"q1", {"s", "e"}, {"s", "p*rho^(-gamma)"}},
                        {"q2", {"s", "e"}, {"s", "p*rho^(-gamma)"}},
                    },
                });
            case CaseId::InfiniteH0zero:
                return make_context({
                    {"t", "s"},
                    {"rho", "u", "p", "Hy", "Hz", "x"},
                    {"gamma"},
                    {
                        {"h1", {"s", "e", "m", "n"},
                         {"s", "p*rho^(-gamma)", "Hy*rho^(-1)", "Hz*rho^(-1)"}},
                        {"h2", {"s", "e", "m", "n"},
                         {"s", "p*rho^(-gamma)", "Hy*rho^(-1)", "Hz*rho^(-1)"}},
                    },
                });
            case CaseId::VarH0nz:
                return make_context({
                    {"t", "s"},
                    {"phi", "psi", "chi"},
                    {"gamma", "S0", "q"},
                    {
                        {"S", {"s"}, {"s"}},
                        {"H0", {}, {}},
                        {"Es", {"s"}, {"s"}, true},
                    },
                });
            case CaseId::VarH0zero:
                return make_context({
                    {"t", "s"},
                    {"phi"},
                    {"gamma", "S0", "A0", "alpha", "beta", "pexp", "q"},
                    {
                        {"S", {"s"}, {"s"}},
                        {"A", {"s"}, {"s"}},
                        {"Es", {"s"}, {"s"}, true},
                    },
                });
            case CaseId::VarGamma2:
                return make_context({
                    {"t", "s"},
                    {"phi"},
                    {"B0", "beta", "q"},
                    {
                        {"B", {"s"}, {"s"}},
                        {"Es", {"s"}, {"s"}, true},
                    },
                });
        }
        throw ExprError("unknown case");
    };
    static std::map<CaseId, Ctx> cache;
    auto it = cache.find(c);
    if (it == cache.end()) it = cache.emplace(c, make(c)).first;
    return it->second;
}

inline Ctx phys_context(PhysSpace p) {
    static const auto make = [](PhysSpace id) -> Ctx {
        switch (id) {
            case PhysSpace::EntropyH0nz:
                return make_context({
                    {"t", "s"},
                    {"rho", "u", "v", "w", "Hy", "Hz", "x", "y", "z"},
                    {"gamma", "S0", "q"},
                    {
                        {"S", {"s"}, {"s"}},
                        {"H0", {}, {}},
                        {"Es", {"s"}, {"s"}, true},
                    },
                });
            case PhysSpace::EntropyH0zero:
                return make_context({
                    {"t", "s"},
                    {"rho", "u", "Hy", "Hz", "x"},
                    {"gamma", "S0", "q"},
                    {
                        {"S", {"s"}, {"s"}},
                        {"Es", {"s"}, {"s"}, true},
                    },
                });
            case PhysSpace::PhysH0zero:
                return make_context({
                    {"t", "s"},
                    {"rho", "u", "x"},
                    {"gamma", "S0", "A0", "alpha", "beta", "pexp", "q"},
                    {
                        {"S", {"s"}, {"s"}},
                        {"A", {"s"}, {"s"}},
                        {"Es", {"s"}, {"s"}, true},
                    },
                });
            case PhysSpace::PhysGamma2:
                return make_context({
                    {"t", "s"},
                    {"rho", "u", "x"},
                    {"B0", "beta", "q"},
                    {
                        {"B", {"s"}, {"s"}},
                        {"Es", {"s"}, {"s"}, true},
                    },
                });
            case PhysSpace::Eulerian:
                return make_context({
                    {"t", "x"},
                    {"rho", "u", "v", "w", "p", "Hy", "Hz", "Ey", "Ez", "s", "y", "z"},
                    {"gamma"},
                    {
                        {"sigma", {"rho", "p"}, {"rho", "p"}},
                        {"H0", {}, {}},
                    },
                });
        }
        throw ExprError("unknown physical space");
    };
    static std::map<PhysSpace, Ctx> cache;
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, make(p)).first;
    return it->second;
}

// ---------------------------------------------------------------------------
// Function-symbol substitution: replace S (and S', S'', ...) by a concrete
// expression, derivatives taken through the declared arguments.

inline void bind_function_subst(Bindings& b, const Ctx& ctx, const std::string& fname,
                                const Expr& image, int max_order = 4) {
    auto fid = ctx->find_func(fname);
    if (!fid) throw ExprError("bind_function_subst: unknown function " + fname);
    const FuncDecl& d = ctx->func(*fid);
    // plain-coordinate slots differentiate the image through that coordinate;
    // the image must not depend on composite slots (e.g. y - t v), so those
    // slot derivatives are zero
    std::vector<std::optional<Atom>> slot_atoms;
    for (auto& arg : d.args) {
        const auto& ms = arg.terms();
        if (ms.size() == 1 && ms[0].f.size() == 1 && ms[0].c == Frac(1) &&
            ms[0].f[0].e == Frac(1))
            slot_atoms.push_back(ms[0].f[0].a);
        else
            slot_atoms.push_back(std::nullopt);
    }
    // enumerate derivative multi-indices up to total order max_order
    std::function<void(std::vector<int>&, size_t, int, const Expr&)> rec =
        [&](std::vector<int>& fder, size_t slot, int left, const Expr& img) {
            Atom a{AtomKind::Func, *fid, 0, 0, fder, nullptr};
            a.args = std::make_shared<const std::vector<Expr>>(d.args);
            b.bind(a, img);
            if (left == 0) return;
            for (size_t s = slot; s < slot_atoms.size(); ++s) {
                std::vector<int> nf = fder;
                ++nf[s];
                Expr di = slot_atoms[s] ? partial_derivative(img, *slot_atoms[s])
                                        : Expr::zero(image.ctx());
                rec(nf, s, left - 1, di);
            }
        };
    std::vector<int> zero(d.slots.size(), 0);
    rec(zero, 0, max_order, image);
}

// ---------------------------------------------------------------------------
// Systems

struct SysOptions {
    std::string sigma;               // finite cases: concrete sigma(rho,p)
    std::optional<Rat> gamma_value;  // fix the polytropic constant
};

namespace corpus_detail {

inline void apply_options(PdeSystem& sys, CaseId c, const SysOptions& o) {
    const Ctx& ctx = sys.ctx;
    Bindings b;
    if (!o.sigma.empty()) {
        if (c != CaseId::FiniteH0nz && c != CaseId::FiniteH0zero)
            throw ExprError("sigma override is only meaningful for the finite-conductivity cases");
        bind_function_subst(b, ctx, "sigma", parse_expression(ctx, o.sigma));
    }
    if (o.gamma_value) {
        if (c == CaseId::VarGamma2)
            throw ExprError("var-gamma2 has gamma = 2 structurally; no override");
        if ((c == CaseId::VarH0zero || c == CaseId::FiniteH0zero || c == CaseId::FiniteH0nz) &&
            *o.gamma_value == 2)
            throw ExprError("gamma = 2 requested in a case requiring gamma != 2");
        if (*o.gamma_value <= 1) throw ExprError("polytropic constant must satisfy gamma > 1");
        b.bind_const(*ctx->find_const("gamma"), Frac(*o.gamma_value));
    }
    if (b.empty()) return;
    for (auto& r : sys.rules) r.rhs = substitute(r.rhs, b);
    for (auto& r : sys.algebraic) r.rhs = substitute(r.rhs, b);
    for (auto& [tag, rules] : sys.aux)
        for (auto& r : rules) r.rhs = substitute(r.rhs, b);
}

}  // namespace corpus_detail

inline PdeSystem build_system(CaseId c, const SysOptions& opts = {}) {
    Ctx ctx = case_context(c);
    PdeSystem sys;
    sys.ctx = ctx;
    sys.name = case_id_str(c);
    auto R = [&](const std::string& lead, const std::string& rhs) {
        return make_rule(ctx, lead, rhs);
    };
    switch (c) {
        case CaseId::FiniteH0nz:
            sys.rules = {
                R("rho_t", "-rho^2*u_s"),
                R("u_t", "-p_s - Hy*Hy_s - Hz*Hz_s"),
                R("v_t", "H0*Hy_s"),
                R("w_t", "H0*Hz_s"),
                R("p_t", "-gamma*rho*p*u_s + (gamma-1)*sigma*(Ey^2 + Ez^2)"),
                R("Hy_t", "rho*(H0*v_s - Hy*u_s + Ez_s)"),
                R("Hz_t", "rho*(H0*w_s - Hz*u_s - Ey_s)"),
                R("x_t", "u"),
                R("y_t", "v"),
                R("z_t", "w"),
            };
            sys.algebraic = {R("Ey", "-rho*Hz_s/sigma"), R("Ez", "rho*Hy_s/sigma")};
            sys.aux["nonlocal_x"] = {R("x_s", "rho^(-1)")};
            break;
        case CaseId::FiniteH0zero:
            sys.rules = {
                R("rho_t", "-rho^2*u_s"),
                R("u_t", "-p_s - Hy*Hy_s - Hz*Hz_s"),
                R("p_t", "-gamma*rho*p*u_s + (gamma-1)*sigma*(Ey^2 + Ez^2)"),
                R("Hy_t", "rho*(-Hy*u_s + Ez_s)"),
                R("Hz_t", "rho*(-Hz*u_s - Ey_s)"),
            };
            sys.algebraic = {R("Ey", "-rho*Hz_s/sigma"), R("Ez", "rho*Hy_s/sigma")};
            sys.aux["nonlocal_x"] = {R("x_t", "u"), R("x_s", "rho^(-1)")};
            break;
        case CaseId::FiniteH0zeroRest:
            sys.rules = {R("v_t", "0"), R("y_t", "v"), R("w_t", "0"), R("z_t", "w")};
            break;
        case CaseId::InfiniteH0nz:
            sys.rules = {
                R("rho_t", "-rho^2*u_s"),
                R("u_t", "-p_s - Hy*Hy_s - Hz*Hz_s"),
                R("v_t", "H0*Hy_s"),
                R("w_t", "H0*Hz_s"),
                R("p_t", "-gamma*rho*p*u_s"),
                R("Hy_t", "rho*(H0*v_s - Hy*u_s)"),
                R("Hz_t", "rho*(H0*w_s - Hz*u_s)"),
                R("x_t", "u"),
                R("y_t", "v"),
                R("z_t", "w"),
            };
            sys.aux["nonlocal_x"] = {R("x_s", "rho^(-1)")};
            sys.aux["yszs"] = {R("y_s", "Hy/(H0*rho)"), R("z_s", "Hz/(H0*rho)")};
            break;
        case CaseId::InfiniteH0zero:
            sys.rules = {
                R("rho_t", "-rho^2*u_s"),
                R("u_t", "-p_s - Hy*Hy_s - Hz*Hz_s"),
                R("p_t", "-gamma*rho*p*u_s"),
                R("Hy_t", "-rho*Hy*u_s"),
                R("Hz_t", "-rho*Hz*u_s"),
            };
            sys.aux["nonlocal_x"] = {R("x_t", "u"), R("x_s", "rho^(-1)")};
            break;
        case CaseId::VarH0nz: {
            Expr flux = parse_expression(
                ctx, "S*phi_s^(-gamma) + 1/2*H0^2*(psi_s^2 + chi_s^2)*phi_s^(-2)");
            sys.rules = {Rule{Atom::jet(*ctx->find_dep("phi"), 2, 0), -D_s(flux)},
                         Rule{Atom::jet(*ctx->find_dep("psi"), 2, 0),
                              D_s(parse_expression(ctx, "H0^2*psi_s*phi_s^(-1)"))},
                         Rule{Atom::jet(*ctx->find_dep("chi"), 2, 0),
                              D_s(parse_expression(ctx, "H0^2*chi_s*phi_s^(-1)"))}};
            break;
        }
        case CaseId::VarH0zero: {
            Expr flux = parse_expression(ctx, "S*phi_s^(-gamma) + A*phi_s^(-2)");
            sys.rules = {Rule{Atom::jet(*ctx->find_dep("phi"), 2, 0), -D_s(flux)}};
            break;
        }
        case CaseId::VarGamma2: {
            Expr flux = parse_expression(ctx, "B*phi_s^(-2)");
            sys.rules = {Rule{Atom::jet(*ctx->find_dep("phi"), 2, 0), -D_s(flux)}};
            break;
        }
    }
    corpus_detail::apply_options(sys, c, opts);
    return sys;
}

// physical-variable systems with the entropy / magnetic profiles as function
// symbols (p = S rho^gamma eliminated; for H0 = 0 also Hy = rho F, Hz = rho G
// folded into A = (F^2+G^2)/2, and B = S/(gamma-1) + A when gamma = 2)
inline PdeSystem phys_system(PhysSpace which) {
    Ctx ctx = phys_context(which);
    PdeSystem sys;
    sys.ctx = ctx;
    auto R = [&](const std::string& lead, const std::string& rhs) {
        return make_rule(ctx, lead, rhs);
    };
    switch (which) {
        case PhysSpace::EntropyH0nz:
            sys.name = "entropy-h0nz";
            sys.rules = {
                Rule{Atom::jet(*ctx->find_dep("u"), 1, 0),
                     -D_s(parse_expression(ctx, "S*rho^gamma")) -
                         parse_expression(ctx, "Hy*Hy_s + Hz*Hz_s")},
                R("rho_t", "-rho^2*u_s"),
                R("v_t", "H0*Hy_s"),
                R("w_t", "H0*Hz_s"),
                R("Hy_t", "rho*(H0*v_s - Hy*u_s)"),
                R("Hz_t", "rho*(H0*w_s - Hz*u_s)"),
                R("x_t", "u"),
                R("y_t", "v"),
                R("z_t", "w"),
            };
            sys.aux["nonlocal_x"] = {R("x_s", "rho^(-1)")};
            sys.aux["yszs"] = {R("y_s", "Hy/(H0*rho)"), R("z_s", "Hz/(H0*rho)")};
            break;
        case PhysSpace::EntropyH0zero:
            sys.name = "entropy-h0zero";
            sys.rules = {
                Rule{Atom::jet(*ctx->find_dep("u"), 1, 0),
                     -D_s(parse_expression(ctx, "S*rho^gamma")) -
                         parse_expression(ctx, "Hy*Hy_s + Hz*Hz_s")},
                R("rho_t", "-rho^2*u_s"),
                R("Hy_t", "-rho*Hy*u_s"),
                R("Hz_t", "-rho*Hz*u_s"),
            };
            sys.aux["nonlocal_x"] = {R("x_t", "u"), R("x_s", "rho^(-1)")};
            break;
        case PhysSpace::PhysH0zero:
            sys.name = "phys-h0zero";
            sys.rules = {
                Rule{Atom::jet(*ctx->find_dep("u"), 1, 0),
                     -D_s(parse_expression(ctx, "S*rho^gamma + A*rho^2"))},
                R("rho_t", "-rho^2*u_s"),
            };
            sys.aux["nonlocal_x"] = {R("x_t", "u"), R("x_s", "rho^(-1)")};
            break;
        case PhysSpace::PhysGamma2:
            sys.name = "phys-gamma2";
            sys.rules = {
                Rule{Atom::jet(*ctx->find_dep("u"), 1, 0),
                     -D_s(parse_expression(ctx, "B*rho^2"))},
                R("rho_t", "-rho^2*u_s"),
            };
            sys.aux["nonlocal_x"] = {R("x_t", "u"), R("x_s", "rho^(-1)")};
            break;
        case PhysSpace::Eulerian:
            sys.name = "eulerian";
            // only the kinematics needed by the conversion identity
            sys.rules = {
                R("rho_t", "-u*rho_x - rho*u_x"),
                R("s_t", "-rho*u"),
            };
            sys.algebraic = {};
            sys.aux["s_x"] = {R("s_x", "rho")};
            break;
    }
    return sys;
}

// ---------------------------------------------------------------------------
// Lagrangians

inline Lagrangian builtin_lagrangian(CaseId c) {
    Ctx ctx = case_context(c);
    switch (c) {
        case CaseId::VarH0nz:
            return make_lagrangian(ctx, "L(H0!=0)",
                                   "1/2*(phi_t^2 + psi_t^2 + chi_t^2) "
                                   "- S/(gamma-1)*phi_s^(1-gamma) "
                                   "- 1/2*H0^2*(psi_s^2 + chi_s^2)/phi_s",
                                   {"phi", "psi", "chi"});
        case CaseId::VarH0zero:
            return make_lagrangian(ctx, "L(H0=0)",
                                   "1/2*phi_t^2 - S/(gamma-1)*phi_s^(1-gamma) - A/phi_s",
                                   {"phi"});
        case CaseId::VarGamma2:
            return make_lagrangian(ctx, "L(gamma=2)", "1/2*phi_t^2 - B/phi_s", {"phi"});
        default:
            throw ExprError("case " + case_id_str(c) + " has no variational structure");
    }
}

// ---------------------------------------------------------------------------
// Conservation-law corpus

struct LawEntry {
    CaseId cse;
    std::string id;      // short id; full id is "claw.<case>.<id>"
    ConservationLaw law;
    std::string sigma_condition;                     // law holds for this sigma
    std::map<std::string, std::string> elem_subst;   // function -> expression
    std::map<std::string, std::string> const_subst;  // constant -> constants-only expr
    std::optional<PhysSpace> phys;                   // verified on a physical system
    std::string note;

    std::string full_id() const { return "claw." + case_id_str(cse) + "." + id; }
};

namespace corpus_detail {

struct LawSrc {
    const char* id;
    const char* Tt;
    const char* Ts;
    std::vector<std::string> aux = {};
    const char* sigma = "";
    std::map<std::string, std::string> elem = {};
    std::map<std::string, std::string> consts = {};
    std::optional<PhysSpace> phys = {};
    const char* note = "";
};

inline LawEntry make_law(CaseId c, const LawSrc& s) {
    Ctx ctx = s.phys ? phys_context(*s.phys) : case_context(c);
    LawEntry e;
    e.cse = c;
    e.id = s.id;
    e.law.Tt = parse_expression(ctx, s.Tt);
    e.law.Ts = parse_expression(ctx, s.Ts);
    e.law.label = e.full_id();
    for (auto& t : s.aux) e.law.requires_aux.insert(t);
    e.sigma_condition = s.sigma;
    e.elem_subst = s.elem;
    e.const_subst = s.consts;
    e.phys = s.phys;
    e.note = s.note;
    return e;
}

}  // namespace corpus_detail

inline std::vector<LawEntry> builtin_conservation_laws(CaseId c) {
    using corpus_detail::LawSrc;
    using corpus_detail::make_law;
    std::vector<LawSrc> src;
    switch (c) {
        case CaseId::FiniteH0nz:
            src = {
                {"mass", "rho^(-1)", "-u"},
                {"momentum-x", "u", "p + 1/2*Hy^2 + 1/2*Hz^2"},
                {"momentum-y", "v", "-H0*Hy"},
                {"momentum-z", "w", "-H0*Hz"},
                {"center-x", "t*u - x", "t*(p + 1/2*Hy^2 + 1/2*Hz^2)", {"nonlocal_x"}},
                {"center-y", "t*v - y", "-t*H0*Hy"},
                {"center-z", "t*w - z", "-t*H0*Hz"},
                {"flux-hy", "Hy/rho", "-(Ez + H0*v)"},
                {"flux-hz", "Hz/rho", "Ey - H0*w"},
                {"energy",
                 "1/2*(u^2 + v^2 + w^2) + p/((gamma-1)*rho) + (Hy^2 + Hz^2)/(2*rho)",
                 "u*(p + 1/2*Hy^2 + 1/2*Hz^2) + Ey*Hz - Ez*Hy - H0*(v*Hy + w*Hz)"},
            };
            break;
        case CaseId::FiniteH0zero:
            src = {
                {"mass", "rho^(-1)", "-u"},
                {"momentum-x", "u", "p + 1/2*Hy^2 + 1/2*Hz^2"},
                {"center-x", "t*u - x", "t*(p + 1/2*Hy^2 + 1/2*Hz^2)", {"nonlocal_x"}},
                {"flux-hy", "Hy/rho", "-Ez"},
                {"flux-hz", "Hz/rho", "Ey"},
                {"energy", "1/2*u^2 + p/((gamma-1)*rho) + (Hy^2 + Hz^2)/(2*rho)",
                 "u*(p + 1/2*Hy^2 + 1/2*Hz^2) + Ey*Hz - Ez*Hy"},
                {"ext-shz", "s*Hz/rho", "s*Ey + Hz", {}, "rho", {}, {}, {},
                 "holds only for sigma = rho; flux sign corrected vs the printed form"},
                {"ext-shy", "s*Hy/rho", "Hy - s*Ez", {}, "rho", {}, {}, {},
                 "holds only for sigma = rho; flux sign corrected vs the printed form"},
            };
            break;
        case CaseId::FiniteH0zeroRest:
            src = {
                {"family-tt", "Tt", "0", {}, "", {}, {}, {},
                 "arbitrary-function family T^t(v, w, y - t v, z - t w)"},
                {"momentum-y", "v", "0"},
                {"momentum-z", "w", "0"},
                {"center-y", "y - t*v", "0"},
                {"center-z", "z - t*w", "0"},
                {"angular-momentum", "z*v - y*w", "0"},
            };
            break;
        case CaseId::InfiniteH0nz:
            src = {
                {"mass", "rho^(-1)", "-u"},
                {"momentum-x", "u", "p + 1/2*Hy^2 + 1/2*Hz^2"},
                {"momentum-y", "v", "-H0*Hy"},
                {"momentum-z", "w", "-H0*Hz"},
                {"center-x", "t*u - x", "t*(p + 1/2*Hy^2 + 1/2*Hz^2)", {"nonlocal_x"}},
                {"center-y", "t*v - y", "-t*H0*Hy"},
                {"center-z", "t*w - z", "-t*H0*Hz"},
                {"flux-hy", "Hy/rho", "-H0*v"},
                {"flux-hz", "Hz/rho", "-H0*w"},
                {"energy",
                 "1/2*(u^2 + v^2 + w^2) + p/((gamma-1)*rho) + (Hy^2 + Hz^2)/(2*rho)",
                 "u*(p + 1/2*Hy^2 + 1/2*Hz^2) - H0*(v*Hy + w*Hz)"},
                {"entropy", "p*rho^(-gamma)", "0"},
                {"angular-momentum", "z*v - y*w", "H0*(y*Hz - z*Hy)", {"yszs"}},
            };
            break;
        case CaseId::InfiniteH0zero:
            src = {
                {"mass", "rho^(-1)", "-u"},
                {"momentum-x", "u", "p + 1/2*Hy^2 + 1/2*Hz^2"},
                {"center-x", "t*u - x", "t*(p + 1/2*Hy^2 + 1/2*Hz^2)", {"nonlocal_x"}},
                {"flux-hy", "Hy/rho", "0"},
                {"flux-hz", "Hz/rho", "0"},
                {"energy", "1/2*u^2 + p/((gamma-1)*rho) + (Hy^2 + Hz^2)/(2*rho)",
                 "u*(p + 1/2*Hy^2 + 1/2*Hz^2)"},
                {"entropy", "p*rho^(-gamma)", "0"},
            };
            break;
        case CaseId::VarH0nz:
            src = {
                {"angmom-potential", "chi*psi_t - psi*chi_t",
                 "-H0^2*(chi*psi_s - psi*chi_s)/phi_s"},
                {"s-translation-potential",
                 "phi_s*phi_t + psi_s*psi_t + chi_s*chi_t",
                 "-1/2*(phi_t^2 + psi_t^2 + chi_t^2) + gamma*S/(gamma-1)*phi_s^(1-gamma)",
                 {}, "", {{"S", "S0"}}, {}, {}, "S(s) = S0"},
                {"scaling-potential",
                 "t*(1/2*(phi_t^2 + psi_t^2 + chi_t^2) + S/(gamma-1)*phi_s^(1-gamma)"
                 " + 1/2*H0^2*(psi_s^2 + chi_s^2)/phi_s)"
                 " + 3*s*(phi_s*phi_t + psi_s*psi_t + chi_s*chi_t)"
                 " + phi*phi_t + psi*psi_t + chi*chi_t",
                 "(t*phi_t + phi)*(S*phi_s^(-gamma) + 1/2*H0^2*(psi_s^2 + chi_s^2)*phi_s^(-2))"
                 " - (t*psi_t + psi)*H0^2*psi_s/phi_s - (t*chi_t + chi)*H0^2*chi_s/phi_s"
                 " + 3*s*(-1/2*(phi_t^2 + psi_t^2 + chi_t^2) + gamma*S/(gamma-1)*phi_s^(1-gamma))",
                 {}, "", {{"S", "S0*s^(-4/3*gamma)"}}, {}, {}, "S(s) = S0 s^q, q = -4 gamma/3"},
                {"angmom-physical", "z*v - y*w", "H0*(y*Hz - z*Hy)", {"yszs"}, "", {}, {},
                 PhysSpace::EntropyH0nz},
                {"s-translation-physical", "u/rho + (v*Hy + w*Hz)/(H0*rho)",
                 "-1/2*(u^2 + v^2 + w^2) + gamma*S/(gamma-1)*rho^(gamma-1)",
                 {}, "", {{"S", "S0"}}, {}, PhysSpace::EntropyH0nz, "S(s) = S0"},
                {"scaling-physical",
                 "t*(1/2*(u^2 + v^2 + w^2) + S/(gamma-1)*rho^(gamma-1) + (Hy^2+Hz^2)/(2*rho))"
                 " + 3*s*(u/rho + (v*Hy + w*Hz)/(H0*rho)) + x*u + y*v + z*w",
                 "(t*u + x)*(S*rho^gamma + 1/2*Hy^2 + 1/2*Hz^2) - (t*v + y)*H0*Hy"
                 " - (t*w + z)*H0*Hz"
                 " + 3*s*(-1/2*(u^2 + v^2 + w^2) + gamma*S/(gamma-1)*rho^(gamma-1))",
                 {"nonlocal_x", "yszs"}, "", {{"S", "S0*s^(-4/3*gamma)"}}, {},
                 PhysSpace::EntropyH0nz, "S(s) = S0 s^q, q = -4 gamma/3"},
            };
            break;
        case CaseId::VarH0zero:
            src = {
                {"s-translation-potential", "phi_s*phi_t",
                 "-1/2*phi_t^2 + gamma*S/(gamma-1)*phi_s^(1-gamma) + 2*A/phi_s",
                 {}, "", {{"S", "S0"}, {"A", "A0"}}, {}, {}, "(S, A) = (S0, A0)"},
                {"power-scaling-potential",
                 "(2*beta+5)*t*(1/2*phi_t^2 + S/(gamma-1)*phi_s^(1-gamma) + A/phi_s)"
                 " - s*phi_s*phi_t - (beta+3)*phi*phi_t",
                 "((2*beta+5)*t*phi_t - (beta+3)*phi)*(S*phi_s^(-gamma) + A*phi_s^(-2))"
                 " + s*(1/2*phi_t^2 - gamma*S/(gamma-1)*phi_s^(1-gamma) - 2*A/phi_s)",
                 {}, "", {{"S", "S0*s^alpha"}, {"A", "A0*s^beta"}},
                 {{"alpha", "-4*(gamma-2) - beta*(gamma-3)"}}, {},
                 "power pair, alpha + beta (gamma-3) = -4 (gamma-2)"},
                {"exp-scaling-potential",
                 "2*q*t*(1/2*phi_t^2 + S/(gamma-1)*phi_s^(1-gamma) + A/phi_s)"
                 " - phi_s*phi_t - q*phi*phi_t",
                 "q*(2*t*phi_t - phi)*(S*phi_s^(-gamma) + A*phi_s^(-2))"
                 " + 1/2*phi_t^2 - gamma*S/(gamma-1)*phi_s^(1-gamma) - 2*A/phi_s",
                 {}, "", {{"S", "S0*Es^pexp"}, {"A", "A0*Es^q"}},
                 {{"pexp", "-q*(gamma-3)"}}, {}, "exponential pair, p + q (gamma-3) = 0"},
                {"s-translation-physical", "u/rho",
                 "-1/2*u^2 + gamma*S/(gamma-1)*rho^(gamma-1) + 2*A*rho",
                 {}, "", {{"S", "S0"}, {"A", "A0"}}, {}, PhysSpace::PhysH0zero,
                 "(S, A) = (S0, A0); A rho = (Hy^2+Hz^2)/(2 rho)"},
                {"power-scaling-physical",
                 "(2*beta+5)*t*(1/2*u^2 + S/(gamma-1)*rho^(gamma-1) + A*rho)"
                 " - s*u/rho - (beta+3)*x*u",
                 "((2*beta+5)*t*u - (beta+3)*x)*(S*rho^gamma + A*rho^2)"
                 " + s*(1/2*u^2 - gamma*S/(gamma-1)*rho^(gamma-1) - 2*A*rho)",
                 {"nonlocal_x"}, "", {{"S", "S0*s^alpha"}, {"A", "A0*s^beta"}},
                 {{"alpha", "-4*(gamma-2) - beta*(gamma-3)"}}, PhysSpace::PhysH0zero,
                 "A rho^2 = (Hy^2+Hz^2)/2"},
                {"exp-scaling-physical",
                 "2*q*t*(1/2*u^2 + S/(gamma-1)*rho^(gamma-1) + A*rho) - u/rho - q*x*u",
                 "q*(2*t*u - x)*(S*rho^gamma + A*rho^2)"
                 " + 1/2*u^2 - gamma*S/(gamma-1)*rho^(gamma-1) - 2*A*rho",
                 {"nonlocal_x"}, "", {{"S", "S0*Es^pexp"}, {"A", "A0*Es^q"}},
                 {{"pexp", "-q*(gamma-3)"}}, PhysSpace::PhysH0zero},
            };
            break;
        case CaseId::VarGamma2:
            src = {
                {"s-translation-potential", "phi_s*phi_t", "-1/2*phi_t^2 + 2*B/phi_s",
                 {}, "", {{"B", "B0"}}, {}, {}, "B(s) = B0"},
                {"scaling-potential",
                 "5*t*(1/2*phi_t^2 + B/phi_s) - s*phi_s*phi_t - 3*phi*phi_t",
                 "(5*t*phi_t - 3*phi)*B*phi_s^(-2) + s*(1/2*phi_t^2 - 2*B/phi_s)",
                 {}, "", {{"B", "B0"}}, {}, {}, "B(s) = B0"},
                {"scaling-physical",
                 "5*t*(1/2*u^2 + B*rho) - s*u/rho - 3*x*u",
                 "(5*t*u - 3*x)*B*rho^2 + s*(1/2*u^2 - 2*B*rho)",
                 {"nonlocal_x"}, "", {{"B", "B0"}}, {}, PhysSpace::PhysGamma2,
                 "B rho = S rho + (Hy^2+Hz^2)/(2 rho) at gamma = 2"},
            };
            break;
    }
    std::vector<LawEntry> out;
    out.reserve(src.size());
    for (auto& s : src) out.push_back(make_law(c, s));
    return out;
}

// residual of a law modulo its system, honoring the entry's side conditions
// plus any caller overrides (sigma)
inline Expr law_residual(const LawEntry& e, const SysOptions& opts = {}) {
    PdeSystem sys;
    if (e.phys)
        sys = phys_system(*e.phys);
    else {
        SysOptions o = opts;
        if (o.sigma.empty()) o.sigma = e.sigma_condition;
        sys = build_system(e.cse, o);
    }
    const Ctx& ctx = sys.ctx;
    // constant conditions go first so that element images carry them already
    Bindings bc;
    for (auto& [cn, img] : e.const_subst) {
        auto id = ctx->find_const(cn);
        if (!id) throw ExprError("law condition constant not declared: " + cn);
        bc.bind_const(*id, parse_expression(ctx, img).as_frac());
    }
    Bindings b = bc;
    for (auto& [f, img] : e.elem_subst)
        bind_function_subst(b, ctx, f, substitute(parse_expression(ctx, img), bc));
    ConservationLaw law = e.law;
    if (!b.empty()) {
        law.Tt = substitute(law.Tt, b);
        law.Ts = substitute(law.Ts, b);
        for (auto& r : sys.rules) r.rhs = substitute(r.rhs, b);
        for (auto& r : sys.algebraic) r.rhs = substitute(r.rhs, b);
        for (auto& [tag, rules] : sys.aux)
            for (auto& r : rules) r.rhs = substitute(r.rhs, b);
    }
    if (!opts.sigma.empty() && e.phys)
        throw ExprError("sigma override does not apply to a physical-space law");
    if (!opts.sigma.empty() && !e.phys) {
        // also substitute sigma inside the law itself (laws normally carry E
        // fields rather than sigma, but allow it)
        Bindings bs;
        if (ctx->find_func("sigma")) {
            bind_function_subst(bs, ctx, "sigma", parse_expression(ctx, opts.sigma));
            law.Tt = substitute(law.Tt, bs);
            law.Ts = substitute(law.Ts, bs);
        }
    }
    return verify_conservation_law(law, sys);
}

// ---------------------------------------------------------------------------
// Cross-context transfer and the physical-variable maps

// rebuild e over `to`, resolving atoms and constants by name; an independent
// variable may land on a dependent of the same name (Eulerian s)
inline Expr transfer(const Expr& e, const Ctx& to,
                     const std::function<std::optional<Expr>(const Atom&)>& override_image = {});

namespace corpus_detail {

inline Frac transfer_frac(const Frac& f, const Context& from, const Ctx& to) {
    std::vector<int> vars;
    f.collect_vars(vars);
    Frac out = f;
    // rename by substituting var -> var' one at a time; ids may differ
    for (int v : vars) {
        auto id = to->find_const(from.const_name(v));
        if (!id) throw ExprError("transfer: constant " + from.const_name(v) + " not in target");
        if (*id != v) out = out.subst(v, Frac::var(*id));
    }
    return out;
}

}  // namespace corpus_detail

inline Expr transfer(const Expr& e, const Ctx& to,
                     const std::function<std::optional<Expr>(const Atom&)>& override_image) {
    const Context& from = *e.ctx();
    Expr acc = Expr::zero(to);
    for (auto& m : e.terms()) {
        Expr term = Expr::constant(to, corpus_detail::transfer_frac(m.c, from, to));
        for (auto& pf : m.f) {
            Frac ex = corpus_detail::transfer_frac(pf.e, from, to);
            Expr img = Expr::zero(to);
            std::optional<Expr> ov = override_image ? override_image(pf.a) : std::nullopt;
            if (ov) {
                img = *ov;
            } else
                switch (pf.a.kind) {
                    case AtomKind::Indep: {
                        const std::string& n = from.indep_name(pf.a.id);
                        if (to->find_indep(n))
                            img = Expr::indep(to, n);
                        else if (to->find_dep(n))
                            img = Expr::jet(to, n);
                        else
                            throw ExprError("transfer: no target for " + n);
                        break;
                    }
                    case AtomKind::Jet: {
                        const std::string& n = from.dep_name(pf.a.id);
                        if (to->find_dep(n))
                            img = Expr::jet(to, n, pf.a.dt, pf.a.ds);
                        else if (pf.a.order() == 0 && to->find_indep(n))
                            img = Expr::indep(to, n);
                        else
                            throw ExprError("transfer: no target dependent " + n);
                        break;
                    }
                    case AtomKind::Func: {
                        const std::string& n = from.func(pf.a.id).name;
                        auto fid = to->find_func(n);
                        if (!fid) throw ExprError("transfer: no target function " + n);
                        std::vector<Expr> args;
                        for (auto& a : *pf.a.args) args.push_back(transfer(a, to, override_image));
                        img = Expr::func_id(to, *fid, pf.a.fder,
                                            std::make_shared<const std::vector<Expr>>(args));
                        break;
                    }
                }
            term *= img.pow(ex);
        }
        acc += term;
    }
    return acc;
}

// potentials -> physical variables:
//   phi_t -> u, phi_s -> 1/rho, psi_t -> v, psi_s -> Hy/(H0 rho),
//   chi_t -> w, chi_s -> Hz/(H0 rho), phi -> x, psi -> y, chi -> z
inline Expr physicalize(const Expr& e, CaseId vcase) {
    PhysSpace target;
    switch (vcase) {
        case CaseId::VarH0nz: target = PhysSpace::EntropyH0nz; break;
        case CaseId::VarH0zero: target = PhysSpace::PhysH0zero; break;
        case CaseId::VarGamma2: target = PhysSpace::PhysGamma2; break;
        default: throw ExprError("physicalize: not a variational case");
    }
    Ctx from = case_context(vcase);
    Ctx to = phys_context(target);
    auto dep = [&](const char* n) { return from->find_dep(n); };
    auto image = [&, to](const Atom& a) -> std::optional<Expr> {
        if (a.kind != AtomKind::Jet) return std::nullopt;
        if (a.order() > 1) throw ExprError("physicalize: law must be first order");
        const std::string& n = from->dep_name(a.id);
        std::string key = n + (a.dt ? "_t" : a.ds ? "_s" : "");
        static const std::map<std::string, std::string> m_h0nz = {
            {"phi", "x"},           {"psi", "y"},
            {"chi", "z"},           {"phi_t", "u"},
            {"psi_t", "v"},         {"chi_t", "w"},
            {"phi_s", "rho^(-1)"},  {"psi_s", "Hy/(H0*rho)"},
            {"chi_s", "Hz/(H0*rho)"},
        };
        static const std::map<std::string, std::string> m_h0zero = {
            {"phi", "x"}, {"phi_t", "u"}, {"phi_s", "rho^(-1)"}};
        const auto& m = (vcase == CaseId::VarH0nz) ? m_h0nz : m_h0zero;
        auto it = m.find(key);
        if (it == m.end()) throw ExprError("physicalize: no image for " + key);
        return parse_expression(to, it->second);
    };
    return transfer(e, to, image);
}

inline ConservationLaw physicalize(const ConservationLaw& cl, CaseId vcase) {
    ConservationLaw out;
    out.Tt = physicalize(cl.Tt, vcase);
    out.Ts = physicalize(cl.Ts, vcase);
    out.requires_aux = cl.requires_aux;
    out.label = cl.label + " [physical]";
    return out;
}

// ---------------------------------------------------------------------------
// Eulerian conversion: (T^t, T^s) -> (rho T^t, rho u T^t + T^s)

struct EulerianConservationLaw {
    Expr eTt, eTx;
};

inline EulerianConservationLaw eulerian_form(const ConservationLaw& cl) {
    Ctx ec = phys_context(PhysSpace::Eulerian);
    Expr Tt = transfer(cl.Tt, ec);
    Expr Ts = transfer(cl.Ts, ec);
    Expr rho = Expr::jet(ec, "rho");
    Expr u = Expr::jet(ec, "u");
    return {rho * Tt, rho * u * Tt + Ts};
}

// the identity behind the conversion rule:
//   rho (D_t^L T^t + D_s T^s) = D_t^E (rho T^t) + D_x (rho u T^t + T^s)
// on the Eulerian space with s_x = rho, s_t = -rho u and continuity
inline Expr eulerian_conversion_residual(const ConservationLaw& cl) {
    Ctx ec = phys_context(PhysSpace::Eulerian);
    Expr Tt = transfer(cl.Tt, ec);
    Expr Ts = transfer(cl.Ts, ec);
    Expr rho = Expr::jet(ec, "rho");
    Expr u = Expr::jet(ec, "u");
    auto Dx = [&](const Expr& x) { return total_derivative(x, 1); };
    auto DtE = [&](const Expr& x) { return total_derivative(x, 0); };
    auto DtL = [&](const Expr& x) { return DtE(x) + u * Dx(x); };
    auto Ds = [&](const Expr& x) { return rho.pow(Frac(-1)) * Dx(x); };
    Expr lhs = rho * (DtL(Tt) + Ds(Ts));
    Expr rhs = DtE(rho * Tt) + Dx(rho * u * Tt + Ts);
    PdeSystem sys = phys_system(PhysSpace::Eulerian);
    return reduce_mod_system(lhs - rhs, sys, {"s_x"});
}

}  // namespace mhdsym
