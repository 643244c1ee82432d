#include "doctest.h"

#include "mhdsym/calculus.hpp"
#include "mhdsym/parse.hpp"

#include <random>

using namespace mhdsym;

namespace {

Ctx test_ctx() {
    static Ctx ctx = make_context(ContextSpec{
        {"t", "s"},
        {"rho", "u", "v", "w", "p", "Hy", "Hz", "Ey", "Ez", "x", "y", "z", "phi"},
        {"gamma", "alpha", "beta", "C"},
        {
            FuncSpec{"sigma", {"rho", "p"}, {"rho", "p"}},
            FuncSpec{"S", {"s"}, {"s"}},
            FuncSpec{"F", {"p"}, {"p"}},
            FuncSpec{"f1", {"s", "v", "w", "m", "n"}, {"s", "v", "w", "y - t*v", "z - t*w"}},
        },
    });
    return ctx;
}

Expr pe(const std::string& s) { return parse_expression(test_ctx(), s); }

// small random expressions over (t, s, rho, u, p) with integer coefficients
Expr random_expr(std::mt19937& rng, int max_terms = 3) {
    Ctx c = test_ctx();
    std::uniform_int_distribution<int> coef(-4, 4), nt(1, max_terms), pick(0, 4), ex(1, 2);
    const char* names[] = {"rho", "u", "p"};
    Expr acc = Expr::zero(c);
    int terms = nt(rng);
    for (int i = 0; i < terms; ++i) {
        Expr m = Expr::integer(c, coef(rng));
        int nf = pick(rng) % 3;
        for (int j = 0; j < nf; ++j) {
            int which = pick(rng);
            Expr f = which < 2 ? Expr::indep(c, which == 0 ? "t" : "s")
                               : Expr::jet(c, names[which - 2]);
            m *= f.pow(Frac(ex(rng)));
        }
        acc += m;
    }
    return acc;
}

}  // namespace

TEST_CASE("field: rational functions are canonical") {
    Ctx c = test_ctx();
    Frac g = Frac::var(*c->find_const("gamma"));
    Frac b = Frac::var(*c->find_const("beta"));

    CHECK((g - g).is_zero());
    CHECK((g * g - g * g).is_zero());
    // (gamma^2 - 1)/(gamma - 1) == gamma + 1
    Frac lhs = (g * g - Frac(1)) / (g - Frac(1));
    CHECK(lhs == g + Frac(1));
    // (2b-1)/(2(b-1)) + (-2b+1)/(2b-2) == 0
    Frac e1 = (Frac(2) * b - Frac(1)) / (Frac(2) * (b - Frac(1)));
    Frac e2 = (Frac(-2) * b + Frac(1)) / (Frac(2) * b - Frac(2));
    CHECK((e1 + e2).is_zero());
    CHECK(frac_cmp(e1, -e2) == 0);
    // derivative: d/dgamma [ (gamma-1)^2 ] = 2(gamma-1)
    Frac d = ((g - Frac(1)) * (g - Frac(1))).derivative(*c->find_const("gamma"));
    CHECK(d == Frac(2) * (g - Frac(1)));
}

TEST_CASE("parse: definitional round-trips") {
    Expr e1 = pe("rho_t + u*rho_s");
    CHECK(e1 == Expr::jet(test_ctx(), "rho", 1, 0) +
                    Expr::jet(test_ctx(), "u") * Expr::jet(test_ctx(), "rho", 0, 1));

    Expr e2 = pe("sigma(rho,p)");
    CHECK(e2 == Expr::func(test_ctx(), "sigma"));
    CHECK(e2 == pe("sigma"));  // default arguments may be omitted

    Expr e3 = pe("p/rho^gamma");
    Frac g = Frac::var(*test_ctx()->find_const("gamma"));
    CHECK(e3 == Expr::jet(test_ctx(), "p") * Expr::jet(test_ctx(), "rho").pow(-g));
}

TEST_CASE("parse: errors carry position and reason") {
    CHECK_THROWS_AS(pe("rho +"), ParseError);
    CHECK_THROWS_AS(pe("undeclared_name"), ParseError);
    CHECK_THROWS_AS(pe("rho_q"), ParseError);       // malformed derivative suffix
    CHECK_THROWS_AS(pe("rho^(u)"), ParseError);     // non-constant exponent
    CHECK_THROWS_AS(pe("(rho + u)^gamma"), ExprError);
}

TEST_CASE("canonicalize: commutativity, exponents, cancellation") {
    CHECK(pe("u*rho - rho*u").is_zero());
    CHECK(pe("rho^gamma * rho^(1-gamma)") == pe("rho"));
    CHECK(pe("(gamma-1)*p/(gamma-1)") == pe("p"));
    CHECK(pe("sigma_rho*rho - rho*sigma_rho").is_zero());
    CHECK_FALSE(pe("sigma - sigma_rho").is_zero());
}

TEST_CASE("render/parse round-trip is a fixed point") {
    std::vector<std::string> corpus = {
        "rho_t + u*rho_s",
        "p/rho^gamma",
        "1/2*u^2 + p/((gamma-1)*rho) + (Hy^2+Hz^2)/(2*rho)",
        "sigma_rho_p(rho,p)*rho^2 - 3/4*Ey*Hz",
        "S'*phi_s^(1-gamma)",
        "rho^((2*beta-1)/(2*beta-2))*F(p)",
        "f1_m*u - f1_n",
        "t*u - x",
    };
    for (auto& s : corpus) {
        Expr e = pe(s);
        std::string r = e.str();
        Expr e2 = pe(r);
        CHECK_MESSAGE(e == e2, s, " -> ", r);
        CHECK(e2.str() == r);
    }
}

TEST_CASE("ring laws and idempotence on random expressions") {
    std::mt19937 rng(20240901);
    for (int i = 0; i < 60; ++i) {
        Expr a = random_expr(rng), b = random_expr(rng), c = random_expr(rng);
        CHECK((a * (b + c) - (a * b + a * c)).is_zero());
        CHECK((a - a).is_zero());
        CHECK((a * b - b * a).is_zero());
    }
}

TEST_CASE("partial_derivative: product and chain rules") {
    Ctx c = test_ctx();
    Atom rho = Atom::jet(*c->find_dep("rho"), 0, 0);
    // d/drho [sigma(rho,p)*rho^2] = sigma_rho*rho^2 + 2*sigma*rho
    Expr d = partial_derivative(pe("sigma*rho^2"), rho);
    CHECK(d == pe("sigma_rho*rho^2 + 2*sigma*rho"));
    // d/dp [rho^gamma] = 0
    Atom p = Atom::jet(*c->find_dep("p"), 0, 0);
    CHECK(partial_derivative(pe("rho^gamma"), p).is_zero());
    // d/du_s [-gamma*rho*p*u_s] = -gamma*rho*p
    Atom us = Atom::jet(*c->find_dep("u"), 0, 1);
    CHECK(partial_derivative(pe("-gamma*rho*p*u_s"), us) == pe("-gamma*rho*p"));
}

TEST_CASE("partial_derivative: commutes and satisfies Leibniz") {
    std::mt19937 rng(7);
    Ctx c = test_ctx();
    Atom x1 = Atom::jet(*c->find_dep("rho"), 0, 0);
    Atom x2 = Atom::jet(*c->find_dep("u"), 0, 0);
    for (int i = 0; i < 40; ++i) {
        Expr a = random_expr(rng), b = random_expr(rng);
        Expr d12 = partial_derivative(partial_derivative(a, x1), x2);
        Expr d21 = partial_derivative(partial_derivative(a, x2), x1);
        CHECK((d12 - d21).is_zero());
        Expr lhs = partial_derivative(a * b, x1);
        Expr rhs = partial_derivative(a, x1) * b + a * partial_derivative(b, x1);
        CHECK((lhs - rhs).is_zero());
    }
}

TEST_CASE("substitute: simultaneous and through powers") {
    Ctx c = test_ctx();
    // (1/rho){rho -> 1/phi_s} -> phi_s
    Bindings b;
    b.bind(Atom::jet(*c->find_dep("rho"), 0, 0), pe("phi_s^(-1)"));
    CHECK(substitute(pe("rho^(-1)"), b) == pe("phi_s"));
    // identity
    Bindings none;
    Expr e = pe("u*rho_s + sigma");
    CHECK(substitute(e, none) == e);
    // sigma -> rho^alpha * F(p); picks up the function atom wholesale
    Bindings b2;
    b2.bind(Expr::func(c, "sigma").terms()[0].f[0].a, pe("rho^alpha*F(p)"));
    CHECK(substitute(pe("sigma*Ey"), b2) == pe("rho^alpha*F(p)*Ey"));
    // constants substitute inside exponents: rho^alpha {alpha -> gamma+1}
    Bindings b3;
    b3.bind_const(*c->find_const("alpha"), Frac::var(*c->find_const("gamma")) + Frac(1));
    CHECK(substitute(pe("rho^alpha"), b3) == pe("rho^(gamma+1)"));
}

TEST_CASE("total derivatives: chain rule, nonlocal density, commutation") {
    CHECK(D_s(pe("rho^(-1)")) == pe("-rho_s/rho^2"));
    CHECK(D_t(pe("t*u - x")) == pe("u + t*u_t - x_t"));
    // chain through function arguments: D_s sigma = sigma_rho rho_s + sigma_p p_s
    CHECK(D_s(pe("sigma")) == pe("sigma_rho*rho_s + sigma_p*p_s"));
    // chain through composite arguments: D_t f1 = f1_v v_t + ... + f1_m (y_t - v - t v_t) + ...
    Expr dtf = D_t(pe("f1"));
    CHECK(dtf == pe("f1_v*v_t + f1_w*w_t + f1_m*(y_t - v - t*v_t) + f1_n*(z_t - w - t*w_t)"));
    std::mt19937 rng(99);
    for (int i = 0; i < 40; ++i) {
        Expr e = random_expr(rng);
        CHECK((D_t(D_s(e)) - D_s(D_t(e))).is_zero());
    }
}

TEST_CASE("partial derivative w.r.t. a symbolic constant") {
    Ctx c = test_ctx();
    int gamma = *c->find_const("gamma");
    CHECK(partial_derivative_const(pe("(gamma-1)*p"), gamma) == pe("p"));
    CHECK(partial_derivative_const(pe("u^2"), gamma).is_zero());
    CHECK_THROWS_AS(partial_derivative_const(pe("rho^gamma"), gamma), ExprError);
}
