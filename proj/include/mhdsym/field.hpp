#pragma once

// Exact scalar arithmetic for the symbolic kernel: arbitrary-precision
// rationals, multivariate polynomials over Q in the declared symbolic
// constants, and the quotient field Frac = P/Q in canonical form.
// Frac is used both for monomial coefficients and for power exponents,
// so equality of scalars is always decidable.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mhdsym {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct FieldError : std::runtime_error {
    explicit FieldError(const std::string& m) : std::runtime_error(m) {}
};

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw FieldError("rational 0^negative");
        return Rat(0);
    }
    Rat b = base;
    long n = e;
    if (n < 0) {
        b = Rat(denominator(b), numerator(b));
        n = -n;
    }
    Rat r(1);
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

inline Rat rat_gcd(const Rat& a, const Rat& b) {
    if (a == 0) return b < 0 ? Rat(-b) : b;
    if (b == 0) return a < 0 ? Rat(-a) : a;
    BigInt n = gcd(numerator(a) * denominator(b), numerator(b) * denominator(a));
    BigInt d = denominator(a) * denominator(b);
    Rat r(n, d);
    return r < 0 ? Rat(-r) : r;
}

inline std::string rat_str(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// ---------------------------------------------------------------------------
// Multivariate monomial: sorted (var id, exponent>0) pairs.

struct PolyMono {
    std::vector<std::pair<int, int>> v;

    bool operator==(const PolyMono& o) const { return v == o.v; }

    int exp_of(int var) const {
        for (auto& p : v)
            if (p.first == var) return p.second;
        return 0;
    }
    bool empty() const { return v.empty(); }
    int total_degree() const {
        int d = 0;
        for (auto& p : v) d += p.second;
        return d;
    }
};

// Lex order with lower var ids more significant; 1 is minimal, and the order
// is compatible with monomial multiplication (needed for exact division).
inline int mono_cmp(const PolyMono& a, const PolyMono& b) {
    size_t i = 0, j = 0;
    while (i < a.v.size() || j < b.v.size()) {
        int va = i < a.v.size() ? a.v[i].first : INT32_MAX;
        int vb = j < b.v.size() ? b.v[j].first : INT32_MAX;
        if (va < vb) return 1;   // a has a positive power of an earlier var
        if (vb < va) return -1;
        if (a.v[i].second != b.v[j].second)
            return a.v[i].second > b.v[j].second ? 1 : -1;
        ++i;
        ++j;
    }
    return 0;
}

inline PolyMono mono_mul(const PolyMono& a, const PolyMono& b) {
    PolyMono r;
    size_t i = 0, j = 0;
    while (i < a.v.size() || j < b.v.size()) {
        if (j == b.v.size() || (i < a.v.size() && a.v[i].first < b.v[j].first))
            r.v.push_back(a.v[i++]);
        else if (i == a.v.size() || b.v[j].first < a.v[i].first)
            r.v.push_back(b.v[j++]);
        else {
            r.v.emplace_back(a.v[i].first, a.v[i].second + b.v[j].second);
            ++i;
            ++j;
        }
    }
    return r;
}

// a / b when b divides a componentwise; returns false otherwise.
inline bool mono_try_div(const PolyMono& a, const PolyMono& b, PolyMono& out) {
    out.v.clear();
    size_t i = 0;
    for (auto& p : b.v) {
        while (i < a.v.size() && a.v[i].first < p.first) out.v.push_back(a.v[i++]);
        if (i == a.v.size() || a.v[i].first != p.first || a.v[i].second < p.second)
            return false;
        if (a.v[i].second > p.second)
            out.v.emplace_back(p.first, a.v[i].second - p.second);
        ++i;
    }
    while (i < a.v.size()) out.v.push_back(a.v[i++]);
    return true;
}

// ---------------------------------------------------------------------------
// Polynomial over Q: term list sorted ascending by mono_cmp, no zero coeffs.

class Poly {
  public:
    using Term = std::pair<PolyMono, Rat>;

    Poly() = default;
    explicit Poly(const Rat& c) {
        if (c != 0) t_.emplace_back(PolyMono{}, c);
    }
    static Poly var(int id, int exp = 1) {
        Poly p;
        PolyMono m;
        if (exp != 0) m.v.emplace_back(id, exp);
        p.t_.emplace_back(m, Rat(1));
        return p;
    }

    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const {
        return t_.empty() || (t_.size() == 1 && t_[0].first.empty());
    }
    Rat as_constant() const {
        if (t_.empty()) return Rat(0);
        if (!is_constant()) throw FieldError("Poly not constant");
        return t_[0].second;
    }
    const Term& leading() const { return t_.back(); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& t : r.t_) t.second = -t.second;
        return r;
    }
    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        size_t i = 0, j = 0;
        while (i < a.t_.size() || j < b.t_.size()) {
            int c = i == a.t_.size()   ? 1
                    : j == b.t_.size() ? -1
                                       : mono_cmp(a.t_[i].first, b.t_[j].first);
            if (c < 0)
                r.t_.push_back(a.t_[i++]);
            else if (c > 0)
                r.t_.push_back(b.t_[j++]);
            else {
                Rat s = a.t_[i].second + b.t_[j].second;
                if (s != 0) r.t_.emplace_back(a.t_[i].first, s);
                ++i;
                ++j;
            }
        }
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        std::map<PolyMono, Rat, decltype([](const PolyMono& x, const PolyMono& y) {
                     return mono_cmp(x, y) < 0;
                 })>
            acc;
        for (auto& ta : a.t_)
            for (auto& tb : b.t_) acc[mono_mul(ta.first, tb.first)] += ta.second * tb.second;
        Poly r;
        for (auto& [m, c] : acc)
            if (c != 0) r.t_.emplace_back(m, c);
        return r;
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend Poly operator*(const Poly& a, const Rat& c) {
        if (c == 0) return Poly();
        Poly r = a;
        for (auto& t : r.t_) t.second *= c;
        return r;
    }
    bool operator==(const Poly& o) const { return t_ == o.t_; }

    Poly pow(int e) const {
        if (e < 0) throw FieldError("Poly negative power");
        Poly r(Rat(1)), b = *this;
        while (e) {
            if (e & 1) r *= b;
            if (e >>= 1) b *= b;
        }
        return r;
    }

    int degree_in(int var) const {
        int d = 0;
        for (auto& t : t_) d = std::max(d, t.first.exp_of(var));
        return d;
    }
    int min_var() const {
        int v = INT32_MAX;
        for (auto& t : t_)
            if (!t.first.v.empty()) v = std::min(v, t.first.v[0].first);
        return v;
    }
    void collect_vars(std::vector<int>& out) const {
        for (auto& t : t_)
            for (auto& p : t.first.v)
                if (std::find(out.begin(), out.end(), p.first) == out.end())
                    out.push_back(p.first);
    }

    // derivative w.r.t. a variable
    Poly derivative(int var) const {
        Poly r;
        for (auto& t : t_) {
            int e = t.first.exp_of(var);
            if (e == 0) continue;
            PolyMono m;
            for (auto& p : t.first.v) {
                if (p.first == var) {
                    if (e > 1) m.v.emplace_back(var, e - 1);
                } else
                    m.v.push_back(p);
            }
            r = r + [&] {
                Poly q;
                q.t_.emplace_back(m, t.second * e);
                return q;
            }();
        }
        return r;
    }

    static Poly from_terms(std::vector<Term> ts) {
        std::sort(ts.begin(), ts.end(),
                  [](const Term& x, const Term& y) { return mono_cmp(x.first, y.first) < 0; });
        Poly r;
        r.t_ = std::move(ts);
        return r;
    }

  private:
    std::vector<Term> t_;
};

inline int poly_cmp(const Poly& a, const Poly& b) {
    const auto& x = a.terms();
    const auto& y = b.terms();
    if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
    for (size_t i = 0; i < x.size(); ++i) {
        int c = mono_cmp(x[i].first, y[i].first);
        if (c) return c;
        if (x[i].second != y[i].second) return x[i].second < y[i].second ? -1 : 1;
    }
    return 0;
}

// Exact multivariate division (throws if not exact).
inline Poly poly_divexact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw FieldError("division by zero polynomial");
    if (b.is_constant()) {
        Rat inv = Rat(1) / b.as_constant();
        return a * inv;
    }
    Poly r = a, q;
    std::vector<Poly::Term> qt;
    while (!r.is_zero()) {
        const auto& lr = r.leading();
        const auto& lb = b.leading();
        PolyMono m;
        if (!mono_try_div(lr.first, lb.first, m))
            throw FieldError("poly_divexact: not divisible");
        Rat c = lr.second / lb.second;
        Poly piece = Poly::from_terms({{m, c}});
        qt.push_back({m, c});
        r = r - piece * b;
    }
    return Poly::from_terms(std::move(qt));
}

namespace detail {

// univariate view in the main variable with Poly coefficients
using UniPoly = std::map<int, Poly>;  // degree -> coeff (nonzero)

inline UniPoly univariatize(const Poly& p, int var) {
    UniPoly u;
    for (auto& t : p.terms()) {
        int e = t.first.exp_of(var);
        PolyMono rest;
        for (auto& q : t.first.v)
            if (q.first != var) rest.v.push_back(q);
        Poly piece = Poly::from_terms({{rest, t.second}});
        auto it = u.find(e);
        if (it == u.end())
            u.emplace(e, piece);
        else {
            it->second += piece;
            if (it->second.is_zero()) u.erase(it);
        }
    }
    return u;
}

inline Poly deunivariatize(const UniPoly& u, int var) {
    Poly r;
    for (auto& [deg, coeff] : u) r += coeff * Poly::var(var, deg);
    return r;
}

Poly poly_gcd(const Poly& a, const Poly& b);

inline Poly content_of(const UniPoly& u) {
    Poly c;
    for (auto& [deg, coeff] : u) c = poly_gcd(c, coeff);
    return c;
}

// pseudo-remainder of a by b in variable var (degrees da >= db)
inline UniPoly pseudo_rem(UniPoly a, const UniPoly& b, int var) {
    int db = b.rbegin()->first;
    const Poly& lb = b.rbegin()->second;
    while (!a.empty() && a.rbegin()->first >= db) {
        int da = a.rbegin()->first;
        Poly la = a.rbegin()->second;
        UniPoly next;
        // next = lb*a - la*x^(da-db)*b
        for (auto& [d, c] : a) {
            Poly v = c * lb;
            if (!v.is_zero()) next[d] = v;
        }
        for (auto& [d, c] : b) {
            int dd = d + da - db;
            Poly v = c * la;
            auto it = next.find(dd);
            if (it == next.end()) {
                if (!v.is_zero()) next[dd] = -v;
            } else {
                it->second -= v;
                if (it->second.is_zero()) next.erase(it);
            }
        }
        a = std::move(next);
    }
    return a;
}

inline Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_constant() || b.is_constant()) return Poly(Rat(1));
    int va = a.min_var(), vb = b.min_var();
    int var = std::min(va, vb);
    if (a.degree_in(var) == 0 || b.degree_in(var) == 0) {
        // var occurs in only one of them: gcd divides contents
        UniPoly ua = univariatize(a, var), ub = univariatize(b, var);
        return poly_gcd(content_of(ua), content_of(ub));
    }
    UniPoly ua = univariatize(a, var), ub = univariatize(b, var);
    Poly ca = content_of(ua), cb = content_of(ub);
    UniPoly pa, pb;
    for (auto& [d, c] : ua) pa[d] = poly_divexact(c, ca);
    for (auto& [d, c] : ub) pb[d] = poly_divexact(c, cb);
    if (pa.rbegin()->first < pb.rbegin()->first) std::swap(pa, pb);
    while (true) {
        UniPoly r = pseudo_rem(pa, pb, var);
        if (r.empty()) break;
        // primitive part of r
        Poly cr = content_of(r);
        UniPoly pr;
        for (auto& [d, c] : r) pr[d] = poly_divexact(c, cr);
        pa = std::move(pb);
        pb = std::move(pr);
    }
    Poly g = deunivariatize(pb, var);
    return poly_gcd(ca, cb) * g;
}

}  // namespace detail

inline Poly poly_gcd(const Poly& a, const Poly& b) { return detail::poly_gcd(a, b); }

// ---------------------------------------------------------------------------
// Frac: canonical rational function num/den over Q.
//   invariants: den != 0; gcd(num,den) constant; leading coeff of den is 1.

class Frac {
  public:
    Frac() : num_(), den_(Rat(1)) {}
    Frac(long n) : num_(Rat(n)), den_(Rat(1)) {}  // NOLINT: implicit by design
    Frac(const Rat& r) : num_(r), den_(Rat(1)) {}
    explicit Frac(Poly p) : num_(std::move(p)), den_(Rat(1)) {}
    Frac(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    static Frac var(int id) { return Frac(Poly::var(id)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
    Rat as_rational() const {
        if (!is_rational()) throw FieldError("Frac not rational: has symbolic constants");
        return num_.as_constant() / den_.as_constant();
    }
    bool is_integer() const {
        return is_rational() && denominator(as_rational()) == 1;
    }
    long as_long() const {
        Rat r = as_rational();
        if (denominator(r) != 1) throw FieldError("Frac not an integer");
        return static_cast<long>(numerator(r));
    }

    friend Frac operator+(const Frac& a, const Frac& b) {
        return Frac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Frac operator-(const Frac& a, const Frac& b) {
        return Frac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Frac operator*(const Frac& a, const Frac& b) {
        return Frac(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Frac operator/(const Frac& a, const Frac& b) {
        if (b.is_zero()) throw FieldError("Frac division by zero");
        return Frac(a.num_ * b.den_, a.den_ * b.num_);
    }
    Frac operator-() const {
        Frac r = *this;
        r.num_ = -r.num_;
        return r;
    }
    Frac& operator+=(const Frac& o) { return *this = *this + o; }
    Frac& operator-=(const Frac& o) { return *this = *this - o; }
    Frac& operator*=(const Frac& o) { return *this = *this * o; }
    Frac& operator/=(const Frac& o) { return *this = *this / o; }

    Frac pow(long e) const {
        if (e == 0) return Frac(1);
        if (e < 0) return Frac(1) / pow(-e);
        Frac r(1), b = *this;
        while (e) {
            if (e & 1) r *= b;
            if (e >>= 1) b *= b;
        }
        return r;
    }

    bool operator==(const Frac& o) const {
        return poly_cmp(num_, o.num_) == 0 && poly_cmp(den_, o.den_) == 0;
    }

    Frac derivative(int var) const {
        return Frac(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
    }

    Frac subst(int var, const Frac& val) const {
        auto eval_poly = [&](const Poly& p) {
            Frac acc(0);
            for (auto& t : p.terms()) {
                Frac m(t.second);
                for (auto& q : t.first.v)
                    m *= (q.first == var) ? val.pow(q.second) : Frac(Poly::var(q.first, q.second));
                acc += m;
            }
            return acc;
        };
        return eval_poly(num_) / eval_poly(den_);
    }

    double eval_double(const std::map<int, double>& vals) const {
        auto ev = [&](const Poly& p) {
            double acc = 0;
            for (auto& t : p.terms()) {
                double m = static_cast<double>(t.second);
                for (auto& q : t.first.v) {
                    auto it = vals.find(q.first);
                    if (it == vals.end()) throw FieldError("eval_double: unbound constant");
                    double b = it->second;
                    for (int k = 0; k < q.second; ++k) m *= b;
                }
                acc += m;
            }
            return acc;
        };
        double d = ev(den_);
        if (d == 0) throw FieldError("eval_double: zero denominator");
        return ev(num_) / d;
    }

    void collect_vars(std::vector<int>& out) const {
        num_.collect_vars(out);
        den_.collect_vars(out);
    }

  private:
    void normalize() {
        if (den_.is_zero()) throw FieldError("Frac zero denominator");
        if (num_.is_zero()) {
            den_ = Poly(Rat(1));
            return;
        }
        Poly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = poly_divexact(num_, g);
            den_ = poly_divexact(den_, g);
        }
        Rat lc = den_.leading().second;
        if (lc != 1) {
            Rat inv = Rat(1) / lc;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    Poly num_, den_;
};

inline int frac_cmp(const Frac& a, const Frac& b) {
    int c = poly_cmp(a.num(), b.num());
    if (c) return c;
    return poly_cmp(a.den(), b.den());
}

}  // namespace mhdsym
