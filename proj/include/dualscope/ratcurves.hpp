#pragma once

// Parametrized rational plane curves (g0 : g1 : g2), exact dualization via
// Jacobian minors, implicitization via the Sylvester resultant, and the
// class/Pluecker formula bookkeeping. The parameter line is shared between a
// curve and its dual: dualize keeps t, so branch data transports verbatim.

#include "dualscope/binform.hpp"
#include "dualscope/numfield.hpp"
#include "dualscope/projspace.hpp"

#include <array>
#include <climits>
#include <map>

namespace dualscope {
namespace curves {

class improper_parametrization : public std::runtime_error {
public:
    explicit improper_parametrization(int degree)
        : std::runtime_error("improper parametrization: covering degree " + std::to_string(degree)),
          covering_degree(degree) {}
    int covering_degree;
};

class degenerate_curve : public std::runtime_error {
public:
    explicit degenerate_curve(const std::string& what) : std::runtime_error(what) {}
};

class ParamCurve {
public:
    ParamCurve() = default;
    // requires the triple to be reduced (gcd 1); use reduce() for raw input
    ParamCurve(Poly<Rat> g0, Poly<Rat> g1, Poly<Rat> g2) : g_{std::move(g0), std::move(g1), std::move(g2)} {
        if (g_[0].is_zero() && g_[1].is_zero() && g_[2].is_zero())
            throw std::invalid_argument("ParamCurve: zero triple");
        if (poly_gcd_all(std::vector<Poly<Rat>>{g_[0], g_[1], g_[2]}).degree() != 0)
            throw std::invalid_argument("ParamCurve: triple not reduced");
        n_ = std::max({g_[0].degree(), g_[1].degree(), g_[2].degree()});
    }

    int degree() const { return n_; }  // parametric degree
    const Poly<Rat>& g(int i) const { return g_[static_cast<size_t>(i)]; }

    // homogenized coefficient b^{(i)}_j: coefficient of t^{n-j} in g_i
    Rat b(int i, int j) const { return g_[static_cast<size_t>(i)].coeff(n_ - j); }

    // rank of the 3 x (n+1) coefficient matrix; < 3 means the image is a line
    // or point
    int coefficient_rank() const {
        proj::Mat m;
        for (int i = 0; i < 3; ++i) {
            proj::Vec row(static_cast<size_t>(n_) + 1);
            for (int j = 0; j <= n_; ++j) row[static_cast<size_t>(j)] = b(i, j);
            m.push_back(std::move(row));
        }
        return proj::rank_of(m);
    }

    proj::ProjPoint at(const Rat& t) const {
        return proj::ProjPoint({g_[0].eval(t), g_[1].eval(t), g_[2].eval(t)});
    }
    proj::ProjPoint at_infinity() const {
        return proj::ProjPoint({b(0, 0), b(1, 0), b(2, 0)});
    }
    proj::ProjPoint at(const P1Point& p) const {
        assert(!p.is_algebraic());
        return p.is_infinity() ? at_infinity() : at(p.rat());
    }

    std::array<NFElem, 3> at(const std::shared_ptr<const Poly<Rat>>& mod) const {
        NFElem theta = NFElem::generator(mod);
        return {g_[0].eval(theta), g_[1].eval(theta), g_[2].eval(theta)};
    }

    // the s = 1/t chart: coefficients reversed relative to the common degree n
    ParamCurve reversed() const {
        return ParamCurve(g_[0].reversed(n_), g_[1].reversed(n_), g_[2].reversed(n_));
    }

    ParamCurve shifted(const Rat& c) const {  // t -> t + c
        return ParamCurve(g_[0].shifted_arg(c), g_[1].shifted_arg(c), g_[2].shifted_arg(c));
    }

    // left-multiply the coordinate triple by an invertible 3x3 matrix
    ParamCurve transformed(const std::array<std::array<Rat, 3>, 3>& m) const {
        std::array<Poly<Rat>, 3> h;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) h[static_cast<size_t>(i)] = h[static_cast<size_t>(i)] + g_[static_cast<size_t>(j)] * m[static_cast<size_t>(i)][static_cast<size_t>(j)];
        return ParamCurve(h[0], h[1], h[2]);
    }

    friend bool operator==(const ParamCurve& a, const ParamCurve& b) { return a.g_ == b.g_; }

private:
    std::array<Poly<Rat>, 3> g_;
    int n_ = 0;
};

// --- reduce -------------------------------------------------------------------------

// strips the common factor of a raw triple; returns the curve and the affine
// content polynomial (roots = finite singular-branch parameters of the source
// when the input is a minor triple)
inline std::pair<ParamCurve, Poly<Rat>> reduce(const Poly<Rat>& r0, const Poly<Rat>& r1,
                                               const Poly<Rat>& r2) {
    if (r0.is_zero() && r1.is_zero() && r2.is_zero())
        throw std::invalid_argument("reduce: zero triple");
    Poly<Rat> g = poly_gcd_all(std::vector<Poly<Rat>>{r0, r1, r2});
    auto div = [&](const Poly<Rat>& p) { return p.is_zero() ? p : divrem(p, g).first; };
    return {ParamCurve(div(r0), div(r1), div(r2)), g};
}

// --- dualize ------------------------------------------------------------------------

// raw Jacobian minor triple (M12 : -M02 : M01) = nu x nu'
inline std::array<Poly<Rat>, 3> minor_triple(const ParamCurve& c) {
    std::array<Poly<Rat>, 3> d{c.g(0).derivative(), c.g(1).derivative(), c.g(2).derivative()};
    return {c.g(1) * d[2] - c.g(2) * d[1],
            c.g(2) * d[0] - c.g(0) * d[2],
            c.g(0) * d[1] - c.g(1) * d[0]};
}

struct DualizeResult {
    ParamCurve dual;
    Poly<Rat> content;       // affine part of the minor content
    int content_deg_at_inf;  // multiplicity of t = infinity in the content
};

inline DualizeResult dualize_full(const ParamCurve& c) {
    if (c.degree() < 2) throw degenerate_curve("dualize: parametric degree < 2");
    if (c.coefficient_rank() < 3) throw degenerate_curve("dualize: image is a line or point");
    auto m = minor_triple(c);
    auto [dual, content] = reduce(m[0], m[1], m[2]);
    int inf = 2 * c.degree() - 2 - content.degree() - dual.degree();
    assert(inf >= 0);
    // incidence contracts, as exact polynomial identities
    Poly<Rat> inc0, inc1;
    for (int i = 0; i < 3; ++i) {
        inc0 = inc0 + dual.g(i) * c.g(i);
        inc1 = inc1 + dual.g(i) * c.g(i).derivative();
    }
    assert(inc0.is_zero() && inc1.is_zero());
    return {dual, content, inf};
}

inline ParamCurve dualize(const ParamCurve& c) { return dualize_full(c).dual; }

// --- implicit curves -----------------------------------------------------------------

// homogeneous trivariate polynomial with exact coefficients
class ImplicitCurve {
public:
    ImplicitCurve() = default;
    ImplicitCurve(int degree, std::map<std::array<int, 3>, Rat> terms)
        : d_(degree), terms_(std::move(terms)) {
        for (auto it = terms_.begin(); it != terms_.end();) {
            assert(it->first[0] + it->first[1] + it->first[2] == d_);
            it = it->second == 0 ? terms_.erase(it) : std::next(it);
        }
    }

    int degree() const { return d_; }
    const std::map<std::array<int, 3>, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    template <class T>
    T eval(const T& x0, const T& x1, const T& x2) const {
        T acc = T(0);
        for (const auto& [e, c] : terms_) {
            T t = to_ring<T>(c);
            for (int i = 0; i < e[0]; ++i) t = t * x0;
            for (int i = 0; i < e[1]; ++i) t = t * x1;
            for (int i = 0; i < e[2]; ++i) t = t * x2;
            acc = acc + t;
        }
        return acc;
    }

    bool vanishes_on(const ParamCurve& c) const {
        return eval<Poly<Rat>>(c.g(0), c.g(1), c.g(2)).is_zero();
    }

    bool proportional(const ImplicitCurve& o) const {
        if (d_ != o.d_ || terms_.size() != o.terms_.size()) return false;
        if (terms_.empty()) return true;
        auto it = terms_.begin();
        auto jt = o.terms_.find(it->first);
        if (jt == o.terms_.end()) return false;
        Rat num = jt->second, den = it->second;
        for (const auto& [e, c] : terms_) {
            auto k = o.terms_.find(e);
            if (k == o.terms_.end() || k->second * den != c * num) return false;
        }
        return true;
    }

    std::string to_string(const std::array<std::string, 3>& vars = {"x0", "x1", "x2"}) const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : terms_) {
            std::string mono;
            for (int i = 0; i < 3; ++i) {
                if (e[static_cast<size_t>(i)] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += vars[static_cast<size_t>(i)];
                if (e[static_cast<size_t>(i)] > 1) mono += "^" + std::to_string(e[static_cast<size_t>(i)]);
            }
            std::string coeff = dualscope::to_string(c);
            if (!s.empty() && coeff[0] != '-') s += " + ";
            if (!s.empty() && coeff[0] == '-') {
                s += " - ";
                coeff = coeff.substr(1);
            }
            if (mono.empty())
                s += coeff;
            else if (coeff == "1")
                s += mono;
            else if (coeff == "-1")
                s += "-" + mono;
            else
                s += coeff + "*" + mono;
        }
        return s;
    }

private:
    int d_ = 0;
    std::map<std::array<int, 3>, Rat> terms_;
};

namespace detail {

// Res_t(x0 G2 - x2 G0, x1 G2 - x2 G1) on the chart x_pivot = 1, by dense
// interpolation: the two arguments depend on disjoint variables, so a tensor
// grid of univariate resultants suffices.
struct ChartResultant {
    Poly<Poly<Rat>> value;  // outer x_b, inner x_a (the two non-pivot variables)
    int var_a, var_b;       // variable indices
};

inline ChartResultant chart_resultant(const ParamCurve& c, int pivot) {
    const int n = c.degree();
    int va = (pivot + 1) % 3, vb = (pivot + 2) % 3;
    const Poly<Rat>&gp = c.g(pivot), &ga = c.g(va), &gb = c.g(vb);
    std::vector<Rat> nodes;
    for (int k = 0; k <= 2 * n; ++k) nodes.push_back(Rat(k - n));
    // rows: for each value of x_b interpolate in x_a
    std::vector<Poly<Rat>> rows;
    for (const Rat& xb : nodes) {
        std::vector<Rat> vals;
        Poly<Rat> qb = gp * xb - gb;
        for (const Rat& xa : nodes) {
            Poly<Rat> qa = gp * xa - ga;
            vals.push_back(resultant_formal(qa, n, qb, n));
        }
        rows.push_back(interpolate(nodes, vals));
    }
    // interpolate coefficient-wise across x_b
    int max_deg = 0;
    for (const auto& r : rows) max_deg = std::max(max_deg, r.degree());
    std::vector<Poly<Rat>> outer(static_cast<size_t>(2 * n) + 1);
    for (int j = 0; j <= max_deg; ++j) {
        std::vector<Rat> vals;
        for (const auto& r : rows) vals.push_back(r.coeff(j));
        Poly<Rat> col = interpolate(nodes, vals);
        for (int i = 0; i <= col.degree(); ++i) {
            // coefficient of x_a^j x_b^i
            Poly<Rat> cur = outer[static_cast<size_t>(i)];
            cur.set_coeff(j, col.coeff(i));
            outer[static_cast<size_t>(i)] = cur;
        }
    }
    Poly<Poly<Rat>> res(outer);
    return {res, va, vb};
}

// primitive part and squarefree part of a bivariate polynomial (outer/inner)
inline Poly<Poly<Rat>> bivariate_primitive(const Poly<Poly<Rat>>& p) {
    if (p.is_zero()) return p;
    Poly<Rat> cont = content(p);
    Poly<Poly<Rat>> q = exact_div(p, cont);
    // strip the rational content and inner-variable monomial factors too
    int min_pow = INT_MAX;
    for (int i = 0; i <= q.degree(); ++i) {
        const Poly<Rat>& ci = q.coeff(i);
        if (ci.is_zero()) continue;
        int low = 0;
        while (ci.coeff(low) == 0) ++low;
        min_pow = std::min(min_pow, low);
    }
    if (min_pow > 0 && min_pow != INT_MAX) {
        std::vector<Poly<Rat>> cs;
        for (int i = 0; i <= q.degree(); ++i) {
            std::vector<Rat> inner;
            for (int j = min_pow; j <= q.coeff(i).degree(); ++j) inner.push_back(q.coeff(i).coeff(j));
            cs.push_back(Poly<Rat>(inner));
        }
        q = Poly<Poly<Rat>>(cs);
    }
    return q;
}

struct SqfResult {
    Poly<Poly<Rat>> sqf;
    int multiplicity;  // p_primitive ~ sqf^multiplicity
};

inline SqfResult bivariate_squarefree(const Poly<Poly<Rat>>& p) {
    if (p.degree() == 0) {
        // univariate in the inner variable
        Poly<Rat> inner = p.coeff(0);
        Poly<Rat> sf = squarefree_part(inner);
        int mult = inner.degree() / std::max(sf.degree(), 1);
        return {Poly<Poly<Rat>>(sf), inner.degree() == 0 ? 1 : mult};
    }
    Poly<Poly<Rat>> der = p.derivative();
    Poly<Poly<Rat>> g = ring_gcd(p, der);
    if (g.degree() == 0 && g.coeff(0).degree() == 0) return {p, 1};
    Poly<Poly<Rat>> sqf = bivariate_primitive(exact_div(p, g));
    // recover the multiplicity from degrees
    auto total_deg = [](const Poly<Poly<Rat>>& q) {
        int d = 0;
        for (int i = 0; i <= q.degree(); ++i)
            if (!q.coeff(i).is_zero()) d = std::max(d, i + q.coeff(i).degree());
        return d;
    };
    int mult = total_deg(p) / std::max(total_deg(sqf), 1);
    return {sqf, mult};
}

}  // namespace detail

struct ImplicitizeResult {
    ImplicitCurve curve;
    int covering_degree;
};

// primitive squarefree homogeneous equation of the image plus the covering
// degree of the parametrization onto it
inline ImplicitizeResult implicitize_full(const ParamCurve& c) {
    if (c.coefficient_rank() < 3) throw degenerate_curve("implicitize: image is a line or point");
    const int n = c.degree();
    for (int pivot : {2, 0, 1}) {
        if (c.g(pivot).is_zero()) continue;
        auto chart = detail::chart_resultant(c, pivot);
        if (chart.value.is_zero()) continue;  // bad chart
        auto pp = detail::bivariate_primitive(chart.value);
        auto [sqf, mult] = detail::bivariate_squarefree(pp);
        sqf = detail::bivariate_primitive(sqf);
        // total degree of the affine equation = projective degree (the image
        // is not a coordinate line)
        int d = 0;
        for (int i = 0; i <= sqf.degree(); ++i)
            if (!sqf.coeff(i).is_zero()) d = std::max(d, i + sqf.coeff(i).degree());
        if (d == 0) continue;
        if (n % d != 0) continue;  // chart artifact; try another pivot
        // homogenize: term x_a^j x_b^i x_pivot^{d-i-j}
        std::map<std::array<int, 3>, Rat> terms;
        for (int i = 0; i <= sqf.degree(); ++i)
            for (int j = 0; j <= sqf.coeff(i).degree(); ++j) {
                Rat coeff = sqf.coeff(i).coeff(j);
                if (coeff == 0) continue;
                std::array<int, 3> e{};
                e[static_cast<size_t>(chart.var_a)] = j;
                e[static_cast<size_t>(chart.var_b)] = i;
                e[static_cast<size_t>(pivot)] = d - i - j;
                if (e[static_cast<size_t>(pivot)] < 0) goto next_pivot;
                terms[e] = coeff;
            }
        {
            ImplicitCurve F(d, terms);
            if (!F.vanishes_on(c)) goto next_pivot;
            int mu = n / d;
            (void)mult;
            return {F, mu};
        }
    next_pivot:;
    }
    throw degenerate_curve("implicitize: no usable affine chart");
}

inline ImplicitCurve implicitize(const ParamCurve& c) {
    auto r = implicitize_full(c);
    if (r.covering_degree != 1) throw improper_parametrization(r.covering_degree);
    return r.curve;
}

// covering degree of the parametrization onto its image; 1 = proper
inline int validate_proper(const ParamCurve& c) { return implicitize_full(c).covering_degree; }

// --- class formula and Pluecker audit --------------------------------------------------

// d* = 2(g + d - 1) - sum (m_A - 1) over singular branches
inline int class_degree(int d, int g, const std::vector<int>& branch_multiplicities) {
    if (d < 2) throw std::invalid_argument("class_degree: d >= 2 required");
    if (g < 0) throw std::invalid_argument("class_degree: g >= 0 required");
    long sum = 0;
    for (int m : branch_multiplicities) {
        if (m < 2) throw std::invalid_argument("class_degree: only singular branches (m >= 2) are listed");
        sum += m - 1;
    }
    long c = 2L * (g + d - 1) - sum;
    if (c < 0) throw std::domain_error("class_degree: inconsistent inventory (negative class)");
    return static_cast<int>(c);
}

struct PlueckerData {
    int d, dstar, g, delta, kappa, b, f;
};

struct PlueckerRelation {
    std::string name;
    long lhs, rhs;
    bool holds;
};

// the four classical Pluecker relations, evaluated exactly
inline std::vector<PlueckerRelation> pluecker_audit(const PlueckerData& p) {
    std::vector<PlueckerRelation> out;
    auto rel = [&](const std::string& name, long lhs, long rhs) {
        out.push_back({name, lhs, rhs, lhs == rhs});
    };
    rel("genus from nodes and cusps", p.g, static_cast<long>(p.d - 1) * (p.d - 2) / 2 - p.delta - p.kappa);
    rel("genus from bitangents and flexes", p.g,
        static_cast<long>(p.dstar - 1) * (p.dstar - 2) / 2 - p.b - p.f);
    rel("class formula", p.dstar, static_cast<long>(p.d) * (p.d - 1) - 2 * p.delta - 3 * p.kappa);
    rel("dual class formula", p.d, static_cast<long>(p.dstar) * (p.dstar - 1) - 2 * p.b - 3 * p.f);
    return out;
}

}  // namespace curves
}  // namespace dualscope
