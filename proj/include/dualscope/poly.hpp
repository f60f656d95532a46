#pragma once

// Dense univariate polynomials over an exact coefficient ring, low-to-high.
// The same template carries Q[t], Z[t], K[t] for a number field K, and
// recursively nested rings Q[s][t] etc. used by the elimination machinery.

#include "dualscope/rational.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

namespace dualscope {

template <class R>
class Poly;

// --- coefficient-ring hooks -------------------------------------------------

template <class R>
struct is_poly : std::false_type {};
template <class R>
struct is_poly<Poly<R>> : std::true_type {};

inline bool ring_is_zero(const Int& x) { return x == 0; }
inline bool ring_is_zero(const Rat& x) { return x == 0; }
template <class R>
bool ring_is_zero(const Poly<R>& p);

// to_ring<T>(x): embed a coefficient into a larger ring (identity by default).
template <class T, class R>
T to_ring(const R& x) {
    if constexpr (std::is_same_v<T, R>) {
        return x;
    } else {
        return T(x);
    }
}

// --- the polynomial type ----------------------------------------------------

template <class R>
class Poly {
public:
    Poly() = default;
    explicit Poly(const R& c) {
        if (!ring_is_zero(c)) c_.push_back(c);
    }
    Poly(std::initializer_list<R> cs) : c_(cs) { trim(); }
    explicit Poly(std::vector<R> cs) : c_(std::move(cs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(R(1)); }
    // t^k with unit coefficient
    static Poly monomial(int k, const R& c = R(1)) {
        Poly p;
        if (ring_is_zero(c)) return p;
        p.c_.assign(static_cast<size_t>(k) + 1, R(0));
        p.c_.back() = c;
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const R& lc() const {
        assert(!c_.empty());
        return c_.back();
    }
    R coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return R(0);
        return c_[static_cast<size_t>(k)];
    }
    const std::vector<R>& coeffs() const { return c_; }

    void set_coeff(int k, const R& v) {
        if (k >= static_cast<int>(c_.size())) c_.resize(static_cast<size_t>(k) + 1, R(0));
        c_[static_cast<size_t>(k)] = v;
        trim();
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), R(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] = r.c_[i] + b.c_[i];
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Poly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, R(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (ring_is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    friend Poly operator*(const Poly& a, const R& s) {
        if (ring_is_zero(s)) return Poly();
        Poly r = a;
        for (auto& x : r.c_) x = x * s;
        r.trim();
        return r;
    }
    friend Poly operator*(const R& s, const Poly& a) { return a * s; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Horner evaluation into any ring containing R.
    template <class T>
    T eval(const T& x) const {
        T r = T(0);
        for (size_t i = c_.size(); i-- > 0;) r = r * x + to_ring<T>(c_[i]);
        return r;
    }

    Poly derivative() const {
        Poly r;
        if (c_.size() < 2) return r;
        r.c_.resize(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * R(static_cast<int>(i));
        r.trim();
        return r;
    }

    // coefficient list reversed relative to a formal degree (s = 1/t chart);
    // formal_deg >= degree() required.
    Poly reversed(int formal_deg) const {
        assert(formal_deg >= degree());
        Poly r;
        r.c_.assign(static_cast<size_t>(formal_deg) + 1, R(0));
        for (size_t i = 0; i < c_.size(); ++i) r.c_[static_cast<size_t>(formal_deg) - i] = c_[i];
        r.trim();
        return r;
    }

    Poly shifted_arg(const R& a) const {  // p(t + a)
        Poly r, pw = one();
        Poly lin{a, R(1)};
        for (size_t i = 0; i < c_.size(); ++i) {
            r = r + pw * c_[i];
            if (i + 1 < c_.size()) pw = pw * lin;
        }
        return r;
    }

    Poly mul_xk(int k) const {  // p * t^k
        if (is_zero()) return Poly();
        Poly r;
        r.c_.assign(c_.size() + static_cast<size_t>(k), R(0));
        std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
        return r;
    }

    void trim() {
        while (!c_.empty() && ring_is_zero(c_.back())) c_.pop_back();
    }

private:
    std::vector<R> c_;
};

template <class R>
bool ring_is_zero(const Poly<R>& p) {
    return p.is_zero();
}

template <class R>
Poly<R> to_poly_constant(const R& x) {
    return Poly<R>(x);
}

// --- division ----------------------------------------------------------------

// Quotient/remainder over a coefficient field.
template <class F>
std::pair<Poly<F>, Poly<F>> divrem(const Poly<F>& a, const Poly<F>& b) {
    assert(!b.is_zero());
    Poly<F> q, r = a;
    const int db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        F c = r.lc() / b.lc();
        int k = r.degree() - db;
        q.set_coeff(k, q.coeff(k) + c);
        r = r - (b * c).mul_xk(k);
    }
    return {q, r};
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + rem.
template <class R>
Poly<R> pseudo_rem(const Poly<R>& a, const Poly<R>& b) {
    assert(!b.is_zero());
    Poly<R> r = a;
    const int db = b.degree();
    int steps = a.degree() - db + 1;
    if (steps <= 0) return r;
    const R& c = b.lc();
    while (!r.is_zero() && r.degree() >= db && steps > 0) {
        int k = r.degree() - db;
        R rl = r.lc();
        r = r * c - (b * rl).mul_xk(k);
        --steps;
    }
    // pad with remaining powers of c so the identity holds with a fixed exponent
    while (steps-- > 0) r = r * c;
    return r;
}

inline Int exact_div(const Int& a, const Int& b) {
    assert(b != 0 && a % b == 0);
    return a / b;
}
inline Rat exact_div(const Rat& a, const Rat& b) {
    assert(b != 0);
    return a / b;
}

// Exact polynomial division (asserts divisibility).
template <class R>
Poly<R> exact_div(const Poly<R>& a, const Poly<R>& b) {
    assert(!b.is_zero());
    Poly<R> q, r = a;
    const int db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        R c = exact_div(r.lc(), b.lc());
        int k = r.degree() - db;
        q.set_coeff(k, q.coeff(k) + c);
        r = r - (b * c).mul_xk(k);
    }
    assert(r.is_zero());
    return q;
}

template <class R>
Poly<R> exact_div(const Poly<R>& a, const R& s) {
    Poly<R> r = a;
    std::vector<R> cs(r.coeffs());
    for (auto& x : cs) x = exact_div(x, s);
    return Poly<R>(cs);
}

// --- gcd / content tower ------------------------------------------------------

inline Int ring_gcd(const Int& a, const Int& b) { return int_gcd(a, b); }
inline Rat ring_gcd(const Rat& a, const Rat& b) { return (a == 0 && b == 0) ? Rat(0) : Rat(1); }
template <class R>
Poly<R> ring_gcd(const Poly<R>& a, const Poly<R>& b);

template <class R>
R content(const Poly<R>& p) {
    R g(0);
    for (const auto& c : p.coeffs()) g = ring_gcd(g, c);
    return g;
}

template <class R>
Poly<R> primitive_part(const Poly<R>& p) {
    if (p.is_zero()) return p;
    return exact_div(p, content(p));
}

namespace detail {

// sign normalization so gcds are canonical
inline Poly<Int> normalize_gcd(Poly<Int> g) {
    if (!g.is_zero() && g.lc() < 0) g = -g;
    return g;
}
inline Poly<Rat> normalize_gcd(Poly<Rat> g) {
    if (!g.is_zero()) g = g * (Rat(1) / g.lc());
    return g;
}
template <class R>
Poly<Poly<R>> normalize_gcd(Poly<Poly<R>> g) {
    return g;  // nested rings: primitive, but no canonical unit choice
}

}  // namespace detail

// Primitive PRS gcd; valid over Z, over Q (plain Euclid shape), and over
// nested polynomial rings.
template <class R>
Poly<R> ring_gcd(const Poly<R>& a, const Poly<R>& b) {
    Poly<R> p = a, q = b;
    if (p.is_zero()) return detail::normalize_gcd(q);
    if (q.is_zero()) return detail::normalize_gcd(p);
    if (p.degree() < q.degree()) std::swap(p, q);
    R cp = content(p), cq = content(q);
    R cg = ring_gcd(cp, cq);
    p = exact_div(p, cp);
    q = exact_div(q, cq);
    while (true) {
        Poly<R> r = pseudo_rem(p, q);
        if (r.is_zero()) break;
        if (r.degree() == 0) {
            q = Poly<R>::one();
            break;
        }
        r = exact_div(r, content(r));
        p = q;
        q = r;
    }
    Poly<R> g = q * cg;
    return detail::normalize_gcd(g);
}

template <class F>
Poly<F> poly_gcd_field(const Poly<F>& a, const Poly<F>& b) {
    Poly<F> p = a, q = b;
    while (!q.is_zero()) {
        auto [quo, rem] = divrem(p, q);
        (void)quo;
        p = q;
        q = rem;
    }
    if (!p.is_zero()) p = p * (F(1) / p.lc());
    return p;
}

// Monic gcd over Q via the integer primitive PRS (controls coefficient growth).
Poly<Rat> poly_gcd(const Poly<Rat>& a, const Poly<Rat>& b);

// --- Q <-> Z scaling ----------------------------------------------------------

// integer polynomial with content 1, positive leading coefficient, plus the
// rational scalar relating it to the input: p = scale * result
struct ZScaled {
    Poly<Int> p;
    Rat scale;
};

inline ZScaled to_primitive_z(const Poly<Rat>& p) {
    if (p.is_zero()) return {Poly<Int>(), Rat(1)};
    Int l = 1;
    for (const auto& c : p.coeffs()) l = int_lcm(l, den(c));
    std::vector<Int> ic(p.coeffs().size());
    for (size_t i = 0; i < ic.size(); ++i) {
        const Rat c = p.coeffs()[i] * l;
        assert(den(c) == 1);
        ic[i] = num(c);
    }
    Int g = 0;
    for (const auto& c : ic) g = int_gcd(g, c);
    if (ic.back() < 0) g = -g;
    for (auto& c : ic) c = exact_div(c, g);
    return {Poly<Int>(ic), Rat(g, l)};
}

inline Poly<Rat> to_q(const Poly<Int>& p) {
    std::vector<Rat> c(p.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = Rat(p.coeffs()[i]);
    return Poly<Rat>(c);
}

inline Poly<Rat> poly_gcd(const Poly<Rat>& a, const Poly<Rat>& b) {
    if (a.is_zero() && b.is_zero()) return Poly<Rat>();
    if (a.is_zero()) return detail::normalize_gcd(b);
    if (b.is_zero()) return detail::normalize_gcd(a);
    Poly<Int> g = ring_gcd(to_primitive_z(a).p, to_primitive_z(b).p);
    return detail::normalize_gcd(to_q(g));
}

// gcd of a whole family
template <class R>
Poly<R> poly_gcd_all(const std::vector<Poly<R>>& ps) {
    Poly<R> g;
    for (const auto& p : ps) {
        if constexpr (std::is_same_v<R, Rat>) {
            g = poly_gcd(g, p);
        } else {
            g = ring_gcd(g, p);
        }
        if (g.degree() == 0) break;
    }
    return g;
}

// --- squarefree ----------------------------------------------------------------

// p / gcd(p, p') normalized monic; char-0 field coefficients.
inline Poly<Rat> squarefree_part(const Poly<Rat>& p) {
    if (p.is_zero() || p.degree() == 0) return detail::normalize_gcd(p);
    Poly<Rat> g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return detail::normalize_gcd(p);
    auto [q, r] = divrem(p, g);
    assert(r.is_zero());
    return detail::normalize_gcd(q);
}

// Yun decomposition: p = c * prod f_i^i with f_i squarefree pairwise coprime.
// Returns (multiplicity, factor) pairs, factors monic of degree >= 1.
inline std::vector<std::pair<int, Poly<Rat>>> yun_decomposition(const Poly<Rat>& p) {
    std::vector<std::pair<int, Poly<Rat>>> out;
    if (p.is_zero() || p.degree() == 0) return out;
    Poly<Rat> a = detail::normalize_gcd(p);
    Poly<Rat> d = a.derivative();
    Poly<Rat> g = poly_gcd(a, d);
    Poly<Rat> w = divrem(a, g).first;
    Poly<Rat> y = divrem(d, g).first;
    Poly<Rat> z = y - w.derivative();
    int i = 1;
    while (!z.is_zero()) {
        Poly<Rat> f = poly_gcd(w, z);
        if (f.degree() > 0) out.push_back({i, f});
        w = divrem(w, f).first;
        y = divrem(z, f).first;
        z = y - w.derivative();
        ++i;
    }
    if (w.degree() > 0) out.push_back({i, w});
    return out;
}

// --- determinants / resultants --------------------------------------------------

// Fraction-free Bareiss determinant over an integral domain with exact_div.
template <class R>
R bareiss_det(std::vector<std::vector<R>> m) {
    const size_t n = m.size();
    if (n == 0) return R(1);
    R denom(1);
    int sgn = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && ring_is_zero(m[piv][k])) ++piv;
        if (piv == n) return R(0);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sgn = -sgn;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                R t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = exact_div(t, denom);
            }
            m[i][k] = R(0);
        }
        denom = m[k][k];
    }
    R d = m[n - 1][n - 1];
    return sgn < 0 ? R(R(0) - d) : d;
}

// Sylvester matrix for coefficient sequences with FORMAL degrees dp, dq
// (leading zeros allowed; needed for binary forms with roots at infinity).
// Rows: dq shifts of p then dp shifts of q, coefficients high-to-low.
template <class R>
std::vector<std::vector<R>> sylvester_matrix(const Poly<R>& p, int dp, const Poly<R>& q, int dq) {
    assert(dp >= p.degree() && dq >= q.degree());
    const int n = dp + dq;
    std::vector<std::vector<R>> m(static_cast<size_t>(n), std::vector<R>(static_cast<size_t>(n), R(0)));
    for (int r = 0; r < dq; ++r)
        for (int j = 0; j <= dp; ++j) m[static_cast<size_t>(r)][static_cast<size_t>(r + j)] = p.coeff(dp - j);
    for (int r = 0; r < dp; ++r)
        for (int j = 0; j <= dq; ++j) m[static_cast<size_t>(dq + r)][static_cast<size_t>(r + j)] = q.coeff(dq - j);
    return m;
}

// Resultant with formal degrees: determinant of the Sylvester matrix.
template <class R>
R resultant_formal(const Poly<R>& p, int dp, const Poly<R>& q, int dq) {
    if (dp == 0 && dq == 0) return R(1);
    return bareiss_det(sylvester_matrix(p, dp, q, dq));
}

// Classical resultant of nonzero polynomials at their actual degrees.
// Res(p, q) = 0 when either input is zero (both-zero input is the caller's
// error; the exactforms wrapper rejects it).
template <class R>
R resultant(const Poly<R>& p, const Poly<R>& q) {
    if (p.is_zero() || q.is_zero()) return R(0);
    return resultant_formal(p, p.degree(), q, q.degree());
}

// Principal subresultant coefficients sres_0 .. sres_{deg q - 1}, deg p >= deg q,
// as Sylvester-minor determinants: sres_k = det of the square submatrix of the
// (m+n-2k) x (m+n-k) partial Sylvester matrix on its first m+n-2k columns.
template <class R>
std::vector<R> principal_subresultants(const Poly<R>& p, const Poly<R>& q) {
    const int m = p.degree(), n = q.degree();
    assert(m >= n && n >= 0);
    std::vector<R> out;
    for (int k = 0; k < n; ++k) {
        const int rows = m + n - 2 * k;
        std::vector<std::vector<R>> mat(static_cast<size_t>(rows),
                                        std::vector<R>(static_cast<size_t>(rows), R(0)));
        for (int r = 0; r < n - k; ++r)
            for (int j = 0; j <= m; ++j) {
                int col = r + j;
                if (col < rows) mat[static_cast<size_t>(r)][static_cast<size_t>(col)] = p.coeff(m - j);
            }
        for (int r = 0; r < m - k; ++r)
            for (int j = 0; j <= n; ++j) {
                int col = r + j;
                if (col < rows) mat[static_cast<size_t>(n - k + r)][static_cast<size_t>(col)] = q.coeff(n - j);
            }
        out.push_back(bareiss_det(mat));
    }
    return out;
}

// Resultant up to a nonzero scalar, via the primitive PRS; use where only the
// vanishing locus matters (elimination). Returns the last degree-0 remainder,
// or zero when the gcd is nontrivial.
template <class R>
Poly<R> elimination_resultant(Poly<Poly<R>> p, Poly<Poly<R>> q) {
    if (p.is_zero() || q.is_zero()) return Poly<R>();
    if (p.degree() < q.degree()) std::swap(p, q);
    // contents carry s-only solution loci; keep them as factors of the output
    Poly<R> cp = content(p), cq = content(q);
    p = exact_div(p, cp);
    q = exact_div(q, cq);
    Poly<R> carried = cp * cq;
    while (true) {
        if (q.degree() == 0) return carried * q.coeff(0);
        Poly<Poly<R>> r = pseudo_rem(p, q);
        if (r.is_zero()) return Poly<R>();  // common factor in the main variable
        if (r.degree() == 0) return carried * r.coeff(0);
        r = exact_div(r, content(r));
        p = q;
        q = r;
    }
}

// --- interpolation ---------------------------------------------------------------

// Newton interpolation through distinct rational nodes.
inline Poly<Rat> interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    assert(xs.size() == ys.size() && !xs.empty());
    const size_t n = xs.size();
    std::vector<Rat> dd(ys);  // divided differences, built in place
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    Poly<Rat> r(dd[n - 1]);
    for (size_t i = n - 1; i-- > 0;) {
        Poly<Rat> lin{-xs[i], Rat(1)};
        r = r * lin + Poly<Rat>(dd[i]);
    }
    return r;
}

}  // namespace dualscope
