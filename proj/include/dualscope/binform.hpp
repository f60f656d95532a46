#pragma once

// Binary forms sum a_j u^{n-j} v^j of fixed degree n, root profiles over the
// algebraic closure of Q with infinity included, the Vieta map, discriminant,
// and the diagonal C*-action. Root convention: z = u/v, so the dehomogenized
// equation is a_0 z^n + a_1 z^{n-1} + ... + a_n = 0 and u^n has the root 0;
// infinity = (1:0) is a root of multiplicity k iff a_0 = ... = a_{k-1} = 0.

#include "dualscope/algnum.hpp"

namespace dualscope {

class BinaryForm {
public:
    BinaryForm() : n_(0), a_{Rat(0)} {}
    BinaryForm(int n, std::vector<Rat> coeffs) : n_(n), a_(std::move(coeffs)) {
        assert(static_cast<int>(a_.size()) == n + 1);
    }

    // from the dehomogenized polynomial p(z) = a_0 z^n + ... + a_n
    static BinaryForm from_affine(const Poly<Rat>& p, int n) {
        assert(p.degree() <= n);
        std::vector<Rat> a(static_cast<size_t>(n) + 1);
        for (int j = 0; j <= n; ++j) a[static_cast<size_t>(j)] = p.coeff(n - j);
        return BinaryForm(n, std::move(a));
    }

    int degree() const { return n_; }
    const Rat& coeff(int j) const { return a_[static_cast<size_t>(j)]; }
    const std::vector<Rat>& coeffs() const { return a_; }

    bool is_zero() const {
        for (const auto& c : a_)
            if (c != 0) return false;
        return true;
    }

    Poly<Rat> affine() const {  // p(z) as above
        std::vector<Rat> c(static_cast<size_t>(n_) + 1);
        for (int j = 0; j <= n_; ++j) c[static_cast<size_t>(n_ - j)] = a_[static_cast<size_t>(j)];
        return Poly<Rat>(c);
    }

    int infinity_multiplicity() const {
        int k = 0;
        while (k <= n_ && a_[static_cast<size_t>(k)] == 0) ++k;
        return k > n_ ? 0 : k;  // the zero form has no roots
    }

    Rat eval(const Rat& u, const Rat& v) const {
        Rat r = 0, up = 1;
        std::vector<Rat> vp(static_cast<size_t>(n_) + 1);
        vp[0] = 1;
        for (int j = 1; j <= n_; ++j) vp[static_cast<size_t>(j)] = vp[static_cast<size_t>(j - 1)] * v;
        for (int j = n_; j >= 0; --j) {
            r += a_[static_cast<size_t>(j)] * up * vp[static_cast<size_t>(j)];
            up *= u;
        }
        return r;
    }

    friend BinaryForm operator*(const BinaryForm& f, const BinaryForm& g) {
        std::vector<Rat> c(static_cast<size_t>(f.n_ + g.n_) + 1, Rat(0));
        for (int i = 0; i <= f.n_; ++i)
            for (int j = 0; j <= g.n_; ++j)
                c[static_cast<size_t>(i + j)] += f.a_[static_cast<size_t>(i)] * g.a_[static_cast<size_t>(j)];
        return BinaryForm(f.n_ + g.n_, std::move(c));
    }

    friend bool operator==(const BinaryForm& f, const BinaryForm& g) {
        return f.n_ == g.n_ && f.a_ == g.a_;
    }

    // equality as projective points (nonzero scalar multiple)
    bool proportional(const BinaryForm& g) const {
        if (n_ != g.n_) return false;
        int i = 0;
        while (i <= n_ && a_[static_cast<size_t>(i)] == 0 && g.a_[static_cast<size_t>(i)] == 0) ++i;
        if (i > n_) return true;
        const Rat &x = a_[static_cast<size_t>(i)], &y = g.a_[static_cast<size_t>(i)];
        if (x == 0 || y == 0) return false;
        for (int j = i + 1; j <= n_; ++j)
            if (a_[static_cast<size_t>(j)] * y != g.a_[static_cast<size_t>(j)] * x) return false;
        return true;
    }

private:
    int n_;
    std::vector<Rat> a_;
};

// --- root profiles ---------------------------------------------------------------

struct RootProfile {
    std::vector<std::pair<P1Point, int>> entries;  // distinct roots, sorted, multiplicity > 0

    int total_multiplicity() const {
        int t = 0;
        for (auto& [r, m] : entries) t += m;
        return t;
    }
    int distinct_count() const { return static_cast<int>(entries.size()); }

    int multiplicity_of(const P1Point& p) const {
        for (auto& [r, m] : entries)
            if (r == p) return m;
        return 0;
    }
    bool contains(const P1Point& p) const { return multiplicity_of(p) > 0; }

    void sort() {
        std::sort(entries.begin(), entries.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }

    friend bool operator==(const RootProfile& a, const RootProfile& b) {
        if (a.entries.size() != b.entries.size()) return false;
        for (size_t i = 0; i < a.entries.size(); ++i)
            if (a.entries[i].second != b.entries[i].second || !(a.entries[i].first == b.entries[i].first))
                return false;
        return true;
    }
};

// Full root multiset of a nonzero form over the algebraic closure, infinity
// included; rational roots as Rat, the rest as AlgNums grouped by irreducible
// minimal polynomial.
inline RootProfile squarefree_support(const BinaryForm& f) {
    assert(!f.is_zero());
    RootProfile out;
    int infm = f.infinity_multiplicity();
    if (infm > 0) out.entries.push_back({P1Point::infinity(), infm});
    Poly<Rat> p = f.affine();
    if (p.degree() >= 1) {
        auto fac = factor_poly(p);
        for (auto& [irr, mult] : fac.factors) {
            if (irr.degree() == 1) {
                Rat root = -Rat(irr.coeff(0)) / Rat(irr.coeff(1));
                out.entries.push_back({P1Point(root), mult});
            } else {
                for (auto& a : algebraic_roots(irr)) out.entries.push_back({P1Point(a), mult});
            }
        }
    }
    out.sort();
    assert(out.total_multiplicity() == f.degree());
    return out;
}

// Multiplicity structure only (no root extraction): multiset of multiplicities
// and the number of distinct projective roots. Cheap (Yun, no factorization).
struct MultiplicityProfile {
    std::vector<int> multiplicities;  // one entry per distinct root, descending
    int distinct() const { return static_cast<int>(multiplicities.size()); }
};

inline MultiplicityProfile multiplicity_profile(const BinaryForm& f) {
    assert(!f.is_zero());
    MultiplicityProfile out;
    int infm = f.infinity_multiplicity();
    if (infm > 0) out.multiplicities.push_back(infm);
    Poly<Rat> p = f.affine();
    if (p.degree() >= 1)
        for (auto& [mult, fac] : yun_decomposition(p))
            for (int i = 0; i < fac.degree(); ++i) out.multiplicities.push_back(mult);
    std::sort(out.multiplicities.rbegin(), out.multiplicities.rend());
    return out;
}

// --- spec'd operations -------------------------------------------------------------

// Sylvester-determinant resultant; rejects two zero inputs.
inline Rat resultant_op(const Poly<Rat>& p, const Poly<Rat>& q) {
    if (p.is_zero() && q.is_zero()) throw std::invalid_argument("resultant: both inputs zero");
    return resultant(p, q);
}

// Discriminant of a binary form of degree n >= 2: vanishes iff f has a multiple
// root (infinity included); homogeneous of degree 2n-2 in the coefficients.
// Normalization: (-1)^{n(n-1)/2} Res(F_u, F_v) / n^{n-2}.
inline Rat discriminant(const BinaryForm& f) {
    const int n = f.degree();
    if (n < 2) throw std::invalid_argument("discriminant: degree must be >= 2");
    std::vector<Rat> fu(static_cast<size_t>(n)), fv(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) fu[static_cast<size_t>(j)] = f.coeff(j) * Rat(n - j);
    for (int j = 0; j < n; ++j) fv[static_cast<size_t>(j)] = f.coeff(j + 1) * Rat(j + 1);
    // encode as dehomogenized polys of formal degree n-1
    auto enc = [n](const std::vector<Rat>& a) {
        std::vector<Rat> c(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) c[static_cast<size_t>(n - 1 - j)] = a[static_cast<size_t>(j)];
        return Poly<Rat>(c);
    };
    Rat res = resultant_formal(enc(fu), n - 1, enc(fv), n - 1);
    Rat d = res / rat_pow(Rat(n), n - 2);
    if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) d = -d;
    return d;
}

// The Vieta map on explicit (u : v) representatives: product of v_i u - u_i v.
inline BinaryForm vieta_uv(const std::vector<std::pair<Rat, Rat>>& pts) {
    BinaryForm r(0, {Rat(1)});
    for (auto& [u, v] : pts) {
        assert(!(u == 0 && v == 0));
        r = r * BinaryForm(1, {v, -u});
    }
    return r;
}

inline BinaryForm vieta(const std::vector<P1Point>& pts) {
    std::vector<std::pair<Rat, Rat>> uv;
    for (const auto& p : pts) {
        assert(!p.is_algebraic());  // explicit representatives must be rational
        if (p.is_infinity())
            uv.push_back({Rat(1), Rat(0)});
        else
            uv.push_back({p.rat(), Rat(1)});
    }
    return vieta_uv(uv);
}

// diagonal C*-action: (a_0 : lambda a_1 : ... : lambda^n a_n)
inline BinaryForm g_action(const Rat& lambda, const BinaryForm& f) {
    if (lambda == 0) throw std::invalid_argument("g_action: lambda must be nonzero");
    std::vector<Rat> a(f.coeffs());
    Rat pw = 1;
    for (size_t j = 1; j < a.size(); ++j) {
        pw *= lambda;
        a[j] *= pw;
    }
    return BinaryForm(f.degree(), std::move(a));
}

// principal subresultant coefficients, spec surface (deg p >= deg q >= 1)
inline std::vector<Rat> subresultants(const Poly<Rat>& p, const Poly<Rat>& q) {
    if (p.is_zero() || q.is_zero()) throw std::invalid_argument("subresultants: zero input");
    if (p.degree() < q.degree()) throw std::invalid_argument("subresultants: need deg p >= deg q");
    return principal_subresultants(p, q);
}

}  // namespace dualscope
