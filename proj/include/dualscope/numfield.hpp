#pragma once

// Quotient arithmetic Q[x]/(m): field elements when m is irreducible (branch
// analysis at algebraic parameters), and dynamic evaluation over a merely
// squarefree modulus (splitting on zero divisors) for node counting, where
// full irreducible factorization would be wasteful.

#include "dualscope/poly.hpp"

#include <memory>

namespace dualscope {

// extended gcd over Q: returns (g, a, b) with a*p + b*q = g, g monic (or zero)
inline std::tuple<Poly<Rat>, Poly<Rat>, Poly<Rat>> ext_gcd(const Poly<Rat>& p, const Poly<Rat>& q) {
    Poly<Rat> r0 = p, r1 = q;
    Poly<Rat> a0 = Poly<Rat>::one(), a1;
    Poly<Rat> b0, b1 = Poly<Rat>::one();
    while (!r1.is_zero()) {
        auto [quo, rem] = divrem(r0, r1);
        Poly<Rat> a2 = a0 - quo * a1;
        Poly<Rat> b2 = b0 - quo * b1;
        r0 = r1;
        r1 = rem;
        a0 = a1;
        a1 = a2;
        b0 = b1;
        b1 = b2;
    }
    if (!r0.is_zero()) {
        Rat inv = Rat(1) / r0.lc();
        r0 = r0 * inv;
        a0 = a0 * inv;
        b0 = b0 * inv;
    }
    return {r0, a0, b0};
}

// --- number field elements ------------------------------------------------------

// Element of Q[x]/(m). A null modulus denotes a plain rational constant, so the
// type satisfies the generic ring hooks (default construction, R(int)).
class NFElem {
public:
    NFElem() : rep_() {}
    NFElem(int c) : rep_(Rat(c)) {}  // NOLINT: ring hook needs implicit int
    explicit NFElem(Rat c) : rep_(std::move(c)) {}
    NFElem(Poly<Rat> rep, std::shared_ptr<const Poly<Rat>> mod)
        : rep_(std::move(rep)), mod_(std::move(mod)) {
        reduce();
    }

    static NFElem generator(std::shared_ptr<const Poly<Rat>> mod) {
        return NFElem(Poly<Rat>{Rat(0), Rat(1)}, std::move(mod));
    }

    const Poly<Rat>& rep() const { return rep_; }
    const std::shared_ptr<const Poly<Rat>>& modulus() const { return mod_; }
    bool is_zero() const { return rep_.is_zero(); }
    bool is_rational() const { return rep_.degree() <= 0; }
    Rat rational() const { return rep_.coeff(0); }

    friend NFElem operator+(const NFElem& a, const NFElem& b) {
        return NFElem(a.rep_ + b.rep_, merged(a, b));
    }
    friend NFElem operator-(const NFElem& a, const NFElem& b) {
        return NFElem(a.rep_ - b.rep_, merged(a, b));
    }
    NFElem operator-() const { return NFElem(-rep_, mod_); }
    friend NFElem operator*(const NFElem& a, const NFElem& b) {
        return NFElem(a.rep_ * b.rep_, merged(a, b));
    }
    friend bool operator==(const NFElem& a, const NFElem& b) { return a.rep_ == b.rep_; }
    friend bool operator!=(const NFElem& a, const NFElem& b) { return !(a == b); }

    NFElem inverse() const {
        assert(!is_zero());
        if (!mod_ || is_rational()) {
            assert(rep_.degree() == 0);
            return NFElem(Poly<Rat>(Rat(1) / rep_.coeff(0)), mod_);
        }
        auto [g, a, b] = ext_gcd(rep_, *mod_);
        (void)b;
        if (g.degree() != 0) throw std::domain_error("NFElem::inverse: zero divisor");
        return NFElem(a, mod_);
    }
    friend NFElem operator/(const NFElem& a, const NFElem& b) { return a * b.inverse(); }

private:
    static std::shared_ptr<const Poly<Rat>> merged(const NFElem& a, const NFElem& b) {
        if (a.mod_) {
            assert(!b.mod_ || *a.mod_ == *b.mod_);
            return a.mod_;
        }
        return b.mod_;
    }
    void reduce() {
        if (mod_ && rep_.degree() >= mod_->degree()) rep_ = divrem(rep_, *mod_).second;
    }

    Poly<Rat> rep_;
    std::shared_ptr<const Poly<Rat>> mod_;
};

inline bool ring_is_zero(const NFElem& x) { return x.is_zero(); }
inline NFElem exact_div(const NFElem& a, const NFElem& b) { return a / b; }
inline NFElem ring_gcd(const NFElem& a, const NFElem& b) {
    return (a.is_zero() && b.is_zero()) ? NFElem(0) : NFElem(1);
}

template <>
inline NFElem to_ring<NFElem, Rat>(const Rat& x) {
    return NFElem(x);
}

using NFPoly = Poly<NFElem>;

inline NFPoly lift_to_field(const Poly<Rat>& p, const std::shared_ptr<const Poly<Rat>>& mod) {
    std::vector<NFElem> c;
    c.reserve(static_cast<size_t>(p.degree()) + 1);
    for (int i = 0; i <= p.degree(); ++i) c.push_back(NFElem(Poly<Rat>(p.coeff(i)), mod));
    return NFPoly(c);
}

// order of vanishing of f at the generator root theta: divisions by (t - theta)
inline int order_at_generator(const Poly<Rat>& f, const std::shared_ptr<const Poly<Rat>>& mod) {
    if (f.is_zero()) return -1;  // infinite order
    NFElem theta = NFElem::generator(mod);
    NFPoly cur = lift_to_field(f, mod);
    int ord = 0;
    while (true) {
        // synthetic division by (t - theta)
        std::vector<NFElem> q(static_cast<size_t>(std::max(cur.degree(), 0)));
        NFElem acc(0);
        for (int i = cur.degree(); i >= 1; --i) {
            acc = cur.coeff(i) + acc * theta;
            q[static_cast<size_t>(i - 1)] = acc;
        }
        NFElem rem = cur.coeff(0) + acc * theta;
        if (!rem.is_zero()) return ord;
        ++ord;
        cur = NFPoly(q);
        if (cur.is_zero()) return ord;
    }
}

inline int order_at_rational(const Poly<Rat>& f, const Rat& t0) {
    if (f.is_zero()) return -1;
    Poly<Rat> cur = f;
    int ord = 0;
    while (true) {
        std::vector<Rat> q(static_cast<size_t>(std::max(cur.degree(), 0)));
        Rat acc = 0;
        for (int i = cur.degree(); i >= 1; --i) {
            acc = cur.coeff(i) + acc * t0;
            q[static_cast<size_t>(i - 1)] = acc;
        }
        Rat rem = cur.coeff(0) + acc * t0;
        if (rem != 0) return ord;
        ++ord;
        cur = Poly<Rat>(q);
        if (cur.is_zero()) return ord;
    }
}

// --- dynamic evaluation (D5) ------------------------------------------------------

// Computations in (Q[s]/(M))[t] for squarefree M, splitting M whenever a
// leading coefficient fails to be invertible. Results come back per factor.
namespace deval {

using Elem = Poly<Rat>;    // residue representative mod M
using TPoly = Poly<Elem>;  // polynomial in t over the quotient

inline TPoly reduce(const TPoly& p, const Poly<Rat>& M) {
    std::vector<Elem> c;
    c.reserve(static_cast<size_t>(p.degree()) + 1);
    for (int i = 0; i <= p.degree(); ++i) c.push_back(divrem(p.coeff(i), M).second);
    return TPoly(c);
}

struct Branch {
    Poly<Rat> modulus;          // factor of the original M, monic
    std::vector<TPoly> values;  // whatever the computation tracks, reduced
};

// monic gcd in t of a family of polynomials over Q[s]/(M); splits as needed.
// Output: per branch modulus + single gcd value (degree -1 when all inputs
// vanish identically on that branch).
inline std::vector<Branch> gcd_family(const Poly<Rat>& M_in, std::vector<TPoly> fam) {
    std::vector<Branch> done;
    struct Item {
        Poly<Rat> M;
        std::vector<TPoly> fs;
    };
    std::vector<Item> work{{detail::normalize_gcd(M_in), std::move(fam)}};
    while (!work.empty()) {
        auto [M, fs] = std::move(work.back());
        work.pop_back();
        if (M.degree() == 0) continue;
        for (auto& f : fs) f = reduce(f, M);
        fs.erase(std::remove_if(fs.begin(), fs.end(), [](const TPoly& f) { return f.is_zero(); }),
                 fs.end());
        if (fs.empty()) {
            done.push_back({M, {TPoly()}});
            continue;
        }
        // candidate: smallest degree
        size_t best = 0;
        for (size_t i = 1; i < fs.size(); ++i)
            if (fs[i].degree() < fs[best].degree()) best = i;
        TPoly p = fs[best];
        // leading coefficient invertible mod M?
        Poly<Rat> g = poly_gcd(p.lc(), M);
        if (g.degree() > 0 && g.degree() < M.degree()) {
            // split and retry both branches
            Poly<Rat> h = divrem(M, g).first;
            work.push_back({g, fs});
            work.push_back({h, fs});
            continue;
        }
        if (g.degree() == M.degree()) {
            // lc vanishes identically: drop it and retry
            std::vector<Elem> c(p.coeffs().begin(), p.coeffs().end() - 1);
            fs[best] = TPoly(c);
            work.push_back({M, fs});
            continue;
        }
        if (p.degree() == 0) {
            // unit gcd
            done.push_back({M, {TPoly(Elem(Rat(1)))}});
            continue;
        }
        // pseudo-reduce all the others by p; finished when p divides them all
        bool all_divide = true;
        std::vector<TPoly> next{p};
        for (size_t i = 0; i < fs.size(); ++i) {
            if (i == best) continue;
            TPoly r = reduce(pseudo_rem(fs[i], p), M);
            if (!r.is_zero()) {
                all_divide = false;
                next.push_back(r);
            }
        }
        if (!all_divide) {
            work.push_back({M, std::move(next)});
            continue;
        }
        // monicize p mod M (lc invertible here)
        auto [gg, a, b] = ext_gcd(p.lc(), M);
        (void)b;
        assert(gg.degree() == 0);
        Poly<Rat> inv = a * (Rat(1) / gg.coeff(0));
        std::vector<Elem> mc;
        for (int i = 0; i <= p.degree(); ++i) mc.push_back(divrem(p.coeff(i) * inv, M).second);
        done.push_back({M, {TPoly(mc)}});
    }
    return done;
}

// squarefree part in t over each branch: value / gcd(value, d value/dt)
inline std::vector<Branch> squarefree_family(const Poly<Rat>& M, const TPoly& f) {
    std::vector<Branch> out;
    for (auto& br : gcd_family(M, {f, f.derivative()})) {
        const TPoly& g = br.values[0];
        if (g.is_zero()) {
            out.push_back({br.modulus, {TPoly()}});
            continue;
        }
        if (g.degree() == 0) {
            out.push_back({br.modulus, {reduce(f, br.modulus)}});
            continue;
        }
        // exact division f / g over the quotient ring; g monic so divrem works
        TPoly ff = reduce(f, br.modulus);
        TPoly q, r = ff;
        const int db = g.degree();
        while (!r.is_zero() && r.degree() >= db) {
            Elem c = r.lc();  // g monic: no inversion needed
            int k = r.degree() - db;
            q.set_coeff(k, q.coeff(k) + c);
            r = reduce(r - (g * c).mul_xk(k), br.modulus);
        }
        out.push_back({br.modulus, {q}});
    }
    return out;
}

}  // namespace deval

}  // namespace dualscope
