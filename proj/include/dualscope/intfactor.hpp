#pragma once

// Factorization of univariate polynomials over Q: squarefree (Yun) +
// Zassenhaus (Berlekamp/Cantor-Zassenhaus mod p, multifactor Hensel lifting,
// subset recombination). Sized for the small degrees this project meets.

#include "dualscope/poly.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <random>

namespace dualscope {
namespace fp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 addm(u64 a, u64 b, u64 p) {
    u64 s = a + b;
    return s >= p ? s - p : s;
}
inline u64 subm(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 mulm(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }
inline u64 powm(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return r;
}
inline u64 invm(u64 a, u64 p) { return powm(a % p, p - 2, p); }

// dense Fp[x], low-to-high
using FpPoly = std::vector<u64>;

inline void trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}
inline int deg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

inline FpPoly mul(const FpPoly& a, const FpPoly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = addm(r[i + j], mulm(a[i], b[j], p), p);
    }
    trim(r);
    return r;
}

inline FpPoly sub(FpPoly a, const FpPoly& b, u64 p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = subm(a[i], b[i], p);
    trim(a);
    return a;
}

inline FpPoly rem(FpPoly a, const FpPoly& b, u64 p) {
    const int db = deg(b);
    u64 binv = invm(b.back(), p);
    while (deg(a) >= db) {
        u64 c = mulm(a.back(), binv, p);
        int k = deg(a) - db;
        for (int i = 0; i <= db; ++i)
            a[static_cast<size_t>(k + i)] = subm(a[static_cast<size_t>(k + i)], mulm(c, b[static_cast<size_t>(i)], p), p);
        trim(a);
    }
    return a;
}

inline FpPoly monic(FpPoly f, u64 p) {
    if (f.empty()) return f;
    u64 inv = invm(f.back(), p);
    for (auto& c : f) c = mulm(c, inv, p);
    return f;
}

inline FpPoly gcd(FpPoly a, FpPoly b, u64 p) {
    while (!b.empty()) {
        FpPoly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

inline FpPoly deriv(const FpPoly& f, u64 p) {
    FpPoly r;
    for (size_t i = 1; i < f.size(); ++i) r.push_back(mulm(f[i], i % p, p));
    trim(r);
    return r;
}

inline FpPoly powmod(FpPoly base, Int e, const FpPoly& mod, u64 p) {
    FpPoly r{1};
    base = rem(std::move(base), mod, p);
    while (e > 0) {
        if ((e & 1) != 0) r = rem(mul(r, base, p), mod, p);
        base = rem(mul(base, base, p), mod, p);
        e >>= 1;
    }
    return r;
}

// quotient of an exact division
inline FpPoly divexact(FpPoly a, const FpPoly& b, u64 p) {
    FpPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, 0);
    u64 binv = invm(b.back(), p);
    while (deg(a) >= deg(b)) {
        u64 c = mulm(a.back(), binv, p);
        int k = deg(a) - deg(b);
        q[static_cast<size_t>(k)] = c;
        for (int i = 0; i <= deg(b); ++i)
            a[static_cast<size_t>(k + i)] = subm(a[static_cast<size_t>(k + i)], mulm(c, b[static_cast<size_t>(i)], p), p);
        trim(a);
    }
    trim(q);
    return q;
}

// distinct-degree + Cantor-Zassenhaus equal-degree split of a squarefree monic f
inline void factor_monic_squarefree(const FpPoly& f, u64 p, std::vector<FpPoly>& out,
                                    std::mt19937_64& rng) {
    if (deg(f) <= 0) return;
    if (deg(f) == 1) {
        out.push_back(f);
        return;
    }
    FpPoly x{0, 1};
    FpPoly h = x;
    FpPoly rest = f;
    for (int d = 1; 2 * d <= deg(rest); ++d) {
        h = powmod(h, Int(p), rest, p);
        FpPoly g = gcd(sub(h, x, p), rest, p);
        if (deg(g) > 0) {
            // equal-degree part: all irreducible factors of g have degree d
            std::vector<FpPoly> stack{g};
            Int half = (int_pow(Int(p), static_cast<unsigned>(d)) - 1) / 2;
            while (!stack.empty()) {
                FpPoly cur = stack.back();
                stack.pop_back();
                if (deg(cur) == d) {
                    out.push_back(monic(cur, p));
                    continue;
                }
                FpPoly r(static_cast<size_t>(deg(cur)) + 1);
                for (auto& c : r) c = rng() % p;
                trim(r);
                if (r.empty()) {
                    stack.push_back(cur);
                    continue;
                }
                FpPoly w = powmod(r, half, cur, p);
                if (w.empty()) w = {0};
                w[0] = subm(w[0], 1, p);
                trim(w);
                FpPoly g1 = gcd(w, cur, p);
                if (deg(g1) == 0 || deg(g1) == deg(cur)) {
                    stack.push_back(cur);  // unlucky draw
                } else {
                    stack.push_back(g1);
                    stack.push_back(divexact(cur, g1, p));
                }
            }
            rest = divexact(rest, g, p);
            if (deg(rest) == 0) break;
            h = rem(h, rest, p);
        }
    }
    if (deg(rest) > 0) out.push_back(monic(rest, p));
}

}  // namespace fp

namespace detail {

inline Int max_abs_coeff(const Poly<Int>& f) {
    Int m = 0;
    for (const auto& c : f.coeffs()) {
        Int a = boost::multiprecision::abs(c);
        if (a > m) m = a;
    }
    return m;
}

inline Int symmetric_mod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

inline Poly<Int> poly_mod(const Poly<Int>& f, const Int& m) {
    std::vector<Int> c(f.coeffs());
    for (auto& x : c) {
        x %= m;
        if (x < 0) x += m;
    }
    return Poly<Int>(c);
}

inline Poly<Int> poly_symmetric_mod(const Poly<Int>& f, const Int& m) {
    std::vector<Int> c(f.coeffs());
    for (auto& x : c) x = symmetric_mod(x, m);
    return Poly<Int>(c);
}

}  // namespace detail

// Zassenhaus on a primitive squarefree integer polynomial of degree >= 1.
// Returns primitive irreducible factors with positive leading coefficients.
inline std::vector<Poly<Int>> factor_squarefree_primitive(const Poly<Int>& f_in) {
    std::vector<Poly<Int>> out;
    Poly<Int> f = f_in;
    if (f.lc() < 0) f = -f;
    const int n = f.degree();
    if (n <= 0) return out;
    if (n == 1) {
        out.push_back(f);
        return out;
    }

    static std::mt19937_64 rng(0x5eedf00dULL);
    // pick a prime keeping f squarefree with unchanged degree
    static const std::vector<fp::u64> primes = {
        1000003, 1000033, 1000037, 1000039, 1000081, 1000099, 1000117, 1000121,
        1000133, 1000151, 1000159, 1000171, 1000183, 1000187, 1000193, 1000199};
    fp::u64 p = 0;
    fp::FpPoly fp_f;
    for (fp::u64 cand : primes) {
        fp::FpPoly g(static_cast<size_t>(n) + 1);
        for (int i = 0; i <= n; ++i) {
            Int c = f.coeff(i) % Int(cand);
            if (c < 0) c += Int(cand);
            g[static_cast<size_t>(i)] = c.convert_to<fp::u64>();
        }
        fp::trim(g);
        if (fp::deg(g) != n) continue;
        fp::FpPoly d = fp::deriv(g, cand);
        if (fp::deg(fp::gcd(g, d, cand)) != 0) continue;
        p = cand;
        fp_f = std::move(g);
        break;
    }
    if (p == 0) throw std::runtime_error("factor: no suitable prime in table");

    std::vector<fp::FpPoly> modular;
    fp::factor_monic_squarefree(fp::monic(fp_f, p), p, modular, rng);
    if (modular.size() == 1) {
        out.push_back(f);
        return out;
    }

    // lift bound: coefficients of any factor of f are below B (Mignotte-style)
    Int norm2 = 0;
    for (const auto& c : f.coeffs()) norm2 += c * c;
    Int B = boost::multiprecision::sqrt(norm2) + 1;
    B = B * int_pow(Int(2), static_cast<unsigned>(n + 1)) * boost::multiprecision::abs(f.lc());
    Int pk = Int(p);
    int k = 1;
    while (pk <= 2 * B) {
        pk *= Int(p);
        ++k;
    }

    // multifactor linear Hensel lifting: f = lc * prod g_i (mod p^j)
    const size_t r = modular.size();
    std::vector<Poly<Int>> g(r);
    for (size_t i = 0; i < r; ++i) {
        std::vector<Int> c(modular[i].size());
        for (size_t j = 0; j < c.size(); ++j) c[j] = Int(modular[i][j]);
        g[i] = Poly<Int>(c);
    }
    // u_i = (lc * prod_{l != i} g_l)^{-1} mod (g_i, p)
    std::vector<fp::FpPoly> uinv(r);
    for (size_t i = 0; i < r; ++i) {
        fp::FpPoly prod{f.lc().convert_to<fp::u64>() % p};
        if (prod[0] == 0) throw std::runtime_error("factor: lc divisible by p");
        for (size_t l = 0; l < r; ++l)
            if (l != i) prod = fp::rem(fp::mul(prod, modular[l], p), modular[i], p);
        // invert mod (g_i, p): prod^(p^d - 1 - 1) would be slow; extended Euclid instead
        fp::FpPoly a = modular[i], b = prod;
        fp::FpPoly s0{}, s1{1};
        while (true) {
            if (b.empty()) throw std::runtime_error("factor: non-invertible in Hensel init");
            if (fp::deg(b) == 0) {
                fp::u64 inv = fp::invm(b[0], p);
                for (auto& c : s1) c = fp::mulm(c, inv, p);
                uinv[i] = s1;
                break;
            }
            // a = q b + rem; update cofactors
            fp::FpPoly q;
            {
                fp::FpPoly aa = a;
                fp::u64 binv = fp::invm(b.back(), p);
                q.assign(aa.size() >= b.size() ? aa.size() - b.size() + 1 : 1, 0);
                while (fp::deg(aa) >= fp::deg(b)) {
                    fp::u64 c = fp::mulm(aa.back(), binv, p);
                    int sh = fp::deg(aa) - fp::deg(b);
                    q[static_cast<size_t>(sh)] = c;
                    for (int t = 0; t <= fp::deg(b); ++t)
                        aa[static_cast<size_t>(sh + t)] =
                            fp::subm(aa[static_cast<size_t>(sh + t)], fp::mulm(c, b[static_cast<size_t>(t)], p), p);
                    fp::trim(aa);
                }
                a.swap(aa);
            }
            fp::FpPoly s2 = fp::sub(s0, fp::mul(q, s1, p), p);
            std::swap(a, b);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
    }

    Int pj = Int(p);
    for (int step = 1; step < k; ++step) {
        Poly<Int> prod(Int(f.lc()));
        for (const auto& gi : g) prod = prod * gi;
        Poly<Int> e = f - prod;
        // e is divisible by p^j
        std::vector<Int> ec(e.coeffs());
        for (auto& c : ec) c = exact_div(c, pj);
        Poly<Int> ee = detail::poly_mod(Poly<Int>(ec), Int(p));
        for (size_t i = 0; i < r; ++i) {
            // d_i = ee * uinv_i mod (g_i, p)
            fp::FpPoly eefp(static_cast<size_t>(std::max(ee.degree(), 0)) + 1);
            for (int t = 0; t <= ee.degree(); ++t) eefp[static_cast<size_t>(t)] = ee.coeff(t).convert_to<fp::u64>();
            fp::trim(eefp);
            fp::FpPoly di = fp::rem(fp::mul(eefp, uinv[i], p), modular[i], p);
            std::vector<Int> dc(di.size());
            for (size_t t = 0; t < di.size(); ++t) dc[t] = Int(di[t]) * pj;
            g[i] = g[i] + Poly<Int>(dc);
        }
        pj *= Int(p);
    }
    // g_i monic mod p^k, f = lc * prod g_i (mod p^k)

    // subset recombination
    std::vector<size_t> live(r);
    for (size_t i = 0; i < r; ++i) live[i] = i;
    Poly<Int> rest = f;

    std::function<bool(size_t, size_t, std::vector<size_t>&, size_t)> search =
        [&](size_t card, size_t start, std::vector<size_t>& pick, size_t depth) -> bool {
        if (depth == card) {
            Poly<Int> cand(Int(rest.lc()));
            for (size_t idx : pick) cand = cand * g[live[idx]];
            cand = detail::poly_symmetric_mod(cand, pk);
            cand = primitive_part(cand);
            if (cand.lc() < 0) cand = -cand;
            // trial division
            Poly<Int> prem = pseudo_rem(rest, cand);
            if (!prem.is_zero()) return false;
            Poly<Rat> quo = divrem(to_q(rest), to_q(cand)).first;
            out.push_back(cand);
            rest = to_primitive_z(quo).p;
            if (rest.lc() < 0) rest = -rest;
            std::vector<size_t> nl;
            for (size_t i = 0; i < live.size(); ++i)
                if (std::find(pick.begin(), pick.end(), i) == pick.end()) nl.push_back(live[i]);
            live = nl;
            return true;
        }
        for (size_t i = start; i < live.size(); ++i) {
            pick.push_back(i);
            if (search(card, i + 1, pick, depth + 1)) return true;
            pick.pop_back();
        }
        return false;
    };

    size_t card = 1;
    while (2 * card <= live.size()) {
        std::vector<size_t> pick;
        if (!search(card, 0, pick, 0)) ++card;
    }
    if (rest.degree() > 0) out.push_back(rest);
    return out;
}

// Full factorization over Q: constant * prod factor^multiplicity, factors
// primitive irreducible integer polynomials with positive leading coefficient.
struct QFactorization {
    Rat constant;
    std::vector<std::pair<Poly<Int>, int>> factors;  // (irreducible, multiplicity)
};

inline QFactorization factor_poly(const Poly<Rat>& f) {
    QFactorization out;
    out.constant = Rat(0);
    if (f.is_zero()) return out;
    ZScaled z = to_primitive_z(f);
    out.constant = z.scale;
    if (z.p.degree() == 0) return out;
    auto yun = yun_decomposition(to_q(z.p));
    Rat lead = Rat(z.p.lc());
    for (auto& [mult, part] : yun) {
        ZScaled zp = to_primitive_z(part);
        for (auto& irr : factor_squarefree_primitive(zp.p)) {
            out.factors.push_back({irr, mult});
            lead /= rat_pow(Rat(irr.lc()), mult);
        }
    }
    out.constant *= lead;
    return out;
}

}  // namespace dualscope
