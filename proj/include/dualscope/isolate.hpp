#pragma once

// Certified root isolation over Q: Sturm chains for real roots, and an exact
// winding-number counter (Cauchy indices along rectangle edges) for complex
// roots. No floating point; boxes are rational rectangles whose sides are
// chosen on root-free lines, so subdivision counts are exact.

#include "dualscope/poly.hpp"

#include <optional>

namespace dualscope {

// rational rectangle [x0,x1] x [y0,y1] in the complex plane
struct BoxQ {
    Rat x0, x1, y0, y1;

    Rat width() const { return x1 - x0; }
    Rat height() const { return y1 - y0; }
    Rat mid_x() const { return (x0 + x1) / 2; }
    Rat mid_y() const { return (y0 + y1) / 2; }
    bool contains_zero_im() const { return y0 < 0 && y1 > 0; }

    std::optional<BoxQ> intersect(const BoxQ& o) const {
        BoxQ r{std::max(x0, o.x0), std::min(x1, o.x1), std::max(y0, o.y0), std::min(y1, o.y1)};
        if (r.x0 >= r.x1 || r.y0 >= r.y1) return std::nullopt;
        return r;
    }
};

// --- Sturm machinery ----------------------------------------------------------

inline std::vector<Poly<Rat>> sturm_chain(const Poly<Rat>& f0, const Poly<Rat>& f1) {
    std::vector<Poly<Rat>> chain;
    chain.push_back(f0);
    if (!f1.is_zero()) chain.push_back(f1);
    while (chain.size() >= 2 && !chain.back().is_zero() && chain.back().degree() > 0) {
        const Poly<Rat>& a = chain[chain.size() - 2];
        const Poly<Rat>& b = chain.back();
        Poly<Rat> r = -divrem(a, b).second;
        if (r.is_zero()) break;
        chain.push_back(r);
    }
    return chain;
}

inline int sign_variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

inline int variations_at(const std::vector<Poly<Rat>>& chain, const Rat& x) {
    std::vector<int> s;
    for (const auto& p : chain) s.push_back(sign(p.eval(x)));
    return sign_variations(s);
}

// Cauchy index of f1/f0 over (a, b); requires f0(a), f0(b) != 0.
inline int cauchy_index(const Poly<Rat>& f0, const Poly<Rat>& f1, const Rat& a, const Rat& b) {
    auto chain = sturm_chain(f0, f1);
    return variations_at(chain, a) - variations_at(chain, b);
}

// number of distinct real roots of squarefree f in (a, b); f(a), f(b) != 0
inline int count_real_roots(const Poly<Rat>& f, const Rat& a, const Rat& b) {
    return cauchy_index(f, f.derivative(), a, b);
}

inline Rat cauchy_root_bound(const Poly<Rat>& f) {
    assert(!f.is_zero());
    Rat m = 0;
    for (int i = 0; i < f.degree(); ++i) {
        Rat a = boost::multiprecision::abs(f.coeff(i) / f.lc());
        if (a > m) m = a;
    }
    return m + 1;
}

// Isolating open intervals for the real roots of a squarefree polynomial,
// endpoints non-roots, sorted increasing.
inline std::vector<std::pair<Rat, Rat>> isolate_real_roots(const Poly<Rat>& f) {
    std::vector<std::pair<Rat, Rat>> out;
    if (f.degree() <= 0) return out;
    Rat bound = cauchy_root_bound(f);
    struct Seg {
        Rat a, b;
        int count;
    };
    auto chain = sturm_chain(f, f.derivative());
    auto count = [&](const Rat& a, const Rat& b) { return variations_at(chain, a) - variations_at(chain, b); };
    std::vector<Seg> work{{-bound, bound, count(-bound, bound)}};
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.count == 0) continue;
        if (s.count == 1) {
            out.push_back({s.a, s.b});
            continue;
        }
        Rat m = (s.a + s.b) / 2;
        while (f.eval(m) == 0) m = (s.a + m) / 2;  // shift off a root
        int left = count(s.a, m);
        work.push_back({s.a, m, left});
        work.push_back({m, s.b, s.count - left});
    }
    std::sort(out.begin(), out.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
    return out;
}

// --- complex rectangle root counting --------------------------------------------

namespace detail {

// f(x(s) + i y(s)) split into real and imaginary parts; x, y affine in s
inline std::pair<Poly<Rat>, Poly<Rat>> complex_restriction(const Poly<Rat>& f, const Rat& xa,
                                                           const Rat& ya, const Rat& xb,
                                                           const Rat& yb) {
    Poly<Rat> xr{xa, xb - xa};
    Poly<Rat> xi{ya, yb - ya};
    Poly<Rat> re, im;
    for (int k = f.degree(); k >= 0; --k) {
        Poly<Rat> nre = re * xr - im * xi + Poly<Rat>(f.coeff(k));
        Poly<Rat> nim = re * xi + im * xr;
        re = nre;
        im = nim;
    }
    return {re, im};
}

// does f vanish anywhere on the line Re z = x (vertical) / Im z = y?
inline bool root_on_vertical(const Poly<Rat>& f, const Rat& x, const Rat& bound) {
    auto [A, B] = complex_restriction(f, x, -bound, x, bound);  // s in [0,1] covers |Im| <= bound
    Poly<Rat> g = poly_gcd(A, B);
    if (g.degree() == 0) return false;
    g = squarefree_part(g);
    if (g.eval(Rat(0)) == 0 || g.eval(Rat(1)) == 0) return true;
    return count_real_roots(g, Rat(0), Rat(1)) > 0;
}

inline bool root_on_horizontal(const Poly<Rat>& f, const Rat& y, const Rat& bound) {
    auto [A, B] = complex_restriction(f, -bound, y, bound, y);
    Poly<Rat> g = poly_gcd(A, B);
    if (g.degree() == 0) return false;
    g = squarefree_part(g);
    if (g.eval(Rat(0)) == 0 || g.eval(Rat(1)) == 0) return true;
    return count_real_roots(g, Rat(0), Rat(1)) > 0;
}

// corner is degenerate when f(x+iy) is real or purely imaginary there
inline bool corner_degenerate(const Poly<Rat>& f, const Rat& x, const Rat& y) {
    auto [A, B] = complex_restriction(f, x, y, x + 1, y);  // constant terms give f(x+iy)
    return A.eval(Rat(0)) == 0 || B.eval(Rat(0)) == 0;
}

}  // namespace detail

// A box is clean when no root lies on its boundary lines and every corner has
// Re f * Im f != 0. Winding counts over clean boxes are exact and additive.
inline bool box_is_clean(const Poly<Rat>& f, const BoxQ& b, const Rat& bound) {
    if (detail::root_on_vertical(f, b.x0, bound) || detail::root_on_vertical(f, b.x1, bound) ||
        detail::root_on_horizontal(f, b.y0, bound) || detail::root_on_horizontal(f, b.y1, bound))
        return false;
    for (const Rat& x : {b.x0, b.x1})
        for (const Rat& y : {b.y0, b.y1})
            if (detail::corner_degenerate(f, x, y)) return false;
    return true;
}

// Exact number of roots of f (with multiplicity) strictly inside a clean box:
// winding number of f over the boundary via Cauchy indices.
inline int count_in_box(const Poly<Rat>& f, const BoxQ& b) {
    assert(!f.is_zero());
    struct Edge {
        Rat xa, ya, xb, yb;
    };
    const Edge edges[4] = {{b.x0, b.y0, b.x1, b.y0},
                           {b.x1, b.y0, b.x1, b.y1},
                           {b.x1, b.y1, b.x0, b.y1},
                           {b.x0, b.y1, b.x0, b.y0}};
    int total = 0;
    for (const auto& e : edges) {
        auto [A, B] = detail::complex_restriction(f, e.xa, e.ya, e.xb, e.yb);
        assert(A.eval(Rat(0)) != 0 && A.eval(Rat(1)) != 0);
        total += cauchy_index(A, B, Rat(0), Rat(1));
    }
    assert(total % 2 == 0);
    int w = -total / 2;
    assert(w >= 0);
    return w;
}

namespace detail {

// a coordinate near `target`, clamped to (lo, hi), whose line avoids roots of f
template <class LineTest>
Rat clean_coordinate(const Rat& target, const Rat& lo, const Rat& hi, LineTest&& bad) {
    if (!bad(target)) return target;
    Rat span = hi - lo;
    static const int denoms[] = {7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59};
    for (int k = 1; k < 24; ++k)
        for (int d : denoms) {
            for (int s : {1, -1}) {
                Rat cand = target + Rat(s) * span / (d * int_pow(Int(2), static_cast<unsigned>(k)));
                if (cand <= lo || cand >= hi) continue;
                if (!bad(cand)) return cand;
            }
        }
    throw std::runtime_error("clean_coordinate: no root-free line found");
}

}  // namespace detail

// Adjust a requested box outward slightly so it becomes clean; the adjustment
// never moves a side by more than a quarter of its span.
inline BoxQ cleaned_box(const Poly<Rat>& f, const BoxQ& want, const Rat& bound) {
    Rat wx = want.width() / 4, wy = want.height() / 4;
    auto badv = [&](const Rat& x) { return detail::root_on_vertical(f, x, bound); };
    auto badh = [&](const Rat& y) { return detail::root_on_horizontal(f, y, bound); };
    BoxQ b = want;
    b.x0 = detail::clean_coordinate(want.x0, want.x0 - wx, want.x0 + wx, badv);
    b.x1 = detail::clean_coordinate(want.x1, want.x1 - wx, want.x1 + wx, badv);
    b.y0 = detail::clean_coordinate(want.y0, want.y0 - wy, want.y0 + wy, badh);
    b.y1 = detail::clean_coordinate(want.y1, want.y1 - wy, want.y1 + wy, badh);
    // fix degenerate corners by retrying the y-lines with extra offsets
    for (int attempt = 0; attempt < 64; ++attempt) {
        bool ok = true;
        for (const Rat& x : {b.x0, b.x1})
            for (const Rat& y : {b.y0, b.y1})
                if (detail::corner_degenerate(f, x, y)) ok = false;
        if (ok) return b;
        Rat eps = wy / (5 + 3 * attempt);
        Rat cand = b.y0 - eps;
        if (!badh(cand)) b.y0 = cand;
        cand = b.y1 + eps / 2;
        if (!badh(cand)) b.y1 = cand;
    }
    throw std::runtime_error("cleaned_box: could not find clean corners");
}

// Count roots in an arbitrary box after cleaning its boundary.
inline int count_in_box_robust(const Poly<Rat>& f, const BoxQ& b) {
    Poly<Rat> sf = squarefree_part(f);
    Rat bound = cauchy_root_bound(sf) + boost::multiprecision::abs(b.x0) +
                boost::multiprecision::abs(b.x1) + boost::multiprecision::abs(b.y0) +
                boost::multiprecision::abs(b.y1);
    return count_in_box(f, cleaned_box(sf, b, bound));
}

// Isolating boxes for all complex roots of a squarefree polynomial: clean-line
// quadtree subdivision; each returned box holds exactly one root. Sorted by
// (Re, Im) of box centers.
inline std::vector<BoxQ> isolate_all_roots(const Poly<Rat>& f_in) {
    std::vector<BoxQ> out;
    Poly<Rat> f = squarefree_part(f_in);
    const int n = f.degree();
    if (n <= 0) return out;

    Rat bound = cauchy_root_bound(f);
    auto badv = [&](const Rat& x) { return detail::root_on_vertical(f, x, bound + 2); };
    auto badh = [&](const Rat& y) { return detail::root_on_horizontal(f, y, bound + 2); };

    BoxQ root_box = cleaned_box(f, {-bound, bound, -bound, bound}, bound + 2);
    struct Item {
        BoxQ box;
        int count;
    };
    std::vector<Item> work{{root_box, count_in_box(f, root_box)}};
    while (!work.empty()) {
        Item it = work.back();
        work.pop_back();
        if (it.count == 0) continue;
        if (it.count == 1) {
            out.push_back(it.box);
            continue;
        }
        const BoxQ& b = it.box;
        bool split_x = b.width() >= b.height();
        if (split_x) {
            Rat m = detail::clean_coordinate(b.mid_x(), b.x0, b.x1, [&](const Rat& x) {
                if (badv(x)) return true;
                return detail::corner_degenerate(f, x, b.y0) || detail::corner_degenerate(f, x, b.y1);
            });
            BoxQ left{b.x0, m, b.y0, b.y1}, right{m, b.x1, b.y0, b.y1};
            int cl = count_in_box(f, left);
            work.push_back({left, cl});
            work.push_back({right, it.count - cl});
        } else {
            Rat m = detail::clean_coordinate(b.mid_y(), b.y0, b.y1, [&](const Rat& y) {
                if (badh(y)) return true;
                return detail::corner_degenerate(f, b.x0, y) || detail::corner_degenerate(f, b.x1, y);
            });
            BoxQ bot{b.x0, b.x1, b.y0, m}, top{b.x0, b.x1, m, b.y1};
            int cb = count_in_box(f, bot);
            work.push_back({bot, cb});
            work.push_back({top, it.count - cb});
        }
    }
    assert(static_cast<int>(out.size()) == n);
    // normalize: a box straddling the real axis either holds a real root or is
    // refined in y until it sits on one side
    for (auto& b : out) {
        while (b.contains_zero_im() && count_real_roots(f, b.x0, b.x1) == 0) {
            Rat m = detail::clean_coordinate(b.mid_y(), b.y0, b.y1, [&](const Rat& y) {
                if (badh(y)) return true;
                return detail::corner_degenerate(f, b.x0, y) || detail::corner_degenerate(f, b.x1, y);
            });
            BoxQ bot{b.x0, b.x1, b.y0, m};
            b = count_in_box(f, bot) == 1 ? bot : BoxQ{b.x0, b.x1, m, b.y1};
        }
    }
    std::sort(out.begin(), out.end(), [](const BoxQ& a, const BoxQ& b) {
        if (a.mid_x() != b.mid_x()) return a.mid_x() < b.mid_x();
        return a.mid_y() < b.mid_y();
    });
    return out;
}

// true when the unique root isolated by the box is real
inline bool box_root_is_real(const Poly<Rat>& f, const BoxQ& b) {
    if (!b.contains_zero_im()) return false;
    return count_real_roots(squarefree_part(f), b.x0, b.x1) > 0;
}

// Halve an isolating box around its root; result stays clean and isolating.
inline BoxQ refine_box(const Poly<Rat>& f, const BoxQ& b) {
    Poly<Rat> sf = squarefree_part(f);
    Rat bound = cauchy_root_bound(sf) + 2;
    auto badv = [&](const Rat& x) { return detail::root_on_vertical(sf, x, bound); };
    auto badh = [&](const Rat& y) { return detail::root_on_horizontal(sf, y, bound); };
    BoxQ cur = b;
    // one bisection in each direction
    for (int axis = 0; axis < 2; ++axis) {
        if (axis == 0) {
            Rat m = detail::clean_coordinate(cur.mid_x(), cur.x0, cur.x1, [&](const Rat& x) {
                if (badv(x)) return true;
                return detail::corner_degenerate(sf, x, cur.y0) || detail::corner_degenerate(sf, x, cur.y1);
            });
            BoxQ left{cur.x0, m, cur.y0, cur.y1};
            cur = count_in_box(sf, left) == 1 ? left : BoxQ{m, cur.x1, cur.y0, cur.y1};
        } else {
            Rat m = detail::clean_coordinate(cur.mid_y(), cur.y0, cur.y1, [&](const Rat& y) {
                if (badh(y)) return true;
                return detail::corner_degenerate(sf, cur.x0, y) || detail::corner_degenerate(sf, cur.x1, y);
            });
            BoxQ bot{cur.x0, cur.x1, cur.y0, m};
            cur = count_in_box(sf, bot) == 1 ? bot : BoxQ{cur.x0, cur.x1, m, cur.y1};
        }
    }
    return cur;
}

}  // namespace dualscope
