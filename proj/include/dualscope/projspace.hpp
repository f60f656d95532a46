#pragma once

// Exact projective linear algebra over Q: points and linear subspaces of P^k
// with canonical reduced-row-echelon bases, duality, spans and meets, the
// rational normal curve with its osculating flag, and PGL(2)-orbit dimensions
// of binary forms via root multiplicity profiles.

#include "dualscope/binform.hpp"

namespace dualscope {
namespace proj {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

// --- row reduction ----------------------------------------------------------------

struct Rref {
    Mat rows;                // nonzero rows only, pivots = 1, reduced
    std::vector<int> pivots; // pivot column per row
    int rank = 0;
};

inline Rref rref(Mat m) {
    Rref out;
    if (m.empty()) return out;
    const size_t ncol = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < ncol && r < m.size(); ++c) {
        size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[r]);
        Rat inv = Rat(1) / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = 0; j < ncol; ++j) m[i][j] -= f * m[r][j];
        }
        out.pivots.push_back(static_cast<int>(c));
        ++r;
    }
    m.resize(r);
    out.rows = std::move(m);
    out.rank = static_cast<int>(r);
    return out;
}

inline int rank_of(const Mat& m) { return rref(m).rank; }

// basis of { x : m x = 0 }, rows of the result
inline Mat nullspace(const Mat& m) {
    if (m.empty()) return {};
    const size_t ncol = m[0].size();
    Rref r = rref(m);
    std::vector<bool> is_pivot(ncol, false);
    for (int p : r.pivots) is_pivot[static_cast<size_t>(p)] = true;
    Mat out;
    for (size_t fc = 0; fc < ncol; ++fc) {
        if (is_pivot[fc]) continue;
        Vec v(ncol, Rat(0));
        v[fc] = 1;
        for (size_t i = 0; i < r.rows.size(); ++i)
            v[static_cast<size_t>(r.pivots[i])] = -r.rows[i][fc];
        out.push_back(std::move(v));
    }
    return out;
}

inline Rat dot(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// --- projective points ---------------------------------------------------------------

// canonical representative: primitive integer vector, first nonzero entry > 0
inline Vec normalize_point(Vec v) {
    Int l = 1;
    for (const auto& c : v) l = int_lcm(l, den(c));
    Int g = 0;
    for (auto& c : v) {
        c *= l;
        g = int_gcd(g, num(c));
    }
    if (g == 0) throw std::invalid_argument("projective point: all coordinates zero");
    for (auto& c : v)
        if (c != 0) {
            if (c < 0) g = -g;
            break;
        }
    for (auto& c : v) c /= Rat(g);
    return v;
}

class ProjPoint {
public:
    ProjPoint() = default;
    explicit ProjPoint(Vec coords) : c_(normalize_point(std::move(coords))) {}

    int ambient_dim() const { return static_cast<int>(c_.size()) - 1; }
    const Vec& coords() const { return c_; }
    const Rat& operator[](size_t i) const { return c_[i]; }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
    friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return a.c_ < b.c_; }

    std::string to_string() const {
        std::string s = "(";
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ":";
            s += dualscope::to_string(c_[i]);
        }
        return s + ")";
    }

private:
    Vec c_;
};

inline ProjPoint unit_point(int ambient, int k) {
    Vec v(static_cast<size_t>(ambient) + 1, Rat(0));
    v[static_cast<size_t>(k)] = 1;
    return ProjPoint(v);
}

// The dual of a point of P^2 is the line with the same coefficient triple
// (a:b:c) <-> { a x0 + b x1 + c x2 = 0 }; an involution by construction.
inline ProjPoint dual(const ProjPoint& p) { return p; }

inline Rat incidence(const ProjPoint& line, const ProjPoint& point) {
    return dot(line.coords(), point.coords());
}

// --- linear subspaces ---------------------------------------------------------------

class LinSubspace {
public:
    LinSubspace() = default;
    // rows span the subspace; rank may be lower than the row count
    LinSubspace(int ambient, const Mat& rows) : ambient_(ambient) {
        Rref r = rref(rows);
        basis_ = std::move(r.rows);
        for (auto& row : basis_) row = normalize_point(row);
    }

    int ambient_dim() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()) - 1; }  // projective
    bool empty() const { return basis_.empty(); }
    const Mat& basis() const { return basis_; }

    bool contains(const ProjPoint& p) const {
        Mat m = basis_;
        m.push_back(p.coords());
        return rank_of(m) == static_cast<int>(basis_.size());
    }

    bool contains(const LinSubspace& other) const {
        Mat m = basis_;
        for (const auto& row : other.basis_) m.push_back(row);
        return rank_of(m) == static_cast<int>(basis_.size());
    }

    // exact annihilator (orthogonal complement in the dual space)
    LinSubspace orthogonal() const {
        return LinSubspace(ambient_, nullspace(basis_));
    }

    friend bool operator==(const LinSubspace& a, const LinSubspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    int ambient_ = -1;
    Mat basis_;
};

inline LinSubspace span(int ambient, const std::vector<ProjPoint>& pts) {
    if (pts.empty()) throw std::invalid_argument("span: empty point set");
    Mat m;
    for (const auto& p : pts) {
        assert(p.ambient_dim() == ambient);
        m.push_back(p.coords());
    }
    return LinSubspace(ambient, m);
}

inline LinSubspace span(const LinSubspace& a, const LinSubspace& b) {
    assert(a.ambient_dim() == b.ambient_dim());
    Mat m = a.basis();
    for (const auto& row : b.basis()) m.push_back(row);
    return LinSubspace(a.ambient_dim(), m);
}

inline LinSubspace meet(const LinSubspace& a, const LinSubspace& b) {
    assert(a.ambient_dim() == b.ambient_dim());
    LinSubspace ao = a.orthogonal(), bo = b.orthogonal();
    Mat m = ao.basis();
    for (const auto& row : bo.basis()) m.push_back(row);
    return LinSubspace(a.ambient_dim(), nullspace(m));
}

// --- the rational normal curve and its flag ------------------------------------------

// point (z0^n : z0^{n-1} z1 : ... : z1^n) of C_n^* in P^n*
inline ProjPoint rnc_point(const Rat& z0, const Rat& z1, int n) {
    assert(!(z0 == 0 && z1 == 0));
    Vec v(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) v[static_cast<size_t>(j)] = rat_pow(z0, n - j) * rat_pow(z1, j);
    return ProjPoint(v);
}

// dual rational normal curve C_n in P^n: coordinate k = (-1)^k C(n,k) z0^k z1^{n-k}
inline ProjPoint rnc_dual_point(const Rat& z0, const Rat& z1, int n) {
    assert(!(z0 == 0 && z1 == 0));
    Vec v(static_cast<size_t>(n) + 1);
    Int binom = 1;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) binom = binom * (n - k + 1) / k;
        Rat c = Rat(binom) * rat_pow(z0, k) * rat_pow(z1, n - k);
        v[static_cast<size_t>(k)] = (k % 2 == 0) ? c : -c;
    }
    return ProjPoint(v);
}

namespace detail {

// rows: i-th derivative of the monomial parametrization at z, i = 0..k,
// taken in the affine chart where z is finite (z1 != 0) or at infinity.
inline Mat osculating_rows(const Rat& z0, const Rat& z1, int k, int n) {
    Mat rows;
    if (z1 != 0) {
        Rat t = z0 / z1;
        // coordinate j = t^{n-j}
        for (int i = 0; i <= k; ++i) {
            Vec row(static_cast<size_t>(n) + 1, Rat(0));
            for (int j = 0; j <= n; ++j) {
                int e = n - j;
                if (e < i) continue;
                Int c = 1;
                for (int l = 0; l < i; ++l) c *= (e - l);
                row[static_cast<size_t>(j)] = Rat(c) * rat_pow(t, e - i);
            }
            rows.push_back(std::move(row));
        }
    } else {
        // z = (1:0): coordinate j = s^j in the chart s = z1/z0, at s = 0
        for (int i = 0; i <= k; ++i) {
            Vec row(static_cast<size_t>(n) + 1, Rat(0));
            row[static_cast<size_t>(i)] = 1;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace detail

// T^k_z C_n^*: osculating k-plane of the rational normal curve at z
inline LinSubspace osculating_subspace(const Rat& z0, const Rat& z1, int k, int n) {
    assert(0 <= k && k <= n - 1);
    LinSubspace t(n, detail::osculating_rows(z0, z1, k, n));
    assert(t.dim() == k);
    return t;
}

// H_z^{n-1-k} = (T^k_z)^perp: forms with z as a root of multiplicity >= k+1
inline LinSubspace osculating_dual(const Rat& z0, const Rat& z1, int k, int n) {
    return osculating_subspace(z0, z1, k, n).orthogonal();
}

// --- PGL(2)-orbit dimension of a binary form -------------------------------------------

// 1 for a single n-fold root (O_{e_0}), 2 for exactly two distinct roots
// (the O_{e_i}), 3 otherwise.
inline int orbit_dim(const BinaryForm& f) {
    if (f.degree() < 2 || f.is_zero()) throw std::invalid_argument("orbit_dim: need degree >= 2, nonzero");
    int d = multiplicity_profile(f).distinct();
    return d >= 3 ? 3 : d;
}

}  // namespace proj
}  // namespace dualscope
