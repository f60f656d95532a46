#pragma once

// Algebraic numbers as (irreducible primitive minimal polynomial, certified
// isolating box), and points of P^1 over Q-bar extended by infinity. Equality
// and ordering are decided exactly: minpoly gcd plus box refinement, never by
// numeric proximity.

#include "dualscope/intfactor.hpp"
#include "dualscope/isolate.hpp"

#include <memory>
#include <string>

namespace dualscope {

class AlgNum {
public:
    AlgNum(Poly<Int> minpoly, BoxQ box)
        : minpoly_(std::move(minpoly)), box_(box) {
        assert(minpoly_.degree() >= 2);
        real_ = box_root_is_real(to_q(minpoly_), box_);
    }

    const Poly<Int>& minpoly() const { return minpoly_; }
    Poly<Rat> minpoly_q() const { return to_q(minpoly_); }
    const BoxQ& box() const { return box_; }
    bool is_real() const { return real_; }
    int degree() const { return minpoly_.degree(); }

    void refine() { box_ = refine_box(minpoly_q(), box_); }
    void refine(int steps) {
        for (int i = 0; i < steps; ++i) refine();
    }

    friend bool operator==(const AlgNum& a, const AlgNum& b) {
        if (a.minpoly_ != b.minpoly_) return false;  // canonical minpolys
        auto inter = a.box_.intersect(b.box_);
        if (!inter) return false;
        return count_in_box_robust(a.minpoly_q(), *inter) == 1;
    }
    friend bool operator!=(const AlgNum& a, const AlgNum& b) { return !(a == b); }

    // total order by (Re, Im), refined until decidable
    friend bool operator<(AlgNum a, AlgNum b) {
        if (a == b) return false;
        for (int guard = 0; guard < 4096; ++guard) {
            if (a.box_.x1 < b.box_.x0) return true;
            if (b.box_.x1 < a.box_.x0) return false;
            if (a.box_.y1 < b.box_.y0) return true;
            if (b.box_.y1 < a.box_.y0) return false;
            a.refine();
            b.refine();
        }
        throw std::runtime_error("AlgNum order: refinement did not separate");
    }

    std::string to_string() const {
        std::string s = "alg(";
        for (int i = 0; i <= minpoly_.degree(); ++i) {
            if (i) s += ",";
            s += minpoly_.coeff(i).str();
        }
        s += " | " + dualscope::to_string(box_.x0) + ".." + dualscope::to_string(box_.x1);
        if (!real_)
            s += " + i*" + dualscope::to_string(box_.y0) + ".." + dualscope::to_string(box_.y1);
        s += ")";
        return s;
    }

private:
    Poly<Int> minpoly_;
    BoxQ box_;
    bool real_ = false;
};

// All roots of an irreducible polynomial of degree >= 2 as AlgNums, sorted.
inline std::vector<AlgNum> algebraic_roots(const Poly<Int>& irreducible) {
    std::vector<AlgNum> out;
    for (const auto& b : isolate_all_roots(to_q(irreducible))) out.push_back(AlgNum(irreducible, b));
    return out;
}

// --- points of P^1 over Q-bar plus infinity -----------------------------------

class P1Point {
public:
    enum class Kind { Finite, Infinity, Algebraic };

    P1Point() : kind_(Kind::Finite), rat_(0) {}
    explicit P1Point(Rat r) : kind_(Kind::Finite), rat_(std::move(r)) {}
    explicit P1Point(AlgNum a) : kind_(Kind::Algebraic), alg_(std::make_shared<AlgNum>(std::move(a))) {}
    static P1Point infinity() {
        P1Point p;
        p.kind_ = Kind::Infinity;
        return p;
    }

    Kind kind() const { return kind_; }
    bool is_infinity() const { return kind_ == Kind::Infinity; }
    bool is_rational() const { return kind_ == Kind::Finite; }
    bool is_algebraic() const { return kind_ == Kind::Algebraic; }
    const Rat& rat() const {
        assert(is_rational());
        return rat_;
    }
    const AlgNum& alg() const {
        assert(is_algebraic());
        return *alg_;
    }

    friend bool operator==(const P1Point& a, const P1Point& b) {
        if (a.kind_ != b.kind_) return false;
        switch (a.kind_) {
            case Kind::Finite: return a.rat_ == b.rat_;
            case Kind::Infinity: return true;
            case Kind::Algebraic: return *a.alg_ == *b.alg_;
        }
        return false;
    }
    friend bool operator!=(const P1Point& a, const P1Point& b) { return !(a == b); }

    // canonical order: infinity, then rationals ascending, then algebraics
    friend bool operator<(const P1Point& a, const P1Point& b) {
        auto rank = [](const P1Point& p) {
            switch (p.kind_) {
                case Kind::Infinity: return 0;
                case Kind::Finite: return 1;
                case Kind::Algebraic: return 2;
            }
            return 3;
        };
        if (rank(a) != rank(b)) return rank(a) < rank(b);
        if (a.kind_ == Kind::Finite) return a.rat_ < b.rat_;
        if (a.kind_ == Kind::Algebraic) return *a.alg_ < *b.alg_;
        return false;
    }

    std::string to_string() const {
        switch (kind_) {
            case Kind::Infinity: return "inf";
            case Kind::Finite: return dualscope::to_string(rat_);
            case Kind::Algebraic: return alg_->to_string();
        }
        return "?";
    }

private:
    Kind kind_;
    Rat rat_;
    std::shared_ptr<const AlgNum> alg_;
};

}  // namespace dualscope
