#include "dualscope/binform.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace dualscope;

namespace {

Poly<Rat> qp(std::initializer_list<int> cs) {
    std::vector<Rat> v;
    for (int c : cs) v.push_back(Rat(c));
    return Poly<Rat>(v);
}

P1Point fin(int r) { return P1Point(Rat(r)); }

std::mt19937_64 rng(777);

}  // namespace

TEST_CASE("vieta explicit formulas") {
    // degree 2: (v1 v2 : -(u1 v2 + u2 v1) : u1 u2)
    std::uniform_int_distribution<int> d(-5, 5);
    for (int i = 0; i < 25; ++i) {
        Rat u1(d(rng)), v1(d(rng)), u2(d(rng)), v2(d(rng));
        if ((u1 == 0 && v1 == 0) || (u2 == 0 && v2 == 0)) continue;
        BinaryForm f = vieta_uv({{u1, v1}, {u2, v2}});
        CHECK(f.coeff(0) == v1 * v2);
        CHECK(f.coeff(1) == -(u1 * v2 + u2 * v1));
        CHECK(f.coeff(2) == u1 * u2);
    }

    // all-zero tuple -> u^n = (1 : 0 : ... : 0)
    BinaryForm z = vieta({fin(0), fin(0), fin(0), fin(0)});
    CHECK(z.coeff(0) == 1);
    for (int j = 1; j <= 4; ++j) CHECK(z.coeff(j) == 0);

    // (1,2,3) -> (1 : -6 : 11 : -6), i.e. (z-1)(z-2)(z-3)
    BinaryForm f = vieta({fin(1), fin(2), fin(3)});
    CHECK(f.coeffs() == std::vector<Rat>{Rat(1), Rat(-6), Rat(11), Rat(-6)});
}

TEST_CASE("squarefree support") {
    // t^2 (t - 1), no root at infinity when read at its own degree
    BinaryForm f = BinaryForm::from_affine(qp({0, 0, -1, 1}) * Rat(-1), 3);
    auto prof = squarefree_support(f);
    REQUIRE(prof.entries.size() == 2);
    CHECK(prof.multiplicity_of(fin(0)) == 2);
    CHECK(prof.multiplicity_of(fin(1)) == 1);

    // u^n has the single root z = 0 with multiplicity n (our chart convention)
    BinaryForm un(4, {Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)});
    auto pu = squarefree_support(un);
    REQUIRE(pu.entries.size() == 1);
    CHECK(pu.multiplicity_of(fin(0)) == 4);

    // z^3 - 6z^2 + 11z - 6 -> {1, 2, 3}
    auto pz = squarefree_support(BinaryForm::from_affine(qp({-6, 11, -6, 1}), 3));
    REQUIRE(pz.entries.size() == 3);
    for (int r : {1, 2, 3}) CHECK(pz.multiplicity_of(fin(r)) == 1);

    // leading zeros mean roots at infinity
    BinaryForm g(3, {Rat(0), Rat(0), Rat(1), Rat(5)});
    auto pg = squarefree_support(g);
    CHECK(pg.multiplicity_of(P1Point::infinity()) == 2);
    CHECK(pg.multiplicity_of(P1Point(Rat(-5))) == 1);

    // irrational roots: z^2 - 2
    auto pi = squarefree_support(BinaryForm::from_affine(qp({-2, 0, 1}), 2));
    REQUIRE(pi.entries.size() == 2);
    CHECK(pi.entries[0].first.is_algebraic());
    CHECK(pi.entries[0].first.alg().is_real());
}

TEST_CASE("vieta round trip on random rational multisets") {
    std::uniform_int_distribution<int> dsz(1, 8), dv(-6, 6), dinf(0, 5);
    for (int trial = 0; trial < 40; ++trial) {
        int sz = dsz(rng);
        std::vector<P1Point> pts;
        for (int i = 0; i < sz; ++i) {
            if (dinf(rng) == 0)
                pts.push_back(P1Point::infinity());
            else
                pts.push_back(fin(dv(rng)));
        }
        BinaryForm f = vieta(pts);
        auto prof = squarefree_support(f);
        CHECK(prof.total_multiplicity() == sz);
        for (const auto& p : pts) CHECK(prof.contains(p));
        int count = 0;
        for (auto& [root, mult] : prof.entries) {
            int expected = 0;
            for (const auto& p : pts)
                if (p == root) ++expected;
            CHECK(mult == expected);
            count += mult;
        }
        CHECK(count == sz);
    }
}

TEST_CASE("discriminant basics") {
    // u v (u - v): roots 0, 1, infinity, all distinct
    BinaryForm f(3, {Rat(0), Rat(1), Rat(-1), Rat(0)});
    CHECK(discriminant(f) != 0);

    // u^n: n-fold root
    BinaryForm un(5, {Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)});
    CHECK(discriminant(un) == 0);

    // quadratic: b^2 - 4ac
    std::uniform_int_distribution<int> d(-6, 6);
    for (int i = 0; i < 20; ++i) {
        Rat a(d(rng)), b(d(rng)), c(d(rng));
        if (a == 0 && b == 0 && c == 0) continue;
        CHECK(discriminant(BinaryForm(2, {a, b, c})) == b * b - 4 * a * c);
    }

    // cubic z^3 + p z + q: -4p^3 - 27q^2
    for (int i = 0; i < 20; ++i) {
        Rat p(d(rng)), q(d(rng));
        BinaryForm f3(3, {Rat(1), Rat(0), p, q});
        CHECK(discriminant(f3) == -4 * p * p * p - 27 * q * q);
    }
}

TEST_CASE("discriminant is homogeneous of degree 2n-2") {
    std::uniform_int_distribution<int> d(-4, 4), dl(2, 5);
    for (int n = 2; n <= 5; ++n) {
        for (int i = 0; i < 10; ++i) {
            std::vector<Rat> a(static_cast<size_t>(n) + 1);
            for (auto& c : a) c = Rat(d(rng));
            BinaryForm f(n, a);
            if (f.is_zero()) continue;
            Rat lambda(dl(rng));
            std::vector<Rat> b = a;
            for (auto& c : b) c *= lambda;
            CHECK(discriminant(BinaryForm(n, b)) == rat_pow(lambda, 2 * n - 2) * discriminant(f));
        }
    }
}

TEST_CASE("discriminant vanishing matches multiple roots on a grid") {
    // full grid would be huge for degree 5; exhaustive for degree <= 3,
    // randomized for 4 and 5, entries in [-3, 3]
    auto has_multiple_root = [](const BinaryForm& f) {
        auto prof = multiplicity_profile(f);
        for (int m : prof.multiplicities)
            if (m >= 2) return true;
        return false;
    };
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b)
            for (int c = -3; c <= 3; ++c)
                for (int d2 = -3; d2 <= 3; ++d2) {
                    BinaryForm f(3, {Rat(a), Rat(b), Rat(c), Rat(d2)});
                    if (f.is_zero()) continue;
                    CHECK((discriminant(f) == 0) == has_multiple_root(f));
                }
    std::uniform_int_distribution<int> d(-3, 3);
    for (int n = 4; n <= 5; ++n)
        for (int i = 0; i < 400; ++i) {
            std::vector<Rat> a(static_cast<size_t>(n) + 1);
            for (auto& c : a) c = Rat(d(rng));
            BinaryForm f(n, a);
            if (f.is_zero()) continue;
            CHECK((discriminant(f) == 0) == has_multiple_root(f));
        }
}

TEST_CASE("g_action") {
    BinaryForm f(3, {Rat(2), Rat(-1), Rat(4), Rat(7)});
    CHECK(g_action(Rat(1), f) == f);
    CHECK_THROWS(g_action(Rat(0), f));

    // equivariance: g_action(lambda, vieta(z)) ~ vieta(lambda z)
    std::uniform_int_distribution<int> d(-5, 5), dl(1, 4);
    for (int i = 0; i < 30; ++i) {
        std::vector<P1Point> pts, scaled;
        Rat lambda(dl(rng));
        int sz = 1 + (i % 5);
        for (int j = 0; j < sz; ++j) {
            Rat z(d(rng));
            pts.push_back(P1Point(z));
            scaled.push_back(P1Point(lambda * z));
        }
        CHECK(g_action(lambda, vieta(pts)).proportional(vieta(scaled)));
    }

    // coordinate points are fixed points
    for (int k = 0; k <= 3; ++k) {
        std::vector<Rat> a(4, Rat(0));
        a[static_cast<size_t>(k)] = 1;
        BinaryForm e(3, a);
        CHECK(g_action(Rat(5), e).proportional(e));
    }
}

TEST_CASE("algnum equality and soundness") {
    // two different roots of the same minpoly differ; same root equals itself
    auto roots = algebraic_roots(to_primitive_z(qp({-2, 0, 1})).p);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] != roots[1]);
    CHECK(roots[0] == roots[0]);
    CHECK(roots[0] < roots[1]);

    // refinement by 2^10 keeps the unique-root certificate
    AlgNum a = roots[1];
    for (int i = 0; i < 10; ++i) {
        a.refine();
        CHECK(count_in_box_robust(a.minpoly_q(), a.box()) == 1);
    }
    CHECK(a == roots[1]);

    // complex conjugate pair: equal minpoly, distinct roots
    auto cpx = algebraic_roots(to_primitive_z(qp({1, 1, 1})).p);
    REQUIRE(cpx.size() == 2);
    CHECK(cpx[0] != cpx[1]);
    CHECK_FALSE(cpx[0].is_real());
}

TEST_CASE("subresultants spec surface") {
    CHECK_THROWS(subresultants(qp({1, 1}), qp({1, 0, 1})));
    auto s = subresultants(qp({-1, 0, 1}), qp({0, 2}));
    REQUIRE(s.size() == 1);
    CHECK(s[0] != 0);
}
