#include "dualscope/ratcurves.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace dualscope;
using namespace dualscope::curves;

namespace {

Poly<Rat> qp(std::initializer_list<int> cs) {
    std::vector<Rat> v;
    for (int c : cs) v.push_back(Rat(c));
    return Poly<Rat>(v);
}

std::mt19937_64 rng(20250102);

ParamCurve random_proper_curve(int maxdeg, int coefbound) {
    std::uniform_int_distribution<int> dd(2, maxdeg), dc(-coefbound, coefbound);
    while (true) {
        int n = dd(rng);
        std::array<std::vector<Rat>, 3> c;
        for (auto& v : c) {
            v.resize(static_cast<size_t>(n) + 1);
            for (auto& x : v) x = Rat(dc(rng));
        }
        try {
            ParamCurve cur{Poly<Rat>(c[0]), Poly<Rat>(c[1]), Poly<Rat>(c[2])};
            if (cur.degree() < 2 || cur.coefficient_rank() < 3) continue;
            if (validate_proper(cur) != 1) continue;
            return cur;
        } catch (const std::exception&) {
            continue;
        }
    }
}

}  // namespace

TEST_CASE("reduce strips common factors") {
    // t^4 (2t+1), -t^2 (4t+3), 2t: content t, curve (t^3(2t+1) : -t(4t+3) : 2)
    Poly<Rat> r0 = qp({0, 0, 0, 0, 1, 2});   // t^4 + 2t^5
    Poly<Rat> r1 = qp({0, 0, -3, -4});       // -3t^2 - 4t^3
    Poly<Rat> r2 = qp({0, 2});
    auto [c, content] = reduce(r0, r1, r2);
    CHECK(content == qp({0, 1}));
    CHECK(c.g(0) == qp({0, 0, 0, 1, 2}));
    CHECK(c.g(1) == qp({0, -3, -4}));
    CHECK(c.g(2) == qp({2}));
    CHECK(c.degree() == 4);

    // coprime triple: content 1
    auto [c2, cont2] = reduce(qp({1}), qp({0, 0, 1}), qp({0, 1, 0, 5}));
    (void)c2;
    CHECK(cont2.degree() == 0);

    // Example 6.9's dual is already reduced
    auto [c3, cont3] = reduce(qp({0, 0, -1, 0, 0, 2}), qp({-1, 0, 0, -4}), qp({0, 2}));
    (void)c3;
    CHECK(cont3.degree() == 0);

    CHECK_THROWS(reduce(Poly<Rat>(), Poly<Rat>(), Poly<Rat>()));
}

TEST_CASE("dualize reproduces the worked quintic") {
    // (1 : t^2 : t^4 + t) -> (2t^5 - t^2 : -(4t^3 + 1) : 2t)
    ParamCurve c{qp({1}), qp({0, 0, 1}), qp({0, 1, 0, 0, 1})};
    auto full = dualize_full(c);
    CHECK(full.dual.g(0) == qp({0, 0, -1, 0, 0, 2}));
    CHECK(full.dual.g(1) == qp({-1, 0, 0, -4}));
    CHECK(full.dual.g(2) == qp({0, 2}));
    CHECK(full.content.degree() == 0);
    CHECK(full.content_deg_at_inf == 1);  // the ramphoid cusp at t = infinity
    CHECK(full.dual.degree() == 5);
}

TEST_CASE("dualize small cases") {
    // conic (t : t^2 : 1) -> (-2t : 1 : t^2)
    ParamCurve conic{qp({0, 1}), qp({0, 0, 1}), qp({1})};
    ParamCurve d = dualize(conic);
    CHECK(d.g(0) == qp({0, -2}));
    CHECK(d.g(1) == qp({1}));
    CHECK(d.g(2) == qp({0, 0, 1}));
    // tangency: the dual line at t0 touches the conic at t0
    for (int t0 : {-2, -1, 0, 1, 3}) {
        proj::ProjPoint line = d.at(Rat(t0));
        Poly<Rat> pullback;
        for (int i = 0; i < 3; ++i) pullback = pullback + conic.g(i) * line[static_cast<size_t>(i)];
        CHECK(order_at_rational(pullback, Rat(t0)) >= 2);
    }

    // nodal cubic (t : t^3 : t^2 - 1): dual is a quartic
    ParamCurve nodal{qp({0, 1}), qp({0, 0, 0, 1}), qp({-1, 0, 1})};
    CHECK(dualize(nodal).degree() == 4);

    // monomial (t : t^3 : t^2-1)... degenerate inputs are rejected
    CHECK_THROWS_AS(dualize(ParamCurve{qp({0, 1}), qp({1, 2}), qp({1})}), degenerate_curve);
}

TEST_CASE("implicitize worked examples") {
    // (1 : t^2 : t^4 + t): (y0 y2 - y1^2)^2 - y0^3 y1
    ParamCurve c69{qp({1}), qp({0, 0, 1}), qp({0, 1, 0, 0, 1})};
    ImplicitCurve f = implicitize(c69);
    std::map<std::array<int, 3>, Rat> expect{
        {{2, 0, 2}, Rat(1)}, {{1, 2, 1}, Rat(-2)}, {{0, 4, 0}, Rat(1)}, {{3, 1, 0}, Rat(-1)}};
    CHECK(f.proportional(ImplicitCurve(4, expect)));
    CHECK(f.vanishes_on(c69));

    // (1 : t^2 : t^4 + t^3): (y0 y2 - y1^2)^2 - y0 y1^3
    ParamCurve c610{qp({1}), qp({0, 0, 1}), qp({0, 0, 0, 1, 1})};
    ImplicitCurve f2 = implicitize(c610);
    std::map<std::array<int, 3>, Rat> expect2{
        {{2, 0, 2}, Rat(1)}, {{1, 2, 1}, Rat(-2)}, {{0, 4, 0}, Rat(1)}, {{1, 3, 0}, Rat(-1)}};
    CHECK(f2.proportional(ImplicitCurve(4, expect2)));

    // conic (t : t^2 : 1): x0^2 - x1 x2
    ParamCurve conic{qp({0, 1}), qp({0, 0, 1}), qp({1})};
    std::map<std::array<int, 3>, Rat> expect3{{{2, 0, 0}, Rat(1)}, {{0, 1, 1}, Rat(-1)}};
    CHECK(implicitize(conic).proportional(ImplicitCurve(2, expect3)));
}

TEST_CASE("covering degree detection") {
    // (t^2 : t^4 : 1) factors through t^2
    ParamCurve c1{qp({0, 0, 1}), qp({0, 0, 0, 0, 1}), qp({1})};
    CHECK(validate_proper(c1) == 2);
    CHECK_THROWS_AS(implicitize(c1), improper_parametrization);

    // gcd(2, 5) = 1: proper
    ParamCurve c2{qp({0, 0, 1}), qp({0, 0, 0, 0, 0, 1}), qp({1})};
    CHECK(validate_proper(c2) == 1);

    ParamCurve c69{qp({1}), qp({0, 0, 1}), qp({0, 1, 0, 0, 1})};
    CHECK(validate_proper(c69) == 1);
}

TEST_CASE("class formula") {
    CHECK(class_degree(3, 0, {2}) == 3);        // cuspidal cubic
    CHECK(class_degree(6, 1, std::vector<int>(9, 2)) == 3);  // 9-cuspidal sextic
    CHECK(class_degree(3, 0, {}) == 4);         // nodal cubic
    CHECK(class_degree(8, 0, std::vector<int>(9, 2)) == 5);  // maximal cuspidal octic
    CHECK_THROWS(class_degree(3, 0, {1}));
    CHECK_THROWS(class_degree(2, 0, {2, 2, 2}));
}

TEST_CASE("pluecker audit") {
    // three-cuspidal quartic with nodal cubic dual
    auto rels = pluecker_audit({4, 3, 0, 0, 3, 1, 0});
    for (const auto& r : rels) CHECK(r.holds);

    // maximal cuspidal rational octic (n = 5): 21 - 12 - 9 = 0
    auto rels2 = pluecker_audit({8, 5, 0, 12, 9, 6, 0});
    for (const auto& r : rels2) CHECK(r.holds);

    // smooth quintic: g = 6
    auto rels3 = pluecker_audit({5, 20, 6, 0, 0, 0, 0});
    CHECK(rels3[0].holds);

    // violated relation is reported, not thrown
    auto rels4 = pluecker_audit({4, 3, 1, 0, 3, 1, 0});
    CHECK_FALSE(rels4[0].holds);
}

TEST_CASE("biduality on random proper curves") {
    for (int trial = 0; trial < 6; ++trial) {
        ParamCurve c = random_proper_curve(4, 4);
        ParamCurve dd = dualize(dualize(c));
        ImplicitCurve f1 = implicitize(c);
        ImplicitCurve f2 = implicitize(dd);
        CHECK(f1.proportional(f2));
        // sampled points of the bidual lie on the original implicit curve
        for (int t0 : {-2, 0, 1, 3, 7}) {
            auto p = dd.at(Rat(t0));
            CHECK(f1.eval<Rat>(p[0], p[1], p[2]) == 0);
        }
    }
}

TEST_CASE("class degree matches dual parametric degree on random curves") {
    for (int trial = 0; trial < 8; ++trial) {
        ParamCurve c = random_proper_curve(4, 4);
        auto full = dualize_full(c);
        // sum (m_A - 1) = deg of the full content (affine + infinity)
        int content_total = full.content.degree() + full.content_deg_at_inf;
        CHECK(full.dual.degree() == 2 * (0 + c.degree() - 1) - content_total);
    }
}

TEST_CASE("minor degree bound and content localization") {
    for (int trial = 0; trial < 8; ++trial) {
        ParamCurve c = random_proper_curve(5, 4);
        auto m = minor_triple(c);
        for (const auto& p : m) CHECK(p.degree() <= 2 * c.degree() - 2);
    }
}
