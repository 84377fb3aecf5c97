#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "grlab/analysis/analysis.hpp"
#include "grlab/io/expr.hpp"
#include "grlab/ring/diagnostics.hpp"
#include "grlab/ring/element.hpp"
#include "grlab/ring/model.hpp"
#include "grlab/ring/random.hpp"

using namespace grlab;

namespace {

using F2Z = GroupRingModel<ZnGroup, FpRing>;
using F2Z2 = GroupRingModel<ZnGroup, FpRing>;

template <class M>
void check_ring_axioms(const M& m, const std::vector<RingElement<M>>& elems) {
    auto one = re_one(m);
    for (const auto& x : elems) {
        REQUIRE(re_mul(m, x, one) == x);
        REQUIRE(re_mul(m, one, x) == x);
        REQUIRE(re_add(m, x, re_zero(m)) == x);
    }
    for (const auto& x : elems)
        for (const auto& y : elems)
            for (const auto& z : elems) {
                REQUIRE(re_mul(m, re_mul(m, x, y), z) == re_mul(m, x, re_mul(m, y, z)));
                REQUIRE(re_mul(m, x, re_add(m, y, z)) ==
                        re_add(m, re_mul(m, x, y), re_mul(m, x, z)));
                REQUIRE(re_mul(m, re_add(m, x, y), z) ==
                        re_add(m, re_mul(m, x, z), re_mul(m, y, z)));
            }
}

// all elements with support within `pool` and support size <= 2, over F_p
template <class M>
std::vector<RingElement<M>> small_support_elements(const M& m,
                                                   const std::vector<typename M::Basis>& pool) {
    std::vector<RingElement<M>> out;
    std::uint32_t p = m.coeff().p;
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::uint32_t c = 1; c < p; ++c) {
            out.push_back(re_monomial(m, pool[i], c));
            for (std::size_t j = i + 1; j < pool.size(); ++j)
                for (std::uint32_t d = 1; d < p; ++d)
                    out.push_back(re_add(m, re_monomial(m, pool[i], c), re_monomial(m, pool[j], d)));
        }
    return out;
}

} // namespace

TEST_CASE("ring_add examples") {
    GroupRingModel<ZnGroup, FpRing> m(ZnGroup(1), FpRing(2));
    auto one_plus_t = parse_element(m, "1 + t");
    REQUIRE(re_add(m, one_plus_t, one_plus_t).is_zero()); // char 2
    REQUIRE(re_add(m, one_plus_t, re_zero(m)) == one_plus_t);

    GroupRingModel<ZnGroup, IntRing> mz(ZnGroup(1), IntRing{});
    REQUIRE(re_add(mz, parse_element(mz, "2t"), parse_element(mz, "3t")) ==
            parse_element(mz, "5t"));
}

TEST_CASE("ring_mul examples and zero pruning") {
    GroupRingModel<CyclicGroup, FpRing> c2(CyclicGroup(2), FpRing(2));
    auto x = parse_element(c2, "1+t");
    REQUIRE(re_mul(c2, x, x).is_zero()); // torsion control zero-divisor

    GroupRingModel<ZnGroup, FpRing> z1(ZnGroup(1), FpRing(2));
    auto sq = re_mul(z1, parse_element(z1, "1+t"), parse_element(z1, "1+t"));
    REQUIRE(sq == parse_element(z1, "1+t^2"));
    REQUIRE(sq.support_size() == 2); // no zero terms stored

    // (1+t)(1+t+t^2) = 1+t^3 over F2
    auto p = re_mul(z1, parse_element(z1, "1+t"), parse_element(z1, "1+t+t^2"));
    REQUIRE(p == parse_element(z1, "1+t^3"));
}

TEST_CASE("quaternion model is the usual quaternions") {
    auto q = make_quaternion_model(RatRing{});
    auto i = parse_element(q, "i");
    auto j = parse_element(q, "j");
    auto k = parse_element(q, "k");
    auto minus_one = parse_element(q, "-1");
    REQUIRE(re_mul(q, i, i) == minus_one);
    REQUIRE(re_mul(q, j, j) == minus_one);
    REQUIRE(re_mul(q, k, k) == minus_one);
    REQUIRE(re_mul(q, i, j) == k);
    REQUIRE(re_mul(q, j, i) == re_neg(q, k));

    // the non-homogeneous unit pair in a ring graded by a torsion group
    auto x = parse_element(q, "1+i");
    auto y = parse_element(q, "(1-i)/2");
    REQUIRE(re_mul(q, x, y) == re_one(q));
    REQUIRE(re_mul(q, y, x) == re_one(q));
    REQUIRE(!is_homogeneous(q, x));
}

TEST_CASE("quaternions over Q form a division ring at small support") {
    auto q = make_quaternion_model(RatRing{});
    std::mt19937_64 rng(7);
    auto pool = q.ball_window(2);
    REQUIRE(pool.size() == 4);
    for (int trial = 0; trial < 200; ++trial) {
        auto x = random_element(q, pool, 4, rng);
        if (x.is_zero()) continue;
        // conjugate/norm inverse: x * conj(x) = (a^2+b^2+c^2+d^2) * 1
        RingElement<decltype(q)> conj;
        Rational norm = 0;
        for (const auto& [b, c] : x.terms) {
            conj.terms.push_back({b, b == q.one() ? c : q.coeff().neg(c)});
            norm += c * c;
        }
        auto inv = re_scale(q, conj, Rational(1) / norm);
        REQUIRE(re_mul(q, x, inv) == re_one(q));
        REQUIRE(re_mul(q, inv, x) == re_one(q));
    }
}

TEST_CASE("Weyl algebra normal ordering") {
    WeylModel<RatRing> w(RatRing{});
    auto x = parse_element(w, "x");
    auto y = parse_element(w, "y");
    auto yx = re_mul(w, y, x);
    REQUIRE(yx == parse_element(w, "x*y + 1"));
    REQUIRE(parse_element(w, "x*y - y*x") == parse_element(w, "-1"));

    // grading: deg x = +1, deg y = -1, x*y homogeneous of degree 0
    auto xy = re_mul(w, x, y);
    REQUIRE(is_homogeneous(w, xy));
    REQUIRE(w.degree_str(xy.terms[0].first) == "0");
    REQUIRE(is_homogeneous(w, yx));
    // y^2 x^2 expands with binomial structure constants
    auto y2x2 = re_mul(w, re_mul(w, y, y), re_mul(w, x, x));
    REQUIRE(y2x2 == parse_element(w, "x^2*y^2 + 4*x*y + 2"));
}

TEST_CASE("support_of examples") {
    GroupRingModel<ZnGroup, FpRing> z1(ZnGroup(1), FpRing(2));
    REQUIRE(support_of(re_zero(z1)).empty());
    auto s = support_of(parse_element(z1, "1+t"));
    REQUIRE(s.size() == 2);

    WeylModel<RatRing> w(RatRing{});
    auto e = parse_element(w, "x*y + 1");
    auto sup = support_of(e);
    REQUIRE(sup.size() == 2);
    REQUIRE(w.deg_equal(sup[0], sup[1])); // both of degree 0
}

TEST_CASE("graded multiplicativity of degrees") {
    GroupRingModel<FreeGroup, FpRing> f2(FreeGroup(2), FpRing(3));
    auto B = f2.ball_window(2);
    for (const auto& g : B)
        for (const auto& h : B) {
            auto u = re_monomial(f2, g, 2);
            auto v = re_monomial(f2, h, 1);
            auto uv = re_mul(f2, u, v);
            REQUIRE(!uv.is_zero());
            REQUIRE(uv.terms[0].first == f2.backend().compose(g, h));
        }
    // Weyl: product of homogeneous elements is homogeneous of the sum degree
    WeylModel<RatRing> w(RatRing{});
    std::mt19937_64 rng(3);
    auto W = w.ball_window(4);
    auto classes = detail::degree_classes(w, W, false);
    for (int trial = 0; trial < 200; ++trial) {
        const auto& ca = classes[uniform_below(rng, classes.size())];
        const auto& cb = classes[uniform_below(rng, classes.size())];
        auto u = random_element(w, ca, ca.size(), rng);
        auto v = random_element(w, cb, cb.size(), rng);
        auto uv = re_mul(w, u, v);
        REQUIRE(!uv.is_zero()); // domain
        REQUIRE(is_homogeneous(w, uv));
        int expect = (ca[0].i - ca[0].j) + (cb[0].i - cb[0].j);
        REQUIRE(uv.terms[0].first.i - uv.terms[0].first.j == expect);
    }
}

TEST_CASE("ring axioms, exhaustive at small support over F2 and F3") {
    GroupRingModel<ZnGroup, FpRing> z2(ZnGroup(2), FpRing(2));
    check_ring_axioms(z2, small_support_elements(z2, z2.ball_window(1)));

    GroupRingModel<CyclicGroup, FpRing> c3(CyclicGroup(3), FpRing(3));
    check_ring_axioms(c3, small_support_elements(c3, c3.ball_window(1)));
}

TEST_CASE("ring axioms, randomized") {
    std::mt19937_64 rng(11);
    GroupRingModel<HeisenbergGroup, FpRing> h(HeisenbergGroup{}, FpRing(3));
    auto pool = h.ball_window(2);
    std::vector<RingElement<decltype(h)>> elems;
    for (int i = 0; i < 12; ++i) elems.push_back(random_element(h, pool, 3, rng));
    check_ring_axioms(h, elems);

    WeylModel<RatRing> w(RatRing{});
    auto wpool = w.ball_window(3);
    std::vector<RingElement<decltype(w)>> welems;
    for (int i = 0; i < 8; ++i) welems.push_back(random_element(w, wpool, 3, rng));
    check_ring_axioms(w, welems);

    auto q = make_quaternion_model(RatRing{});
    std::vector<RingElement<decltype(q)>> qelems;
    for (int i = 0; i < 10; ++i) qelems.push_back(random_element(q, q.ball_window(2), 4, rng));
    check_ring_axioms(q, qelems);
}

TEST_CASE("projection onto subrings") {
    GroupRingModel<ZnGroup, FpRing> z2(ZnGroup(2), FpRing(2));
    auto x = parse_element(z2, "1 + u + v");
    auto H = Subgroup<ZnGroup>::lattice(z2.backend(), {{1, 0, 0}});
    auto px = project(z2, x, H);
    REQUIRE(px == parse_element(z2, "1 + u"));
    REQUIRE(project(z2, x, Subgroup<ZnGroup>::whole()) == x);
    REQUIRE(project(z2, px, H) == px); // idempotent

    std::mt19937_64 rng(5);
    auto pool = z2.ball_window(2);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = random_element(z2, pool, 4, rng);
        auto b = random_element(z2, pool, 4, rng);
        // additive
        REQUIRE(project(z2, re_add(z2, a, b), H) ==
                re_add(z2, project(z2, a, H), project(z2, b, H)));
    }
}

TEST_CASE("projection is an R_H-bimodule map (pi_H(ab) = pi_H(a) b)") {
    GroupRingModel<KleinBottleGroup, FpRing> k(KleinBottleGroup{}, FpRing(2));
    auto H = Subgroup<KleinBottleGroup>::named("a");
    std::mt19937_64 rng(17);
    auto pool = k.ball_window(2);
    std::vector<KleinBottleGroup::Elt> hpool;
    for (const auto& g : pool)
        if (H.contains(k.backend(), g)) hpool.push_back(g);
    REQUIRE(hpool.size() >= 3);
    for (int trial = 0; trial < 300; ++trial) {
        auto a = random_element(k, pool, 4, rng);
        auto b = random_element(k, hpool, 3, rng); // b in R_H
        REQUIRE(project(k, re_mul(k, a, b), H) == re_mul(k, project(k, a, H), b));
        REQUIRE(project(k, re_mul(k, b, a), H) == re_mul(k, b, project(k, a, H)));
    }
}

TEST_CASE("gradation diagnostics") {
    GroupRingModel<FreeGroup, FpRing> f2(FreeGroup(2), FpRing(2));
    auto rep = gradation_diagnostics(f2, 2, 200, 1);
    REQUIRE(rep.fcr_violations == 0);
    REQUIRE(rep.nondeg_alarms == 0);
    REQUIRE(rep.pairs_checked > 0);

    WeylModel<RatRing> w(RatRing{});
    auto wrep = gradation_diagnostics(w, 3, 200, 1);
    REQUIRE(wrep.fcr_violations == 0);
    REQUIRE(wrep.nondeg_alarms == 0);

    // torsion control viewed with the trivial grading: (1+t)^2 = 0 must show
    GroupRingModel<CyclicGroup, FpRing> c2(CyclicGroup(2), FpRing(2));
    auto crep = gradation_diagnostics(c2, 2, 200, 1, /*trivial_view=*/true);
    REQUIRE(crep.exhaustive);
    REQUIRE(crep.fcr_violations > 0);
}

TEST_CASE("support_subgroup examples") {
    GroupRingModel<ZnGroup, FpRing> z2(ZnGroup(2), FpRing(2));
    auto x = parse_element(z2, "1 + u*v");
    auto info = support_subgroup(z2, x);
    REQUIRE(info.lattice.has_value());
    REQUIRE(info.lattice->rank() == 1); // <(1,1)>
    REQUIRE(info.lattice->contains({2, 2, 0}));

    auto zero_info = support_subgroup(z2, re_zero(z2));
    REQUIRE(zero_info.generators.empty());
    REQUIRE(zero_info.lattice->rank() == 0);

    auto y = re_add(z2, re_monomial(z2, {2, 0, 0}, 1), re_monomial(z2, {0, 3, 0}, 1));
    auto yinfo = support_subgroup(z2, y);
    REQUIRE(yinfo.lattice->rank() == 2);
    REQUIRE(yinfo.lattice->index() == 6);
}

TEST_CASE("delta probe verdicts") {
    HeisenbergGroup h;
    auto vz = delta_probe(h, h.central_z(), 3);
    REQUIRE(vz.verdict == DeltaMembership::member);
    REQUIRE(vz.conjugates_found == 1);

    auto vx = delta_probe(h, HeisenbergGroup::Elt{1, 0, 0}, 5);
    REQUIRE(vx.verdict == DeltaMembership::unknown_at_radius);
    REQUIRE(vx.conjugates_found >= 6); // conjugates x z^k

    ZnGroup z2(2);
    auto va = delta_probe(z2, ZnGroup::Elt{3, -1, 0}, 2);
    REQUIRE(va.verdict == DeltaMembership::member);

    KleinBottleGroup k;
    REQUIRE(delta_probe(k, KleinBottleGroup::Elt{2, 0}, 3).verdict == DeltaMembership::member);
    REQUIRE(delta_probe(k, KleinBottleGroup::Elt{0, 1}, 3).verdict ==
            DeltaMembership::unknown_at_radius);
}

TEST_CASE("is_central") {
    GroupRingModel<HeisenbergGroup, FpRing> h(HeisenbergGroup{}, FpRing(2));
    auto z = re_monomial(h, h.backend().central_z(), 1);
    auto x = re_add(h, re_one(h), re_add(h, z, re_mul(h, z, z)));
    REQUIRE(is_central(h, x)); // 1 + z + z^2
    REQUIRE(!is_central(h, parse_element(h, "x")));

    GroupRingModel<FreeGroup, FpRing> f2(FreeGroup(2), FpRing(2));
    REQUIRE(!is_central(f2, parse_element(f2, "a")));

    GroupRingModel<ZnGroup, FpRing> z2(ZnGroup(2), FpRing(3));
    std::mt19937_64 rng(2);
    for (int i = 0; i < 20; ++i)
        REQUIRE(is_central(z2, random_element(z2, z2.ball_window(2), 4, rng)));
}

TEST_CASE("coarsen splits into coset components") {
    GroupRingModel<KleinBottleGroup, FpRing> k(KleinBottleGroup{}, FpRing(2));
    auto N = Subgroup<KleinBottleGroup>::named("a");
    auto x = parse_element(k, "1 + a^2 + b^3");
    auto parts = coarsen(k, x, N);
    REQUIRE(parts.size() == 2);
    REQUIRE(parts[0].coset_degree == "0");
    REQUIRE(parts[0].part == parse_element(k, "1 + a^2"));
    REQUIRE(parts[1].coset_degree == "3");
    REQUIRE(parts[1].part == parse_element(k, "b^3"));
    // coset-e part equals the projection onto N
    REQUIRE(parts[0].part == project(k, x, N));

    GroupRingModel<ZnGroup, FpRing> z1(ZnGroup(1), FpRing(2));
    auto N2 = Subgroup<ZnGroup>::lattice(z1.backend(), {{2, 0, 0}});
    auto y = parse_element(z1, "1 + t + t^2");
    auto yparts = coarsen(z1, y, N2);
    REQUIRE(yparts.size() == 2);
    REQUIRE(yparts[0].part == parse_element(z1, "1 + t^2"));
    REQUIRE(yparts[1].part == parse_element(z1, "t"));
}

TEST_CASE("coarsen partition property on random elements") {
    GroupRingModel<KleinBottleGroup, FpRing> k(KleinBottleGroup{}, FpRing(3));
    auto N = Subgroup<KleinBottleGroup>::named("a");
    std::mt19937_64 rng(23);
    auto pool = k.ball_window(3);
    for (int trial = 0; trial < 200; ++trial) {
        auto x = random_element(k, pool, 6, rng);
        auto parts = coarsen(k, x, N);
        RingElement<decltype(k)> sum;
        for (const auto& p : parts) {
            REQUIRE(!p.part.is_zero());
            sum = re_add(k, sum, p.part);
            // each part lies in a single coset
            for (const auto& t : p.part.terms)
                REQUIRE(N.coset_rep(k.backend(), t.first) == p.coset_rep);
        }
        REQUIRE(sum == x);
    }
}

TEST_CASE("prime witness search") {
    GroupRingModel<ZnGroup, FpRing> z1(ZnGroup(1), FpRing(2));
    auto x = parse_element(z1, "1+t");
    auto w = prime_witness(z1, x, x, 2);
    REQUIRE(w.found);
    REQUIRE(w.witness == z1.backend().identity()); // (1+t)^2 = 1+t^2 != 0

    GroupRingModel<CyclicGroup, FpRing> c2(CyclicGroup(2), FpRing(2));
    auto xc = parse_element(c2, "1+t");
    auto wc = prime_witness(c2, xc, xc, 5);
    REQUIRE(!wc.found); // (1+t) r (1+t) = 0 for every r

    GroupRingModel<FreeGroup, FpRing> f2(FreeGroup(2), FpRing(2));
    std::mt19937_64 rng(9);
    auto pool = f2.ball_window(2);
    for (int i = 0; i < 50; ++i) {
        auto a = random_element(f2, pool, 4, rng);
        auto b = random_element(f2, pool, 4, rng);
        auto wf = prime_witness(f2, a, b, 1);
        REQUIRE(wf.found);
        REQUIRE(wf.witness == f2.backend().identity()); // group ring of a UP group is a domain
    }
}

TEST_CASE("reduced-ring idempotent identity (ur - uru)^2 = 0") {
    GroupRingModel<CyclicGroup, FpRing> c3(CyclicGroup(3), FpRing(2));
    auto u1 = parse_element(c3, "t + t^2");
    auto u2 = parse_element(c3, "1 + t + t^2");
    REQUIRE(re_mul(c3, u1, u1) == u1);
    REQUIRE(re_mul(c3, u2, u2) == u2);
    std::mt19937_64 rng(31);
    auto pool = c3.ball_window(2);
    for (const auto& u : {u1, u2})
        for (int i = 0; i < 100; ++i) {
            auto r = random_element(c3, pool, 3, rng, true);
            auto uru = re_mul(c3, re_mul(c3, u, r), u);
            auto lhs = re_sub(c3, re_mul(c3, u, r), uru);
            auto rhs = re_sub(c3, re_mul(c3, r, u), uru);
            REQUIRE(re_mul(c3, lhs, lhs).is_zero());
            REQUIRE(re_mul(c3, rhs, rhs).is_zero());
        }
}

TEST_CASE("expression parser examples and errors") {
    GroupRingModel<FreeGroup, FpRing> f2(FreeGroup(2), FpRing(2));
    auto x = parse_element(f2, "1 + a*b^-1");
    REQUIRE(x.support_size() == 2);

    GroupRingModel<ZnGroup, FpRing> z1(ZnGroup(1), FpRing(2));
    REQUIRE(parse_element(z1, "(1+t)^2") == parse_element(z1, "1 + t^2"));

    REQUIRE_THROWS_AS(parse_element(f2, "1 + q"), parse_error);
    REQUIRE_THROWS_AS(parse_element(f2, "a^"), parse_error);
    REQUIRE_THROWS_AS(parse_element(f2, "(1+a"), parse_error);
    REQUIRE_THROWS_AS(parse_element(z1, "t/2"), parse_error); // 2 = 0 in F2
    try {
        parse_element(f2, "1 + \n q");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        REQUIRE(e.line == 2);
        REQUIRE(e.column >= 1);
    }

    // scalar division over Q
    auto q = make_quaternion_model(RatRing{});
    auto y = parse_element(q, "(1-i)/2");
    REQUIRE(y.terms.size() == 2);
    REQUIRE(q.coeff().str(y.terms[0].second) == "1/2");
}

TEST_CASE("print/parse round trip on random elements") {
    std::mt19937_64 rng(41);
    GroupRingModel<HeisenbergGroup, FpRing> h(HeisenbergGroup{}, FpRing(5));
    auto pool = h.ball_window(3);
    for (int i = 0; i < 300; ++i) {
        auto x = random_element(h, pool, 5, rng, true);
        REQUIRE(parse_element(h, to_string(h, x)) == x);
    }
    GroupRingModel<ZnGroup, IntRing> z2(ZnGroup(2), IntRing{});
    auto zpool = z2.ball_window(3);
    for (int i = 0; i < 300; ++i) {
        auto x = random_element(z2, zpool, 5, rng, true);
        REQUIRE(parse_element(z2, to_string(z2, x)) == x);
    }
    WeylModel<RatRing> w(RatRing{});
    auto wpool = w.ball_window(4);
    for (int i = 0; i < 300; ++i) {
        auto x = random_element(w, wpool, 5, rng, true);
        REQUIRE(parse_element(w, to_string(w, x)) == x);
    }
}
