#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "grlab/group/backend.hpp"
#include "grlab/group/cyclic.hpp"
#include "grlab/group/free.hpp"
#include "grlab/group/heisenberg.hpp"
#include "grlab/group/klein_bottle.hpp"
#include "grlab/group/lattice.hpp"
#include "grlab/group/promislow.hpp"
#include "grlab/group/subgroup.hpp"
#include "grlab/group/words.hpp"
#include "grlab/group/zn.hpp"

using namespace grlab;

namespace {

template <class G>
void check_axioms_on_ball(const G& g, int r) {
    auto B = ball(g, r);
    for (const auto& x : B) {
        REQUIRE(g.compose(x, g.identity()) == x);
        REQUIRE(g.compose(g.identity(), x) == x);
        REQUIRE(g.compose(x, g.inverse(x)) == g.identity());
        REQUIRE(g.compose(g.inverse(x), x) == g.identity());
    }
    for (const auto& x : B)
        for (const auto& y : B)
            for (const auto& z : B)
                REQUIRE(g.compose(g.compose(x, y), z) == g.compose(x, g.compose(y, z)));
}

template <class G>
void check_ball_properties(const G& g, int rmax) {
    std::size_t prev = 0;
    for (int r = 0; r <= rmax; ++r) {
        auto B = ball(g, r);
        auto seen = make_elt_set(g);
        for (const auto& e : B) REQUIRE(seen.insert(e).second); // no duplicates
        REQUIRE(B.size() >= prev);
        if (r > 0) {
            auto Bp = ball(g, r - 1);
            for (const auto& e : Bp) REQUIRE(seen.count(e) == 1); // monotone
        }
        prev = B.size();
    }
}

template <class G>
void check_format_roundtrip(const G& g, int r) {
    for (const auto& e : ball(g, r)) {
        auto back = parse_group_word(g, g.format(e));
        REQUIRE(back == e);
    }
}

} // namespace

TEST_CASE("ball sizes match hand counts") {
    REQUIRE(ball(ZnGroup(1), 1).size() == 3); // {t^-1, e, t}
    REQUIRE(ball(FreeGroup(2), 1).size() == 5);
    // diamond of l1-radius 2 in Z^2, counted directly
    ZnGroup z2(2);
    std::set<std::pair<std::int64_t, std::int64_t>> expect;
    for (std::int64_t i = -2; i <= 2; ++i)
        for (std::int64_t j = -2; j <= 2; ++j)
            if (std::llabs(i) + std::llabs(j) <= 2) expect.insert({i, j});
    auto B = ball(z2, 2);
    REQUIRE(B.size() == expect.size());
    REQUIRE(B.size() == 13);
    for (const auto& e : B) REQUIRE(expect.count({e[0], e[1]}) == 1);

    REQUIRE(ball(FreeGroup(2), 2).size() == 17);
    REQUIRE(ball(HeisenbergGroup{}, 2).size() == 17);
    REQUIRE(ball(KleinBottleGroup{}, 2).size() == 13);
    REQUIRE(ball(KleinFourGroup{}, 2).size() == 4);
}

TEST_CASE("group axioms hold exhaustively on ball(3)") {
    check_axioms_on_ball(ZnGroup(2), 3);
    check_axioms_on_ball(FreeGroup(2), 3);
    check_axioms_on_ball(HeisenbergGroup{}, 3);
    check_axioms_on_ball(KleinBottleGroup{}, 3);
    check_axioms_on_ball(PromislowGroup{}, 3);
    check_axioms_on_ball(CyclicGroup(6), 3);
    check_axioms_on_ball(KleinFourGroup{}, 3);
}

TEST_CASE("balls are duplicate-free and monotone") {
    check_ball_properties(ZnGroup(3), 3);
    check_ball_properties(FreeGroup(2), 4);
    check_ball_properties(HeisenbergGroup{}, 4);
    check_ball_properties(KleinBottleGroup{}, 4);
    check_ball_properties(PromislowGroup{}, 4);
    check_ball_properties(CyclicGroup(2), 4);
}

TEST_CASE("composition examples") {
    ZnGroup z2(2);
    REQUIRE(z2.compose({1, 0, 0}, {0, 1, 0}) == ZnGroup::Elt{1, 1, 0});

    FreeGroup f2(2);
    auto ab = parse_group_word(f2, "a*b");
    auto binv_a = parse_group_word(f2, "b^-1*a");
    REQUIRE(f2.compose(ab, binv_a) == parse_group_word(f2, "a^2"));

    KleinBottleGroup k;
    auto a = parse_group_word(k, "a");
    auto b = parse_group_word(k, "b");
    REQUIRE(k.compose(b, a) == parse_group_word(k, "a^-1*b"));
}

TEST_CASE("Heisenberg relations and conjugation") {
    HeisenbergGroup h;
    auto x = parse_group_word(h, "x");
    auto y = parse_group_word(h, "y");
    auto z = h.central_z();
    // z = x^-1 y^-1 x y
    auto comm = h.compose(h.compose(h.inverse(x), h.inverse(y)), h.compose(x, y));
    REQUIRE(comm == z);
    for (const auto& s : ball(h, 3)) REQUIRE(conjugated(h, z, s) == z);
    REQUIRE(conjugated(h, x, y) == h.compose(x, z));
    // conjugation is an automorphism on ball(2) samples
    auto B = ball(h, 2);
    for (const auto& s : ball(h, 1))
        for (const auto& g1 : B)
            for (const auto& g2 : B)
                REQUIRE(conjugated(h, h.compose(g1, g2), s) ==
                        h.compose(conjugated(h, g1, s), conjugated(h, g2, s)));
}

TEST_CASE("abelian conjugation is trivial") {
    ZnGroup z2(2);
    for (const auto& g : ball(z2, 2))
        for (const auto& s : ball(z2, 2)) REQUIRE(conjugated(z2, g, s) == g);
}

TEST_CASE("Promislow defining relations hold in the affine model") {
    PromislowGroup p;
    auto a = generator_by_letter(p, 'a').value();
    auto b = generator_by_letter(p, 'b').value();
    auto b2 = p.compose(b, b);
    auto a2 = p.compose(a, a);
    // a b^2 a^-1 = b^-2
    REQUIRE(p.compose(p.compose(a, b2), p.inverse(a)) == p.inverse(b2));
    // b a^2 b^-1 = a^-2
    REQUIRE(p.compose(p.compose(b, a2), p.inverse(b)) == p.inverse(a2));
    // a^2, b^2, (ab)^2 are the expected lattice translations
    REQUIRE(a2 == PromislowGroup::Elt{0, {2, 0, 0}});
    REQUIRE(b2 == PromislowGroup::Elt{0, {0, 2, 0}});
    auto abab = p.compose(p.compose(a, b), p.compose(a, b));
    REQUIRE(abab == PromislowGroup::Elt{0, {0, 0, -2}});
}

TEST_CASE("Promislow torsion spot check on ball(6)") {
    PromislowGroup p;
    auto B = ball(p, 6);
    REQUIRE(B.size() > 100);
    for (const auto& g : B) {
        if (g == p.identity()) continue;
        auto g2 = p.compose(g, g);
        REQUIRE(!(g2 == p.identity()));
        REQUIRE(!(p.compose(g2, g) == p.identity()));
        REQUIRE(!(p.compose(g2, g2) == p.identity()));
    }
}

TEST_CASE("Klein bottle <a> is normal") {
    KleinBottleGroup k;
    auto H = Subgroup<KleinBottleGroup>::named("a");
    for (int m = -3; m <= 3; ++m) {
        KleinBottleGroup::Elt am{m, 0};
        REQUIRE(H.contains(k, am));
        for (const auto& s : ball(k, 3)) REQUIRE(H.contains(k, conjugated(k, am, s)));
    }
}

TEST_CASE("cyclic control groups have full torsion") {
    CyclicGroup c6(6);
    for (const auto& g : ball(c6, 6)) REQUIRE(power(c6, g, 6) == c6.identity());
    KleinFourGroup v4;
    for (const auto& g : ball(v4, 2)) REQUIRE(v4.compose(g, g) == v4.identity());
}

TEST_CASE("subgroup membership examples") {
    ZnGroup z2(2);
    auto H = Subgroup<ZnGroup>::cyclic(z2, ZnGroup::Elt{2, 0, 0});
    REQUIRE(H.contains(z2, {4, 0, 0}));
    REQUIRE(!H.contains(z2, {3, 0, 0}));
    REQUIRE(H.contains(z2, z2.identity()));

    HeisenbergGroup h;
    auto Z = Subgroup<HeisenbergGroup>::center();
    REQUIRE(Z.contains(h, power(h, h.central_z(), 3)));
    REQUIRE(!Z.contains(h, parse_group_word(h, "x")));

    KleinBottleGroup k;
    auto A = Subgroup<KleinBottleGroup>::named("a");
    REQUIRE(A.contains(k, parse_group_word(k, "a^5")));
    REQUIRE(!A.contains(k, parse_group_word(k, "a*b")));

    FreeGroup f2(2);
    auto C = Subgroup<FreeGroup>::cyclic(f2, parse_group_word(f2, "a*b"));
    REQUIRE(C.contains(f2, parse_group_word(f2, "(a*b)^3")));
    REQUIRE(C.contains(f2, parse_group_word(f2, "(a*b)^-2")));
    REQUIRE(!C.contains(f2, parse_group_word(f2, "a^2*b")));

    PromislowGroup p;
    auto a = generator_by_letter(p, 'a').value();
    auto Pa = Subgroup<PromislowGroup>::cyclic(p, a);
    REQUIRE(Pa.contains(p, power(p, a, 7)));
    REQUIRE(Pa.contains(p, power(p, a, -4)));
    REQUIRE(!Pa.contains(p, generator_by_letter(p, 'b').value()));

    CyclicGroup c6(6);
    auto C2 = Subgroup<CyclicGroup>::cyclic(c6, CyclicGroup::Elt{2});
    REQUIRE(C2.contains(c6, 4));
    REQUIRE(!C2.contains(c6, 3));
}

TEST_CASE("subgroup membership is closed under compose and invert") {
    HeisenbergGroup h;
    auto Z = Subgroup<HeisenbergGroup>::center();
    std::vector<HeisenbergGroup::Elt> members;
    for (const auto& g : ball(h, 4))
        if (Z.contains(h, g)) members.push_back(g);
    REQUIRE(members.size() > 1);
    for (const auto& x : members)
        for (const auto& y : members) {
            REQUIRE(Z.contains(h, h.compose(x, y)));
            REQUIRE(Z.contains(h, h.inverse(x)));
        }
}

TEST_CASE("lattice HNF rank, index and cosets") {
    auto L = ZLattice::from_generators(2, {{2, 0, 0}, {0, 3, 0}});
    REQUIRE(L.rank() == 2);
    REQUIRE(L.index() == 6);
    REQUIRE(L.contains({2, 3, 0}));
    REQUIRE(!L.contains({1, 0, 0}));

    auto L1 = ZLattice::from_generators(2, {{1, 1, 0}});
    REQUIRE(L1.rank() == 1);
    REQUIRE(L1.index() == 0);
    REQUIRE(L1.contains({3, 3, 0}));
    REQUIRE(!L1.contains({1, 0, 0}));

    // canonical residues of Z^2 / <(2,0),(0,3)>: exactly 6 distinct
    std::set<std::array<std::int64_t, 3>> reps;
    for (std::int64_t i = -6; i <= 6; ++i)
        for (std::int64_t j = -6; j <= 6; ++j) reps.insert(L.reduce({i, j, 0}));
    REQUIRE(reps.size() == 6);

    // same representative iff difference is a member
    ZLattice L2 = ZLattice::from_generators(2, {{2, 1, 0}, {0, 2, 0}});
    for (std::int64_t i = -3; i <= 3; ++i)
        for (std::int64_t j = -3; j <= 3; ++j)
            for (std::int64_t k = -3; k <= 3; ++k)
                for (std::int64_t l = -3; l <= 3; ++l) {
                    bool same = L2.reduce({i, j, 0}) == L2.reduce({k, l, 0});
                    bool diff = L2.contains({i - k, j - l, 0});
                    REQUIRE(same == diff);
                }
}

TEST_CASE("word parsing and canonical formatting round-trip") {
    check_format_roundtrip(ZnGroup(1), 3);
    check_format_roundtrip(ZnGroup(2), 3);
    check_format_roundtrip(ZnGroup(3), 2);
    check_format_roundtrip(FreeGroup(2), 4);
    check_format_roundtrip(HeisenbergGroup{}, 4);
    check_format_roundtrip(KleinBottleGroup{}, 4);
    check_format_roundtrip(PromislowGroup{}, 4);
    check_format_roundtrip(CyclicGroup(6), 3);
    check_format_roundtrip(KleinFourGroup{}, 2);
}

TEST_CASE("word parser details") {
    FreeGroup f2(2);
    REQUIRE(parse_group_word(f2, "a^2 b^-1") == parse_group_word(f2, "a*a*b^-1"));
    REQUIRE(parse_group_word(f2, "e") == f2.identity());
    REQUIRE_THROWS_AS(parse_group_word(f2, "q"), parse_error);
    REQUIRE_THROWS_AS(parse_group_word(f2, "a^"), parse_error);
    REQUIRE_THROWS_AS(parse_group_word(f2, ""), parse_error);

    ZnGroup z2(2);
    REQUIRE(parse_group_word(z2, "(1,-2)") == ZnGroup::Elt{1, -2, 0});
    REQUIRE(parse_group_word(z2, "u*v^-2") == ZnGroup::Elt{1, -2, 0});
    auto set = parse_group_set(z2, "(0,0),(1,0)");
    REQUIRE(set.size() == 2);

    PromislowGroup p;
    auto a = generator_by_letter(p, 'a').value();
    REQUIRE(parse_group_word(p, "p[a:1/2:1/2:0]") == a);
    REQUIRE_THROWS_AS(parse_group_word(p, "p[a:1:0:0]"), parse_error); // parity violation

    KleinFourGroup v4;
    REQUIRE(parse_group_word(v4, "i*j") == KleinFourGroup::Elt{3});
    REQUIRE(parse_group_word(v4, "k") == KleinFourGroup::Elt{3});
}

TEST_CASE("cyclic membership agrees with brute-force powers") {
    FreeGroup f2(2);
    auto gs = std::vector<std::string>{"a", "a*b", "a*b*a^-1", "b^2"};
    for (const auto& gw : gs) {
        auto g = parse_group_word(f2, gw);
        auto members = make_elt_set(f2);
        for (int k = -6; k <= 6; ++k) members.insert(power(f2, g, k));
        for (const auto& h : ball(f2, 4)) {
            bool expect = members.count(h) > 0;
            // brute-force set only covers |k|<=6; elements of ball(4) that are
            // higher powers of short g would be missed, so only check one way
            if (expect) REQUIRE(cyclic_contains(f2, g, h));
        }
    }
    HeisenbergGroup h;
    for (const auto& g : ball(h, 2)) {
        auto members = make_elt_set(h);
        for (int k = -8; k <= 8; ++k) members.insert(power(h, g, k));
        for (const auto& x : ball(h, 3)) {
            bool expect = members.count(x) > 0;
            if (g == h.identity()) {
                REQUIRE(cyclic_contains(h, g, x) == (x == h.identity()));
            } else if (expect) {
                REQUIRE(cyclic_contains(h, g, x));
            }
        }
    }
}
