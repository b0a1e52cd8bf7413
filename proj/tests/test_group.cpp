#include <doctest.h>

#include <random>
#include <set>

#include "maniplex/fixtures.hpp"
#include "maniplex/group.hpp"

using namespace maniplex;
namespace fx = maniplex::fixtures;

namespace {

GroupElement e(int k) { return {1ull << (k - 1)}; }

std::set<std::uint64_t> as_set(const Group& g, const Subgroup& h) {
    std::set<std::uint64_t> s;
    for (GroupElement x : enumerate(g, h)) s.insert(x.value);
    return s;
}

std::set<std::uint64_t> coset_set(const Group& g, const Coset& c) {
    std::set<std::uint64_t> s;
    for (GroupElement x : enumerate(g, c.subgroup))
        s.insert((c.side == Side::Left ? g.mul(c.rep, x) : g.mul(x, c.rep)).value);
    return s;
}

Subgroup random_subgroup(const Group& g, std::mt19937& rng) {
    std::vector<GroupElement> gens;
    for (int k = static_cast<int>(rng() % 3); k > 0; --k) gens.push_back(g.element(rng() % g.order()));
    return closure(g, gens);
}

}  // namespace

TEST_CASE("closure") {
    const Group b4(BooleanGroup{4});
    CHECK(closure(b4, {}).size() == 1);
    CHECK(closure(b4, {e(1), e(2)}).size() == 4);
    const Group b3(BooleanGroup{3});
    CHECK(closure(b3, {e(1), b3.mul(e(1), e(2)), e(2)}).size() == 4);
    CHECK(trivial_subgroup(b3).size() == 1);
    const auto s4 = fx::symmetric_s4();
    CHECK(closure(s4.group, s4.gens).size() == 24);
    CHECK(closure(s4.group, {s4.gens[0], s4.gens[2]}).size() == 4);
}

TEST_CASE("boolean closure size is two to the rank") {
    const Group b(BooleanGroup{6});
    std::mt19937 rng(5);
    for (int t = 0; t < 200; ++t) {
        std::vector<GroupElement> gens;
        for (int k = static_cast<int>(rng() % 5); k > 0; --k) gens.push_back({rng() % 64});
        // rank by brute force: size of the span
        std::set<std::uint64_t> span{0};
        for (GroupElement x : gens) {
            std::set<std::uint64_t> next = span;
            for (auto y : span) next.insert(y ^ x.value);
            span = next;
        }
        CHECK(closure(b, gens).size() == span.size());
        for (GroupElement x : gens) CHECK(b.mul(x, x) == b.identity());
    }
}

TEST_CASE("coset intersections") {
    const Group b2(BooleanGroup{2});
    const Subgroup h = closure(b2, {e(1)}), k = closure(b2, {e(2)});
    const auto same = coset_intersect(b2, {b2.identity(), h}, {b2.identity(), h});
    REQUIRE(same);
    CHECK(subgroup_equal(same->subgroup, h));
    const auto axes = coset_intersect(b2, {b2.identity(), k}, {b2.identity(), h});
    REQUIRE(axes);
    CHECK(axes->subgroup.size() == 1);
    CHECK(canonical_rep(b2, *axes) == b2.identity());
    // e1 + <e2> = {e1, e1+e2} meets <e1> in e1 alone.
    const auto shifted = coset_intersect(b2, {e(1), k}, {b2.identity(), h});
    REQUIRE(shifted);
    CHECK(shifted->subgroup.size() == 1);
    CHECK(canonical_rep(b2, *shifted) == e(1));
    CHECK_FALSE(coset_intersect(b2, {e(1), k}, {b2.identity(), k}));
}

TEST_CASE("coset intersection agrees with enumeration") {
    std::mt19937 rng(17);
    const auto d4 = fx::dihedral_d4();
    const auto s4 = fx::symmetric_s4();
    const Group b4(BooleanGroup{4});
    for (const Group* g : {&b4, &d4.group, &s4.group}) {
        for (int t = 0; t < 150; ++t) {
            const Side side = (rng() & 1u) ? Side::Left : Side::Right;
            const Coset a{g->element(rng() % g->order()), random_subgroup(*g, rng), side};
            const Coset b{g->element(rng() % g->order()), random_subgroup(*g, rng), side};
            std::set<std::uint64_t> both;
            const auto sa = coset_set(*g, a), sb = coset_set(*g, b);
            for (auto x : sa)
                if (sb.count(x)) both.insert(x);
            const auto c = coset_intersect(*g, a, b);
            REQUIRE(c.has_value() == !both.empty());
            if (c) {
                CHECK(coset_set(*g, *c) == both);
                CHECK(c->side == side);
                CHECK(subgroup_equal(c->subgroup, intersect(*g, a.subgroup, b.subgroup)));
            }
        }
    }
}

TEST_CASE("subgroup equality") {
    const Group b3(BooleanGroup{3});
    const Subgroup a = closure(b3, {e(1), e(2)});
    CHECK(subgroup_equal(a, a));
    CHECK(subgroup_equal(a, closure(b3, {b3.mul(e(1), e(2)), e(2)})));
    CHECK_FALSE(subgroup_equal(closure(b3, {e(1)}), closure(b3, {e(2)})));
    CHECK(is_subgroup_of(b3, closure(b3, {e(1)}), a));
    CHECK_FALSE(is_subgroup_of(b3, closure(b3, {e(3)}), a));
}

TEST_CASE("conjugation and intersection in S4") {
    const auto s4 = fx::symmetric_s4();
    const Group& g = s4.group;
    const Subgroup h = closure(g, {s4.gens[0], s4.gens[1]});  // S3 on 0,1,2
    std::mt19937 rng(2);
    for (int t = 0; t < 30; ++t) {
        const GroupElement x = g.element(rng() % 24);
        const Subgroup c = conjugate(g, h, x);
        CHECK(c.size() == 6);
        std::set<std::uint64_t> expected;
        for (GroupElement y : enumerate(g, h)) expected.insert(g.mul(g.mul(x, y), g.inv(x)).value);
        CHECK(as_set(g, c) == expected);
        std::set<std::uint64_t> meet;
        const auto hs = as_set(g, h);
        for (auto y : expected)
            if (hs.count(y)) meet.insert(y);
        CHECK(as_set(g, intersect(g, h, c)) == meet);
    }
}

TEST_CASE("table group laws") {
    const auto s4 = fx::symmetric_s4();
    const Group& g = s4.group;
    REQUIRE(g.order() == 24);
    for (std::uint64_t a = 0; a < 24; ++a) {
        CHECK(g.mul(g.element(a), g.inv(g.element(a))) == g.identity());
        for (std::uint64_t b = 0; b < 24; ++b)
            for (std::uint64_t c = 0; c < 24; ++c) {
                const GroupElement x{a}, y{b}, z{c};
                CHECK(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)));
            }
    }
    CHECK(g.element_order(g.mul(s4.gens[0], s4.gens[1])) == 3);
    CHECK(g.pow(s4.gens[0], 2) == g.identity());
    CHECK_THROWS_AS(TableGroup({{0, 1}, {0, 1}}), InvalidArgument);
}

TEST_CASE("element text round trip") {
    const Group b3(BooleanGroup{3});
    CHECK(b3.to_string(e(1)) == "100");
    CHECK(b3.parse("011") == b3.mul(e(2), e(3)));
    CHECK_THROWS_AS(b3.parse("01"), InvalidArgument);
    CHECK_THROWS_AS(b3.parse("0a1"), InvalidArgument);
    const auto s4 = fx::symmetric_s4();
    for (std::uint64_t a = 0; a < 24; ++a) CHECK(s4.group.parse(s4.group.to_string({a})).value == a);
}

TEST_CASE("string C-group check") {
    const auto s4 = fx::symmetric_s4();
    CHECK(check_string_c_group(s4.group, s4.gens).ok);
    const auto d4 = fx::dihedral_d4();
    CHECK(check_string_c_group(d4.group, d4.gens).ok);

    const Group b3(BooleanGroup{3});
    CHECK(check_string_c_group(b3, {e(1), e(2), e(3)}).ok);

    const Verdict same = check_string_c_group(s4.group, {s4.gens[0], s4.gens[0], s4.gens[2]});
    CHECK_FALSE(same.ok);
    CHECK_FALSE(same.witness.empty());

    // (01) and (12) sit in the far slots, so rho_0 and rho_2 fail to commute.
    const Verdict far = check_string_c_group(s4.group, {s4.gens[0], s4.gens[2], s4.gens[1]});
    CHECK_FALSE(far.ok);
    CHECK(far.witness.find("commute") != std::string::npos);

    const Verdict not_inv = check_string_c_group(s4.group, {s4.group.mul(s4.gens[0], s4.gens[1]), s4.gens[1]});
    CHECK_FALSE(not_inv.ok);
    CHECK(not_inv.witness.find("involution") != std::string::npos);

    // Involutions that commute but do not generate B3.
    CHECK_FALSE(check_string_c_group(b3, {e(1), e(2)}).ok);
}
