#include <doctest.h>

#include <cstdlib>
#include <set>

#include "maniplex/caterpillar.hpp"
#include "maniplex/symmetry.hpp"
#include "oracles.hpp"

using namespace maniplex;

namespace {

std::vector<CaterpillarWord> valid_words(int rank, int max_len) {
    std::vector<CaterpillarWord> out;
    for (auto& w : oracle::all_words(rank, max_len)) {
        CaterpillarWord cw{rank, w};
        if (cw.validate()) out.push_back(cw);
    }
    return out;
}

std::vector<Color> semi_edge_colors(const Premaniplex& x, VertexId v) {
    std::vector<Color> out;
    for (Color c = 0; c < x.rank(); ++c)
        if (x.step(v, c) == v) out.push_back(c);
    return out;
}

}  // namespace

TEST_CASE("caterpillar words") {
    CHECK(CaterpillarWord::parse(3, "0,1,2").word == std::vector<Color>{0, 1, 2});
    CHECK(CaterpillarWord::parse(3, "").length() == 0);
    CHECK(CaterpillarWord{3, {0, 1, 0}}.to_string() == "0,1,0");
    CHECK_THROWS_AS(CaterpillarWord::parse(3, "0,x"), InvalidArgument);
    CHECK_FALSE(CaterpillarWord{3, {0, 2}}.validate().ok);
    CHECK_FALSE(CaterpillarWord{3, {0, 3}}.validate().ok);
    CHECK_FALSE(CaterpillarWord{3, {1, 1}}.validate().ok);
    CHECK(CaterpillarWord{3, {2, 1, 0, 1}}.validate().ok);
}

TEST_CASE("caterpillar premaniplexes") {
    const Premaniplex single = caterpillar_to_premaniplex({3, {}});
    CHECK(single.size() == 1);
    CHECK(semi_edge_colors(single, 0) == std::vector<Color>{0, 1, 2});

    const Premaniplex x = caterpillar_to_premaniplex({3, {0, 1}});
    CHECK(x.size() == 3);
    CHECK(semi_edge_colors(x, 0) == std::vector<Color>{1, 2});
    CHECK(semi_edge_colors(x, 1) == std::vector<Color>{2});
    CHECK(semi_edge_colors(x, 2) == std::vector<Color>{0, 2});
    CHECK(x.step(0, 0) == 1);
    CHECK(x.step(1, 1) == 2);

    CHECK_THROWS_AS(caterpillar_to_premaniplex({3, {0, 2}}), InvalidArgument);

    for (const auto& cw : valid_words(4, 4)) {
        const Premaniplex y = caterpillar_to_premaniplex(cw);
        CHECK(y.size() == cw.length() + 1);
        CHECK(spanning_forest(y.graph()).size() == cw.length());
    }
}

TEST_CASE("boolean voltages") {
    const VoltageAssignment empty = boolean_voltages({3, {}});
    CHECK(empty.group().boolean_dim() == 3);

    const CaterpillarWord cw{3, {0, 1}};
    const VoltageAssignment va = boolean_voltages(cw);
    CHECK(boolean_dimension(cw) == 4);
    const Premaniplex& x = va.base();
    auto volt = [&](VertexId v, Color c) { return va.volt(x.dart(v, c)).value; };
    CHECK(volt(0, 1) == 1);
    CHECK(volt(0, 2) == 2);
    CHECK(volt(1, 2) == 2);
    CHECK(volt(2, 0) == 4);
    CHECK(volt(2, 2) == 8);
    CHECK(volt(0, 0) == 0);  // link
    CHECK(va.tree_normalized());

    const VoltageAssignment folded = boolean_voltages({3, {0, 1, 0}});
    CHECK(check_polytopal_voltage(folded).verdict.ok);
    CHECK(wpip_check(Premaniplex(derived_graph(folded))).ok);
}

TEST_CASE("voltage rule matches the delta rule") {
    for (int rank : {3, 4, 5})
        for (const auto& cw : valid_words(rank, 4)) {
            CAPTURE(cw.to_string());
            int dim = 0;
            const auto ids = oracle::delta_rule_generators(cw, dim);
            const VoltageAssignment va = boolean_voltages(cw);
            CHECK(va.group().boolean_dim() == dim);
            for (VertexId i = 0; i < va.base().size(); ++i)
                for (Color j = 0; j < rank; ++j) {
                    const std::uint64_t v = va.volt(va.base().dart(i, j)).value;
                    if (ids[i][j] < 0)
                        CHECK(v == 0);
                    else
                        CHECK(v == (1ull << ids[i][j]));
                }
        }
}

TEST_CASE("adjacent generators and betweenness") {
    for (int rank : {3, 4})
        for (const auto& cw : valid_words(rank, 5)) {
            CAPTURE(cw.to_string());
            const VoltageAssignment va = boolean_voltages(cw);
            const Premaniplex& x = va.base();
            CHECK(check_derived_maniplex(va).ok());
            auto semi = [&](VertexId v, Color c) { return x.step(v, c) == v; };
            auto volt = [&](VertexId v, Color c) { return va.volt(x.dart(v, c)).value; };
            for (VertexId i = 1; i < x.size(); ++i) {
                const Color ci = cw.word[i - 1];
                for (Color s = 0; s < rank; ++s)
                    for (Color r = 0; r < rank; ++r) {
                        if (!semi(i, s) || !semi(i - 1, r)) continue;
                        const bool same = volt(i, s) == volt(i - 1, r);
                        CHECK(same == (r == s && std::abs(r - ci) != 1));
                    }
            }
            // Equal voltages at x_i and x_j appear at every vertex in between.
            for (VertexId i = 0; i < x.size(); ++i)
                for (VertexId j = i + 2; j < x.size(); ++j)
                    for (Color a = 0; a < rank; ++a)
                        for (Color b = 0; b < rank; ++b) {
                            if (!semi(i, a) || !semi(j, b) || volt(i, a) != volt(j, b)) continue;
                            for (VertexId l = i + 1; l < j; ++l) {
                                bool present = false;
                                for (Color c = 0; c < rank; ++c) present = present || (semi(l, c) && volt(l, c) == volt(i, a));
                                CHECK(present);
                            }
                        }
        }
}

TEST_CASE("foldings") {
    CHECK(enumerate_foldings({3, {}}).empty());

    const CaterpillarWord sym{3, {0, 1, 0}};
    const auto folds = enumerate_foldings(sym);
    const FoldingReport* r1 = nullptr;
    for (const auto& f : folds)
        if (f.r == 1) r1 = &f;
    REQUIRE(r1);
    CHECK(r1->quotient_word == std::vector<Color>{0});
    CHECK(r1->pattern_case == 1);
    CHECK(r1->a == std::vector<Color>{1});
    CHECK(r1->vertex_map == std::vector<VertexId>{0, 1, 1, 0});
    const Premaniplex q = folding_quotient(sym, *r1);
    CHECK(q.size() == 2);
    CHECK(premaniplex_homomorphism(caterpillar_to_premaniplex(sym), q, 0, 0));

    for (const auto& f : enumerate_foldings({3, {0, 1}})) CHECK(folding_quotient({3, {0, 1}}, f).size() == 1);
}

TEST_CASE("foldings are exactly the quotients") {
    for (int rank : {3, 4})
        for (const auto& cw : valid_words(rank, 3)) {
            CAPTURE(cw.to_string());
            const Premaniplex x = caterpillar_to_premaniplex(cw);
            std::set<std::vector<std::uint32_t>> ours;
            for (const auto& f : enumerate_foldings(cw)) {
                const Premaniplex q = folding_quotient(cw, f);
                // i = j mod 2r+2 and i = -j-1 mod 2r+2 share an image.
                const std::size_t p = 2 * static_cast<std::size_t>(f.r) + 2;
                for (std::size_t i = 0; i < x.size(); ++i)
                    for (std::size_t j = 0; j < x.size(); ++j)
                        if ((i % p) == (j % p) || (i + j + 1) % p == 0) CHECK(f.vertex_map[i] == f.vertex_map[j]);
                ours.insert(oracle::canonical_form(q));
            }
            CHECK(ours == oracle::quotient_forms(x));
        }
}

TEST_CASE("classification") {
    const CaterpillarClass sym = classify_caterpillar({3, {0, 1, 0}});
    CHECK(sym.symmetric);

    const CaterpillarClass plain = classify_caterpillar({3, {0, 1}});
    CHECK_FALSE(plain.symmetric);
    CHECK_FALSE(plain.case3);
    CHECK_FALSE(plain.case4);
    CHECK(plain.boolean_stg);

    const CaterpillarClass odd = classify_caterpillar({3, {1, 0, 1}});
    CHECK(odd.symmetric);

    for (int rank : {3, 4})
        for (const auto& cw : valid_words(rank, 4)) {
            CAPTURE(cw.to_string());
            const CaterpillarClass c = classify_caterpillar(cw);
            CHECK((c.symmetric || c.boolean_stg || c.case3 || c.case4));
            const std::vector<Color> rev(cw.word.rbegin(), cw.word.rend());
            // The one-vertex caterpillar has no reversal to speak of; it counts as its own STG.
            CHECK(c.symmetric == (!cw.word.empty() && rev == cw.word));
            if (c.case3 || c.case4) {
                REQUIRE(c.match);
                CHECK(c.match->r >= 1);
            }
        }
}

TEST_CASE("case two words have the caterpillar as symmetry type graph") {
    for (const auto& cw : valid_words(3, 3)) {
        CAPTURE(cw.to_string());
        const CaterpillarClass c = classify_caterpillar(cw);
        const CaterpillarBuild b = caterpillar_pipeline(cw);
        if (c.symmetric && cw.length() > 0) CHECK(b.report.orbits < cw.length() + 1);
        if (!c.boolean_stg) continue;
        CHECK(b.report.stg_is_caterpillar);
        CHECK(b.report.orbits == cw.length() + 1);
        CHECK(b.report.aut_boolean);
    }
}

TEST_CASE("k-orbit words") {
    CHECK(generate_korbit_word(3, 3).word == std::vector<Color>{0, 1});
    CHECK(generate_korbit_word(3, 4).word == std::vector<Color>{0, 1, 2});
    CHECK(generate_korbit_word(3, 6).word == std::vector<Color>{0, 1, 2, 1, 2});
    CHECK(generate_korbit_word(4, 3).word == std::vector<Color>{0, 1});
    CHECK(generate_korbit_word(5, 5).rank == 5);
    CHECK_THROWS_AS(generate_korbit_word(2, 3), InvalidArgument);
    CHECK_THROWS_AS(generate_korbit_word(3, 2), InvalidArgument);
    for (int n = 3; n <= 5; ++n)
        for (int k = 3; k <= 8; ++k) {
            const CaterpillarWord cw = generate_korbit_word(n, k);
            CHECK(cw.validate().ok);
            CHECK(cw.length() == static_cast<std::size_t>(k - 1));
            const CaterpillarClass c = classify_caterpillar(cw);
            CHECK(c.boolean_stg);
            CHECK_FALSE(c.symmetric);
        }
}

TEST_CASE("k-orbit polytopes") {
    const CaterpillarBuild b = build_korbit_polytope(3, 3);
    CHECK(b.report.flags == 48);
    CHECK(b.report.aut_order == 16);
    CHECK(b.report.aut_boolean);
    CHECK(b.report.orbits == 3);
    CHECK(b.report.stg_is_caterpillar);
    CHECK(polytopality(b.poset).is_polytope());

    const CaterpillarBuild four = build_korbit_polytope(3, 4);
    CHECK(four.report.orbits == 4);
    CHECK(four.report.aut_boolean);
    const CaterpillarBuild rank4 = build_korbit_polytope(4, 3);
    CHECK(rank4.report.orbits == 3);
    CHECK(rank4.poset.rank() == 4);

    // The full group of a Boolean polytope: every element squares to the identity.
    const auto aut = automorphism_group(b.maniplex);
    for (const auto& a : aut) CHECK(compose(a, a) == aut.front());
    CHECK_THROWS_AS(build_korbit_polytope(3, 4, 10), SizeLimitError);
}
