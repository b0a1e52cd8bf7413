#include <doctest.h>

#include <random>

#include "maniplex/fixtures.hpp"
#include "maniplex/symmetry.hpp"
#include "oracles.hpp"

using namespace maniplex;
namespace fx = maniplex::fixtures;

namespace {

RankedPoset chain(int n) {
    std::vector<int> ranks;
    std::vector<std::pair<FaceId, FaceId>> covers;
    for (int r = -1; r <= n; ++r) ranks.push_back(r);
    for (FaceId f = 0; f + 1 < ranks.size(); ++f) covers.emplace_back(f, f + 1);
    return RankedPoset(n, ranks, covers);
}

}  // namespace

TEST_CASE("poset construction") {
    CHECK_THROWS_AS(RankedPoset(1, {-1, 1}, {{0, 1}}), InvalidArgument);  // cover skips a rank
    const RankedPoset t = fx::tetrahedron();
    CHECK(t.num_faces() == 16);
    CHECK(t.faces_of_rank(1).size() == 6);
    CHECK(t.leq(*t.find("least"), *t.find("greatest")));
    CHECK_FALSE(t.leq(*t.find("0"), *t.find("1")));
    CHECK(t.covers_pair(*t.find("0"), *t.find("0,1")));
    CHECK_FALSE(t.find("nope"));
}

TEST_CASE("bounds are synthesized") {
    const RankedPoset t = fx::triangle();
    std::vector<int> ranks;
    std::vector<std::string> names;
    std::vector<std::pair<FaceId, FaceId>> covers;
    std::vector<FaceId> keep;
    for (FaceId f = 0; f < t.num_faces(); ++f)
        if (t.face_rank(f) >= 0 && t.face_rank(f) < 2) keep.push_back(f);
    for (FaceId f : keep) {
        ranks.push_back(t.face_rank(f));
        names.push_back(t.name(f));
    }
    for (auto [a, b] : t.covers()) {
        auto ia = std::find(keep.begin(), keep.end(), a), ib = std::find(keep.begin(), keep.end(), b);
        if (ia != keep.end() && ib != keep.end())
            covers.emplace_back(static_cast<FaceId>(ia - keep.begin()), static_cast<FaceId>(ib - keep.begin()));
    }
    const RankedPoset bounded = with_bounds(RankedPoset(2, ranks, covers, names));
    CHECK(bounded.num_faces() == t.num_faces());
    CHECK(poset_isomorphic(bounded, t));
}

TEST_CASE("flagged") {
    CHECK(check_flagged(fx::ej_hasse()).ok);
    CHECK(check_flagged(chain(3)).ok);
    CHECK(check_flagged(fx::cube()).ok);

    // Two maximal elements: the triangle without its greatest face.
    const RankedPoset t = fx::triangle();
    std::vector<int> ranks;
    std::vector<std::pair<FaceId, FaceId>> covers;
    const FaceId top = *t.find("greatest");
    for (FaceId f = 0; f < t.num_faces(); ++f) ranks.push_back(f == top ? 1 : t.face_rank(f));
    for (auto [a, b] : t.covers())
        if (b != top) covers.emplace_back(a, b);
    const Verdict two = check_flagged(RankedPoset(2, ranks, covers));
    CHECK_FALSE(two.ok);
    CHECK_FALSE(two.witness.empty());

    CHECK_FALSE(check_flagged(fx::simplex_with_extra_vertex()).ok);
    CHECK_THROWS_AS(check_flagged(RankedPoset()), InvalidArgument);
}

TEST_CASE("diamond") {
    const RankedPoset ej = fx::ej_hasse();
    const Verdict v = check_diamond(ej);
    CHECK_FALSE(v.ok);
    CHECK(v.witness.find("{1,2,3}") != std::string::npos);
    // {3} < {1,2,3} fails too; only {2,3} lies between.
    CHECK(section_middle(ej, *ej.find("{3}"), *ej.find("{1,2,3}")).size() == 1);

    CHECK(check_diamond(fx::tetrahedron()).ok);
    CHECK(check_diamond(fx::glued_cubes()).ok);
    CHECK(check_diamond(fx::identified_cube()).ok);
    CHECK_THROWS_AS(check_diamond(fx::simplex_with_extra_vertex()), PreconditionError);
}

TEST_CASE("strong flag connectedness") {
    CHECK(check_strong_connectedness(fx::tetrahedron()).ok);
    CHECK(check_strong_connectedness(fx::prism()).ok);

    const RankedPoset glued = fx::glued_cubes();
    const Verdict g = check_strong_connectedness(glued);
    CHECK_FALSE(g.ok);
    // Both witness flags pass through the shared vertex.
    CHECK(g.witness.find("[0 < 0,1") != std::string::npos);
    CHECK(g.witness.find("[0 < 0,8") != std::string::npos);
    CHECK(check_strong_connectedness(glued, Execution::Serial).witness == g.witness);

    const Verdict id = check_strong_connectedness(fx::identified_cube());
    CHECK_FALSE(id.ok);
    // Both flags use the identified vertex but then leave it through different cube edges.
    const auto first = id.witness.find("[0=7 < ");
    REQUIRE(first != std::string::npos);
    CHECK(id.witness.find("[0=7 < ", first + 1) != std::string::npos);
    CHECK_THROWS_AS(check_strong_connectedness(fx::ej_hasse()), PreconditionError);

    const PolytopalityReport glued_report = polytopality(glued);
    CHECK(glued_report.diamond.ok);
    CHECK_FALSE(glued_report.flag_graph_connected);  // flag graph splits at the glued vertex
    CHECK(polytopality(fx::identified_cube()).flag_graph_connected);
}

TEST_CASE("flag graphs") {
    const FlagGraph tri = flag_graph(fx::triangle());
    CHECK(tri.graph.num_vertices() == 6);
    const Premaniplex hexagon(tri.graph);
    for (VertexId v = 0; v < 6; ++v) {
        CHECK(hexagon.step(v, 0) != v);
        CHECK(monodromy_apply(hexagon, v, {0, 1, 0, 1, 0, 1}) == v);
        CHECK(monodromy_apply(hexagon, v, {0, 1}) != v);
    }

    const FlagGraph tetra = flag_graph(fx::tetrahedron());
    CHECK(tetra.graph.num_vertices() == 24);
    CHECK(tetra.graph.num_darts() == 72);
    CHECK(is_maniplex(tetra.graph).ok);

    const FlagGraph prism = flag_graph(fx::prism());
    CHECK(prism.graph.num_vertices() == 2 * 6 + 3 * 8);
    // i-adjacent flags differ exactly at rank i.
    for (DartId d = 0; d < prism.graph.num_darts(); ++d) {
        const Flag& a = prism.flags[prism.graph.initial(d)];
        const Flag& b = prism.flags[prism.graph.terminal(d)];
        for (std::size_t r = 0; r < a.size(); ++r)
            CHECK((a[r] != b[r]) == (static_cast<int>(r) - 1 == prism.graph.color(d)));
    }
    CHECK(enumerate_flags(fx::cube()).size() == 48);
}

TEST_CASE("round trip through the flag graph") {
    for (const auto& [name, p] : fx::poset_fixtures()) {
        CAPTURE(name);
        if (!polytopality(p).is_polytope()) continue;
        const Premaniplex m(flag_graph(p).graph);
        const RankedPoset back = poset_from_maniplex(m).poset;
        const auto iso = poset_isomorphism(back, p);
        REQUIRE(iso);
        CHECK(check_poset_isomorphism(back, p, *iso).ok);
        CHECK(automorphism_group(m).size() == oracle::poset_automorphism_count(p));
    }
}

TEST_CASE("dual posets") {
    const RankedPoset t = fx::tetrahedron();
    CHECK(poset_isomorphic(dual_poset(t), t));
    const RankedPoset prism = fx::prism();
    const RankedPoset d = dual_poset(prism);
    CHECK(d.faces_of_rank(0).size() == 5);
    CHECK(d.faces_of_rank(2).size() == 6);
    CHECK_FALSE(poset_isomorphic(d, prism));
    for (const auto& [name, p] : fx::poset_fixtures()) {
        CAPTURE(name);
        if (!check_flagged(p).ok) continue;
        const RankedPoset dd = dual_poset(dual_poset(p));
        CHECK(dd.num_faces() == p.num_faces());
        CHECK(oracle::poset_automorphism_count(dual_poset(p)) == oracle::poset_automorphism_count(p));
        if (check_diamond(p).ok) CHECK(poset_isomorphic(dd, p));
    }
    CHECK_FALSE(poset_isomorphic(dual_poset(fx::cube()), fx::cube()));
}

TEST_CASE("poset isomorphism") {
    const RankedPoset t = fx::tetrahedron();
    const auto self = poset_isomorphism(t, t);
    REQUIRE(self);
    CHECK(check_poset_isomorphism(t, t, *self).ok);
    CHECK(poset_isomorphic(t, dual_poset(t)));
    CHECK_FALSE(poset_isomorphism(t, fx::prism()));
    CHECK_FALSE(poset_isomorphic(fx::cube(), fx::prism()));

    // A map that swaps two vertices without touching their edges is rejected.
    std::vector<FaceId> bad(t.num_faces());
    for (FaceId f = 0; f < t.num_faces(); ++f) bad[f] = f;
    std::swap(bad[*t.find("0")], bad[*t.find("1")]);
    CHECK_FALSE(check_poset_isomorphism(t, t, bad).ok);
}

TEST_CASE("serial and parallel polytopality agree") {
    for (const auto& [name, p] : fx::poset_fixtures()) {
        CAPTURE(name);
        const PolytopalityReport a = polytopality(p, Execution::Serial);
        const PolytopalityReport b = polytopality(p, Execution::Parallel);
        CHECK(a.is_polytope() == b.is_polytope());
        CHECK(a.flagged.witness == b.flagged.witness);
        CHECK(a.diamond.witness == b.diamond.witness);
        CHECK(a.strongly_connected.witness == b.strongly_connected.witness);
    }
}
