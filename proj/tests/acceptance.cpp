// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>

#include "maniplex/caterpillar.hpp"
#include "maniplex/coset_geometry.hpp"
#include "maniplex/fixtures.hpp"
#include "maniplex/symmetry.hpp"
#include "oracles.hpp"

using namespace maniplex;
namespace fx = maniplex::fixtures;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Poset route of polytopality for a maniplex: P(M) is a polytope and its flag graph is M.
bool poset_route(const Premaniplex& m) {
    const RankedPoset p = poset_from_maniplex(m).poset;
    if (!polytopality(p).is_polytope()) return false;
    const FlagGraph fg = flag_graph(p);
    return oracle::canonical_form(Premaniplex(fg.graph)) == oracle::canonical_form(m);
}

// Poset fixtures: the same statement read from the poset side.
bool maniplex_route_for_poset(const RankedPoset& p, bool strong) {
    if (!check_flagged(p) || !check_diamond(p)) return false;
    const FlagGraph fg = flag_graph(p);
    if (components(fg.graph, ColorSet::all(p.rank())).num_blocks() != 1) return false;
    const Premaniplex m(fg.graph);
    const bool pip = strong ? spip_check(m).ok : wpip_check(m).ok;
    return pip && poset_isomorphic(poset_from_maniplex(m).poset, p);
}

Outcome criterion1() {
    Outcome o;
    for (auto [name, p, expected] : {std::tuple{"tetrahedron", fx::tetrahedron(), std::size_t{24}},
                                     std::tuple{"prism", fx::prism(), std::size_t{12}}}) {
        const auto t0 = Clock::now();
        const FlagGraph fg = flag_graph(p);
        const Premaniplex m(fg.graph);
        const RankedPoset back = poset_from_maniplex(m).poset;
        const auto iso = poset_isomorphism(back, p);
        o.require(iso && check_poset_isomorphism(back, p, *iso).ok, std::string(name) + ": P(Gamma(P)) not isomorphic to P");
        const std::size_t poset_aut = oracle::poset_automorphism_count(p);
        const std::size_t graph_aut = automorphism_group(m).size();
        o.require(poset_aut == expected, std::string(name) + ": |Aut(P)| oracle gave " + std::to_string(poset_aut));
        o.require(graph_aut == expected && oracle::automorphism_count(m) == expected,
                  std::string(name) + ": |Aut(flag graph)| = " + std::to_string(graph_aut));
        const double dt = seconds_since(t0);
        o.require(dt < 1.0, std::string(name) + " took " + std::to_string(dt) + " s");
    }
    if (o.ok) o.note = "|Aut| 24 and 12 on both sides";
    return o;
}

Outcome criterion2() {
    Outcome o;
    const auto t0 = Clock::now();
    std::size_t fixtures = 0;
    for (const auto& [name, p] : fx::poset_fixtures()) {
        const bool poset_side = polytopality(p).is_polytope();
        const bool weak = maniplex_route_for_poset(p, false), strong = maniplex_route_for_poset(p, true);
        o.require(poset_side == weak && weak == strong, name + ": verdicts disagree");
        if (name == "glued-cubes") o.require(!poset_side && check_diamond(p).ok, "glued cubes should be a pre-polytope only");
        if (name == "ej-hasse") o.require(!check_diamond(p).ok, "ej-hasse should fail the diamond condition");
        ++fixtures;
    }
    std::vector<std::pair<std::string, Premaniplex>> maniplexes{
        {"hemicube", fx::hemicube()}, {"wpip-violator", fx::wpip_violator()}, {"prism", fx::prism_flag_graph()}};
    for (const auto& [name, va] : fx::voltage_fixtures()) {
        const ColoredGraph g = derived_graph(va);
        if (is_maniplex(g).ok && g.num_vertices() <= 400) maniplexes.emplace_back(name, Premaniplex(g));
    }
    for (const auto& [name, m] : maniplexes) {
        const bool weak = wpip_check(m).ok, strong = spip_check(m).ok, route = poset_route(m);
        o.require(weak == strong && strong == route, name + ": wpip/spip/poset disagree");
        ++fixtures;
    }
    o.require(fixtures >= 10, "fewer than 10 fixtures");
    const auto all = oracle::rank3_maniplexes(16);
    std::size_t polytopal = 0;
    for (const auto& steps : all) {
        GraphBuilder b(3, steps.size() / 3);
        for (VertexId v = 0; v < steps.size() / 3; ++v)
            for (Color c = 0; c < 3; ++c)
                if (v < steps[v * 3 + c]) b.add_link(v, steps[v * 3 + c], c);
        const Premaniplex m(b.build());
        const bool weak = wpip_check(m).ok, strong = spip_check(m).ok, route = poset_route(m);
        o.require(weak == strong && strong == route,
                  "search maniplex with " + std::to_string(m.size()) + " flags: wpip/spip/poset disagree");
        polytopal += weak;
    }
    const double dt = seconds_since(t0);
    o.require(dt < 60.0, "took " + std::to_string(dt) + " s");
    if (o.ok)
        o.note = std::to_string(fixtures) + " fixtures; " + std::to_string(all.size()) +
                 " rank-3 maniplexes with <= 16 flags, " + std::to_string(polytopal) + " polytopal";
    return o;
}

VoltageAssignment one_vertex(const Group& g, const std::vector<GroupElement>& volts) {
    GraphBuilder b(static_cast<int>(volts.size()), 1);
    for (Color c = 0; c < static_cast<Color>(volts.size()); ++c) b.add_semi_edge(0, c);
    return VoltageAssignment(Premaniplex(b.build()), g, volts);
}

// The caterpillar [0,1] assignment with x2's color-0 semi-edge reusing e2, although |0 - c_2| = 1.
VoltageAssignment mutated_caterpillar() {
    const CaterpillarWord cw{3, {0, 1}};
    Premaniplex x = caterpillar_to_premaniplex(cw);
    std::vector<GroupElement> volt(x.graph().num_darts());
    volt[x.dart(0, 1)] = {1};
    volt[x.dart(0, 2)] = {2};
    volt[x.dart(1, 2)] = {2};
    volt[x.dart(2, 0)] = {2};
    volt[x.dart(2, 2)] = {4};
    return VoltageAssignment(std::move(x), Group(BooleanGroup{3}), std::move(volt));
}

std::vector<fx::NamedAssignment> engineered_failures() {
    std::vector<fx::NamedAssignment> out;
    const Group b4(BooleanGroup{4}), b2(BooleanGroup{2});
    out.push_back({"fails-generation", one_vertex(b4, {{1}, {2}, {4}})});
    out.push_back({"trivial-semi-edge", one_vertex(b2, {{1}, {0}, {2}})});
    out.push_back({"equal-semi-edges", one_vertex(b2, {{1}, {1}, {2}})});
    // S_4 with (0 1), (2 3), (1 2): colors 0 and 2 do not commute.
    const auto s4 = fx::symmetric_s4();
    out.push_back({"non-commuting", one_vertex(s4.group, {s4.gens[0], s4.gens[2], s4.gens[1]})});
    out.push_back({"mutated-caterpillar", mutated_caterpillar()});
    return out;
}

Outcome criterion3() {
    Outcome o;
    auto cases = fx::voltage_fixtures();
    for (auto& e : engineered_failures()) cases.push_back(std::move(e));
    std::map<std::string, std::string> engineered;
    for (const auto& [name, va] : cases) {
        const DerivedManiplexReport rep = check_derived_maniplex(va);
        const ColoredGraph g = derived_graph(va);
        const bool maniplex = is_maniplex(g).ok;
        o.require(rep.ok() == maniplex, name + ": voltage conditions say " + (rep.ok() ? "maniplex" : "not") +
                                            ", derived graph says " + (maniplex ? "maniplex" : "not"));
        if (name == "fails-generation") o.require(!rep.generates.ok, name + ": condition (1) not flagged");
        if (name == "trivial-semi-edge") o.require(!rep.semi_edges_order_2.ok, name + ": condition (2) not flagged");
        if (name == "equal-semi-edges") o.require(!rep.parallel_distinct.ok, name + ": condition (3) not flagged");
        if (name == "non-commuting") o.require(!rep.squares_trivial.ok, name + ": condition (4) not flagged");
        if (!maniplex) {
            engineered[name] = rep.summary();
            continue;
        }
        const bool battery = check_polytopal_voltage(va).verdict.ok;
        const bool wpip = wpip_check(Premaniplex(g)).ok;
        o.require(battery == wpip, name + ": battery " + std::to_string(battery) + " vs wpip " + std::to_string(wpip));
        if (!battery) engineered[name] = "battery fails";
    }
    o.require(engineered.count("fails-generation") && engineered.count("trivial-semi-edge") &&
                  engineered.count("equal-semi-edges") && engineered.count("non-commuting"),
              "an engineered maniplex failure was not detected");
    o.require(engineered.count("mutated-caterpillar") == 1, "mutated caterpillar was not rejected");
    if (o.ok) o.note = std::to_string(cases.size()) + " assignments, " + std::to_string(engineered.size()) + " negative";
    return o;
}

Outcome criterion4() {
    Outcome o;
    auto cases = fx::voltage_fixtures();
    cases.push_back({"mutated-caterpillar", mutated_caterpillar()});
    std::size_t checked = 0;
    for (const auto& [name, va] : cases) {
        if (va.base().rank() > 4 || !check_derived_maniplex(va).ok()) continue;
        const auto reduced = check_polytopal_voltage(va), full = check_polytopal_voltage_full(va);
        o.require(reduced.verdict.ok == full.verdict.ok, name + ": reduced and full batteries disagree");
        if (name.rfind("caterpillar", 0) == 0)
            o.require(check_polytopal_voltage_same_vertex(va).verdict.ok == full.verdict.ok,
                      name + ": same-vertex battery disagrees");
        ++checked;
    }
    if (o.ok) o.note = std::to_string(checked) + " assignments";
    return o;
}

// Equivariant isomorphism P(X^xi) -> coset geometry, through face_of_flag.
void check_coset_geometry(Outcome& o, const std::string& name, const VoltageAssignment& va) {
    const CosetGeometry geo(va);
    const Premaniplex m(derived_graph(va));
    const ManiplexPoset mp = poset_from_maniplex(m);
    const int n = va.base().rank();
    const Group& grp = va.group();
    const auto order = grp.order();
    std::vector<FaceId> phi(mp.poset.num_faces(), kNone);
    for (FaceId f = 0; f < mp.poset.num_faces(); ++f) {
        const int r = mp.poset.face_rank(f);
        if (r == -1) phi[f] = geo.least();
        if (r == n) phi[f] = geo.greatest();
    }
    bool well_defined = true;
    for (int i = 0; i < n; ++i)
        for (VertexId v = 0; v < m.size(); ++v) {
            const VertexId y = static_cast<VertexId>(v / order);
            const GroupElement tau = grp.element(v % order);
            const FaceId target = geo.face_of_flag(i, y, tau);
            FaceId& slot = phi[mp.face_of[i][v]];
            if (slot != kNone && slot != target) well_defined = false;
            slot = target;
            for (std::uint64_t s = 0; s < order; ++s) {
                const GroupElement sigma = grp.element(s);
                if (geo.face_of_flag(i, y, grp.mul(tau, sigma)) != geo.act(target, sigma)) well_defined = false;
            }
        }
    o.require(well_defined, name + ": face map not well defined or not equivariant");
    o.require(check_poset_isomorphism(mp.poset, geo.poset(), phi).ok, name + ": face map is not an isomorphism");
    // Reversed vertex order changes every choice of base vertex and tree.
    std::vector<VertexId> rev(va.base().size());
    for (VertexId v = 0; v < rev.size(); ++v) rev[v] = static_cast<VertexId>(rev.size() - 1 - v);
    const VoltageAssignment flipped(Premaniplex(relabel_vertices(va.base().graph(), rev)), grp, va.volts());
    o.require(poset_isomorphic(CosetGeometry(flipped).poset(), geo.poset()), name + ": depends on the vertex order");
}

Outcome criterion5() {
    Outcome o;
    const auto s4 = fx::symmetric_s4();
    check_coset_geometry(o, "regular S4", regular_assignment(s4.group, s4.gens));
    check_coset_geometry(o, "caterpillar [0,1]", boolean_voltages({3, {0, 1}}));
    check_coset_geometry(o, "caterpillar [0,1,2]", boolean_voltages({3, {0, 1, 2}}));
    if (o.ok) o.note = "S4 and two caterpillars, equivariant, order-independent";
    return o;
}

Outcome criterion6() {
    Outcome o;
    const auto s4 = fx::symmetric_s4();
    o.require(check_string_c_group(s4.group, s4.gens).ok, "S4 is not a string C-group");
    const RankedPoset p = build_regular_polytope(s4.group, s4.gens);
    o.require(p.faces_of_rank(0).size() == 4 && p.faces_of_rank(1).size() == 6 && p.faces_of_rank(2).size() == 4,
              "face counts are not 4, 6, 4");
    const Premaniplex m(flag_graph(p).graph);
    const auto aut = automorphism_group(m);
    o.require(m.size() == 24, "flag count " + std::to_string(m.size()));
    o.require(flag_orbits(m, aut).num_blocks() == 1, "not one flag orbit");
    o.require(poset_isomorphic(p, fx::tetrahedron()), "not the tetrahedron");
    // sigma_w sends the base flag to its image under the monodromy word w.
    std::map<VertexId, const FlagPerm*> by_image;
    for (const auto& a : aut) by_image[a[0]] = &a;
    const auto words = oracle::all_words(3, 4);
    auto sigma = [&](const std::vector<Color>& w) { return *by_image.at(monodromy_apply(m, 0, w)); };
    auto monodromy = [&](const std::vector<Color>& w) {
        std::vector<VertexId> r(m.size());
        for (VertexId v = 0; v < m.size(); ++v) r[v] = monodromy_apply(m, v, w);
        return r;
    };
    std::size_t pairs = 0;
    for (const auto& u : words)
        for (const auto& v : words) {
            if (u.size() + v.size() > 4) continue;
            auto uv = u;
            uv.insert(uv.end(), v.begin(), v.end());
            o.require(sigma(uv) == compose(sigma(v), sigma(u)), "sigma_uv != sigma_v sigma_u");
            o.require((monodromy(u) == monodromy(v)) == (sigma(u) == sigma(v)), "r_u = r_v does not match sigma_u = sigma_v");
            ++pairs;
        }
    if (o.ok) o.note = "tetrahedron; " + std::to_string(pairs) + " word pairs";
    return o;
}

Outcome criterion7() {
    Outcome o;
    const auto t0 = Clock::now();
    std::string summary;
    for (int n : {3, 4})
        for (int k : {3, 4, 5}) {
            const std::string tag = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
            try {
                const CaterpillarBuild b = build_korbit_polytope(n, k);
                const auto& r = b.report;
                o.require(r.aut_boolean && r.orbits == static_cast<std::size_t>(k) && r.stg_is_caterpillar,
                          tag + ": report mismatch");
                o.require(polytopality(b.poset).is_polytope(), tag + ": poset is not a polytope");
                o.require(oracle::automorphism_count(b.maniplex) == r.aut_order, tag + ": oracle |Aut| differs");
                if (n == 3 && k == 3) o.require(r.flags == 48 && r.aut_order == 16, "(3,3): expected 48 flags, |Aut| 16");
                summary += " " + tag + ":" + std::to_string(r.flags) + "/" + std::to_string(r.aut_order);
            } catch (const Error& e) {
                o.require(false, tag + ": " + e.what());
            }
        }
    const double dt = seconds_since(t0);
    o.require(dt < 120.0, "took " + std::to_string(dt) + " s");
    if (o.ok) o.note = "flags/|Aut|" + summary;
    return o;
}

Outcome criterion8() {
    Outcome o;
    std::size_t words = 0, quotients = 0;
    for (const auto& w : oracle::all_words(3, 5)) {
        const CaterpillarWord cw{3, w};
        if (!cw.validate()) continue;
        std::set<std::vector<std::uint32_t>> from_foldings;
        for (const auto& f : enumerate_foldings(cw)) from_foldings.insert(oracle::canonical_form(folding_quotient(cw, f)));
        const auto brute = oracle::quotient_forms(caterpillar_to_premaniplex(cw));
        o.require(from_foldings == brute, "word [" + cw.to_string() + "]: " + std::to_string(from_foldings.size()) +
                                              " foldings vs " + std::to_string(brute.size()) + " quotients");
        ++words;
        quotients += brute.size();
    }
    if (o.ok) o.note = std::to_string(words) + " words, " + std::to_string(quotients) + " quotients";
    return o;
}

Outcome criterion9() {
    Outcome o;
    const Premaniplex m = fx::prism_flag_graph();
    const SymmetryTypeGraph t = symmetry_type_graph(m, automorphism_group(m));
    const auto group = oracle::automorphisms(m);
    const std::size_t faces2 = face_orbit_components(t.stg, ColorSet::of({2})).num_blocks();
    const std::size_t chains12 = face_orbit_components(t.stg, ColorSet::of({1, 2})).num_blocks();
    o.require(faces2 == 2 && oracle::chain_orbits(m, ColorSet::of({2}), group) == 2, "2-face orbits");
    o.require(chains12 == 3 && oracle::chain_orbits(m, ColorSet::of({1, 2}), group) == 3, "{1,2}-chain orbits");
    if (o.ok) o.note = "2 and 3 components";
    return o;
}

Outcome criterion10() {
    Outcome o;
    const Premaniplex m = fx::prism_flag_graph();
    const auto subgroups = oracle::small_subgroups(oracle::automorphisms(m));
    std::size_t chains = 0;
    for (const auto& h : subgroups)
        for (const auto& g : subgroups) {
            if (!std::includes(g.begin(), g.end(), h.begin(), h.end())) continue;
            const std::vector<FlagPerm> hv(h.begin(), h.end()), gv(g.begin(), g.end());
            const Verdict v = check_stg_cover(m, hv, gv);
            o.require(v.ok, "H of order " + std::to_string(h.size()) + " in G of order " + std::to_string(g.size()) +
                                ": " + v.witness);
            ++chains;
        }
    if (o.ok) o.note = std::to_string(subgroups.size()) + " subgroups, " + std::to_string(chains) + " pairs H <= G";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"round-trip", criterion1},        {"polytopality equivalence", criterion2},
        {"voltage/derived duality", criterion3}, {"reduced battery", criterion4},
        {"coset geometry", criterion5},    {"regular construction", criterion6},
        {"caterpillar pipeline", criterion7}, {"folding completeness", criterion8},
        {"STG face orbits", criterion9},   {"covering lemma", criterion10}};
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.ok;
        std::printf("criterion %zu (%s): %s [%.2f s] %s\n", i + 1, criteria[i].first, o.ok ? "PASS" : "FAIL",
                    seconds_since(t0), o.note.c_str());
    }
    return failures == 0 ? 0 : 1;
}
