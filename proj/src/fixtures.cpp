#include "maniplex/fixtures.hpp"

#include <algorithm>
#include <map>

#include "maniplex/caterpillar.hpp"
#include "maniplex/coset_geometry.hpp"
#include "maniplex/symmetry.hpp"

namespace maniplex::fixtures {

namespace {

std::string set_name(std::vector<int> s) {
    std::sort(s.begin(), s.end());
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out;
}

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::all_of(a.begin(), a.end(), [&](int x) { return std::find(b.begin(), b.end(), x) != b.end(); });
}

std::vector<std::vector<int>> subsets_of_size(int n, int size) {
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != size) continue;
        auto& s = out.emplace_back();
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1u) s.push_back(i);
    }
    return out;
}

std::vector<std::vector<int>> cube_edges(int offset_base, const std::vector<int>& relabel) {
    std::vector<std::vector<int>> out;
    for (int v = 0; v < 8; ++v)
        for (int b = 0; b < 3; ++b)
            if (!(v >> b & 1)) out.push_back({relabel[v] + offset_base, relabel[v | 1 << b] + offset_base});
    return out;
}

std::vector<std::vector<int>> cube_squares(int offset_base, const std::vector<int>& relabel) {
    std::vector<std::vector<int>> out;
    for (int b = 0; b < 3; ++b)
        for (int t = 0; t < 2; ++t) {
            auto& s = out.emplace_back();
            for (int v = 0; v < 8; ++v)
                if ((v >> b & 1) == t) s.push_back(relabel[v] + offset_base);
        }
    return out;
}

const std::vector<int> kIdentity8{0, 1, 2, 3, 4, 5, 6, 7};

GeneratedGroup from_perms(const std::vector<std::vector<std::uint32_t>>& gens) {
    std::vector<std::vector<std::uint32_t>> elements;
    TableGroup t = TableGroup::from_permutations(gens, &elements);
    GeneratedGroup out{Group(std::move(t)), {}};
    for (const auto& g : gens)
        out.gens.push_back(GroupElement{
            static_cast<std::uint64_t>(std::find(elements.begin(), elements.end(), g) - elements.begin())});
    return out;
}

}  // namespace

RankedPoset lattice_from_vertex_sets(int rank, int num_vertices,
                                     const std::vector<std::vector<std::vector<int>>>& by_rank) {
    std::vector<int> ranks;
    std::vector<std::string> names;
    std::vector<std::vector<int>> sets;
    std::vector<std::pair<FaceId, FaceId>> covers;
    std::vector<std::vector<FaceId>> ids(static_cast<std::size_t>(rank));
    for (int v = 0; v < num_vertices; ++v) {
        ids[0].push_back(static_cast<FaceId>(sets.size()));
        sets.push_back({v});
        ranks.push_back(0);
        names.push_back(std::to_string(v));
    }
    for (std::size_t i = 0; i < by_rank.size(); ++i)
        for (const auto& s : by_rank[i]) {
            const auto id = static_cast<FaceId>(sets.size());
            ids[i + 1].push_back(id);
            sets.push_back(s);
            ranks.push_back(static_cast<int>(i) + 1);
            names.push_back(set_name(s));
            for (FaceId lower : ids[i])
                if (subset(sets[lower], s)) covers.emplace_back(lower, id);
        }
    return with_bounds(RankedPoset(rank, std::move(ranks), std::move(covers), std::move(names)));
}

RankedPoset identify_faces(const RankedPoset& p, FaceId a, FaceId b) {
    if (p.face_rank(a) != p.face_rank(b)) throw InvalidArgument("identify_faces: faces of different rank");
    std::vector<FaceId> to(p.num_faces());
    std::vector<int> ranks;
    std::vector<std::string> names;
    for (FaceId f = 0; f < p.num_faces(); ++f) {
        if (f == b) continue;
        to[f] = static_cast<FaceId>(ranks.size());
        ranks.push_back(p.face_rank(f));
        names.push_back(f == a ? p.name(a) + "=" + p.name(b) : p.name(f));
    }
    to[b] = to[a];
    std::vector<std::pair<FaceId, FaceId>> covers;
    for (auto [x, y] : p.covers()) covers.emplace_back(to[x], to[y]);
    std::sort(covers.begin(), covers.end());
    covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
    return RankedPoset(p.rank(), std::move(ranks), std::move(covers), std::move(names));
}

RankedPoset simplex(int n) {
    std::vector<std::vector<std::vector<int>>> by_rank;
    for (int i = 1; i < n; ++i) by_rank.push_back(subsets_of_size(n + 1, i + 1));
    return lattice_from_vertex_sets(n, n + 1, by_rank);
}

RankedPoset triangle() { return simplex(2); }
RankedPoset tetrahedron() { return simplex(3); }

RankedPoset square() { return lattice_from_vertex_sets(2, 4, {{{0, 1}, {1, 2}, {2, 3}, {0, 3}}}); }

RankedPoset cube() {
    return lattice_from_vertex_sets(3, 8, {cube_edges(0, kIdentity8), cube_squares(0, kIdentity8)});
}

RankedPoset prism() {
    // Top triangle 0,1,2 over bottom triangle 3,4,5.
    return lattice_from_vertex_sets(3, 6,
                                    {{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}},
                                     {{0, 1, 2}, {3, 4, 5}, {0, 1, 3, 4}, {1, 2, 4, 5}, {0, 2, 3, 5}}});
}

RankedPoset glued_cubes() {
    // The second cube uses 0 and 8..14.
    const std::vector<int> second{0, 8, 9, 10, 11, 12, 13, 14};
    auto edges = cube_edges(0, kIdentity8);
    auto squares = cube_squares(0, kIdentity8);
    for (auto& e : cube_edges(0, second)) edges.push_back(e);
    for (auto& s : cube_squares(0, second)) squares.push_back(s);
    return lattice_from_vertex_sets(3, 15, {edges, squares});
}

RankedPoset identified_cube() {
    const RankedPoset c = cube();
    return identify_faces(c, *c.find("0"), *c.find("7"));
}

RankedPoset ej_hasse() {
    const std::vector<std::vector<int>> sets{{}, {1}, {2}, {3}, {1, 2}, {2, 3}, {1, 2, 3}, {1, 2, 3, 4}};
    std::vector<int> ranks;
    std::vector<std::string> names;
    for (const auto& s : sets) {
        ranks.push_back(static_cast<int>(s.size()) - 1);
        names.push_back("{" + set_name(s) + "}");
    }
    std::vector<std::pair<FaceId, FaceId>> covers;
    for (FaceId a = 0; a < sets.size(); ++a)
        for (FaceId b = 0; b < sets.size(); ++b)
            if (ranks[b] == ranks[a] + 1 && subset(sets[a], sets[b])) covers.emplace_back(a, b);
    return RankedPoset(3, std::move(ranks), std::move(covers), std::move(names));
}

RankedPoset simplex_with_extra_vertex() {
    const RankedPoset t = triangle();
    std::vector<int> ranks;
    std::vector<std::string> names;
    for (FaceId f = 0; f < t.num_faces(); ++f) {
        ranks.push_back(t.face_rank(f));
        names.push_back(t.name(f));
    }
    auto covers = t.covers();
    covers.emplace_back(*t.find("least"), static_cast<FaceId>(ranks.size()));
    ranks.push_back(0);
    names.push_back("3");
    return RankedPoset(t.rank(), std::move(ranks), std::move(covers), std::move(names));
}

Premaniplex hemicube() {
    const RankedPoset c = cube();
    const FlagGraph fg = flag_graph(c);
    const Premaniplex m(fg.graph);
    // Central inversion v -> 7 - v on vertex sets.
    std::vector<FaceId> antipode(c.num_faces());
    for (FaceId f = 0; f < c.num_faces(); ++f) {
        const std::string& name = c.name(f);
        if (c.face_rank(f) < 0 || c.face_rank(f) == c.rank()) {
            antipode[f] = f;
            continue;
        }
        std::vector<int> image;
        std::size_t pos = 0;
        while (pos < name.size()) {
            std::size_t next = name.find(',', pos);
            if (next == std::string::npos) next = name.size();
            image.push_back(7 - std::stoi(name.substr(pos, next - pos)));
            pos = next + 1;
        }
        antipode[f] = *c.find(set_name(image));
    }
    std::map<Flag, VertexId> index;
    for (VertexId v = 0; v < fg.flags.size(); ++v) index[fg.flags[v]] = v;
    FlagPerm a(fg.flags.size()), id(fg.flags.size());
    for (VertexId v = 0; v < fg.flags.size(); ++v) {
        Flag image = fg.flags[v];
        for (auto& f : image) f = antipode[f];
        a[v] = index.at(image);
        id[v] = v;
    }
    return Premaniplex(quotient_by_group(m.graph(), {as_graph_automorphism(m, id), as_graph_automorphism(m, a)}).graph);
}

Premaniplex wpip_violator() {
    GraphBuilder b(3, 4);
    b.add_link(0, 1, 0);
    b.add_link(2, 3, 0);
    b.add_link(0, 3, 1);
    b.add_link(1, 2, 1);
    b.add_link(0, 2, 2);
    b.add_link(1, 3, 2);
    return Premaniplex(b.build());
}

Premaniplex tetra_flag_graph() { return Premaniplex(flag_graph(tetrahedron()).graph); }
Premaniplex prism_flag_graph() { return Premaniplex(flag_graph(prism()).graph); }

Premaniplex prism_stg() {
    const Premaniplex m = prism_flag_graph();
    return symmetry_type_graph(m, automorphism_group(m)).stg;
}

GeneratedGroup symmetric_s4() { return from_perms({{1, 0, 2, 3}, {0, 2, 1, 3}, {0, 1, 3, 2}}); }

GeneratedGroup dihedral_d4() { return from_perms({{0, 3, 2, 1}, {1, 0, 3, 2}}); }

std::vector<NamedAssignment> voltage_fixtures() {
    std::vector<NamedAssignment> out;
    const auto s4 = symmetric_s4();
    out.push_back({"regular-s4", regular_assignment(s4.group, s4.gens)});
    const auto d4 = dihedral_d4();
    out.push_back({"regular-d4", regular_assignment(d4.group, d4.gens)});
    const Group z2_3(BooleanGroup{3});
    out.push_back({"regular-boolean-3", regular_assignment(z2_3, {{1}, {2}, {4}})});
    for (const auto& [n, w] : std::vector<std::pair<int, std::vector<Color>>>{
             {3, {0, 1}}, {3, {0, 1, 0}}, {3, {1, 0, 1}}, {3, {0, 1, 2}}, {3, {}}, {4, {0, 1}}, {4, {1, 2}}}) {
        const CaterpillarWord cw{n, w};
        out.push_back({"caterpillar-" + std::to_string(n) + "-[" + cw.to_string() + "]", boolean_voltages(cw)});
    }
    auto from_action = [&](const std::string& name, const Premaniplex& m) {
        out.push_back({name, voltages_from_action(m, automorphism_group(m)).va});
    };
    from_action("prism-quotient", prism_flag_graph());
    from_action("cube-quotient", Premaniplex(flag_graph(cube()).graph));
    from_action("hemicube-quotient", hemicube());
    from_action("wpip-violator-quotient", wpip_violator());
    return out;
}

std::vector<NamedPoset> poset_fixtures() {
    return {{"triangle", triangle()},       {"square", square()},
            {"tetrahedron", tetrahedron()}, {"cube", cube()},
            {"prism", prism()},             {"glued-cubes", glued_cubes()},
            {"identified-cube", identified_cube()}, {"ej-hasse", ej_hasse()},
            {"simplex-4", simplex(4)},      {"extra-vertex", simplex_with_extra_vertex()}};
}

}  // namespace maniplex::fixtures
