#include "maniplex/symmetry.hpp"

#include <algorithm>
#include <map>

namespace maniplex {

namespace {

void require_maniplex(const Premaniplex& m, const char* op) {
    if (auto v = is_maniplex(m); !v) throw PreconditionError(std::string(op) + ": not a maniplex: " + v.witness);
}

// Lengths of the alternating {i,j} cycles through v, for i < j.
std::vector<std::uint32_t> local_signature(const Premaniplex& m, VertexId v) {
    std::vector<std::uint32_t> sig;
    for (int i = 0; i < m.rank(); ++i)
        for (int j = i + 1; j < m.rank(); ++j) {
            std::uint32_t len = 0;
            VertexId w = v;
            do {
                w = m.step(m.step(w, i), j);
                ++len;
            } while (w != v);
            sig.push_back(len);
        }
    return sig;
}

}  // namespace

Verdict check_automorphism(const Premaniplex& m, const FlagPerm& a) {
    if (a.size() != m.size()) return Verdict::fail("permutation has the wrong size");
    std::vector<bool> hit(m.size(), false);
    for (auto w : a) {
        if (w >= m.size() || hit[w]) return Verdict::fail("not a permutation of the flags");
        hit[w] = true;
    }
    for (VertexId v = 0; v < m.size(); ++v)
        for (int c = 0; c < m.rank(); ++c)
            if (a[m.step(v, c)] != m.step(a[v], c))
                return Verdict::fail("does not commute with r_" + std::to_string(c) + " at flag " + std::to_string(v));
    return Verdict::pass();
}

std::vector<FlagPerm> automorphism_group(const Premaniplex& m, Execution exec) {
    require_maniplex(m, "automorphism_group");
    const std::size_t nf = m.size();
    const auto base_sig = local_signature(m, 0);
    std::vector<std::optional<FlagPerm>> found(nf);
    auto task = [&](std::int64_t t) {
        const auto target = static_cast<VertexId>(t);
        if (local_signature(m, target) != base_sig) return;
        auto f = extend_from(m.steps(), m.steps(), m.rank(), nf, 0, target);
        if (f) found[target] = std::move(*f);
    };
    const auto count = static_cast<std::int64_t>(nf);
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (std::int64_t t = 0; t < count; ++t) task(t);
    } else {
        for (std::int64_t t = 0; t < count; ++t) task(t);
    }
    std::vector<FlagPerm> out;
    for (VertexId t = 0; t < nf; ++t) {
        if (!found[t]) continue;
        const FlagPerm& a = *found[t];
        // Free action: a consistent map on a connected graph is the identity once it fixes a flag.
        bool fixes = false;
        for (VertexId v = 0; v < nf && !fixes; ++v) fixes = a[v] == v;
        if (t != 0 && fixes) throw PipelineError("automorphism with image " + std::to_string(t) + " fixes a flag");
        out.push_back(a);
    }
    return out;
}

FlagPerm compose(const FlagPerm& a, const FlagPerm& b) {
    FlagPerm c(a.size());
    for (std::size_t v = 0; v < a.size(); ++v) c[v] = b[a[v]];
    return c;
}

FlagPerm inverse(const FlagPerm& a) {
    FlagPerm c(a.size());
    for (std::size_t v = 0; v < a.size(); ++v) c[a[v]] = static_cast<VertexId>(v);
    return c;
}

std::vector<FlagPerm> group_closure(const Premaniplex& m, const std::vector<FlagPerm>& gens) {
    for (std::size_t k = 0; k < gens.size(); ++k)
        if (auto v = check_automorphism(m, gens[k]); !v)
            throw InvalidArgument("element " + std::to_string(k) + " is not an automorphism: " + v.witness);
    FlagPerm id(m.size());
    std::iota(id.begin(), id.end(), 0u);
    std::vector<FlagPerm> elems{id};
    std::vector<bool> seen(m.size(), false);
    seen[0] = true;
    for (std::size_t head = 0; head < elems.size(); ++head)
        for (const auto& g : gens) {
            FlagPerm c = compose(elems[head], g);
            if (seen[c[0]]) continue;
            seen[c[0]] = true;
            elems.push_back(std::move(c));
        }
    std::sort(elems.begin(), elems.end(), [](const FlagPerm& a, const FlagPerm& b) { return a[0] < b[0]; });
    return elems;
}

GraphAutomorphism as_graph_automorphism(const Premaniplex& m, const FlagPerm& a) {
    GraphAutomorphism g;
    g.vertex_perm = a;
    g.dart_perm.resize(m.graph().num_darts());
    for (DartId d = 0; d < m.graph().num_darts(); ++d)
        g.dart_perm[d] = m.dart(a[m.graph().initial(d)], m.graph().color(d));
    return g;
}

TableGroup as_table_group(const std::vector<FlagPerm>& elements) {
    std::map<FlagPerm, std::uint32_t> index;
    for (std::uint32_t i = 0; i < elements.size(); ++i) index[elements[i]] = i;
    const std::size_t n = elements.size();
    std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            auto it = index.find(compose(elements[a], elements[b]));
            if (it == index.end()) throw InvalidArgument("as_table_group: elements are not closed");
            table[a][b] = it->second;
        }
    return TableGroup(std::move(table));
}

Partition flag_orbits(const Premaniplex& m, const std::vector<FlagPerm>& group) {
    DisjointSets sets(m.size());
    for (std::size_t k = 0; k < group.size(); ++k) {
        if (auto v = check_automorphism(m, group[k]); !v)
            throw InvalidArgument("element " + std::to_string(k) + " is not an automorphism: " + v.witness);
        for (VertexId v = 0; v < m.size(); ++v) sets.unite(v, group[k][v]);
    }
    return Partition::from_sets(sets, m.size());
}

SymmetryTypeGraph symmetry_type_graph(const Premaniplex& m, const std::vector<FlagPerm>& group) {
    std::vector<GraphAutomorphism> elems;
    for (std::size_t k = 0; k < group.size(); ++k) {
        if (auto v = check_automorphism(m, group[k]); !v)
            throw InvalidArgument("element " + std::to_string(k) + " is not an automorphism: " + v.witness);
        elems.push_back(as_graph_automorphism(m, group[k]));
    }
    Quotient q = quotient_by_group(m.graph(), elems);
    return {Premaniplex(std::move(q.graph)), std::move(q.projection)};
}

Verdict check_stg_cover(const Premaniplex& m, const std::vector<FlagPerm>& h, const std::vector<FlagPerm>& g) {
    const auto closed_g = group_closure(m, g);
    std::vector<bool> in_g(m.size(), false);
    for (const auto& a : closed_g) in_g[a[0]] = true;
    for (std::size_t k = 0; k < h.size(); ++k) {
        if (auto v = check_automorphism(m, h[k]); !v)
            throw InvalidArgument("element " + std::to_string(k) + " of H is not an automorphism");
        // Elements of Aut are determined by the image of flag 0.
        if (!in_g[h[k][0]])
            throw PreconditionError("element " + std::to_string(k) + " of H is not in G");
    }
    const SymmetryTypeGraph th = symmetry_type_graph(m, h), tg = symmetry_type_graph(m, g);
    GraphHomomorphism map;
    map.vertex_map.assign(th.stg.size(), kNone);
    map.dart_map.assign(th.stg.graph().num_darts(), kNone);
    for (VertexId v = 0; v < m.size(); ++v) {
        auto& slot = map.vertex_map[th.projection.vertex_map[v]];
        const VertexId img = tg.projection.vertex_map[v];
        if (slot != kNone && slot != img) return Verdict::fail("xH -> xG is not well defined");
        slot = img;
    }
    for (DartId d = 0; d < m.graph().num_darts(); ++d) {
        auto& slot = map.dart_map[th.projection.dart_map[d]];
        const DartId img = tg.projection.dart_map[d];
        if (slot != kNone && slot != img) return Verdict::fail("dart map is not well defined");
        slot = img;
    }
    return check_covering(map, th.stg.graph(), tg.stg.graph());
}

Partition face_orbit_components(const Premaniplex& stg, ColorSet k) {
    if (!k.fits(stg.rank())) throw InvalidArgument("color set " + k.to_string() + " exceeds rank");
    return components(stg.graph(), k.complement(stg.rank()));
}

}  // namespace maniplex
