#include "maniplex/coset_geometry.hpp"

#include <map>
#include <set>

#include "maniplex/symmetry.hpp"

namespace maniplex {

namespace {

// Least elements of the right cosets of h, ascending.
std::vector<GroupElement> right_coset_reps(const Group& g, const Subgroup& h) {
    std::vector<GroupElement> reps;
    for (std::uint64_t x = 0; x < g.order(); ++x) {
        const GroupElement e = g.element(x);
        if (canonical_rep(g, Coset{e, h, Side::Right}) == e) reps.push_back(e);
    }
    return reps;
}

}  // namespace

CosetGeometry::CosetGeometry(const VoltageAssignment& va, Execution exec) : va_(va) {
    if (auto r = check_polytopal_voltage(va); !r.verdict)
        throw PreconditionError("coset geometry: assignment fails the intersection battery: " + r.verdict.witness);
    const int n = rank();
    const auto& g = va_.base().graph();
    const Group& grp = va_.group();
    comps_.resize(static_cast<std::size_t>(n));
    base_.resize(static_cast<std::size_t>(n));
    alpha_.assign(static_cast<std::size_t>(n), std::vector<GroupElement>(g.num_vertices(), grp.identity()));
    stab_.resize(static_cast<std::size_t>(n));
    index_.resize(static_cast<std::size_t>(n));

    std::vector<int> ranks{-1};
    std::vector<std::string> names{"-1"};
    faces_.push_back({-1, 0, grp.identity()});
    least_ = 0;
    for (int i = 0; i < n; ++i) {
        const ColorSet colors = ColorSet::all(n).without(i);
        comps_[i] = components(g, colors);
        base_[i] = comps_[i].block_minima();
        for (std::uint32_t c = 0; c < comps_[i].num_blocks(); ++c) {
            const PiGenerators pi = pi_generators(va_, base_[i][c], colors);
            for (VertexId y : pi.tree.order) alpha_[i][y] = pi.tree_voltage[y];
            stab_[i].push_back(pi.subgroup);
            index_[i].emplace_back();
            for (GroupElement rep : right_coset_reps(grp, pi.subgroup)) {
                index_[i][c].push_back(static_cast<FaceId>(faces_.size()));
                faces_.push_back({i, c, rep});
                ranks.push_back(i);
                names.push_back(std::to_string(i) + ":" + std::to_string(c) + ":" + grp.to_string(rep));
            }
        }
    }
    greatest_ = static_cast<FaceId>(faces_.size());
    faces_.push_back({n, 0, grp.identity()});
    ranks.push_back(n);
    names.push_back(std::to_string(n));

    std::vector<std::pair<FaceId, FaceId>> covers;
    for (FaceId f = 0; f < faces_.size(); ++f) {
        if (faces_[f].rank == 0) covers.emplace_back(least_, f);
        if (faces_[f].rank == n - 1) covers.emplace_back(f, greatest_);
    }
    // Candidate pairs: consecutive ranks whose components meet.
    std::vector<std::pair<FaceId, FaceId>> candidates;
    for (int i = 0; i + 1 < n; ++i)
        for (std::uint32_t c = 0; c < comps_[i].num_blocks(); ++c) {
            std::set<std::uint32_t> upper;
            for (VertexId y = 0; y < g.num_vertices(); ++y)
                if (comps_[i].block_of(y) == c) upper.insert(comps_[i + 1].block_of(y));
            for (FaceId f : index_[i][c])
                for (auto c2 : upper)
                    for (FaceId h : index_[i + 1][c2]) candidates.emplace_back(f, h);
        }
    std::vector<char> keep(candidates.size(), 0);
    const auto count = static_cast<std::int64_t>(candidates.size());
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 64)
        for (std::int64_t t = 0; t < count; ++t) keep[t] = related(candidates[t].first, candidates[t].second);
    } else {
        for (std::int64_t t = 0; t < count; ++t) keep[t] = related(candidates[t].first, candidates[t].second);
    }
    for (std::size_t t = 0; t < candidates.size(); ++t)
        if (keep[t]) covers.push_back(candidates[t]);
    poset_ = RankedPoset(n, std::move(ranks), std::move(covers), std::move(names));
}

VertexId CosetGeometry::base_vertex(int i, VertexId y) const { return base_[i][comps_[i].block_of(y)]; }
GroupElement CosetGeometry::alpha(int i, VertexId y) const { return alpha_[i][y]; }
const Subgroup& CosetGeometry::stabilizer(int i, VertexId y) const { return stab_[i][comps_[i].block_of(y)]; }

std::vector<VertexId> CosetGeometry::shared_vertices(FaceId f, FaceId g) const {
    const CosetFace &a = faces_[f], &b = faces_[g];
    std::vector<VertexId> out;
    const int n = rank();
    for (VertexId y = 0; y < va_.base().size(); ++y) {
        const bool in_a = a.rank < 0 || a.rank >= n || comps_[a.rank].block_of(y) == a.component;
        const bool in_b = b.rank < 0 || b.rank >= n || comps_[b.rank].block_of(y) == b.component;
        if (in_a && in_b) out.push_back(y);
    }
    return out;
}

bool CosetGeometry::related(FaceId f, FaceId g, std::optional<VertexId> via) const {
    const CosetFace &a = faces_[f], &b = faces_[g];
    if (a.rank >= b.rank) return false;
    if (a.rank < 0 || b.rank >= rank()) return true;
    const Group& grp = va_.group();
    for (VertexId y : shared_vertices(f, g)) {
        if (via && *via != y) continue;
        const GroupElement ai = alpha_[a.rank][y], aj = alpha_[b.rank][y];
        // α H γ is the right coset (α H α^-1)(α γ).
        const Coset lhs{grp.mul(ai, a.rep), conjugate(grp, stab_[a.rank][a.component], ai), Side::Right};
        const Coset rhs{grp.mul(aj, b.rep), conjugate(grp, stab_[b.rank][b.component], aj), Side::Right};
        if (coset_intersect(grp, lhs, rhs)) return true;
    }
    return false;
}

FaceId CosetGeometry::lookup(int i, std::uint32_t comp, GroupElement rep) const {
    for (FaceId f : index_[i][comp])
        if (faces_[f].rep == rep) return f;
    throw PipelineError("coset face not found");
}

FaceId CosetGeometry::face_of_flag(int i, VertexId y, GroupElement tau) const {
    const Group& grp = va_.group();
    const std::uint32_t c = comps_[i].block_of(y);
    const GroupElement gamma = grp.mul(grp.inv(alpha_[i][y]), tau);
    return lookup(i, c, canonical_rep(grp, Coset{gamma, stab_[i][c], Side::Right}));
}

FaceId CosetGeometry::act(FaceId f, GroupElement sigma) const {
    const CosetFace& a = faces_[f];
    if (a.rank < 0 || a.rank >= rank()) return f;
    const Group& grp = va_.group();
    const auto& h = stab_[a.rank][a.component];
    return lookup(a.rank, a.component, canonical_rep(grp, Coset{grp.mul(a.rep, sigma), h, Side::Right}));
}

RankedPoset build_coset_polytope(const VoltageAssignment& va, Execution exec) {
    return CosetGeometry(va, exec).poset();
}

VoltageAssignment regular_assignment(const Group& g, const std::vector<GroupElement>& gens) {
    const int n = static_cast<int>(gens.size());
    GraphBuilder b(n, 1);
    for (int i = 0; i < n; ++i) b.add_semi_edge(0, i);
    return VoltageAssignment(Premaniplex(b.build()), g, gens);
}

RankedPoset build_regular_polytope(const Group& g, const std::vector<GroupElement>& gens) {
    if (auto v = check_string_c_group(g, gens); !v)
        throw PreconditionError("build_regular_polytope: not a string C-group: " + v.witness);
    const int n = static_cast<int>(gens.size());
    std::vector<int> ranks{-1};
    std::vector<std::string> names{"-1"};
    std::vector<Subgroup> parabolic;
    std::vector<std::vector<std::pair<FaceId, GroupElement>>> by_rank(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<GroupElement> s;
        for (int j = 0; j < n; ++j)
            if (j != i) s.push_back(gens[j]);
        parabolic.push_back(closure(g, s));
        for (GroupElement rep : right_coset_reps(g, parabolic[i])) {
            by_rank[i].emplace_back(static_cast<FaceId>(ranks.size()), rep);
            ranks.push_back(i);
            names.push_back(std::to_string(i) + ":" + g.to_string(rep));
        }
    }
    const auto greatest = static_cast<FaceId>(ranks.size());
    ranks.push_back(n);
    names.push_back(std::to_string(n));
    std::vector<std::pair<FaceId, FaceId>> covers;
    if (n == 0) covers.emplace_back(0, greatest);
    for (int i = 0; i < n; ++i)
        for (auto [f, rep] : by_rank[i]) {
            if (i == 0) covers.emplace_back(0, f);
            if (i == n - 1) covers.emplace_back(f, greatest);
            if (i + 1 < n)
                for (auto [h, rep2] : by_rank[i + 1])
                    if (coset_intersect(g, Coset{rep, parabolic[i], Side::Right},
                                        Coset{rep2, parabolic[i + 1], Side::Right}))
                        covers.emplace_back(f, h);
        }
    return RankedPoset(n, std::move(ranks), std::move(covers), std::move(names));
}

OrbitComparison group_action_orbits(const RankedPoset& p, const VoltageAssignment& va) {
    const CosetGeometry geo(va);
    if (!poset_isomorphic(p, geo.poset()))
        throw PreconditionError("group_action_orbits: poset is not the coset geometry of this assignment");
    const FlagGraph fg = flag_graph(geo.poset());
    std::map<Flag, VertexId> index;
    for (VertexId v = 0; v < fg.flags.size(); ++v) index[fg.flags[v]] = v;
    DisjointSets sets(fg.flags.size());
    std::vector<GroupElement> gens;
    for (auto d = 0u; d < va.base().graph().num_darts(); ++d) gens.push_back(va.volt(d));
    // The voltages generate Γ, so their action gives the Γ-orbits.
    for (GroupElement s : gens)
        for (VertexId v = 0; v < fg.flags.size(); ++v) {
            Flag moved = fg.flags[v];
            for (auto& f : moved) f = geo.act(f, s);
            sets.unite(v, index.at(moved));
        }
    OrbitComparison out;
    out.flags = fg.flags.size();
    out.group_orbits = Partition::from_sets(sets, fg.flags.size()).num_blocks();
    const Premaniplex m(fg.graph);
    const auto aut = automorphism_group(m);
    out.full_aut_order = aut.size();
    out.full_orbits = flag_orbits(m, aut).num_blocks();
    return out;
}

}  // namespace maniplex
