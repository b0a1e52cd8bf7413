#include "maniplex/voltage.hpp"

#include <map>

#include "maniplex/symmetry.hpp"

namespace maniplex {

VoltageAssignment::VoltageAssignment(Premaniplex base, Group group, std::vector<GroupElement> volt)
    : base_(std::move(base)), group_(std::move(group)), volt_(std::move(volt)) {
    const auto& g = base_.graph();
    if (volt_.size() != g.num_darts()) throw InvalidArgument("voltage list does not match the dart count");
    for (DartId d = 0; d < g.num_darts(); ++d) {
        if (!group_.is_element(volt_[d])) throw InvalidArgument("voltage of dart " + std::to_string(d) + " is not a group element");
        if (volt_[g.inverse(d)] != group_.inv(volt_[d]))
            throw InvalidArgument("voltage of dart " + std::to_string(d) + " is not inverse to its reverse dart");
    }
}

bool VoltageAssignment::tree_normalized() const {
    const BfsTree t = bfs_tree(base_.graph(), 0, ColorSet::all(base_.rank()));
    for (const auto& pd : t.parent_dart)
        if (pd && volt_[*pd] != group_.identity()) return false;
    return true;
}

GroupElement path_voltage(const VoltageAssignment& va, const GraphPath& w) {
    if (auto v = check_path(va.base().graph(), w); !v) throw InvalidArgument("path_voltage: " + v.witness);
    GroupElement acc = va.group().identity();
    for (DartId d : w.darts) acc = va.group().mul(va.volt(d), acc);
    return acc;
}

ColoredGraph derived_graph(const VoltageAssignment& va, std::size_t max_flags) {
    const auto& base = va.base().graph();
    const Group& grp = va.group();
    const std::uint64_t order = grp.order();
    if (order > max_flags || base.num_vertices() * order > max_flags)
        throw SizeLimitError("derived graph would have " + std::to_string(base.num_vertices()) + " x " +
                             std::to_string(order) + " vertices, above the cap of " + std::to_string(max_flags));
    const std::size_t nd = base.num_darts() * order;
    std::vector<DartId> inv(nd);
    std::vector<VertexId> init(nd);
    std::vector<Color> col(nd);
    for (DartId d = 0; d < base.num_darts(); ++d)
        for (std::uint64_t g = 0; g < order; ++g) {
            const std::size_t id = d * order + g;
            const GroupElement target = grp.mul(va.volt(d), {g});
            inv[id] = static_cast<DartId>(base.inverse(d) * order + target.value);
            init[id] = static_cast<VertexId>(base.initial(d) * order + g);
            col[id] = base.color(d);
        }
    return ColoredGraph(base.rank(), base.num_vertices() * order, std::move(inv), std::move(init), std::move(col));
}

Regauged regauge(const VoltageAssignment& va) {
    const auto& g = va.base().graph();
    const Group& grp = va.group();
    const BfsTree t = bfs_tree(g, 0, ColorSet::all(g.rank()));
    std::vector<GroupElement> tv(g.num_vertices(), grp.identity());
    for (VertexId v : t.order)
        if (t.parent_dart[v]) tv[v] = grp.mul(va.volt(*t.parent_dart[v]), tv[g.initial(*t.parent_dart[v])]);
    std::vector<GroupElement> volt(g.num_darts());
    for (DartId d = 0; d < g.num_darts(); ++d)
        volt[d] = grp.mul(grp.mul(grp.inv(tv[g.terminal(d)]), va.volt(d)), tv[g.initial(d)]);
    return {VoltageAssignment(va.base(), grp, std::move(volt)), std::move(tv)};
}

std::string DerivedManiplexReport::summary() const {
    std::string s;
    for (const Verdict* v : {&generates, &semi_edges_order_2, &parallel_distinct, &squares_trivial})
        if (!v->ok) s += (s.empty() ? "" : "; ") + v->witness;
    return s.empty() ? "all four conditions hold" : s;
}

DerivedManiplexReport check_derived_maniplex(const VoltageAssignment& input) {
    const VoltageAssignment va = regauge(input).va;
    const auto& g = va.base().graph();
    const Group& grp = va.group();
    DerivedManiplexReport r;
    if (closure(grp, va.volts()).size() != grp.order())
        r.generates = Verdict::fail("(1) voltages generate a proper subgroup");
    for (DartId d = 0; d < g.num_darts() && r.semi_edges_order_2.ok; ++d)
        if (g.inverse(d) == d && va.volt(d) == grp.identity())
            r.semi_edges_order_2 = Verdict::fail("(2) semi-edge of color " + std::to_string(g.color(d)) +
                                                 " at vertex " + std::to_string(g.initial(d)) +
                                                 " has trivial voltage");
    for (VertexId x = 0; x < g.num_vertices() && r.parallel_distinct.ok; ++x) {
        const auto out = g.darts_at(x);
        for (std::size_t a = 0; a < out.size() && r.parallel_distinct.ok; ++a)
            for (std::size_t b = a + 1; b < out.size(); ++b)
                if (g.terminal(out[a]) == g.terminal(out[b]) && va.volt(out[a]) == va.volt(out[b])) {
                    r.parallel_distinct = Verdict::fail(
                        "(3) parallel darts of colors " + std::to_string(g.color(out[a])) + " and " +
                        std::to_string(g.color(out[b])) + " at vertex " + std::to_string(x) + " share a voltage");
                    break;
                }
    }
    r.squares_trivial = check_homotopy_invariance(va);
    return r;
}

Verdict check_homotopy_invariance(const VoltageAssignment& va) {
    const Premaniplex& x = va.base();
    const Group& grp = va.group();
    for (VertexId v = 0; v < x.size(); ++v)
        for (int i = 0; i < x.rank(); ++i)
            for (int j = i + 2; j < x.rank(); ++j) {
                GraphPath w{v, {}};
                VertexId at = v;
                for (int c : {i, j, i, j}) {
                    w.darts.push_back(x.dart(at, c));
                    at = x.step(at, c);
                }
                if (path_voltage(va, w) != grp.identity())
                    return Verdict::fail("(4) alternating path " + std::to_string(i) + "," + std::to_string(j) +
                                         " from vertex " + std::to_string(v) + " has voltage " +
                                         grp.to_string(path_voltage(va, w)));
            }
    return Verdict::pass();
}

PiGenerators pi_generators(const VoltageAssignment& va, VertexId x, ColorSet colors) {
    const auto& g = va.base().graph();
    const Group& grp = va.group();
    if (!g.has_vertex(x)) throw InvalidArgument("pi_generators: unknown vertex");
    PiGenerators pi;
    pi.anchor = x;
    pi.colors = colors;
    pi.tree = bfs_tree(g, x, colors);
    pi.tree_voltage.assign(g.num_vertices(), grp.identity());
    std::vector<bool> tree_dart(g.num_darts(), false);
    for (VertexId v : pi.tree.order)
        if (auto pd = pi.tree.parent_dart[v]) {
            pi.tree_voltage[v] = grp.mul(va.volt(*pd), pi.tree_voltage[g.initial(*pd)]);
            tree_dart[*pd] = tree_dart[g.inverse(*pd)] = true;
        }
    std::vector<GroupElement> gens;
    for (VertexId v : pi.tree.order)
        for (DartId d : g.darts_at(v)) {
            if (!colors.contains(g.color(d)) || tree_dart[d] || g.inverse(d) < d) continue;
            const GroupElement c =
                grp.mul(grp.mul(grp.inv(pi.tree_voltage[g.terminal(d)]), va.volt(d)), pi.tree_voltage[v]);
            pi.generators.emplace_back(d, c);
            gens.push_back(c);
        }
    pi.subgroup = closure(grp, gens);
    return pi;
}

std::optional<Coset> paths_coset(const VoltageAssignment& va, const PiGenerators& pi, VertexId y) {
    (void)va;
    if (!pi.tree.reached.at(y)) return std::nullopt;
    return Coset{pi.tree_voltage[y], pi.subgroup, Side::Left};
}

std::optional<Coset> paths_coset(const VoltageAssignment& va, VertexId x, VertexId y, ColorSet colors) {
    return paths_coset(va, pi_generators(va, x, colors), y);
}

namespace {

class PiCache {
public:
    explicit PiCache(const VoltageAssignment& va) : va_(va) {}
    std::optional<Coset> coset(VertexId x, VertexId y, ColorSet colors) {
        const auto key = std::make_pair(x, colors.bits());
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, pi_generators(va_, x, colors)).first;
        return paths_coset(va_, it->second, y);
    }

private:
    const VoltageAssignment& va_;
    std::map<std::pair<VertexId, std::uint32_t>, PiGenerators> cache_;
};

bool same_set(const Group& g, const std::optional<Coset>& a, const std::optional<Coset>& b) {
    if (!a || !b) return !a && !b;
    return coset_equal(g, *a, *b);
}

std::string show(const Group& g, const std::optional<Coset>& c) { return c ? describe(g, *c) : "empty"; }

std::optional<Coset> intersect_opt(const Group& g, const std::optional<Coset>& a, const std::optional<Coset>& b) {
    if (!a || !b) return std::nullopt;
    return coset_intersect(g, *a, *b);
}

}  // namespace

VoltagePolytopalityReport check_polytopal_voltage(const VoltageAssignment& input) {
    if (auto r = check_derived_maniplex(input); !r.ok())
        throw PreconditionError("check_polytopal_voltage: derived graph is not a maniplex: " + r.summary());
    const VoltageAssignment va = regauge(input).va;
    const Group& grp = va.group();
    const int n = va.base().rank();
    PiCache cache(va);
    VoltagePolytopalityReport rep;
    for (int k = 1; k <= n - 1; ++k)
        for (int m = k - 1; m + 1 <= n - 1; ++m) {
            const Partition comps = k > m ? Partition::discrete(va.base().size())
                                          : components(va.base().graph(), ColorSet::interval(k, m));
            const auto reps = comps.block_minima();
            for (std::size_t a = 0; a < reps.size(); ++a)
                for (std::size_t b = a; b < reps.size(); ++b) {
                    const VertexId x = reps[a], y = reps[b];
                    const auto lhs = intersect_opt(grp, cache.coset(x, y, ColorSet::interval(0, m)),
                                                   cache.coset(x, y, ColorSet::interval(k, n - 1)));
                    std::optional<Coset> rhs;
                    if (k == m + 1) {
                        if (x == y) rhs = Coset{grp.identity(), trivial_subgroup(grp), Side::Left};
                    } else {
                        rhs = cache.coset(x, y, ColorSet::interval(k, m));
                    }
                    ++rep.checks;
                    if (!same_set(grp, lhs, rhs)) {
                        rep.verdict = Verdict::fail(
                            "k=" + std::to_string(k) + ", m=" + std::to_string(m) + ", x=" + std::to_string(x) +
                            ", y=" + std::to_string(y) + ": intersection " + show(grp, lhs) + " but [k,m] gives " +
                            show(grp, rhs));
                        return rep;
                    }
                }
        }
    return rep;
}

namespace {

VoltagePolytopalityReport battery(const VoltageAssignment& input, bool same_vertex_only) {
    if (auto r = check_derived_maniplex(input); !r.ok())
        throw PreconditionError("intersection battery: derived graph is not a maniplex: " + r.summary());
    const VoltageAssignment va = regauge(input).va;
    const Group& grp = va.group();
    const int n = va.base().rank();
    if (n > 8) throw SizeLimitError("full intersection battery is limited to rank 8");
    const std::uint32_t total = 1u << n;
    const auto nv = static_cast<VertexId>(va.base().size());
    PiCache cache(va);
    VoltagePolytopalityReport rep;
    for (VertexId x = 0; x < nv; ++x)
        for (VertexId y = same_vertex_only ? x : 0; y < (same_vertex_only ? x + 1 : nv); ++y)
            for (std::uint32_t I = 0; I < total; ++I)
                for (std::uint32_t J = I + 1; J < total; ++J) {
                    const auto lhs = intersect_opt(grp, cache.coset(x, y, ColorSet(I)), cache.coset(x, y, ColorSet(J)));
                    const auto rhs = cache.coset(x, y, ColorSet(I & J));
                    ++rep.checks;
                    if (!same_set(grp, lhs, rhs)) {
                        rep.verdict = Verdict::fail("I=" + ColorSet(I).to_string() + ", J=" + ColorSet(J).to_string() +
                                                    ", x=" + std::to_string(x) + ", y=" + std::to_string(y) +
                                                    ": intersection " + show(grp, lhs) + " but I&J gives " +
                                                    show(grp, rhs));
                        return rep;
                    }
                }
    return rep;
}

}  // namespace

VoltagePolytopalityReport check_polytopal_voltage_full(const VoltageAssignment& va) { return battery(va, false); }

VoltagePolytopalityReport check_polytopal_voltage_same_vertex(const VoltageAssignment& va) {
    return battery(va, true);
}

QuotientVoltages voltages_from_action(const Premaniplex& m, const std::vector<std::vector<VertexId>>& group) {
    const auto elems = group_closure(m, group);
    const SymmetryTypeGraph t = symmetry_type_graph(m, elems);
    const auto& sg = t.stg.graph();
    QuotientVoltages out;
    out.lift.assign(t.stg.size(), kNone);
    const BfsTree tree = bfs_tree(sg, 0, ColorSet::all(sg.rank()));
    out.lift[0] = 0;
    for (VertexId w : tree.order)
        if (auto pd = tree.parent_dart[w]) out.lift[w] = m.step(out.lift[sg.initial(*pd)], sg.color(*pd));
    // element_at[w][flag]: the element sending lift[w] to flag.
    std::vector<std::map<VertexId, std::uint32_t>> element_at(t.stg.size());
    for (VertexId w = 0; w < t.stg.size(); ++w)
        for (std::uint32_t e = 0; e < elems.size(); ++e) element_at[w][elems[e][out.lift[w]]] = e;
    std::vector<GroupElement> volt(sg.num_darts());
    for (DartId d = 0; d < sg.num_darts(); ++d) {
        const VertexId psi = m.step(out.lift[sg.initial(d)], sg.color(d));
        volt[d] = {element_at[sg.terminal(d)].at(psi)};
    }
    out.va = VoltageAssignment(t.stg, Group(as_table_group(elems)), std::move(volt));
    return out;
}

}  // namespace maniplex
