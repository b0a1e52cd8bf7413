#include "maniplex/colored_graph.hpp"

#include <algorithm>

namespace maniplex {

const char* to_string(EdgeKind k) {
    switch (k) {
        case EdgeKind::SemiEdge: return "semi-edge";
        case EdgeKind::Loop: return "loop";
        case EdgeKind::Link: return "link";
    }
    return "?";
}

ColoredGraph::ColoredGraph(int rank, std::size_t num_vertices, std::vector<DartId> inverse,
                           std::vector<VertexId> initial, std::vector<Color> color)
    : rank_(rank),
      num_vertices_(num_vertices),
      inverse_(std::move(inverse)),
      initial_(std::move(initial)),
      color_(std::move(color)) {
    if (rank < 0 || rank > kMaxRank) throw InvalidArgument("rank out of range: " + std::to_string(rank));
    const std::size_t nd = inverse_.size();
    if (initial_.size() != nd || color_.size() != nd)
        throw InvalidArgument("dart tables have different lengths");
    for (DartId d = 0; d < nd; ++d) {
        if (inverse_[d] >= nd) throw InvalidArgument("inverse of dart " + std::to_string(d) + " out of range");
        if (inverse_[inverse_[d]] != d)
            throw InvalidArgument("inverse is not an involution at dart " + std::to_string(d));
        if (initial_[d] >= num_vertices_)
            throw InvalidArgument("initial vertex of dart " + std::to_string(d) + " out of range");
        if (color_[d] < 0 || color_[d] >= rank)
            throw InvalidArgument("color of dart " + std::to_string(d) + " out of range");
        if (color_[d] != color_[inverse_[d]])
            throw InvalidArgument("dart " + std::to_string(d) + " and its inverse have different colors");
    }
    out_start_.assign(num_vertices_ + 1, 0);
    for (DartId d = 0; d < nd; ++d) ++out_start_[initial_[d] + 1];
    for (std::size_t v = 0; v < num_vertices_; ++v) out_start_[v + 1] += out_start_[v];
    out_.resize(nd);
    auto fill = out_start_;
    for (DartId d = 0; d < nd; ++d) out_[fill[initial_[d]]++] = d;
}

GraphBuilder::GraphBuilder(int rank, std::size_t num_vertices) : rank_(rank), num_vertices_(num_vertices) {}

void GraphBuilder::check(VertexId v, Color c) const {
    if (v >= num_vertices_) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    if (c < 0 || c >= rank_) throw InvalidArgument("color " + std::to_string(c) + " out of range");
}

DartId GraphBuilder::add_link(VertexId a, VertexId b, Color c) {
    check(a, c);
    check(b, c);
    const auto d = static_cast<DartId>(inverse_.size());
    inverse_.push_back(d + 1);
    inverse_.push_back(d);
    initial_.push_back(a);
    initial_.push_back(b);
    color_.push_back(c);
    color_.push_back(c);
    return d;
}

DartId GraphBuilder::add_semi_edge(VertexId v, Color c) {
    check(v, c);
    const auto d = static_cast<DartId>(inverse_.size());
    inverse_.push_back(d);
    initial_.push_back(v);
    color_.push_back(c);
    return d;
}

ColoredGraph GraphBuilder::build() const { return ColoredGraph(rank_, num_vertices_, inverse_, initial_, color_); }

EdgeKind classify_edge(const ColoredGraph& g, DartId d) {
    if (!g.has_dart(d)) throw InvalidArgument("unknown dart " + std::to_string(d));
    const DartId e = g.inverse(d);
    if (e == d) return EdgeKind::SemiEdge;
    if (g.initial(d) == g.initial(e)) return EdgeKind::Loop;
    return EdgeKind::Link;
}

Partition components(const ColoredGraph& g, ColorSet colors) {
    if (!colors.fits(g.rank())) throw InvalidArgument("color set " + colors.to_string() + " exceeds rank");
    DisjointSets sets(g.num_vertices());
    for (DartId d = 0; d < g.num_darts(); ++d)
        if (colors.contains(g.color(d))) sets.unite(g.initial(d), g.terminal(d));
    return Partition::from_sets(sets, g.num_vertices());
}

std::vector<DartId> spanning_forest(const ColoredGraph& g) {
    DisjointSets sets(g.num_vertices());
    std::vector<DartId> tree;
    for (DartId d = 0; d < g.num_darts(); ++d) {
        if (g.inverse(d) < d) continue;
        if (sets.unite(g.initial(d), g.terminal(d))) tree.push_back(d);
    }
    return tree;
}

GraphPath BfsTree::path_to(const ColoredGraph& g, VertexId v) const {
    if (!reached.at(v)) throw InvalidArgument("vertex " + std::to_string(v) + " not in the tree");
    GraphPath p{root, {}};
    while (v != root) {
        const DartId d = *parent_dart[v];
        p.darts.push_back(d);
        v = g.initial(d);
    }
    std::reverse(p.darts.begin(), p.darts.end());
    return p;
}

BfsTree bfs_tree(const ColoredGraph& g, VertexId root, ColorSet colors) {
    if (!g.has_vertex(root)) throw InvalidArgument("unknown vertex " + std::to_string(root));
    BfsTree t;
    t.root = root;
    t.parent_dart.assign(g.num_vertices(), std::nullopt);
    t.reached.assign(g.num_vertices(), false);
    t.reached[root] = true;
    t.order.push_back(root);
    for (std::size_t head = 0; head < t.order.size(); ++head) {
        const VertexId v = t.order[head];
        for (DartId d : g.darts_at(v)) {
            if (!colors.contains(g.color(d))) continue;
            const VertexId w = g.terminal(d);
            if (t.reached[w]) continue;
            t.reached[w] = true;
            t.parent_dart[w] = d;
            t.order.push_back(w);
        }
    }
    return t;
}

Verdict check_path(const ColoredGraph& g, const GraphPath& p) {
    if (!g.has_vertex(p.start)) return Verdict::fail("start vertex out of range");
    VertexId at = p.start;
    for (std::size_t k = 0; k < p.darts.size(); ++k) {
        const DartId d = p.darts[k];
        if (!g.has_dart(d)) return Verdict::fail("dart " + std::to_string(d) + " out of range");
        if (g.initial(d) != at)
            return Verdict::fail("dart " + std::to_string(k) + " does not start where the previous ended");
        at = g.terminal(d);
    }
    return Verdict::pass();
}

Verdict check_homomorphism(const GraphHomomorphism& h, const ColoredGraph& src, const ColoredGraph& dst) {
    if (h.vertex_map.size() != src.num_vertices() || h.dart_map.size() != src.num_darts())
        return Verdict::fail("maps are not total on the source");
    for (VertexId v = 0; v < src.num_vertices(); ++v)
        if (!dst.has_vertex(h.vertex_map[v]))
            return Verdict::fail("vertex " + std::to_string(v) + " maps outside the target");
    const bool colored = src.rank() == dst.rank();
    for (DartId d = 0; d < src.num_darts(); ++d) {
        const DartId fd = h.dart_map[d];
        const std::string at = "dart " + std::to_string(d);
        if (!dst.has_dart(fd)) return Verdict::fail(at + " maps outside the target");
        if (dst.initial(fd) != h.vertex_map[src.initial(d)])
            return Verdict::fail(at + ": I(d f) != I(d) f");
        if (h.dart_map[src.inverse(d)] != dst.inverse(fd)) return Verdict::fail(at + ": (d^-1) f != (d f)^-1");
        if (colored && dst.color(fd) != src.color(d)) return Verdict::fail(at + ": color not preserved");
    }
    return Verdict::pass();
}

Verdict check_covering(const GraphHomomorphism& h, const ColoredGraph& src, const ColoredGraph& dst) {
    if (auto v = check_homomorphism(h, src, dst); !v) return v;
    std::vector<bool> hit_v(dst.num_vertices(), false), hit_d(dst.num_darts(), false);
    for (auto w : h.vertex_map) hit_v[w] = true;
    for (auto e : h.dart_map) hit_d[e] = true;
    for (VertexId w = 0; w < dst.num_vertices(); ++w)
        if (!hit_v[w]) return Verdict::fail("vertex " + std::to_string(w) + " of the target is not covered");
    for (DartId e = 0; e < dst.num_darts(); ++e)
        if (!hit_d[e]) return Verdict::fail("dart " + std::to_string(e) + " of the target is not covered");
    for (VertexId v = 0; v < src.num_vertices(); ++v) {
        const auto out = src.darts_at(v);
        const auto target = dst.darts_at(h.vertex_map[v]);
        if (out.size() != target.size())
            return Verdict::fail("vertex " + std::to_string(v) + ": degree differs from its image");
        std::vector<DartId> imgs;
        for (DartId d : out) imgs.push_back(h.dart_map[d]);
        std::sort(imgs.begin(), imgs.end());
        if (std::adjacent_find(imgs.begin(), imgs.end()) != imgs.end())
            return Verdict::fail("vertex " + std::to_string(v) + ": two darts share an image");
    }
    return Verdict::pass();
}

Quotient quotient_by_group(const ColoredGraph& g, const std::vector<GraphAutomorphism>& elements) {
    for (std::size_t k = 0; k < elements.size(); ++k) {
        const auto& a = elements[k];
        GraphHomomorphism h{a.vertex_perm, a.dart_perm};
        if (auto v = check_homomorphism(h, g, g); !v)
            throw InvalidArgument("element " + std::to_string(k) + " is not an automorphism: " + v.witness);
        std::vector<bool> seen(g.num_vertices(), false);
        for (auto w : a.vertex_perm) seen[w] = true;
        if (std::find(seen.begin(), seen.end(), false) != seen.end())
            throw InvalidArgument("element " + std::to_string(k) + " is not bijective");
    }
    // Orbits of the generated group are the components of the generator action, so
    // explicit closure under composition is unnecessary here.
    DisjointSets vsets(g.num_vertices()), dsets(g.num_darts());
    for (const auto& a : elements) {
        for (VertexId v = 0; v < g.num_vertices(); ++v) vsets.unite(v, a.vertex_perm[v]);
        for (DartId d = 0; d < g.num_darts(); ++d) dsets.unite(d, a.dart_perm[d]);
    }
    const Partition vorb = Partition::from_sets(vsets, g.num_vertices());
    const Partition dorb = Partition::from_sets(dsets, g.num_darts());
    const auto dreps = dorb.block_minima();
    std::vector<DartId> inv(dorb.num_blocks());
    std::vector<VertexId> init(dorb.num_blocks());
    std::vector<Color> col(dorb.num_blocks());
    for (std::uint32_t b = 0; b < dorb.num_blocks(); ++b) {
        const DartId rep = dreps[b];
        inv[b] = dorb.block_of(g.inverse(rep));
        init[b] = vorb.block_of(g.initial(rep));
        col[b] = g.color(rep);
    }
    Quotient q{ColoredGraph(g.rank(), vorb.num_blocks(), std::move(inv), std::move(init), std::move(col)), {}};
    q.projection.vertex_map = vorb.labels();
    q.projection.dart_map = dorb.labels();
    return q;
}

GraphPath lift_path(const ColoredGraph& cover, const ColoredGraph& base, const GraphHomomorphism& h,
                    const GraphPath& p, VertexId cover_start) {
    if (auto v = check_path(base, p); !v) throw InvalidArgument("lift_path: " + v.witness);
    if (!cover.has_vertex(cover_start) || h.vertex_map.at(cover_start) != p.start)
        throw InvalidArgument("lift_path: start vertex does not lie over the path start");
    GraphPath out{cover_start, {}};
    VertexId at = cover_start;
    for (DartId d : p.darts) {
        std::optional<DartId> found;
        for (DartId e : cover.darts_at(at))
            if (h.dart_map[e] == d) {
                found = e;
                break;
            }
        if (!found) throw InvalidArgument("lift_path: map is not a covering at vertex " + std::to_string(at));
        out.darts.push_back(*found);
        at = cover.terminal(*found);
    }
    return out;
}

std::optional<std::vector<VertexId>> step_table(const ColoredGraph& g) {
    const int n = g.rank();
    std::vector<VertexId> steps(g.num_vertices() * static_cast<std::size_t>(n), kNone);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        for (DartId d : g.darts_at(v)) {
            auto& slot = steps[v * static_cast<std::size_t>(n) + g.color(d)];
            if (slot != kNone) return std::nullopt;
            slot = g.terminal(d);
        }
    }
    for (auto s : steps)
        if (s == kNone) return std::nullopt;
    return steps;
}

std::optional<std::vector<VertexId>> extend_from(const std::vector<VertexId>& src_steps,
                                                 const std::vector<VertexId>& dst_steps, int rank,
                                                 std::size_t num_vertices, VertexId s, VertexId t) {
    const std::size_t n = static_cast<std::size_t>(rank);
    std::vector<VertexId> f(num_vertices, kNone);
    std::vector<VertexId> queue{s};
    f[s] = t;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const VertexId v = queue[head];
        for (std::size_t c = 0; c < n; ++c) {
            const VertexId w = src_steps[v * n + c];
            const VertexId fw = dst_steps[f[v] * n + c];
            if (f[w] == kNone) {
                f[w] = fw;
                queue.push_back(w);
            } else if (f[w] != fw) {
                return std::nullopt;
            }
        }
    }
    return f;
}

ColoredGraph relabel_vertices(const ColoredGraph& g, const std::vector<VertexId>& perm) {
    if (perm.size() != g.num_vertices()) throw InvalidArgument("relabel_vertices: wrong permutation size");
    std::vector<VertexId> init(g.num_darts());
    for (DartId d = 0; d < g.num_darts(); ++d) init[d] = perm[g.initial(d)];
    return ColoredGraph(g.rank(), g.num_vertices(), g.inverse_table(), std::move(init), g.color_table());
}

}  // namespace maniplex
