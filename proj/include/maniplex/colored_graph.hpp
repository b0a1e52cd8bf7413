#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "maniplex/common.hpp"

namespace maniplex {

enum class EdgeKind { SemiEdge, Loop, Link };

const char* to_string(EdgeKind k);

class GraphBuilder;

// Dart-based multigraph with an edge coloring. Immutable once built.
class ColoredGraph {
public:
    ColoredGraph() = default;
    // Validates the dart tables; throws InvalidArgument on a broken invariant.
    ColoredGraph(int rank, std::size_t num_vertices, std::vector<DartId> inverse,
                 std::vector<VertexId> initial, std::vector<Color> color);

    int rank() const { return rank_; }
    std::size_t num_vertices() const { return num_vertices_; }
    std::size_t num_darts() const { return inverse_.size(); }

    DartId inverse(DartId d) const { return inverse_[d]; }
    VertexId initial(DartId d) const { return initial_[d]; }
    VertexId terminal(DartId d) const { return initial_[inverse_[d]]; }
    Color color(DartId d) const { return color_[d]; }

    // Darts starting at v, ascending.
    std::span<const DartId> darts_at(VertexId v) const {
        return {out_.data() + out_start_[v], out_.data() + out_start_[v + 1]};
    }

    bool has_dart(DartId d) const { return d < inverse_.size(); }
    bool has_vertex(VertexId v) const { return v < num_vertices_; }

    const std::vector<DartId>& inverse_table() const { return inverse_; }
    const std::vector<VertexId>& initial_table() const { return initial_; }
    const std::vector<Color>& color_table() const { return color_; }

    friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
        return a.rank_ == b.rank_ && a.num_vertices_ == b.num_vertices_ && a.inverse_ == b.inverse_ &&
               a.initial_ == b.initial_ && a.color_ == b.color_;
    }

private:
    int rank_ = 0;
    std::size_t num_vertices_ = 0;
    std::vector<DartId> inverse_;
    std::vector<VertexId> initial_;
    std::vector<Color> color_;
    std::vector<std::size_t> out_start_{0};
    std::vector<DartId> out_;
};

class GraphBuilder {
public:
    GraphBuilder(int rank, std::size_t num_vertices);

    // Returns the dart leaving `a`; its inverse is the next id. a == b makes a loop.
    DartId add_link(VertexId a, VertexId b, Color c);
    DartId add_semi_edge(VertexId v, Color c);

    ColoredGraph build() const;

private:
    void check(VertexId v, Color c) const;

    int rank_;
    std::size_t num_vertices_;
    std::vector<DartId> inverse_;
    std::vector<VertexId> initial_;
    std::vector<Color> color_;
};

struct GraphPath {
    VertexId start = 0;
    std::vector<DartId> darts;

    VertexId end(const ColoredGraph& g) const { return darts.empty() ? start : g.terminal(darts.back()); }
};

struct GraphHomomorphism {
    std::vector<VertexId> vertex_map;
    std::vector<DartId> dart_map;
};

EdgeKind classify_edge(const ColoredGraph& g, DartId d);

// Components of the subgraph spanned by edges with colors in `colors`.
Partition components(const ColoredGraph& g, ColorSet colors);

// One dart per tree edge (the lower id of the pair), lowest-indexed edges first.
std::vector<DartId> spanning_forest(const ColoredGraph& g);

// BFS tree of the component of `root` in the `colors` subgraph. parent_dart[v] is the
// dart entering v from its parent, or nullopt for the root and unreached vertices.
struct BfsTree {
    VertexId root = 0;
    std::vector<std::optional<DartId>> parent_dart;
    std::vector<bool> reached;
    std::vector<VertexId> order;

    // Tree path from the root to v.
    GraphPath path_to(const ColoredGraph& g, VertexId v) const;
};
BfsTree bfs_tree(const ColoredGraph& g, VertexId root, ColorSet colors);

Verdict check_path(const ColoredGraph& g, const GraphPath& p);

Verdict check_homomorphism(const GraphHomomorphism& h, const ColoredGraph& src, const ColoredGraph& dst);
Verdict check_covering(const GraphHomomorphism& h, const ColoredGraph& src, const ColoredGraph& dst);

struct GraphAutomorphism {
    std::vector<VertexId> vertex_perm;
    std::vector<DartId> dart_perm;
};

struct Quotient {
    ColoredGraph graph;
    GraphHomomorphism projection;
};

// Orbit graph under the group generated by `elements`. Each element must be an automorphism.
Quotient quotient_by_group(const ColoredGraph& g, const std::vector<GraphAutomorphism>& elements);

// Lift of `p` along the covering h: cover -> base, starting at cover_start over p.start.
GraphPath lift_path(const ColoredGraph& cover, const ColoredGraph& base, const GraphHomomorphism& h,
                    const GraphPath& p, VertexId cover_start);

// steps[v * rank + c] is the far end of the unique color-c dart at v. nullopt when some
// vertex does not carry exactly one dart of each color.
std::optional<std::vector<VertexId>> step_table(const ColoredGraph& g);

// Extends s -> t by f(v r_c) = f(v) r_c over the component of s. Entries outside the
// component are kNone. nullopt when the extension is inconsistent.
std::optional<std::vector<VertexId>> extend_from(const std::vector<VertexId>& src_steps,
                                                 const std::vector<VertexId>& dst_steps, int rank,
                                                 std::size_t num_vertices, VertexId s, VertexId t);

// Renumbering helper: graph with vertex v renamed perm[v]; darts keep their order.
ColoredGraph relabel_vertices(const ColoredGraph& g, const std::vector<VertexId>& perm);

}  // namespace maniplex
