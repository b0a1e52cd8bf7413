#pragma once

#include <optional>
#include <vector>

#include "maniplex/colored_graph.hpp"
#include "maniplex/poset.hpp"

namespace maniplex {

// Connected graph with one dart of each color at every vertex and closed alternating
// 4-paths for non-consecutive colors.
Verdict validate_premaniplex(const ColoredGraph& g);

class Premaniplex {
public:
    Premaniplex() = default;
    // Throws PreconditionError when validate_premaniplex fails.
    explicit Premaniplex(ColoredGraph g);

    const ColoredGraph& graph() const { return graph_; }
    int rank() const { return graph_.rank(); }
    std::size_t size() const { return graph_.num_vertices(); }
    // Far end of the color-c dart at v (v r_c).
    VertexId step(VertexId v, Color c) const { return steps_[v * static_cast<std::size_t>(rank()) + c]; }
    DartId dart(VertexId v, Color c) const { return darts_[v * static_cast<std::size_t>(rank()) + c]; }
    const std::vector<VertexId>& steps() const { return steps_; }
    bool degenerate() const { return rank() <= 2; }

private:
    ColoredGraph graph_;
    std::vector<VertexId> steps_;
    std::vector<DartId> darts_;
};

// Simple: no semi-edges, no loops, no parallel edges. Non-premaniplexes are reported as false.
Verdict is_maniplex(const ColoredGraph& g);
Verdict is_maniplex(const Premaniplex& x);

// Applies r_{w1}, then r_{w2}, ... to v.
VertexId monodromy_apply(const Premaniplex& x, VertexId v, const std::vector<Color>& word);

Premaniplex dual_premaniplex(const Premaniplex& x);

// K-chains: components of the subgraph over the colors outside K.
Partition chains_of_type(const Premaniplex& x, ColorSet k);

struct WpipViolation {
    int k = 0, m = 0;
    VertexId a = 0, b = 0;
};
struct WpipReport {
    bool ok = true;
    std::optional<WpipViolation> violation;
    std::string witness;
};
// Weak path intersection property over all pairs (k, m).
WpipReport wpip_check(const Premaniplex& m, Execution exec = Execution::Parallel);
// All pairs of color sets; limited to rank 6.
Verdict spip_check(const Premaniplex& m, Execution exec = Execution::Parallel);

// P(M): i-faces are the components without color i, ordered by intersection.
struct ManiplexPoset {
    RankedPoset poset;
    // face_of[i][v]: face id of the i-face containing flag v, for i in 0..n-1.
    std::vector<std::vector<FaceId>> face_of;
};
ManiplexPoset poset_from_maniplex(const Premaniplex& m);

// Vertex isomorphism X -> Y of connected premaniplexes, found by base-vertex extension.
std::optional<std::vector<VertexId>> premaniplex_isomorphism(const Premaniplex& x, const Premaniplex& y);
// Homomorphism X -> Y sending x0 to y0 if one exists.
std::optional<GraphHomomorphism> premaniplex_homomorphism(const Premaniplex& x, const Premaniplex& y, VertexId x0,
                                                          VertexId y0);

// Quotient by a vertex equivalence compatible with every r_c. nullopt when incompatible.
std::optional<Premaniplex> quotient_by_relation(const Premaniplex& x, const std::vector<std::uint32_t>& labels);

}  // namespace maniplex
