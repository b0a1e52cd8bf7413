#pragma once

#include <optional>
#include <vector>

#include "maniplex/group.hpp"
#include "maniplex/poset.hpp"
#include "maniplex/voltage.hpp"

namespace maniplex {

// Face (rank, component of X_{ī}, right coset H_C γ). Equal subgroups at different
// ranks or components stay distinct faces.
struct CosetFace {
    int rank = 0;
    std::uint32_t component = 0;
    GroupElement rep;  // canonical (least) element of the coset
};

class CosetGeometry {
public:
    // Precondition: check_polytopal_voltage passes.
    explicit CosetGeometry(const VoltageAssignment& va, Execution exec = Execution::Parallel);

    const VoltageAssignment& assignment() const { return va_; }
    int rank() const { return va_.base().rank(); }
    const RankedPoset& poset() const { return poset_; }
    const std::vector<CosetFace>& faces() const { return faces_; }  // indexed by poset face id
    FaceId least() const { return least_; }
    FaceId greatest() const { return greatest_; }

    // f(C): least vertex of the component of X_{ī} containing y.
    VertexId base_vertex(int i, VertexId y) const;
    // α^y_i = xi(W^y_i), the tree path from f(C) to y inside X_{ī}.
    GroupElement alpha(int i, VertexId y) const;
    const Subgroup& stabilizer(int i, VertexId y) const;

    // The defining relation for ranks i < j; `via` restricts the test to one shared vertex.
    bool related(FaceId f, FaceId g, std::optional<VertexId> via = std::nullopt) const;
    // Face of rank i that contains the derived flag (y, τ).
    FaceId face_of_flag(int i, VertexId y, GroupElement tau) const;
    // Right multiplication by σ.
    FaceId act(FaceId f, GroupElement sigma) const;
    std::vector<VertexId> shared_vertices(FaceId f, FaceId g) const;

private:
    FaceId lookup(int i, std::uint32_t comp, GroupElement rep) const;

    VoltageAssignment va_;
    std::vector<Partition> comps_;                          // per rank, components of X_{ī}
    std::vector<std::vector<VertexId>> base_;               // per rank, per component
    std::vector<std::vector<GroupElement>> alpha_;          // per rank, per vertex
    std::vector<std::vector<Subgroup>> stab_;               // per rank, per component
    std::vector<std::vector<std::vector<FaceId>>> index_;   // per rank, per component: faces
    std::vector<CosetFace> faces_;
    FaceId least_ = 0, greatest_ = 0;
    RankedPoset poset_;
};

RankedPoset build_coset_polytope(const VoltageAssignment& va, Execution exec = Execution::Parallel);

// The one-vertex premaniplex with semi-edge i carrying ρ_i.
VoltageAssignment regular_assignment(const Group& g, const std::vector<GroupElement>& gens);
// Faces are right cosets of Γ_{ī} ordered by nonempty intersection. Precondition:
// check_string_c_group passes.
RankedPoset build_regular_polytope(const Group& g, const std::vector<GroupElement>& gens);

struct OrbitComparison {
    std::size_t group_orbits = 0;
    std::size_t full_orbits = 0;
    std::size_t flags = 0;
    std::size_t full_aut_order = 0;
    bool extra_symmetry() const { return full_orbits != group_orbits; }
};
OrbitComparison group_action_orbits(const RankedPoset& p, const VoltageAssignment& va);

}  // namespace maniplex
