#pragma once

#include <vector>

#include "maniplex/colored_graph.hpp"
#include "maniplex/group.hpp"
#include "maniplex/premaniplex.hpp"

namespace maniplex {

// Automorphism of a maniplex as a permutation of its flags.
using FlagPerm = std::vector<VertexId>;

// All automorphisms, ordered by the image of flag 0 (the identity comes first).
std::vector<FlagPerm> automorphism_group(const Premaniplex& m, Execution exec = Execution::Parallel);

Verdict check_automorphism(const Premaniplex& m, const FlagPerm& a);
// Closure of `gens` under composition, keyed by the image of flag 0 (the action is free).
std::vector<FlagPerm> group_closure(const Premaniplex& m, const std::vector<FlagPerm>& gens);
// a then b.
FlagPerm compose(const FlagPerm& a, const FlagPerm& b);
FlagPerm inverse(const FlagPerm& a);
GraphAutomorphism as_graph_automorphism(const Premaniplex& m, const FlagPerm& a);
// Table group on the elements of `elements` (assumed closed), with product "first then second".
TableGroup as_table_group(const std::vector<FlagPerm>& elements);

Partition flag_orbits(const Premaniplex& m, const std::vector<FlagPerm>& group);

struct SymmetryTypeGraph {
    Premaniplex stg;
    GraphHomomorphism projection;
};
SymmetryTypeGraph symmetry_type_graph(const Premaniplex& m, const std::vector<FlagPerm>& group);

// H <= G: the natural map T_H(M) -> T_G(M) is a covering.
Verdict check_stg_cover(const Premaniplex& m, const std::vector<FlagPerm>& h, const std::vector<FlagPerm>& g);

// Components of the STG without the colors of K: one per orbit of K-chains.
Partition face_orbit_components(const Premaniplex& stg, ColorSet k);

}  // namespace maniplex
