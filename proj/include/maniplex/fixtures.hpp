#pragma once

#include <string>
#include <vector>

#include "maniplex/group.hpp"
#include "maniplex/poset.hpp"
#include "maniplex/premaniplex.hpp"
#include "maniplex/voltage.hpp"

// Small named objects used by the tests, the acceptance run and the fixture files.
namespace maniplex::fixtures {

// by_rank[i] lists the vertex sets of the (i+1)-faces, i = 0..rank-2; vertices are 0..num_vertices-1.
// Covers follow vertex-set inclusion.
RankedPoset lattice_from_vertex_sets(int rank, int num_vertices,
                                     const std::vector<std::vector<std::vector<int>>>& by_rank);
// Merges face b into face a (same rank); covers are rewired, not recomputed.
RankedPoset identify_faces(const RankedPoset& p, FaceId a, FaceId b);

RankedPoset simplex(int n);  // subsets of {0..n}, rank |S| - 1
RankedPoset triangle();
RankedPoset tetrahedron();
RankedPoset square();
RankedPoset cube();
RankedPoset prism();              // triangular prism
RankedPoset glued_cubes();        // two cubes sharing a vertex
RankedPoset identified_cube();    // cube with opposite vertices 0 and 7 identified
RankedPoset ej_hasse();           // fails the diamond condition
RankedPoset simplex_with_extra_vertex();  // fails flaggedness: an isolated vertex

Premaniplex hemicube();
Premaniplex wpip_violator();  // 4 flags, rank 3
Premaniplex tetra_flag_graph();
Premaniplex prism_flag_graph();
Premaniplex prism_stg();  // under the full automorphism group

struct GeneratedGroup {
    Group group;
    std::vector<GroupElement> gens;
};
// S_4 generated by (0 1), (1 2), (2 3).
GeneratedGroup symmetric_s4();
// Dihedral group of order 8 generated by two reflections of the square.
GeneratedGroup dihedral_d4();

struct NamedAssignment {
    std::string name;
    VoltageAssignment va;
};
// Assignments whose derived graphs are maniplexes of at most a few hundred flags.
std::vector<NamedAssignment> voltage_fixtures();

struct NamedPoset {
    std::string name;
    RankedPoset poset;
};
std::vector<NamedPoset> poset_fixtures();

}  // namespace maniplex::fixtures
