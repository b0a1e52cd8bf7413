#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maniplex/colored_graph.hpp"
#include "maniplex/common.hpp"

namespace maniplex {

using FaceId = std::uint32_t;

// Finite ranked poset stored by its Hasse diagram. Ranks run from -1 to rank().
class RankedPoset {
public:
    RankedPoset() = default;
    // covers are (lower, upper) pairs; every cover must raise rank by exactly one.
    RankedPoset(int rank, std::vector<int> face_rank, std::vector<std::pair<FaceId, FaceId>> covers,
                std::vector<std::string> names = {});

    int rank() const { return rank_; }
    std::size_t num_faces() const { return face_rank_.size(); }
    int face_rank(FaceId f) const { return face_rank_[f]; }
    const std::string& name(FaceId f) const { return names_[f]; }
    const std::vector<FaceId>& up(FaceId f) const { return up_[f]; }
    const std::vector<FaceId>& down(FaceId f) const { return down_[f]; }
    const std::vector<std::pair<FaceId, FaceId>>& covers() const { return covers_; }
    std::vector<FaceId> faces_of_rank(int r) const;
    bool covers_pair(FaceId lower, FaceId upper) const;
    // F <= G, by upward search through covers.
    bool leq(FaceId f, FaceId g) const;
    std::optional<FaceId> find(const std::string& name) const;

private:
    int rank_ = 0;
    std::vector<int> face_rank_;
    std::vector<std::string> names_;
    std::vector<std::pair<FaceId, FaceId>> covers_;
    std::vector<std::vector<FaceId>> up_, down_;
};

// Adds a least face (rank -1) and/or greatest face (rank n) when missing.
RankedPoset with_bounds(const RankedPoset& p);

Verdict check_flagged(const RankedPoset& p);

// Faces H with F < H < G.
std::vector<FaceId> section_middle(const RankedPoset& p, FaceId f, FaceId g);
Verdict check_diamond(const RankedPoset& p);

// A flag lists one face per rank -1..n.
using Flag = std::vector<FaceId>;
std::vector<Flag> enumerate_flags(const RankedPoset& p);

Verdict check_strong_connectedness(const RankedPoset& p, Execution exec = Execution::Parallel);

struct FlagGraph {
    ColoredGraph graph;
    std::vector<Flag> flags;  // flags[v] is the flag of vertex v
};
FlagGraph flag_graph(const RankedPoset& p);

RankedPoset dual_poset(const RankedPoset& p);

// Poset isomorphism found through the flag graphs; maps face ids of p to face ids of q.
std::optional<std::vector<FaceId>> poset_isomorphism(const RankedPoset& p, const RankedPoset& q);
bool poset_isomorphic(const RankedPoset& p, const RankedPoset& q);
Verdict check_poset_isomorphism(const RankedPoset& p, const RankedPoset& q, const std::vector<FaceId>& map);

// Flagged, diamond and strongly flag-connected.
struct PolytopalityReport {
    Verdict flagged;
    Verdict diamond;
    Verdict strongly_connected;
    bool flag_graph_connected = false;
    bool is_polytope() const { return flagged.ok && diamond.ok && strongly_connected.ok; }
};
PolytopalityReport polytopality(const RankedPoset& p, Execution exec = Execution::Parallel);

}  // namespace maniplex
