#include "maniplex/poset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace maniplex {

RankedPoset::RankedPoset(int rank, std::vector<int> face_rank, std::vector<std::pair<FaceId, FaceId>> covers,
                         std::vector<std::string> names)
    : rank_(rank), face_rank_(std::move(face_rank)), names_(std::move(names)), covers_(std::move(covers)) {
    if (rank < 0 || rank > kMaxRank) throw InvalidArgument("poset rank out of range");
    const std::size_t nf = face_rank_.size();
    for (FaceId f = 0; f < nf; ++f)
        if (face_rank_[f] < -1 || face_rank_[f] > rank)
            throw InvalidArgument("face " + std::to_string(f) + " has rank outside -1.." + std::to_string(rank));
    if (names_.empty()) {
        for (FaceId f = 0; f < nf; ++f) names_.push_back("f" + std::to_string(f));
    } else if (names_.size() != nf) {
        throw InvalidArgument("face names do not match the face count");
    }
    if (std::set<std::string>(names_.begin(), names_.end()).size() != nf)
        throw InvalidArgument("face names are not unique");
    up_.assign(nf, {});
    down_.assign(nf, {});
    std::sort(covers_.begin(), covers_.end());
    if (std::adjacent_find(covers_.begin(), covers_.end()) != covers_.end())
        throw InvalidArgument("duplicate cover relation");
    for (auto [lo, hi] : covers_) {
        if (lo >= nf || hi >= nf) throw InvalidArgument("cover relation names an unknown face");
        if (face_rank_[hi] != face_rank_[lo] + 1)
            throw InvalidArgument("cover " + names_[lo] + " < " + names_[hi] + " does not raise rank by one");
        up_[lo].push_back(hi);
        down_[hi].push_back(lo);
    }
    for (auto& v : up_) std::sort(v.begin(), v.end());
    for (auto& v : down_) std::sort(v.begin(), v.end());
}

std::vector<FaceId> RankedPoset::faces_of_rank(int r) const {
    std::vector<FaceId> out;
    for (FaceId f = 0; f < num_faces(); ++f)
        if (face_rank_[f] == r) out.push_back(f);
    return out;
}

bool RankedPoset::covers_pair(FaceId lower, FaceId upper) const {
    return std::binary_search(up_[lower].begin(), up_[lower].end(), upper);
}

bool RankedPoset::leq(FaceId f, FaceId g) const {
    if (f == g) return true;
    if (face_rank_[f] >= face_rank_[g]) return false;
    std::vector<FaceId> frontier{f};
    std::vector<bool> seen(num_faces(), false);
    while (!frontier.empty()) {
        std::vector<FaceId> next;
        for (FaceId x : frontier)
            for (FaceId y : up_[x]) {
                if (y == g) return true;
                if (!seen[y] && face_rank_[y] < face_rank_[g]) {
                    seen[y] = true;
                    next.push_back(y);
                }
            }
        frontier = std::move(next);
    }
    return false;
}

std::optional<FaceId> RankedPoset::find(const std::string& name) const {
    for (FaceId f = 0; f < num_faces(); ++f)
        if (names_[f] == name) return f;
    return std::nullopt;
}

RankedPoset with_bounds(const RankedPoset& p) {
    const int n = p.rank();
    std::vector<int> ranks;
    std::vector<std::string> names;
    for (FaceId f = 0; f < p.num_faces(); ++f) {
        ranks.push_back(p.face_rank(f));
        names.push_back(p.name(f));
    }
    auto covers = p.covers();
    auto fresh = [&](const std::string& base) {
        std::string s = base;
        while (std::find(names.begin(), names.end(), s) != names.end()) s += "_";
        return s;
    };
    if (p.faces_of_rank(-1).empty()) {
        const auto least = static_cast<FaceId>(ranks.size());
        ranks.push_back(-1);
        names.push_back(fresh("least"));
        for (FaceId f : p.faces_of_rank(0)) covers.emplace_back(least, f);
    }
    if (p.faces_of_rank(n).empty()) {
        const auto greatest = static_cast<FaceId>(ranks.size());
        ranks.push_back(n);
        names.push_back(fresh("greatest"));
        for (FaceId f : p.faces_of_rank(n - 1)) covers.emplace_back(f, greatest);
    }
    return RankedPoset(n, std::move(ranks), std::move(covers), std::move(names));
}

Verdict check_flagged(const RankedPoset& p) {
    if (p.num_faces() == 0) throw InvalidArgument("empty poset");
    std::vector<FaceId> minimal, maximal;
    for (FaceId f = 0; f < p.num_faces(); ++f) {
        if (p.down(f).empty()) minimal.push_back(f);
        if (p.up(f).empty()) maximal.push_back(f);
    }
    auto list = [&](const std::vector<FaceId>& fs) {
        std::string s;
        for (std::size_t i = 0; i < fs.size() && i < 4; ++i) s += (i ? ", " : "") + p.name(fs[i]);
        return s;
    };
    if (minimal.size() != 1) return Verdict::fail("no unique minimum: minimal faces " + list(minimal));
    if (maximal.size() != 1) return Verdict::fail("no unique maximum: maximal faces " + list(maximal));
    // With a unique least face of rank -1 and greatest of rank n, every maximal chain climbs
    // one rank per step, so all of them have n+2 faces.
    if (p.face_rank(minimal[0]) != -1)
        return Verdict::fail("least face " + p.name(minimal[0]) + " does not have rank -1");
    if (p.face_rank(maximal[0]) != p.rank())
        return Verdict::fail("greatest face " + p.name(maximal[0]) + " does not have rank " +
                             std::to_string(p.rank()));
    return Verdict::pass();
}

std::vector<FaceId> section_middle(const RankedPoset& p, FaceId f, FaceId g) {
    std::vector<FaceId> out;
    std::set_intersection(p.up(f).begin(), p.up(f).end(), p.down(g).begin(), p.down(g).end(),
                          std::back_inserter(out));
    return out;
}

Verdict check_diamond(const RankedPoset& p) {
    if (auto v = check_flagged(p); !v) throw PreconditionError("poset is not flagged: " + v.witness);
    for (FaceId f = 0; f < p.num_faces(); ++f) {
        std::set<FaceId> two_up;
        for (FaceId h : p.up(f))
            for (FaceId g : p.up(h)) two_up.insert(g);
        for (FaceId g : two_up) {
            const auto mid = section_middle(p, f, g);
            if (mid.size() != 2)
                return Verdict::fail("section " + p.name(f) + " < " + p.name(g) + " has " +
                                     std::to_string(mid.size()) + " middle faces");
        }
    }
    return Verdict::pass();
}

std::vector<Flag> enumerate_flags(const RankedPoset& p) {
    if (auto v = check_flagged(p); !v) throw PreconditionError("poset is not flagged: " + v.witness);
    const FaceId least = p.faces_of_rank(-1).front();
    std::vector<Flag> flags;
    Flag chain{least};
    std::function<void(FaceId)> dfs = [&](FaceId f) {
        if (p.up(f).empty()) {
            flags.push_back(chain);
            return;
        }
        for (FaceId g : p.up(f)) {
            chain.push_back(g);
            dfs(g);
            chain.pop_back();
        }
    };
    dfs(least);
    return flags;
}

FlagGraph flag_graph(const RankedPoset& p) {
    if (auto v = check_diamond(p); !v) throw PreconditionError("diamond condition fails: " + v.witness);
    FlagGraph out;
    out.flags = enumerate_flags(p);
    const int n = p.rank();
    std::map<Flag, VertexId> index;
    for (VertexId v = 0; v < out.flags.size(); ++v) index[out.flags[v]] = v;
    GraphBuilder b(n, out.flags.size());
    for (VertexId v = 0; v < out.flags.size(); ++v) {
        const Flag& phi = out.flags[v];
        for (int i = 0; i < n; ++i) {
            // Flag entries are offset by one: phi[i+1] is the i-face.
            const auto mid = section_middle(p, phi[i], phi[i + 2]);
            const FaceId other = mid[0] == phi[i + 1] ? mid[1] : mid[0];
            Flag psi = phi;
            psi[i + 1] = other;
            const VertexId w = index.at(psi);
            if (v < w) b.add_link(v, w, i);
        }
    }
    out.graph = b.build();
    return out;
}

Verdict check_strong_connectedness(const RankedPoset& p, Execution exec) {
    const FlagGraph fg = flag_graph(p);
    const int n = p.rank();
    if (n > 16) throw SizeLimitError("strong connectedness check is limited to rank 16");
    const std::size_t nf = fg.flags.size();
    std::vector<Partition> parts(1u << n);
    for (std::uint32_t mask = 0; mask < parts.size(); ++mask) parts[mask] = components(fg.graph, ColorSet(mask));
    const std::uint32_t all = ColorSet::all(n).bits();
    // First failing partner per flag, merged in flag order for a deterministic witness.
    std::vector<VertexId> first_bad(nf, kNone);
    auto scan = [&](std::int64_t a) {
        for (std::size_t b = static_cast<std::size_t>(a) + 1; b < nf; ++b) {
            std::uint32_t agree = 0;
            for (int i = 0; i < n; ++i)
                if (fg.flags[a][i + 1] == fg.flags[b][i + 1]) agree |= 1u << i;
            const Partition& part = parts[all & ~agree];
            if (part.block_of(static_cast<std::uint32_t>(a)) != part.block_of(static_cast<std::uint32_t>(b))) {
                first_bad[a] = static_cast<VertexId>(b);
                return;
            }
        }
    };
    const auto count = static_cast<std::int64_t>(nf);
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 8)
        for (std::int64_t a = 0; a < count; ++a) scan(a);
    } else {
        for (std::int64_t a = 0; a < count; ++a) scan(a);
    }
    for (VertexId a = 0; a < nf; ++a) {
        if (first_bad[a] == kNone) continue;
        auto show = [&](const Flag& f) {
            std::string s = "[";
            for (std::size_t i = 1; i + 1 < f.size(); ++i) s += (i > 1 ? " < " : "") + p.name(f[i]);
            return s + "]";
        };
        return Verdict::fail("flags " + show(fg.flags[a]) + " and " + show(fg.flags[first_bad[a]]) +
                             " are not joined through flags containing their common faces");
    }
    return Verdict::pass();
}

RankedPoset dual_poset(const RankedPoset& p) {
    const int n = p.rank();
    std::vector<int> ranks;
    std::vector<std::string> names;
    for (FaceId f = 0; f < p.num_faces(); ++f) {
        ranks.push_back(n - 1 - p.face_rank(f));
        names.push_back(p.name(f));
    }
    std::vector<std::pair<FaceId, FaceId>> covers;
    for (auto [lo, hi] : p.covers()) covers.emplace_back(hi, lo);
    return RankedPoset(n, std::move(ranks), std::move(covers), std::move(names));
}

Verdict check_poset_isomorphism(const RankedPoset& p, const RankedPoset& q, const std::vector<FaceId>& map) {
    if (p.rank() != q.rank() || p.num_faces() != q.num_faces() || map.size() != p.num_faces())
        return Verdict::fail("sizes differ");
    std::vector<bool> hit(q.num_faces(), false);
    for (FaceId f = 0; f < p.num_faces(); ++f) {
        if (map[f] >= q.num_faces() || hit[map[f]]) return Verdict::fail("face map is not a bijection");
        hit[map[f]] = true;
        if (p.face_rank(f) != q.face_rank(map[f])) return Verdict::fail("face map changes rank of " + p.name(f));
    }
    if (p.covers().size() != q.covers().size()) return Verdict::fail("cover counts differ");
    for (auto [lo, hi] : p.covers())
        if (!q.covers_pair(map[lo], map[hi]))
            return Verdict::fail("cover " + p.name(lo) + " < " + p.name(hi) + " is not preserved");
    return Verdict::pass();
}

std::optional<std::vector<FaceId>> poset_isomorphism(const RankedPoset& p, const RankedPoset& q) {
    if (p.rank() != q.rank() || p.num_faces() != q.num_faces() || p.covers().size() != q.covers().size())
        return std::nullopt;
    for (int r = -1; r <= p.rank(); ++r)
        if (p.faces_of_rank(r).size() != q.faces_of_rank(r).size()) return std::nullopt;
    const FlagGraph fp = flag_graph(p), fq = flag_graph(q);
    if (fp.flags.size() != fq.flags.size()) return std::nullopt;
    const int n = p.rank();
    const auto sp = step_table(fp.graph), sq = step_table(fq.graph);
    const Partition cp = components(fp.graph, ColorSet::all(n));
    const Partition cq = components(fq.graph, ColorSet::all(n));
    const auto bases = cp.block_minima();
    std::vector<VertexId> flag_map(fp.flags.size(), kNone);
    std::vector<bool> used(cq.num_blocks(), false);
    std::optional<std::vector<FaceId>> result;

    std::function<bool(std::size_t)> search = [&](std::size_t comp) -> bool {
        if (comp == bases.size()) {
            std::vector<FaceId> face_map(p.num_faces(), kNone);
            for (VertexId v = 0; v < fp.flags.size(); ++v)
                for (std::size_t i = 0; i < fp.flags[v].size(); ++i) {
                    auto& slot = face_map[fp.flags[v][i]];
                    const FaceId img = fq.flags[flag_map[v]][i];
                    if (slot == kNone)
                        slot = img;
                    else if (slot != img)
                        return false;
                }
            for (FaceId f = 0; f < p.num_faces(); ++f)
                if (face_map[f] == kNone) return false;
            if (!check_poset_isomorphism(p, q, face_map)) return false;
            result = std::move(face_map);
            return true;
        }
        const VertexId base = bases[comp];
        for (VertexId t = 0; t < fq.flags.size(); ++t) {
            if (used[cq.block_of(t)]) continue;
            const auto ext = extend_from(*sp, *sq, n, fp.flags.size(), base, t);
            if (!ext) continue;
            std::vector<VertexId> touched;
            std::set<VertexId> images;
            for (VertexId v = 0; v < ext->size(); ++v)
                if ((*ext)[v] != kNone) {
                    flag_map[v] = (*ext)[v];
                    touched.push_back(v);
                    images.insert((*ext)[v]);
                }
            if (images.size() == touched.size()) {
                used[cq.block_of(t)] = true;
                if (search(comp + 1)) return true;
                used[cq.block_of(t)] = false;
            }
            for (VertexId v : touched) flag_map[v] = kNone;
        }
        return false;
    };
    search(0);
    return result;
}

bool poset_isomorphic(const RankedPoset& p, const RankedPoset& q) { return poset_isomorphism(p, q).has_value(); }

PolytopalityReport polytopality(const RankedPoset& p, Execution exec) {
    PolytopalityReport r;
    r.flagged = check_flagged(p);
    if (!r.flagged) {
        r.diamond = Verdict::fail("not checked: poset is not flagged");
        r.strongly_connected = Verdict::fail("not checked: poset is not flagged");
        return r;
    }
    r.diamond = check_diamond(p);
    if (!r.diamond) {
        r.strongly_connected = Verdict::fail("not checked: diamond condition fails");
        return r;
    }
    const FlagGraph fg = flag_graph(p);
    r.flag_graph_connected = components(fg.graph, ColorSet::all(p.rank())).num_blocks() == 1;
    r.strongly_connected = check_strong_connectedness(p, exec);
    return r;
}

}  // namespace maniplex
