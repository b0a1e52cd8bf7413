#include "maniplex/premaniplex.hpp"

#include <algorithm>
#include <set>

namespace maniplex {

Verdict validate_premaniplex(const ColoredGraph& g) {
    const int n = g.rank();
    if (g.num_vertices() == 0) return Verdict::fail("graph has no vertices");
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        std::vector<int> count(static_cast<std::size_t>(n), 0);
        for (DartId d : g.darts_at(v)) {
            if (classify_edge(g, d) == EdgeKind::Loop)
                return Verdict::fail("loop of color " + std::to_string(g.color(d)) + " at vertex " +
                                     std::to_string(v) + " gives it two darts of that color");
            ++count[static_cast<std::size_t>(g.color(d))];
        }
        for (int c = 0; c < n; ++c) {
            if (count[c] == 0)
                return Verdict::fail("vertex " + std::to_string(v) + " has no edge of color " + std::to_string(c));
            if (count[c] > 1)
                return Verdict::fail("vertex " + std::to_string(v) + " has " + std::to_string(count[c]) +
                                     " edges of color " + std::to_string(c));
        }
    }
    if (components(g, ColorSet::all(n)).num_blocks() != 1) return Verdict::fail("graph is disconnected");
    const auto steps = *step_table(g);
    auto step = [&](VertexId v, int c) { return steps[v * static_cast<std::size_t>(n) + c]; };
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        for (int i = 0; i < n; ++i)
            for (int j = i + 2; j < n; ++j) {
                if (step(step(step(step(v, i), j), i), j) != v)
                    return Verdict::fail("alternating path " + std::to_string(i) + "," + std::to_string(j) + "," +
                                         std::to_string(i) + "," + std::to_string(j) + " from vertex " +
                                         std::to_string(v) + " is not closed");
            }
    return Verdict::pass();
}

Premaniplex::Premaniplex(ColoredGraph g) : graph_(std::move(g)) {
    if (auto v = validate_premaniplex(graph_); !v) throw PreconditionError("not a premaniplex: " + v.witness);
    steps_ = *step_table(graph_);
    darts_.assign(steps_.size(), 0);
    for (DartId d = 0; d < graph_.num_darts(); ++d)
        darts_[graph_.initial(d) * static_cast<std::size_t>(rank()) + graph_.color(d)] = d;
}

Verdict is_maniplex(const ColoredGraph& g) {
    if (auto v = validate_premaniplex(g); !v) return Verdict::fail("not a premaniplex: " + v.witness);
    for (DartId d = 0; d < g.num_darts(); ++d)
        if (g.inverse(d) == d)
            return Verdict::fail("semi-edges: color " + std::to_string(g.color(d)) + " at vertex " +
                                 std::to_string(g.initial(d)));
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        std::vector<std::pair<VertexId, Color>> ends;
        for (DartId d : g.darts_at(v)) ends.emplace_back(g.terminal(d), g.color(d));
        std::sort(ends.begin(), ends.end());
        for (std::size_t k = 1; k < ends.size(); ++k)
            if (ends[k].first == ends[k - 1].first)
                return Verdict::fail("parallel edges: colors " + std::to_string(ends[k - 1].second) + " and " +
                                     std::to_string(ends[k].second) + " between vertices " + std::to_string(v) +
                                     " and " + std::to_string(ends[k].first));
    }
    return Verdict::pass();
}

Verdict is_maniplex(const Premaniplex& x) { return is_maniplex(x.graph()); }

VertexId monodromy_apply(const Premaniplex& x, VertexId v, const std::vector<Color>& word) {
    if (v >= x.size()) throw InvalidArgument("vertex out of range");
    for (Color c : word) {
        if (c < 0 || c >= x.rank()) throw InvalidArgument("color " + std::to_string(c) + " out of range");
        v = x.step(v, c);
    }
    return v;
}

Premaniplex dual_premaniplex(const Premaniplex& x) {
    const auto& g = x.graph();
    std::vector<Color> colors(g.num_darts());
    for (DartId d = 0; d < g.num_darts(); ++d) colors[d] = g.rank() - 1 - g.color(d);
    return Premaniplex(ColoredGraph(g.rank(), g.num_vertices(), g.inverse_table(), g.initial_table(), colors));
}

Partition chains_of_type(const Premaniplex& x, ColorSet k) {
    if (!k.fits(x.rank())) throw InvalidArgument("chain type " + k.to_string() + " exceeds rank");
    return components(x.graph(), k.complement(x.rank()));
}

namespace {

void require_maniplex(const Premaniplex& m, const char* op) {
    if (auto v = is_maniplex(m); !v) throw PreconditionError(std::string(op) + ": not a maniplex: " + v.witness);
}

// First pair (a, b) in the same block of `coarse` but different blocks of `fine`.
std::optional<std::pair<VertexId, VertexId>> split_pair(const Partition& coarse, const Partition& fine) {
    std::vector<VertexId> rep(coarse.num_blocks(), kNone);
    for (VertexId v = 0; v < coarse.size(); ++v) {
        auto& r = rep[coarse.block_of(v)];
        if (r == kNone)
            r = v;
        else if (fine.block_of(r) != fine.block_of(v))
            return std::make_pair(r, v);
    }
    return std::nullopt;
}

}  // namespace

WpipReport wpip_check(const Premaniplex& m, Execution exec) {
    require_maniplex(m, "wpip_check");
    const int n = m.rank();
    auto interval = [&](int a, int b) {
        return b < a ? Partition::discrete(m.size()) : components(m.graph(), ColorSet::interval(a, b));
    };
    std::vector<std::pair<int, int>> pairs;
    for (int k = 0; k < n; ++k)
        for (int mm = 0; mm < n; ++mm) pairs.emplace_back(k, mm);
    std::vector<std::optional<std::pair<VertexId, VertexId>>> bad(pairs.size());
    auto task = [&](std::int64_t t) {
        const auto [k, mm] = pairs[static_cast<std::size_t>(t)];
        const Partition low = interval(0, mm), high = interval(k, n - 1), mid = interval(k, mm);
        bad[static_cast<std::size_t>(t)] = split_pair(meet(low, high), mid);
    };
    const auto count = static_cast<std::int64_t>(pairs.size());
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t t = 0; t < count; ++t) task(t);
    } else {
        for (std::int64_t t = 0; t < count; ++t) task(t);
    }
    WpipReport r;
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        if (!bad[t]) continue;
        const auto [k, mm] = pairs[t];
        r.ok = false;
        r.violation = WpipViolation{k, mm, bad[t]->first, bad[t]->second};
        r.witness = "flags " + std::to_string(bad[t]->first) + " and " + std::to_string(bad[t]->second) +
                    " are joined over [0," + std::to_string(mm) + "] and [" + std::to_string(k) + "," +
                    std::to_string(n - 1) + "] but not over [" + std::to_string(k) + "," + std::to_string(mm) + "]";
        break;
    }
    return r;
}

Verdict spip_check(const Premaniplex& m, Execution exec) {
    require_maniplex(m, "spip_check");
    const int n = m.rank();
    if (n > 6) throw SizeLimitError("spip_check is limited to rank 6");
    const std::uint32_t total = 1u << n;
    std::vector<Partition> parts(total);
    for (std::uint32_t s = 0; s < total; ++s) parts[s] = components(m.graph(), ColorSet(s));
    std::vector<std::optional<std::pair<std::uint32_t, std::pair<VertexId, VertexId>>>> bad(total);
    auto task = [&](std::int64_t i) {
        const auto I = static_cast<std::uint32_t>(i);
        for (std::uint32_t J = I + 1; J < total; ++J) {
            if (auto p = split_pair(meet(parts[I], parts[J]), parts[I & J])) {
                bad[I] = std::make_pair(J, *p);
                return;
            }
        }
    };
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(total); ++i) task(i);
    } else {
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(total); ++i) task(i);
    }
    for (std::uint32_t I = 0; I < total; ++I)
        if (bad[I]) {
            const auto& [J, ab] = *bad[I];
            return Verdict::fail("flags " + std::to_string(ab.first) + " and " + std::to_string(ab.second) +
                                 " are joined over " + ColorSet(I).to_string() + " and " + ColorSet(J).to_string() +
                                 " but not over " + ColorSet(I & J).to_string());
        }
    return Verdict::pass();
}

ManiplexPoset poset_from_maniplex(const Premaniplex& m) {
    require_maniplex(m, "poset_from_maniplex");
    const int n = m.rank();
    ManiplexPoset out;
    std::vector<int> ranks{-1};
    std::vector<std::string> names{"-1:0"};
    std::vector<std::vector<FaceId>> first_id(static_cast<std::size_t>(n));
    out.face_of.assign(static_cast<std::size_t>(n), {});
    for (int i = 0; i < n; ++i) {
        const Partition faces = components(m.graph(), ColorSet::all(n).without(i));
        const auto base = static_cast<FaceId>(ranks.size());
        for (std::uint32_t b = 0; b < faces.num_blocks(); ++b) {
            ranks.push_back(i);
            names.push_back(std::to_string(i) + ":" + std::to_string(b));
        }
        out.face_of[i].resize(m.size());
        for (VertexId v = 0; v < m.size(); ++v) out.face_of[i][v] = base + faces.block_of(v);
    }
    const auto greatest = static_cast<FaceId>(ranks.size());
    ranks.push_back(n);
    names.push_back(std::to_string(n) + ":0");
    std::set<std::pair<FaceId, FaceId>> covers;
    for (VertexId v = 0; v < m.size(); ++v) {
        covers.emplace(0, n > 0 ? out.face_of[0][v] : greatest);
        for (int i = 0; i + 1 < n; ++i) covers.emplace(out.face_of[i][v], out.face_of[i + 1][v]);
        if (n > 0) covers.emplace(out.face_of[n - 1][v], greatest);
    }
    out.poset = RankedPoset(n, std::move(ranks), {covers.begin(), covers.end()}, std::move(names));
    return out;
}

std::optional<std::vector<VertexId>> premaniplex_isomorphism(const Premaniplex& x, const Premaniplex& y) {
    if (x.rank() != y.rank() || x.size() != y.size() || x.graph().num_darts() != y.graph().num_darts())
        return std::nullopt;
    for (VertexId t = 0; t < y.size(); ++t) {
        auto f = extend_from(x.steps(), y.steps(), x.rank(), x.size(), 0, t);
        if (!f) continue;
        std::vector<bool> hit(y.size(), false);
        bool ok = true;
        for (auto w : *f) {
            if (w == kNone || hit[w]) {
                ok = false;
                break;
            }
            hit[w] = true;
        }
        if (ok) return f;
    }
    return std::nullopt;
}

std::optional<GraphHomomorphism> premaniplex_homomorphism(const Premaniplex& x, const Premaniplex& y, VertexId x0,
                                                          VertexId y0) {
    if (x.rank() != y.rank()) return std::nullopt;
    auto f = extend_from(x.steps(), y.steps(), x.rank(), x.size(), x0, y0);
    if (!f) return std::nullopt;
    GraphHomomorphism h;
    h.vertex_map = *f;
    h.dart_map.resize(x.graph().num_darts());
    for (DartId d = 0; d < x.graph().num_darts(); ++d)
        h.dart_map[d] = y.dart(h.vertex_map[x.graph().initial(d)], x.graph().color(d));
    if (!check_homomorphism(h, x.graph(), y.graph())) return std::nullopt;
    return h;
}

std::optional<Premaniplex> quotient_by_relation(const Premaniplex& x, const std::vector<std::uint32_t>& labels) {
    if (labels.size() != x.size()) throw InvalidArgument("quotient_by_relation: label count mismatch");
    const Partition p = Partition::from_labels(labels);
    const int n = x.rank();
    std::vector<std::uint32_t> step(p.num_blocks() * static_cast<std::size_t>(n), kNone);
    for (VertexId v = 0; v < x.size(); ++v)
        for (int c = 0; c < n; ++c) {
            auto& s = step[p.block_of(v) * static_cast<std::size_t>(n) + c];
            const auto t = p.block_of(x.step(v, c));
            if (s == kNone)
                s = t;
            else if (s != t)
                return std::nullopt;
        }
    GraphBuilder b(n, p.num_blocks());
    for (std::uint32_t cls = 0; cls < p.num_blocks(); ++cls)
        for (int c = 0; c < n; ++c) {
            const auto t = step[cls * static_cast<std::size_t>(n) + c];
            if (t == cls)
                b.add_semi_edge(cls, c);
            else if (cls < t)
                b.add_link(cls, t, c);
        }
    return Premaniplex(b.build());
}

}  // namespace maniplex
