#include "maniplex/caterpillar.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "maniplex/symmetry.hpp"

namespace maniplex {

Verdict CaterpillarWord::validate() const {
    if (rank < 1 || rank > kMaxRank) return Verdict::fail("rank " + std::to_string(rank) + " out of range");
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] < 0 || word[i] >= rank)
            return Verdict::fail("color " + std::to_string(word[i]) + " at position " + std::to_string(i + 1) +
                                 " outside [0," + std::to_string(rank) + ")");
        if (i > 0 && std::abs(word[i] - word[i - 1]) != 1)
            return Verdict::fail("consecutive colors " + std::to_string(word[i - 1]) + "," + std::to_string(word[i]) +
                                 " at positions " + std::to_string(i) + "," + std::to_string(i + 1) +
                                 " do not differ by one");
    }
    return Verdict::pass();
}

CaterpillarWord CaterpillarWord::parse(int rank, const std::string& text) {
    CaterpillarWord cw{rank, {}};
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int c = 0;
        try {
            c = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw InvalidArgument("bad color '" + item + "' in word");
        }
        if (used != item.size()) throw InvalidArgument("bad color '" + item + "' in word");
        cw.word.push_back(c);
    }
    return cw;
}

std::string CaterpillarWord::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < word.size(); ++i) s += (i ? "," : "") + std::to_string(word[i]);
    return s;
}

namespace {

void require_valid(const CaterpillarWord& cw) {
    if (auto v = cw.validate(); !v) throw InvalidArgument("caterpillar word: " + v.witness);
}

bool has_link(const CaterpillarWord& cw, std::size_t i, Color c) {
    return (i > 0 && cw.word[i - 1] == c) || (i < cw.word.size() && cw.word[i] == c);
}

}  // namespace

Premaniplex caterpillar_to_premaniplex(const CaterpillarWord& cw) {
    require_valid(cw);
    const std::size_t k = cw.length();
    GraphBuilder b(cw.rank, k + 1);
    for (std::size_t i = 0; i < k; ++i)
        b.add_link(static_cast<VertexId>(i), static_cast<VertexId>(i + 1), cw.word[i]);
    for (std::size_t i = 0; i <= k; ++i)
        for (Color c = 0; c < cw.rank; ++c)
            if (!has_link(cw, i, c)) b.add_semi_edge(static_cast<VertexId>(i), c);
    return Premaniplex(b.build());
}

namespace {

// Generator index per (vertex, semi-edge color); -1 on links.
std::vector<std::vector<int>> fresh_generators(const CaterpillarWord& cw, int& dim) {
    const std::size_t k = cw.length();
    std::vector<std::vector<int>> gen(k + 1, std::vector<int>(static_cast<std::size_t>(cw.rank), -1));
    dim = 0;
    for (std::size_t i = 0; i <= k; ++i)
        for (Color j = 0; j < cw.rank; ++j) {
            if (has_link(cw, i, j)) continue;
            if (i > 0 && std::abs(j - cw.word[i - 1]) > 1)
                gen[i][j] = gen[i - 1][j];
            else
                gen[i][j] = dim++;
        }
    return gen;
}

}  // namespace

int boolean_dimension(const CaterpillarWord& cw) {
    require_valid(cw);
    int dim = 0;
    fresh_generators(cw, dim);
    return dim;
}

VoltageAssignment boolean_voltages(const CaterpillarWord& cw) {
    Premaniplex x = caterpillar_to_premaniplex(cw);
    int dim = 0;
    const auto gen = fresh_generators(cw, dim);
    if (dim > 62) throw InvalidArgument("caterpillar word needs " + std::to_string(dim) + " generators, limit is 62");
    std::vector<GroupElement> volt(x.graph().num_darts());
    for (VertexId v = 0; v < x.size(); ++v)
        for (Color c = 0; c < cw.rank; ++c)
            if (gen[v][c] >= 0) volt[x.dart(v, c)] = GroupElement{std::uint64_t{1} << gen[v][c]};
    return VoltageAssignment(std::move(x), Group(BooleanGroup{dim}), std::move(volt));
}

std::vector<FoldingReport> enumerate_foldings(const CaterpillarWord& cw) {
    require_valid(cw);
    const int k = static_cast<int>(cw.length());
    std::vector<FoldingReport> out;
    for (int r = 0; r < k; ++r) {
        const int period = 2 * r + 2;
        const int rem = (k + 1) % period;
        FoldingReport f;
        if (rem == 0)
            f.pattern_case = 1;
        else if (rem == r + 1)
            f.pattern_case = 2;
        else
            continue;
        f.r = r;
        f.quotient_word.assign(cw.word.begin(), cw.word.begin() + r);
        auto q_of = [&](int i) { return i % period; };
        for (int i = 0; i <= k; ++i) {
            const int q = q_of(i);
            f.vertex_map.push_back(static_cast<VertexId>(q <= r ? q : 2 * r + 1 - q));
        }
        bool ok = true;
        for (int i = 1; i <= k && ok; ++i) {
            const VertexId u = f.vertex_map[i - 1], v = f.vertex_map[i];
            const Color c = cw.word[i - 1];
            if (u == v)
                (q_of(i - 1) == r ? f.a : f.b).push_back(c);
            else
                ok = c == f.quotient_word[std::min(u, v)];
        }
        if (!ok) continue;
        out.push_back(std::move(f));
    }
    return out;
}

Premaniplex folding_quotient(const CaterpillarWord& cw, const FoldingReport& f) {
    auto q = quotient_by_relation(caterpillar_to_premaniplex(cw), f.vertex_map);
    if (!q) throw PipelineError("folding with r=" + std::to_string(f.r) + " is not a quotient");
    return *q;
}

CaterpillarClass classify_caterpillar(const CaterpillarWord& cw) {
    require_valid(cw);
    const int n = cw.rank;
    const auto& s = cw.word;
    CaterpillarClass out;
    out.symmetric = !s.empty() && std::equal(s.begin(), s.end(), s.rbegin());
    auto all_equal = [](const std::vector<Color>& v, Color x) {
        return std::all_of(v.begin(), v.end(), [x](Color c) { return c == x; });
    };
    auto allowed_pair = [n](Color c, Color x) { return (c == 1 && x == 0) || (c == n - 2 && x == n - 1); };
    for (const auto& f : enumerate_foldings(cw)) {
        if (f.r < 1) continue;
        const Color c1 = s.front(), cr = f.quotient_word.back();
        bool hit = false;
        if (f.pattern_case == 1 && (c1 == 1 || c1 == n - 2)) {
            for (Color b : {Color{0}, Color(n - 1)})
                if (allowed_pair(c1, b) && all_equal(f.b, b)) hit = true;
            out.case3 = out.case3 || hit;
        }
        if (f.pattern_case == 2 && !f.a.empty() && !f.b.empty()) {
            const Color a = f.a.front(), b = f.b.front();
            if (all_equal(f.a, a) && all_equal(f.b, b) && allowed_pair(c1, b) && allowed_pair(cr, a)) {
                out.case4 = true;
                hit = true;
            }
        }
        if (hit && !out.match) out.match = f;
    }
    out.boolean_stg = !out.symmetric && !out.case3 && !out.case4;
    return out;
}

CaterpillarWord generate_korbit_word(int n, int k) {
    if (n < 3 || k < 3)
        throw InvalidArgument("generate_korbit_word needs n >= 3 and k >= 3, got n=" + std::to_string(n) +
                              ", k=" + std::to_string(k));
    CaterpillarWord cw{n, {0}};
    while (static_cast<int>(cw.word.size()) < k - 1) cw.word.push_back(cw.word.size() % 2 ? 1 : 2);
    return cw;
}

CaterpillarBuild caterpillar_pipeline(const CaterpillarWord& cw, std::size_t max_flags, Execution exec) {
    const VoltageAssignment va = boolean_voltages(cw);
    if (auto d = check_derived_maniplex(va); !d.ok()) throw PipelineError("caterpillar voltages: " + d.summary());
    if (auto p = check_polytopal_voltage(va); !p.verdict)
        throw PipelineError("caterpillar voltages not polytopal: " + p.verdict.witness);
    CaterpillarBuild out;
    out.maniplex = Premaniplex(derived_graph(va, max_flags));
    out.poset = poset_from_maniplex(out.maniplex).poset;
    const auto aut = automorphism_group(out.maniplex, exec);
    CaterpillarReport& rep = out.report;
    rep.word = cw;
    rep.dimension = va.group().boolean_dim();
    rep.flags = out.maniplex.size();
    rep.aut_order = aut.size();
    const FlagPerm id = aut.front();
    rep.aut_boolean = std::all_of(aut.begin(), aut.end(), [&](const FlagPerm& a) { return compose(a, a) == id; });
    rep.orbits = flag_orbits(out.maniplex, aut).num_blocks();
    rep.stg = symmetry_type_graph(out.maniplex, aut).stg;
    rep.stg_is_caterpillar = premaniplex_isomorphism(rep.stg, caterpillar_to_premaniplex(cw)).has_value();
    return out;
}

CaterpillarBuild build_korbit_polytope(int n, int k, std::size_t max_flags, Execution exec) {
    CaterpillarBuild b = caterpillar_pipeline(generate_korbit_word(n, k), max_flags, exec);
    const auto& r = b.report;
    if (r.orbits != static_cast<std::size_t>(k) || !r.aut_boolean || !r.stg_is_caterpillar)
        throw PipelineError("k-orbit construction for n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                            " gave " + std::to_string(r.orbits) + " orbits, boolean=" +
                            (r.aut_boolean ? "yes" : "no") + ", stg matches=" + (r.stg_is_caterpillar ? "yes" : "no"));
    return b;
}

}  // namespace maniplex
