#pragma once

#include <optional>
#include <string>
#include <vector>

#include "maniplex/poset.hpp"
#include "maniplex/premaniplex.hpp"
#include "maniplex/voltage.hpp"

namespace maniplex {

// Link colors c_1 ... c_k along the path x_0 ... x_k.
struct CaterpillarWord {
    int rank = 0;
    std::vector<Color> word;

    std::size_t length() const { return word.size(); }
    Verdict validate() const;
    // "0,1,2"; the empty string is the empty word.
    static CaterpillarWord parse(int rank, const std::string& text);
    std::string to_string() const;
};

// Vertex i is x_i. Links come first in dart order, then semi-edges by vertex and color.
Premaniplex caterpillar_to_premaniplex(const CaterpillarWord& cw);

// Boolean voltages with links trivial. Fresh generators are numbered left to right.
VoltageAssignment boolean_voltages(const CaterpillarWord& cw);
int boolean_dimension(const CaterpillarWord& cw);

struct FoldingReport {
    int r = 0;
    std::vector<Color> quotient_word;  // w = c_1 ... c_r
    int pattern_case = 1;              // 1: ends in w^-1, 2: ends in w
    std::vector<Color> a, b;           // fold colors at y_r and at y_0, in path order
    std::vector<VertexId> vertex_map;  // x_i -> y_j
};
std::vector<FoldingReport> enumerate_foldings(const CaterpillarWord& cw);
Premaniplex folding_quotient(const CaterpillarWord& cw, const FoldingReport& f);

struct CaterpillarClass {
    bool symmetric = false;     // case 1
    bool boolean_stg = false;   // case 2, asserted when 1, 3 and 4 fail
    bool case3 = false;
    bool case4 = false;
    std::optional<FoldingReport> match;  // first folding matching case 3 or 4
};
CaterpillarClass classify_caterpillar(const CaterpillarWord& cw);

CaterpillarWord generate_korbit_word(int n, int k);

struct CaterpillarReport {
    CaterpillarWord word;
    int dimension = 0;
    std::size_t flags = 0;
    std::size_t aut_order = 0;
    bool aut_boolean = false;
    std::size_t orbits = 0;
    bool stg_is_caterpillar = false;
    Premaniplex stg;
};
struct CaterpillarBuild {
    RankedPoset poset;
    Premaniplex maniplex;
    CaterpillarReport report;
};
// Voltages, battery, derived graph, full automorphism group. Throws PipelineError when the
// voltages fail either check.
CaterpillarBuild caterpillar_pipeline(const CaterpillarWord& cw, std::size_t max_flags = kDefaultMaxFlags,
                                      Execution exec = Execution::Parallel);
// Also requires k orbits, a Boolean group and the caterpillar as STG.
CaterpillarBuild build_korbit_polytope(int n, int k, std::size_t max_flags = kDefaultMaxFlags,
                                       Execution exec = Execution::Parallel);

}  // namespace maniplex
