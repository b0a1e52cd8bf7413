#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "maniplex/colored_graph.hpp"
#include "maniplex/group.hpp"
#include "maniplex/poset.hpp"
#include "maniplex/voltage.hpp"

namespace maniplex {

using Json = nlohmann::json;

class MalformedInput : public Error {
public:
    using Error::Error;
};
class SchemaError : public Error {
public:
    using Error::Error;
};

Json read_json_file(const std::string& path);  // MalformedInput on parse failure or missing file
void write_text_file(const std::string& path, const std::string& text);

struct NamedGraph {
    ColoredGraph graph;
    std::vector<std::string> names;      // vertex names
    std::vector<DartId> edge_first_dart;  // dart of each input edge leaving ends[0]
};
NamedGraph graph_from_json(const Json& j);
// Edges in ascending dart order, one per dart pair. Default names are "v{i}".
Json graph_to_json(const ColoredGraph& g, const std::vector<std::string>& names = {});
bool looks_like_poset(const Json& j);

RankedPoset poset_from_json(const Json& j);  // least and greatest faces synthesized when absent
Json poset_to_json(const RankedPoset& p);

Group group_from_json(const Json& j);
Json group_to_json(const Group& g);

struct NamedVoltages {
    VoltageAssignment va;
    std::vector<std::string> names;
};
NamedVoltages voltages_from_json(const Json& j);
Json voltages_to_json(const VoltageAssignment& va, const std::vector<std::string>& names = {});

// Color i uses kDotPalette[i % 8]; semi-edges are doubled lines to a point node.
inline constexpr const char* kDotPalette[8] = {"blue", "red", "green", "orange", "purple", "brown", "magenta", "cyan"};
std::string graph_to_dot(const ColoredGraph& g, const std::vector<std::string>& names = {});
// One rank per layer.
std::string poset_to_dot(const RankedPoset& p);

}  // namespace maniplex
