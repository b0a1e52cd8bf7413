#include "maniplex/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace maniplex {

namespace {

[[noreturn]] void schema(const std::string& what) { throw SchemaError(what); }

const Json& field(const Json& j, const char* key, const char* where) {
    if (!j.is_object()) schema(std::string(where) + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) schema(std::string(where) + ": missing \"" + key + "\"");
    return *it;
}

int int_field(const Json& j, const char* key, const char* where) {
    const Json& v = field(j, key, where);
    if (!v.is_number_integer()) schema(std::string(where) + ": \"" + key + "\" must be an integer");
    return v.get<int>();
}

const std::string& string_of(const Json& v, const char* where) {
    if (!v.is_string()) schema(std::string(where) + ": expected a string");
    return v.get_ref<const std::string&>();
}

const Json& array_field(const Json& j, const char* key, const char* where) {
    const Json& v = field(j, key, where);
    if (!v.is_array()) schema(std::string(where) + ": \"" + key + "\" must be an array");
    return v;
}

std::string vertex_name(const std::vector<std::string>& names, VertexId v) {
    return v < names.size() ? names[v] : "v" + std::to_string(v);
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot read " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw MalformedInput(path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

NamedGraph graph_from_json(const Json& j) {
    const int rank = int_field(j, "rank", "graph");
    if (rank < 0 || rank > kMaxRank) schema("graph: rank " + std::to_string(rank) + " out of range");
    NamedGraph out;
    std::map<std::string, VertexId> index;
    for (const Json& v : array_field(j, "vertices", "graph")) {
        const std::string& name = string_of(v, "graph vertices");
        if (!index.emplace(name, static_cast<VertexId>(out.names.size())).second)
            schema("graph: duplicate vertex \"" + name + "\"");
        out.names.push_back(name);
    }
    auto lookup = [&](const Json& v) {
        auto it = index.find(string_of(v, "graph edge ends"));
        if (it == index.end()) schema("graph: unknown vertex \"" + v.get<std::string>() + "\"");
        return it->second;
    };
    GraphBuilder b(rank, out.names.size());
    std::size_t e = 0;
    for (const Json& edge : array_field(j, "edges", "graph")) {
        const std::string where = "graph edge " + std::to_string(e++);
        const int color = int_field(edge, "color", where.c_str());
        const Json& ends = array_field(edge, "ends", where.c_str());
        if (ends.size() != 1 && ends.size() != 2) schema(where + ": \"ends\" must have 1 or 2 entries");
        try {
            out.edge_first_dart.push_back(ends.size() == 1 ? b.add_semi_edge(lookup(ends[0]), color)
                                                           : b.add_link(lookup(ends[0]), lookup(ends[1]), color));
        } catch (const InvalidArgument& ex) {
            schema(where + ": " + ex.what());
        }
    }
    try {
        out.graph = b.build();
    } catch (const InvalidArgument& ex) {
        schema(std::string("graph: ") + ex.what());
    }
    return out;
}

Json graph_to_json(const ColoredGraph& g, const std::vector<std::string>& names) {
    Json j;
    j["rank"] = g.rank();
    j["vertices"] = Json::array();
    for (VertexId v = 0; v < g.num_vertices(); ++v) j["vertices"].push_back(vertex_name(names, v));
    j["edges"] = Json::array();
    for (DartId d = 0; d < g.num_darts(); ++d) {
        if (g.inverse(d) < d) continue;
        Json ends = Json::array({vertex_name(names, g.initial(d))});
        if (g.inverse(d) != d) ends.push_back(vertex_name(names, g.terminal(d)));
        j["edges"].push_back({{"color", g.color(d)}, {"ends", ends}});
    }
    return j;
}

bool looks_like_poset(const Json& j) { return j.is_object() && j.contains("faces"); }

RankedPoset poset_from_json(const Json& j) {
    const int rank = int_field(j, "rank", "poset");
    if (rank < -1 || rank > kMaxRank) schema("poset: rank " + std::to_string(rank) + " out of range");
    std::vector<int> ranks;
    std::vector<std::string> names;
    std::map<std::string, FaceId> index;
    for (const Json& f : array_field(j, "faces", "poset")) {
        const std::string& id = string_of(field(f, "id", "poset face"), "poset face id");
        if (!index.emplace(id, static_cast<FaceId>(names.size())).second) schema("poset: duplicate face \"" + id + "\"");
        names.push_back(id);
        ranks.push_back(int_field(f, "rank", "poset face"));
    }
    std::vector<std::pair<FaceId, FaceId>> covers;
    for (const Json& c : array_field(j, "covers", "poset")) {
        if (!c.is_array() || c.size() != 2) schema("poset: each cover must be a pair of face ids");
        FaceId ends[2];
        for (int k = 0; k < 2; ++k) {
            auto it = index.find(string_of(c[k], "poset cover"));
            if (it == index.end()) schema("poset: unknown face \"" + c[k].get<std::string>() + "\" in covers");
            ends[k] = it->second;
        }
        covers.emplace_back(ends[0], ends[1]);
    }
    try {
        return with_bounds(RankedPoset(rank, std::move(ranks), std::move(covers), std::move(names)));
    } catch (const InvalidArgument& ex) {
        schema(std::string("poset: ") + ex.what());
    }
}

Json poset_to_json(const RankedPoset& p) {
    Json j;
    j["rank"] = p.rank();
    j["faces"] = Json::array();
    for (FaceId f = 0; f < p.num_faces(); ++f) j["faces"].push_back({{"id", p.name(f)}, {"rank", p.face_rank(f)}});
    j["covers"] = Json::array();
    for (auto [a, b] : p.covers()) j["covers"].push_back({p.name(a), p.name(b)});
    return j;
}

Group group_from_json(const Json& j) {
    const std::string& type = string_of(field(j, "type", "group"), "group type");
    try {
        if (type == "boolean") {
            const int dim = int_field(j, "dim", "group");
            return Group(BooleanGroup{dim});
        }
        if (type == "table") {
            const Json& t = array_field(j, "table", "group");
            std::vector<std::vector<std::uint32_t>> table;
            for (const Json& row : t) {
                if (!row.is_array()) schema("group: table rows must be arrays");
                auto& r = table.emplace_back();
                for (const Json& x : row) {
                    if (!x.is_number_unsigned()) schema("group: table entries must be non-negative integers");
                    r.push_back(x.get<std::uint32_t>());
                }
            }
            return Group(TableGroup(std::move(table)));
        }
    } catch (const InvalidArgument& ex) {
        schema(std::string("group: ") + ex.what());
    }
    schema("group: unknown type \"" + type + "\"");
}

Json group_to_json(const Group& g) {
    if (g.is_boolean()) return {{"type", "boolean"}, {"dim", g.boolean_dim()}};
    return {{"type", "table"}, {"table", g.table().table()}};
}

NamedVoltages voltages_from_json(const Json& j) {
    NamedGraph ng = graph_from_json(j);
    const Group group = group_from_json(field(j, "group", "voltage file"));
    const ColoredGraph& g = ng.graph;
    std::vector<GroupElement> volt(g.num_darts(), group.identity());
    if (j.contains("voltages")) {
        for (const Json& v : array_field(j, "voltages", "voltage file")) {
            const int e = int_field(v, "edge", "voltage");
            if (e < 0 || static_cast<std::size_t>(e) >= ng.edge_first_dart.size())
                schema("voltage: edge " + std::to_string(e) + " does not exist");
            DartId d = ng.edge_first_dart[e];
            if (v.contains("from")) {
                const std::string& from = string_of(v["from"], "voltage from");
                if (vertex_name(ng.names, g.initial(d)) != from) {
                    if (vertex_name(ng.names, g.terminal(d)) != from)
                        schema("voltage: edge " + std::to_string(e) + " does not touch \"" + from + "\"");
                    d = g.inverse(d);
                }
            }
            GroupElement x;
            try {
                x = group.parse(string_of(field(v, "value", "voltage"), "voltage value"));
            } catch (const InvalidArgument& ex) {
                schema(std::string("voltage: ") + ex.what());
            }
            volt[d] = x;
            volt[g.inverse(d)] = group.inv(x);
            if (g.inverse(d) == d && group.mul(x, x) != group.identity())
                throw PreconditionError("voltage on semi-edge " + std::to_string(e) + " is not an involution");
        }
    }
    Premaniplex base(ng.graph);
    return {VoltageAssignment(std::move(base), group, std::move(volt)), std::move(ng.names)};
}

Json voltages_to_json(const VoltageAssignment& va, const std::vector<std::string>& names) {
    const ColoredGraph& g = va.base().graph();
    Json j = graph_to_json(g, names);
    j["group"] = group_to_json(va.group());
    j["voltages"] = Json::array();
    std::size_t e = 0;
    for (DartId d = 0; d < g.num_darts(); ++d) {
        if (g.inverse(d) < d) continue;
        if (va.volt(d) != va.group().identity()) {
            Json v{{"edge", e}, {"value", va.group().to_string(va.volt(d))}};
            if (g.inverse(d) != d) v["from"] = vertex_name(names, g.initial(d));
            j["voltages"].push_back(v);
        }
        ++e;
    }
    return j;
}

std::string graph_to_dot(const ColoredGraph& g, const std::vector<std::string>& names) {
    std::ostringstream out;
    out << "graph G {\n  node [shape=circle];\n";
    for (VertexId v = 0; v < g.num_vertices(); ++v) out << "  " << quoted(vertex_name(names, v)) << ";\n";
    for (DartId d = 0; d < g.num_darts(); ++d) {
        if (g.inverse(d) < d) continue;
        const std::string c = kDotPalette[g.color(d) % 8];
        const std::string from = quoted(vertex_name(names, g.initial(d)));
        if (g.inverse(d) == d) {
            const std::string tip = quoted("semi" + std::to_string(d));
            out << "  " << tip << " [shape=point];\n";
            out << "  " << from << " -- " << tip << " [color=\"" << c << ":white:" << c << "\", label=\""
                << g.color(d) << "\"];\n";
        } else {
            out << "  " << from << " -- " << quoted(vertex_name(names, g.terminal(d))) << " [color=" << c
                << ", label=\"" << g.color(d) << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string poset_to_dot(const RankedPoset& p) {
    std::ostringstream out;
    out << "digraph Hasse {\n  rankdir=BT;\n  edge [arrowhead=none];\n";
    for (int r = -1; r <= p.rank(); ++r) {
        out << "  { rank=same;";
        for (FaceId f : p.faces_of_rank(r)) out << " " << quoted(p.name(f)) << ";";
        out << " }\n";
    }
    for (auto [a, b] : p.covers()) out << "  " << quoted(p.name(a)) << " -> " << quoted(p.name(b)) << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace maniplex
