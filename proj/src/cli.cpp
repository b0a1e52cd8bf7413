#include "maniplex/cli.hpp"

#include <cstdlib>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "maniplex/caterpillar.hpp"
#include "maniplex/coset_geometry.hpp"
#include "maniplex/io.hpp"
#include "maniplex/premaniplex.hpp"
#include "maniplex/symmetry.hpp"
#include "maniplex/voltage.hpp"

namespace maniplex::cli {

namespace {

std::size_t max_flags() {
    const char* env = std::getenv("MANIPLEX_MAX_FLAGS");
    if (!env || !*env) return kDefaultMaxFlags;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0)
        throw InvalidArgument(std::string("MANIPLEX_MAX_FLAGS must be a positive integer, got '") + env + "'");
    return static_cast<std::size_t>(v);
}

std::vector<int> parse_ints(const std::string& text, const char* what) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        try {
            out.push_back(std::stoi(item, &used));
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw InvalidArgument(std::string("bad ") + what + " '" + item + "'");
    }
    return out;
}

ColorSet parse_colors(const std::string& text, int rank) {
    ColorSet s;
    for (int c : parse_ints(text, "color")) {
        if (c < 0 || c >= rank)
            throw InvalidArgument("color " + std::to_string(c) + " outside [0," + std::to_string(rank) + ")");
        s = s.with(c);
    }
    return s;
}

Json verdict_json(const Verdict& v) {
    Json j{{"ok", v.ok}};
    if (!v.ok) j["witness"] = v.witness;
    return j;
}

Premaniplex load_premaniplex(const Json& j) { return Premaniplex(graph_from_json(j).graph); }

Premaniplex load_maniplex(const Json& j, const char* command) {
    Premaniplex m = load_premaniplex(j);
    if (auto v = is_maniplex(m); !v)
        throw PreconditionError(std::string(command) + ": input is not a maniplex: " + v.witness);
    return m;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::vector<std::string> derived_names(const NamedVoltages& nv) {
    std::vector<std::string> names;
    const Group& g = nv.va.group();
    for (VertexId x = 0; x < nv.va.base().size(); ++x)
        for (std::uint64_t e = 0; e < g.order(); ++e)
            names.push_back((x < nv.names.size() ? nv.names[x] : "v" + std::to_string(x)) + ":" +
                            g.to_string(g.element(e)));
    return names;
}

std::vector<std::string> caterpillar_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

Json folding_json(const FoldingReport& f) {
    return {{"r", f.r}, {"w", f.quotient_word}, {"case", f.pattern_case}, {"a", f.a}, {"b", f.b},
            {"vertex_map", f.vertex_map}};
}

// Shared state of one invocation.
struct Invocation {
    CommandResult result;
    std::string output;

    // Artifact text goes to --output when given, otherwise to stdout.
    void emit(const std::string& text, const Json& report = nullptr) {
        if (output.empty()) {
            result.out = text;
            return;
        }
        write_text_file(output, text);
        result.artifacts.push_back(output);
        Json r = report.is_null() ? Json::object() : report;
        r["artifact"] = output;
        result.out = dump(r);
    }
};

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
    Invocation inv;
    CLI::App app{"Maniplexes, polytopes, voltage assignments and caterpillars", "maniplex"};
    app.require_subcommand(1);
    std::function<void()> action;

    std::string file, type_text, subgroup_text, first_text, second_text, from_name, to_name, group_file, gens_text,
        word_text, emit_path;
    bool weak = false, strong = false, full = false, as_dot = false, want_voltages = false;
    int rank = 0, orbits = 0;

    auto with_file = [&](CLI::App* s) { s->add_option("file", file, "input JSON")->required(); };
    auto with_output = [&](CLI::App* s) { s->add_option("-o,--output", inv.output, "write the artifact here"); };

    auto* validate = app.add_subcommand("validate", "classify a colored graph");
    with_file(validate);
    validate->callback([&] {
        action = [&] {
            const NamedGraph ng = graph_from_json(read_json_file(file));
            Json r{{"rank", ng.graph.rank()}, {"vertices", ng.graph.num_vertices()}};
            if (auto v = validate_premaniplex(ng.graph); !v) {
                r["premaniplex"] = false;
                r["maniplex"] = false;
                r["summary"] = "not a premaniplex: " + v.witness;
            } else if (auto m = is_maniplex(ng.graph); !m) {
                r["premaniplex"] = true;
                r["maniplex"] = false;
                r["witness"] = m.witness;
                r["summary"] = "premaniplex, not a maniplex (" + m.witness.substr(0, m.witness.find(':')) + ")";
            } else {
                r["premaniplex"] = true;
                r["maniplex"] = true;
                r["summary"] = "maniplex";
            }
            inv.result.out = dump(r);
        };
    });

    auto* polytopal = app.add_subcommand("polytopal", "polytopality of a maniplex or a poset");
    with_file(polytopal);
    auto* weak_flag = polytopal->add_flag("--weak", weak, "weak path intersection property (default)");
    polytopal->add_flag("--strong", strong, "strong path intersection property")->excludes(weak_flag);
    polytopal->callback([&] {
        action = [&] {
            const Json j = read_json_file(file);
            Json r;
            if (looks_like_poset(j)) {
                const PolytopalityReport p = polytopality(poset_from_json(j));
                r = {{"flagged", verdict_json(p.flagged)},
                     {"diamond", verdict_json(p.diamond)},
                     {"strongly_connected", verdict_json(p.strongly_connected)},
                     {"flag_graph_connected", p.flag_graph_connected},
                     {"polytopal", p.is_polytope()}};
            } else {
                const Premaniplex m = load_maniplex(j, "polytopal");
                if (strong) {
                    const Verdict v = spip_check(m);
                    r = {{"method", "spip"}, {"polytopal", v.ok}};
                    if (!v.ok) r["witness"] = v.witness;
                } else {
                    const WpipReport w = wpip_check(m);
                    r = {{"method", "wpip"}, {"polytopal", w.ok}};
                    if (!w.ok) r["witness"] = w.witness;
                }
            }
            inv.result.out = dump(r);
        };
    });

    auto* fg = app.add_subcommand("flag-graph", "flag graph of a poset");
    with_file(fg);
    with_output(fg);
    fg->callback([&] {
        action = [&] {
            const FlagGraph g = flag_graph(poset_from_json(read_json_file(file)));
            inv.emit(dump(graph_to_json(g.graph)), {{"flags", g.flags.size()}});
        };
    });

    auto* poset = app.add_subcommand("poset", "report on a poset, or build P(M) from a graph");
    with_file(poset);
    with_output(poset);
    poset->callback([&] {
        action = [&] {
            const Json j = read_json_file(file);
            if (looks_like_poset(j)) {
                const RankedPoset p = poset_from_json(j);
                Json counts = Json::array();
                for (int i = -1; i <= p.rank(); ++i) counts.push_back(p.faces_of_rank(i).size());
                const PolytopalityReport rep = polytopality(p);
                inv.result.out = dump({{"rank", p.rank()},
                                       {"faces_by_rank", counts},
                                       {"flagged", rep.flagged.ok},
                                       {"diamond", rep.diamond.ok},
                                       {"polytope", rep.is_polytope()}});
                return;
            }
            const ManiplexPoset mp = poset_from_maniplex(load_premaniplex(j));
            inv.emit(dump(poset_to_json(mp.poset)), {{"faces", mp.poset.num_faces()}});
        };
    });

    auto* dual = app.add_subcommand("dual", "dual premaniplex or dual poset");
    with_file(dual);
    with_output(dual);
    dual->callback([&] {
        action = [&] {
            const Json j = read_json_file(file);
            if (looks_like_poset(j))
                inv.emit(dump(poset_to_json(dual_poset(poset_from_json(j)))));
            else
                inv.emit(dump(graph_to_json(dual_premaniplex(load_premaniplex(j)).graph())));
        };
    });

    auto* autgroup = app.add_subcommand("autgroup", "automorphism group of a maniplex");
    with_file(autgroup);
    autgroup->callback([&] {
        action = [&] {
            const Premaniplex m = load_maniplex(read_json_file(file), "autgroup");
            const auto aut = automorphism_group(m);
            Json images = Json::array();
            for (const auto& a : aut) images.push_back(a[0]);
            inv.result.out = dump({{"flags", m.size()}, {"order", aut.size()}, {"flag0_images", images}});
        };
    });

    auto* orbit_cmd = app.add_subcommand("orbits", "flag orbits under the automorphism group");
    with_file(orbit_cmd);
    orbit_cmd->callback([&] {
        action = [&] {
            const Premaniplex m = load_maniplex(read_json_file(file), "orbits");
            const Partition p = flag_orbits(m, automorphism_group(m));
            inv.result.out = dump({{"flags", m.size()}, {"orbits", p.num_blocks()}, {"labels", p.labels()}});
        };
    });

    auto* stg = app.add_subcommand("stg", "symmetry type graph");
    with_file(stg);
    with_output(stg);
    stg->add_option("--subgroup", subgroup_text, "indices into the automorphism list generating the subgroup");
    stg->add_flag("--dot", as_dot, "emit DOT instead of JSON");
    stg->callback([&] {
        action = [&] {
            const Premaniplex m = load_maniplex(read_json_file(file), "stg");
            auto group = automorphism_group(m);
            if (!subgroup_text.empty()) {
                std::vector<FlagPerm> gens;
                for (int i : parse_ints(subgroup_text, "automorphism index")) {
                    if (i < 0 || static_cast<std::size_t>(i) >= group.size())
                        throw InvalidArgument("automorphism index " + std::to_string(i) + " outside [0," +
                                              std::to_string(group.size()) + ")");
                    gens.push_back(group[i]);
                }
                group = group_closure(m, gens);
            }
            const SymmetryTypeGraph t = symmetry_type_graph(m, group);
            inv.emit(as_dot ? graph_to_dot(t.stg.graph()) : dump(graph_to_json(t.stg.graph())),
                     {{"group_order", group.size()}, {"vertices", t.stg.size()}});
        };
    });

    auto* chains = app.add_subcommand("chains", "chains of a given type");
    with_file(chains);
    chains->add_option("--type", type_text, "comma-separated colors K")->required();
    chains->callback([&] {
        action = [&] {
            const Premaniplex m = load_premaniplex(read_json_file(file));
            const ColorSet k = parse_colors(type_text, m.rank());
            const Partition p = chains_of_type(m, k);
            inv.result.out = dump({{"type", k.members()}, {"chains", p.num_blocks()}, {"labels", p.labels()}});
        };
    });

    auto* derive = app.add_subcommand("derive", "derived graph of a voltage assignment");
    with_file(derive);
    with_output(derive);
    derive->callback([&] {
        action = [&] {
            const NamedVoltages nv = voltages_from_json(read_json_file(file));
            const ColoredGraph g = derived_graph(nv.va, max_flags());
            inv.emit(dump(graph_to_json(g, derived_names(nv))), {{"vertices", g.num_vertices()}});
        };
    });

    auto* check = app.add_subcommand("check-voltage", "maniplex and polytopality checks on voltages");
    with_file(check);
    check->add_flag("--full", full, "run the battery over every color-set pair and vertex pair");
    check->callback([&] {
        action = [&] {
            const NamedVoltages nv = voltages_from_json(read_json_file(file));
            const DerivedManiplexReport d = check_derived_maniplex(nv.va);
            Json r{{"generates", verdict_json(d.generates)},
                   {"semi_edges_order_2", verdict_json(d.semi_edges_order_2)},
                   {"parallel_distinct", verdict_json(d.parallel_distinct)},
                   {"squares_trivial", verdict_json(d.squares_trivial)},
                   {"derived_maniplex", d.ok()}};
            if (d.ok()) {
                const VoltagePolytopalityReport p =
                    full ? check_polytopal_voltage_full(nv.va) : check_polytopal_voltage(nv.va);
                r["polytopal"] = p.verdict.ok;
                r["checks"] = p.checks;
                r["battery"] = full ? "full" : "reduced";
                if (!p.verdict.ok) r["witness"] = p.verdict.witness;
            }
            inv.result.out = dump(r);
        };
    });

    auto* intersect = app.add_subcommand("intersect", "intersect the voltage sets of two path families");
    with_file(intersect);
    intersect->add_option("--from", from_name, "start vertex name")->required();
    intersect->add_option("--to", to_name, "end vertex name")->required();
    intersect->add_option("--first", first_text, "colors I")->required();
    intersect->add_option("--second", second_text, "colors J")->required();
    intersect->callback([&] {
        action = [&] {
            const NamedVoltages nv = voltages_from_json(read_json_file(file));
            auto vertex = [&](const std::string& name) {
                for (VertexId v = 0; v < nv.names.size(); ++v)
                    if (nv.names[v] == name) return v;
                throw InvalidArgument("unknown vertex '" + name + "'");
            };
            const VertexId x = vertex(from_name), y = vertex(to_name);
            const int n = nv.va.base().rank();
            const ColorSet i = parse_colors(first_text, n), j = parse_colors(second_text, n);
            const Group& g = nv.va.group();
            const auto a = paths_coset(nv.va, x, y, i), b = paths_coset(nv.va, x, y, j),
                       meet_set = paths_coset(nv.va, x, y, i & j);
            auto show = [&](const std::optional<Coset>& c) { return c ? describe(g, *c) : std::string("empty"); };
            std::optional<Coset> both;
            if (a && b) both = coset_intersect(g, *a, *b);
            bool equal = both.has_value() == meet_set.has_value();
            if (both && meet_set) equal = coset_equal(g, *both, *meet_set);
            inv.result.out = dump({{"first", show(a)},
                                   {"second", show(b)},
                                   {"intersection", show(both)},
                                   {"common_colors", show(meet_set)},
                                   {"equal", equal}});
        };
    });

    auto* coset = app.add_subcommand("coset-polytope", "polytope from the coset construction");
    coset->add_option("--voltages", file, "voltage JSON")->required();
    with_output(coset);
    coset->add_flag("--dot", as_dot, "emit a Hasse diagram");
    coset->callback([&] {
        action = [&] {
            const NamedVoltages nv = voltages_from_json(read_json_file(file));
            const RankedPoset p = build_coset_polytope(nv.va);
            inv.emit(as_dot ? poset_to_dot(p) : dump(poset_to_json(p)), {{"faces", p.num_faces()}});
        };
    });

    auto* regular = app.add_subcommand("regular", "regular polytope from a string C-group");
    regular->add_option("--group", group_file, "group JSON")->required();
    regular->add_option("--gens", gens_text, "comma-separated generators")->required();
    with_output(regular);
    regular->callback([&] {
        action = [&] {
            const Group g = group_from_json(read_json_file(group_file));
            std::vector<GroupElement> gens;
            std::stringstream ss(gens_text);
            std::string item;
            while (std::getline(ss, item, ',')) gens.push_back(g.parse(item));
            const RankedPoset p = build_regular_polytope(g, gens);
            inv.emit(dump(poset_to_json(p)), {{"faces", p.num_faces()}});
        };
    });

    auto* cat = app.add_subcommand("caterpillar", "caterpillar words and k-orbit polytopes");
    cat->require_subcommand(1);
    auto* build = cat->add_subcommand("build", "caterpillar premaniplex or its Boolean voltages");
    build->add_option("--rank", rank, "rank n")->required();
    build->add_option("--word", word_text, "comma-separated link colors");
    build->add_flag("--voltages", want_voltages, "emit the Boolean voltage assignment");
    with_output(build);
    build->callback([&] {
        action = [&] {
            const CaterpillarWord cw = CaterpillarWord::parse(rank, word_text);
            const auto names = caterpillar_names(cw.length() + 1);
            if (want_voltages) {
                const VoltageAssignment va = boolean_voltages(cw);
                inv.emit(dump(voltages_to_json(va, names)), {{"dimension", va.group().boolean_dim()}});
            } else {
                inv.emit(dump(graph_to_json(caterpillar_to_premaniplex(cw).graph(), names)));
            }
        };
    });
    auto* classify = cat->add_subcommand("classify", "symmetry-type cases and foldings");
    classify->add_option("--rank", rank, "rank n")->required();
    classify->add_option("--word", word_text, "comma-separated link colors");
    classify->callback([&] {
        action = [&] {
            const CaterpillarWord cw = CaterpillarWord::parse(rank, word_text);
            const CaterpillarClass c = classify_caterpillar(cw);
            Json folds = Json::array();
            for (const auto& f : enumerate_foldings(cw)) folds.push_back(folding_json(f));
            Json r{{"word", cw.word},          {"symmetric", c.symmetric}, {"boolean_stg", c.boolean_stg},
                   {"case3", c.case3},         {"case4", c.case4},         {"foldings", folds},
                   {"dimension", boolean_dimension(cw)}};
            if (c.match) r["match"] = folding_json(*c.match);
            inv.result.out = dump(r);
        };
    });
    auto* korbit = cat->add_subcommand("korbit", "k-orbit polytope with Boolean automorphism group");
    korbit->add_option("--rank", rank, "rank n >= 3")->required();
    korbit->add_option("--orbits", orbits, "k >= 3")->required();
    korbit->add_option("--emit", emit_path, "write the poset JSON here");
    korbit->callback([&] {
        action = [&] {
            const CaterpillarBuild b = build_korbit_polytope(rank, orbits, max_flags());
            const auto& rep = b.report;
            Json r{{"word", rep.word.word},       {"dimension", rep.dimension},
                   {"flags", rep.flags},          {"aut_order", rep.aut_order},
                   {"aut_boolean", rep.aut_boolean}, {"orbits", rep.orbits},
                   {"stg_is_caterpillar", rep.stg_is_caterpillar}};
            if (!emit_path.empty()) {
                write_text_file(emit_path, dump(poset_to_json(b.poset)));
                inv.result.artifacts.push_back(emit_path);
                r["artifact"] = emit_path;
            }
            inv.result.out = dump(r);
        };
    });

    auto* dot = app.add_subcommand("export-dot", "DOT for a colored graph or a Hasse diagram");
    with_file(dot);
    with_output(dot);
    dot->callback([&] {
        action = [&] {
            const Json j = read_json_file(file);
            if (looks_like_poset(j)) {
                inv.emit(poset_to_dot(poset_from_json(j)));
            } else {
                const NamedGraph ng = graph_from_json(j);
                inv.emit(graph_to_dot(ng.graph, ng.names));
            }
        };
    });

    std::ostringstream out, err;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        inv.result.out = out.str();
        inv.result.err = err.str();
        inv.result.exit_code = code == 0 ? kOk : kUsage;
        return inv.result;
    }
    auto fail = [&](int code, const std::string& kind, const std::string& what) {
        inv.result.exit_code = code;
        inv.result.out.clear();
        inv.result.err = "error (" + kind + "): " + what + "\n";
    };
    try {
        action();
    } catch (const MalformedInput& e) {
        fail(kMalformedJson, "malformed input", e.what());
    } catch (const SchemaError& e) {
        fail(kSchema, "schema", e.what());
    } catch (const Json::exception& e) {
        fail(kSchema, "schema", e.what());
    } catch (const InvalidArgument& e) {
        fail(kUsage, "usage", e.what());
    } catch (const PreconditionError& e) {
        fail(kPrecondition, "precondition", e.what());
    } catch (const SizeLimitError& e) {
        fail(kSizeCap, "size cap", e.what());
    } catch (const PipelineError& e) {
        fail(kPipeline, "pipeline", e.what());
    } catch (const std::exception& e) {
        fail(kPipeline, "internal", e.what());
    }
    return inv.result;
}

}  // namespace maniplex::cli
