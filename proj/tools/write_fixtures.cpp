// Regenerates the JSON files under fixtures/ from the builders in maniplex/fixtures.hpp.
#include <iostream>

#include "maniplex/caterpillar.hpp"
#include "maniplex/coset_geometry.hpp"
#include "maniplex/fixtures.hpp"
#include "maniplex/io.hpp"
#include "maniplex/symmetry.hpp"

using namespace maniplex;

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: write_fixtures <dir>\n";
        return 2;
    }
    const std::string dir = argv[1];
    auto put = [&](const std::string& name, const Json& j) { write_text_file(dir + "/" + name, j.dump(2) + "\n"); };

    put("triangle.json", poset_to_json(fixtures::triangle()));
    put("tetrahedron.json", poset_to_json(fixtures::tetrahedron()));
    put("square.json", poset_to_json(fixtures::square()));
    put("cube.json", poset_to_json(fixtures::cube()));
    put("prism.json", poset_to_json(fixtures::prism()));
    put("glued_cubes.json", poset_to_json(fixtures::glued_cubes()));
    put("identified_cube.json", poset_to_json(fixtures::identified_cube()));
    put("ej_hasse.json", poset_to_json(fixtures::ej_hasse()));

    put("tetra_flaggraph.json", graph_to_json(fixtures::tetra_flag_graph().graph()));
    put("prism_flaggraph.json", graph_to_json(fixtures::prism_flag_graph().graph()));
    put("prism_stg.json", graph_to_json(fixtures::prism_stg().graph()));
    put("hemicube.json", graph_to_json(fixtures::hemicube().graph()));
    put("wpip_violator.json", graph_to_json(fixtures::wpip_violator().graph()));

    const auto s4 = fixtures::symmetric_s4();
    put("s4_group.json", group_to_json(s4.group));
    put("regular_s4_voltages.json", voltages_to_json(regular_assignment(s4.group, s4.gens)));
    const CaterpillarWord cw{3, {0, 1}};
    put("caterpillar_01_voltages.json", voltages_to_json(boolean_voltages(cw), {"x0", "x1", "x2"}));
    const Premaniplex prism = fixtures::prism_flag_graph();
    put("prism_quotient_voltages.json", voltages_to_json(voltages_from_action(prism, automorphism_group(prism)).va));
    return 0;
}
