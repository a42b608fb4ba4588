#include "idcode/errors.hpp"

namespace idcode {

std::string_view describe(Precondition p) {
  switch (p) {
    case Precondition::vertex_out_of_range: return "vertex id out of range";
    case Precondition::loop_edge: return "loop edge";
    case Precondition::disconnected: return "graph is disconnected";
    case Precondition::not_identifiable: return "graph is not identifiable (has twins)";
    case Precondition::has_triangle: return "graph contains a triangle";
    case Precondition::max_degree_below_3: return "maximum degree < 3";
    case Precondition::false_twins_present: return "graph has false twins";
    case Precondition::isomorphic_to_c4: return "graph is isomorphic to C4";
    case Precondition::not_independent: return "set is not independent";
    case Precondition::not_subset: return "set is not a subset";
    case Precondition::not_strong_matching: return "not a strong induced matching";
    case Precondition::degree_not_two: return "matched vertex does not have degree 2";
    case Precondition::false_twin_in_y: return "candidate set contains a vertex with a false twin";
    case Precondition::too_many_vertices: return "graph exceeds the vertex limit";
    case Precondition::colouring_failed: return "colouring needs more colours than allowed";
    case Precondition::invalid_family: return "invalid family parameters";
  }
  return "unknown precondition";
}

}  // namespace idcode
