#include "encov/error.hpp"

namespace encov {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::self_loop: return "SelfLoop";
    case Errc::not_an_edge: return "NotAnEdge";
    case Errc::malformed_graph6: return "MalformedGraph6";
    case Errc::malformed_edge_list: return "MalformedEdgeList";
    case Errc::too_large: return "TooLarge";
    case Errc::non_convergence: return "NonConvergence";
    case Errc::bad_parameter: return "BadParameter";
    case Errc::unsupported_family: return "UnsupportedFamily";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::not_split: return "NotSplit";
    case Errc::hypothesis_failed: return "HypothesisFailed";
    case Errc::invalid_representation: return "InvalidRepresentation";
    case Errc::disconnected: return "Disconnected";
    case Errc::no_pendant: return "NoPendant";
    case Errc::not_a_cut_set: return "NotACutSet";
    case Errc::io_error: return "IoError";
  }
  return "Unknown";
}

}  // namespace encov
