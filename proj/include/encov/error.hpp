#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace encov {

enum class Errc {
  index_out_of_range,
  self_loop,
  not_an_edge,
  malformed_graph6,
  malformed_edge_list,
  too_large,
  non_convergence,
  bad_parameter,
  unsupported_family,
  cap_exceeded,
  not_split,
  hypothesis_failed,
  invalid_representation,
  disconnected,
  no_pendant,
  not_a_cut_set,
  io_error,
};

std::string_view to_string(Errc code);

/// Every failure the library reports carries one of the codes above so the
/// CLI can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace encov
