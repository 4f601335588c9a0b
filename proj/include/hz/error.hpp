#pragma once

#include <stdexcept>
#include <string>

namespace hz {

// Failure categories. The name of the violated invariant is prefixed
// verbatim to every error message, so callers (and shell scripts grepping
// CLI stderr) can match on it.
enum class errc {
  edge_too_small,
  vertex_out_of_range,
  duplicate_edge,
  duplicate_vertex,
  empty_vertex_set,
  no_edges,
  invalid_partition,
  too_few_vertices,
  invalid_family_params,
  space_too_large,
  unsupported_n,
  unknown_claim,
  invalid_claim_params,
  duplicate_name,
  too_few_rows,
  missing_activity,
  fit_error,
  parse_error,
  io_error,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message);
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] void fail(errc code, const std::string& message);

}  // namespace hz
