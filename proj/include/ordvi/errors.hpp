#pragma once

#include <stdexcept>
#include <string>

namespace ordvi {

/// Base class for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An element or table does not belong to the carrier it is used with.
struct carrier_mismatch : error {
  using error::error;
};

/// A stated precondition / theorem hypothesis failed. `clause` names the
/// violated hypothesis, `witness` describes a concrete counterexample.
struct precondition_error : error {
  std::string clause;
  std::string witness;
  precondition_error(std::string clause_, std::string witness_)
      : error("precondition violated: " + clause_ +
              (witness_.empty() ? "" : " [witness: " + witness_ + "]")),
        clause(std::move(clause_)),
        witness(std::move(witness_)) {}
};

/// Malformed configuration input; `field` is a path into the config.
struct config_error : error {
  std::string field;
  config_error(std::string field_, const std::string& what_)
      : error("config error at '" + field_ + "': " + what_), field(std::move(field_)) {}
};

/// Non-finite values or otherwise invalid numeric input.
struct numeric_error : error {
  using error::error;
};

struct degenerate_bracket_error : error {
  using error::error;
};

struct infeasibility_error : error {
  int worst_node;
  infeasibility_error(int node, const std::string& what_)
      : error(what_), worst_node(node) {}
};

struct instance_too_large_error : error {
  using error::error;
};

}  // namespace ordvi
