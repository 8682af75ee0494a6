#pragma once

#include <stdexcept>
#include <string>

namespace amapf {

// Base class for all planner-domain failures.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An input polygon self-intersects, has duplicate consecutive vertices, or
// has (near-)zero area.
struct SelfIntersectingInput : Error {
  using Error::Error;
};

// A query terminal lies strictly inside an inflated obstacle region.
struct TerminalInsideObstacle : Error {
  TerminalInsideObstacle(int index, const std::string& what)
      : Error(what), terminal_index(index) {}
  int terminal_index;
};

// Every perfect agent-goal matching has infinite cost.
struct InfeasibleAssignment : Error {
  using Error::Error;
};

// No goal passed the standalone test for the current assignment.
struct StandaloneNotFound : Error {
  using Error::Error;
};

// Classic mode reached a state that requires the relaxed reroute rule.
struct ClassicAssumptionViolated : Error {
  using Error::Error;
};

// A reroute prefix segment crosses an inflated region. Should be impossible
// for admissible inputs; surfaced to catch numerical corner cases.
struct RerouteCrossesObstacle : Error {
  using Error::Error;
};

// Instance failed the separation / obstacle-clearance precondition.
struct SeparationViolation : Error {
  using Error::Error;
};

// Malformed scenario or solution file.
struct ParseError : Error {
  ParseError(int line_number, const std::string& what)
      : Error("line " + std::to_string(line_number) + ": " + what),
        line(line_number) {}
  int line;
};

// The instance generator ran out of placement attempts (bounds too small).
struct GenerationExhausted : Error {
  using Error::Error;
};

}  // namespace amapf
