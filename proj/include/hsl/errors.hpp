#pragma once

#include <stdexcept>
#include <string>

namespace hsl {

// Error kinds follow the operation contracts; all carry a message and
// derive from std::runtime_error so the CLI can map them to exit codes.

struct DegenerateCurve : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SelfIntersecting : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidDomain : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SolveFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IncompatibleData : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NearBoundary : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MarkedPointsTooClose : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateSlit : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PoleOfF : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotSimplyConnected : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotNested : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BoundaryNotSmooth : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct StencilOutOfDisk : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct LineHitsDiagonal : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

}  // namespace hsl
