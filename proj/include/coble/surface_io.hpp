#pragma once

#include "coble/surface.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace coble {

/// Malformed input; carries the 1-based line number of the offense.
/// what() reads "line N: message" or "file:N: message".
struct SurfaceParseError : std::runtime_error {
  std::size_t line;
  std::string details;  // message without the location prefix
  SurfaceParseError(std::size_t line, const std::string& details,
                    const std::string& file = "");
};

/// Reads the line-oriented surface description:
///
///   surface <name>
///   gen <label> self=<int>
///   pair <label> <label> <int>
///   class <name> = <expr>
///   canonical = <expr>
///   boundary <classname> ...
///
/// '#' starts a comment, blank lines are skipped. Generators must all be
/// declared before the first class or canonical line; expressions are
/// integer linear combinations of generator labels and previously defined
/// class names, like "3H - R1 - 2E1". The surface line must come first,
/// the canonical line is required, boundary is optional. Any malformed or
/// out-of-place line raises SurfaceParseError.
SurfaceModel parseSurface(std::istream& in);

/// parseSurface on the named file; prefixes errors with the path.
SurfaceModel loadSurfaceFile(const std::string& path);

}  // namespace coble
