#pragma once

#include <string>

namespace gstirling {

// Resource caps for the exponential-time routes. The default profile is
// "desk"; the GSTIRLING_PROFILE environment variable ("small" | "desk" |
// "large") overrides it process-wide.
struct Caps {
  int enumerate_max_vertices;
  int matching_max_edges;
  int chromatic_max_vertices;
  int sturm_max_degree;

  static Caps small();
  static Caps desk();
  static Caps large();

  // Throws std::invalid_argument for unknown names.
  static Caps named(const std::string& name);

  // Profile from GSTIRLING_PROFILE, or desk() when unset/invalid.
  static Caps from_env();
};

}  // namespace gstirling
