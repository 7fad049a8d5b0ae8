#include "gstirling/caps.hpp"

#include <cstdlib>
#include <stdexcept>

namespace gstirling {

Caps Caps::small() { return {11, 60, 10, 64}; }

Caps Caps::desk() { return {13, 200, 14, 200}; }

Caps Caps::large() { return {15, 400, 16, 400}; }

Caps Caps::named(const std::string& name) {
  if (name == "small") return small();
  if (name == "desk") return desk();
  if (name == "large") return large();
  throw std::invalid_argument("unknown cap profile: " + name);
}

Caps Caps::from_env() {
  const char* profile = std::getenv("GSTIRLING_PROFILE");
  if (profile == nullptr) return desk();
  try {
    return named(profile);
  } catch (const std::invalid_argument&) {
    return desk();
  }
}

}  // namespace gstirling
