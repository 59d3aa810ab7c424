#pragma once

#include <compare>

namespace rigid {

// Genus/puncture signature of an orientable surface of finite type.
struct SurfaceSig {
  int genus = 0;
  int punctures = 0;

  // 3g - 3 + n; may be negative for degenerate signatures.
  int complexity() const { return 3 * genus - 3 + punctures; }

  // The three signatures whose curve complex is the Farey complex.
  bool farey_case() const {
    return (genus == 1 && punctures <= 1) || (genus == 0 && punctures == 4);
  }

  auto operator<=>(const SurfaceSig&) const = default;
};

}  // namespace rigid
