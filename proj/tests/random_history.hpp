#pragma once

// Seeded random descriptor histories for round-trip properties.

#include <random>
#include <string>
#include <vector>

#include "brunnel/surface.hpp"

namespace testing_support {

// A random replayable descriptor whose component 0 is a disk.
inline brunnel::SurfaceLinkDescriptor random_descriptor(std::mt19937& rng) {
  using namespace brunnel;
  const std::vector<std::string> bases = base_names();
  const std::vector<std::string> knots = {"trefoil", "figure-eight", "5_2", "trefoil#2"};
  const std::vector<std::string> small = {"disk", "trivial-disk", "genus1"};
  while (true) {
    SurfaceLinkDescriptor s = base_descriptor(bases[rng() % bases.size()]);
    const int steps = static_cast<int>(rng() % 6);
    for (int i = 0; i < steps; ++i) {
      const int kind = static_cast<int>(rng() % 4);
      const int crossings = s.boundary() ? s.boundary()->crossing_count() : 0;
      if (kind == 0 && s.component(0).is_disk() && crossings < 300) {
        s = bing_double_first(s);
      } else if (kind == 1 && s.component_count() >= 2 && crossings < 300) {
        const int a = static_cast<int>(rng() % static_cast<unsigned>(s.component_count()));
        int b = static_cast<int>(rng() % static_cast<unsigned>(s.component_count() - 1));
        if (b >= a) ++b;
        s = band_join(s, a, b);
      } else if (kind == 2) {
        s = rim_surgery(s, "c" + std::to_string(i), knots[rng() % knots.size()]);
      } else if (kind == 3 && s.component_count() < 6) {
        s = adjoin(s, base_descriptor(small[rng() % small.size()]));
      }
    }
    if (s.component(0).is_disk()) return s;
  }
}

}  // namespace testing_support
