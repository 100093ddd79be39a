// Walks through the main entry points: a refined U ratio, the Mills ratio
// continued fraction, and zero bounds for H_7.

#include <cstdio>

#include "ratio_bounds/families.hpp"

namespace fam = ratio_bounds::families;

int main() {
  std::printf("U(1,5)/U(0,5), refined:\n");
  const auto seq = fam::ratio_enclosure("pcf-u", ratio_bounds::Params::with_n(1), 5.0, 10);
  for (std::size_t k = 0; k < seq.enclosures.size(); ++k) {
    const auto& e = seq.enclosures[k];
    std::printf("  depth %2zu  [%.15f, %.15f]  rel width %.2e\n", k, e.lower, e.upper,
                e.relative_width());
  }

  std::printf("\nMills ratio at x = 1:\n");
  for (const auto& e : fam::mills_bounds(1.0, 4).enclosures) {
    std::printf("  %-8s [%.12f, %.12f]\n", e.provenance.c_str(), e.lower, e.upper);
  }

  std::printf("\nLargest zero of H_7:\n");
  for (int level = 0; level <= 3; ++level) {
    const auto rep = fam::largest_zero_upper_bound(fam::ZeroFamily::Hermite, 7, {}, level);
    std::printf("  level %d: %s, bound %.10f\n", level,
                rep.condition_satisfied ? "condition holds" : "condition fails", rep.bound);
  }

  std::printf("\nK_n ratio, n = 2.5, x = 1:\n");
  const auto k = fam::ratio_enclosure("bessel-k", ratio_bounds::Params::with_n(2.5), 1.0, 0).last();
  std::printf("  [%.12f, %.12f]\n", k.lower, k.upper);
}
