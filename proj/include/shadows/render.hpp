#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shadows/shadow.hpp"

namespace shadows {

/// Rank-2 drawing description. Output layers, back to front: background,
/// hyperplanes, sector, shadow, galleries, labels. Everything is deterministic
/// so repeated renders are byte-identical.
struct Scene {
  RootSystem rs;
  double window = 4.0;  // half-width of the viewport, Euclidean units
  std::optional<Chimney> chimney;   // sector fill
  std::optional<ShadowResult> shadow;
  std::vector<Gallery> galleries;
  std::vector<AffineWeylElement> highlight_alcoves;
};

/// SVG 1.1 document; pure function of the scene (fixed 4-decimal formatting,
/// stable element order, no timestamps). Rejects scenes of rank other than 2.
std::string render_svg(const Scene& scene);

}  // namespace shadows
