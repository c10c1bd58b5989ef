#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "oacd/diagram.hpp"

namespace oacd {

struct BBox {
  Rational x0, y0, x1, y1;
};

BBox parse_bbox(std::string_view text);  // "x0,y0,x1,y1"
// Generators and vertices, padded on every side.
BBox default_bbox(const FullOACD& d);

struct RenderOptions {
  std::optional<BBox> bbox;
  bool edge_labels = false;
  double width = 800;
};

// Throws BboxTooSmall unless the box strictly contains every generator.
std::string render_svg(const FullOACD& d, const RenderOptions& options = {});

}  // namespace oacd
