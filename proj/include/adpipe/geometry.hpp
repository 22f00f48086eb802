#pragma once

namespace adpipe {

// Axis-aligned pixel box, top-left origin.
struct BBox {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;
  bool operator==(const BBox&) const = default;
};

// Intersection over union in [0, 1]. Requires positive widths and heights.
double iou(const BBox& a, const BBox& b);

}  // namespace adpipe
