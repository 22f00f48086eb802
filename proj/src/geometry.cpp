#include "adpipe/geometry.hpp"

#include <algorithm>
#include <string>

#include "adpipe/errors.hpp"

namespace adpipe {

double iou(const BBox& a, const BBox& b) {
  if (a.w <= 0.0 || a.h <= 0.0 || b.w <= 0.0 || b.h <= 0.0) {
    throw InvariantError("iou: boxes need positive width and height");
  }
  const double ix =
      std::max(0.0, std::min(a.x + a.w, b.x + b.w) - std::max(a.x, b.x));
  const double iy =
      std::max(0.0, std::min(a.y + a.h, b.y + b.h) - std::max(a.y, b.y));
  const double inter = ix * iy;
  const double uni = a.w * a.h + b.w * b.h - inter;
  return inter / uni;
}

}  // namespace adpipe
