/* Copyright 2026 The TrackStab Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "trackstab/mask.hpp"

#include <algorithm>
#include <string>

namespace trackstab {
namespace {

// Walks a valid run list as a sequence of (value, length) segments.
struct RunCursor {
  explicit RunCursor(const std::vector<std::uint32_t>& r) : runs(r) {
    remaining = runs.empty() ? 0 : runs[0];
    if (remaining == 0 && runs.size() > 1) {  // zero-length leading background
      index = 1;
      value = true;
      remaining = runs[1];
    }
  }

  void advance(std::uint64_t n) {
    remaining -= n;
    while (remaining == 0 && index + 1 < runs.size()) {
      ++index;
      value = !value;
      remaining = runs[index];
    }
  }

  const std::vector<std::uint32_t>& runs;
  std::size_t index = 0;
  bool value = false;
  std::uint64_t remaining = 0;
};

std::uint64_t grid_area(const RleMask& m) {
  return std::uint64_t(m.width) * std::uint64_t(m.height);
}

void check_same_dims(const RleMask& a, const RleMask& b) {
  if (a.width != b.width || a.height != b.height) {
    throw DimensionError("mask dimensions differ: " + std::to_string(a.width) +
                         "x" + std::to_string(a.height) + " vs " +
                         std::to_string(b.width) + "x" +
                         std::to_string(b.height));
  }
}

}  // namespace

void validate_mask(const RleMask& mask) {
  if (mask.width <= 0 || mask.height <= 0) {
    throw DimensionError("mask dimensions must be positive, got " +
                         std::to_string(mask.width) + "x" +
                         std::to_string(mask.height));
  }
  if (mask.runs.empty()) {
    throw ValidationError("mask run list must be nonempty");
  }
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < mask.runs.size(); ++i) {
    if (i > 0 && mask.runs[i] == 0) {
      throw ValidationError(
          "only the leading background run may be zero (run " +
          std::to_string(i) + " is zero)");
    }
    sum += mask.runs[i];
  }
  if (sum != grid_area(mask)) {
    throw ValidationError("runs sum to " + std::to_string(sum) +
                          " but width*height is " +
                          std::to_string(grid_area(mask)));
  }
}

RleMask rle_encode(const Bitmap& bitmap) {
  if (bitmap.width <= 0 || bitmap.height <= 0) {
    throw DimensionError("cannot encode a zero-area grid (" +
                         std::to_string(bitmap.width) + "x" +
                         std::to_string(bitmap.height) + ")");
  }
  RleMask mask;
  mask.width = bitmap.width;
  mask.height = bitmap.height;
  std::uint8_t current = 0;  // background first
  std::uint32_t count = 0;
  for (std::uint8_t p : bitmap.pixels) {
    const std::uint8_t v = p ? 1 : 0;
    if (v != current) {
      mask.runs.push_back(count);
      count = 0;
      current = v;
    }
    ++count;
  }
  mask.runs.push_back(count);
  return mask;
}

Bitmap rle_decode(const RleMask& mask) {
  validate_mask(mask);
  Bitmap bitmap(mask.width, mask.height);
  std::size_t pos = 0;
  bool value = false;
  for (std::uint32_t run : mask.runs) {
    if (value) std::fill_n(bitmap.pixels.begin() + pos, run, std::uint8_t{1});
    pos += run;
    value = !value;
  }
  return bitmap;
}

RleMask make_empty_mask(int width, int height) {
  if (width <= 0 || height <= 0) {
    throw DimensionError("mask dimensions must be positive");
  }
  return RleMask{width, height,
                 {static_cast<std::uint32_t>(std::uint64_t(width) * height)}};
}

std::uint64_t mask_area(const RleMask& mask) {
  // Foreground runs sit at odd indices (background-first convention).
  std::uint64_t area = 0;
  for (std::size_t i = 1; i < mask.runs.size(); i += 2) area += mask.runs[i];
  return area;
}

bool mask_empty(const RleMask& mask) { return mask_area(mask) == 0; }

Overlap mask_overlap(const RleMask& a, const RleMask& b) {
  check_same_dims(a, b);
  Overlap result;
  RunCursor ca(a.runs);
  RunCursor cb(b.runs);
  const std::uint64_t total = grid_area(a);
  std::uint64_t done = 0;
  while (done < total) {
    const std::uint64_t step = std::min(ca.remaining, cb.remaining);
    if (step == 0) break;  // malformed input; validate_mask reports details
    if (ca.value || cb.value) result.union_count += step;
    if (ca.value && cb.value) result.intersection += step;
    done += step;
    ca.advance(step);
    cb.advance(step);
  }
  return result;
}

double mask_iou(const RleMask& a, const RleMask& b) {
  const Overlap o = mask_overlap(a, b);
  if (o.union_count == 0) return 0.0;  // both empty
  return static_cast<double>(o.intersection) /
         static_cast<double>(o.union_count);
}

RleMask rle_merge(const RleMask& a, const RleMask& b, bool intersect) {
  check_same_dims(a, b);
  RleMask out;
  out.width = a.width;
  out.height = a.height;
  RunCursor ca(a.runs);
  RunCursor cb(b.runs);
  const std::uint64_t total = grid_area(a);
  std::uint64_t done = 0;
  bool current = false;
  std::uint64_t acc = 0;
  while (done < total) {
    const std::uint64_t step = std::min(ca.remaining, cb.remaining);
    if (step == 0) break;
    const bool v = intersect ? (ca.value && cb.value) : (ca.value || cb.value);
    if (v == current) {
      acc += step;
    } else {
      out.runs.push_back(static_cast<std::uint32_t>(acc));
      current = v;
      acc = step;
    }
    done += step;
    ca.advance(step);
    cb.advance(step);
  }
  out.runs.push_back(static_cast<std::uint32_t>(acc));
  return out;
}

RleMask rle_union(int width, int height,
                  std::span<const RleMask* const> masks) {
  RleMask acc = make_empty_mask(width, height);
  for (const RleMask* m : masks) acc = rle_merge(acc, *m, /*intersect=*/false);
  return acc;
}

std::optional<BoundingBox> mask_bbox(const RleMask& mask) {
  std::optional<BoundingBox> box;
  std::uint64_t pos = 0;
  bool value = false;
  const int w = mask.width;
  for (std::uint32_t run : mask.runs) {
    if (value && run > 0) {
      const std::uint64_t first = pos;
      const std::uint64_t last = pos + run - 1;
      const int row_first = static_cast<int>(first / w);
      const int row_last = static_cast<int>(last / w);
      int col_min, col_max;
      if (row_first == row_last) {
        col_min = static_cast<int>(first % w);
        col_max = static_cast<int>(last % w);
      } else {
        // A run spanning rows covers a suffix and a prefix, so full width.
        col_min = 0;
        col_max = w - 1;
      }
      if (!box) {
        box = BoundingBox{col_min, row_first, col_max, row_last};
      } else {
        box->x_min = std::min(box->x_min, col_min);
        box->y_min = std::min(box->y_min, row_first);
        box->x_max = std::max(box->x_max, col_max);
        box->y_max = std::max(box->y_max, row_last);
      }
    }
    pos += run;
    value = !value;
  }
  return box;
}

}  // namespace trackstab
