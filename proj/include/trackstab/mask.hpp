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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "trackstab/error.hpp"

namespace trackstab {

/// Dense binary mask, row-major, one byte per pixel (0 = background).
struct Bitmap {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // size width * height

  Bitmap() = default;
  Bitmap(int w, int h) : width(w), height(h), pixels(size_t(w) * size_t(h), 0) {}

  bool at(int x, int y) const { return pixels[size_t(y) * width + x] != 0; }
  void set(int x, int y, bool v) { pixels[size_t(y) * width + x] = v ? 1 : 0; }

  bool operator==(const Bitmap&) const = default;
};

/// Run-length-encoded binary mask on a fixed frame grid.
///
/// `runs` holds alternating run lengths in row-major scan order, background
/// first. Invariants: sum(runs) == width*height, and every run after the
/// first is strictly positive (only the leading background run may be zero).
struct RleMask {
  int width = 0;
  int height = 0;
  std::vector<std::uint32_t> runs;

  bool operator==(const RleMask&) const = default;
};

/// Axis-aligned box in pixel coordinates, all bounds inclusive.
struct BoundingBox {
  int x_min = 0;
  int y_min = 0;
  int x_max = 0;
  int y_max = 0;

  bool intersects(const BoundingBox& o) const {
    return x_min <= o.x_max && o.x_min <= x_max && y_min <= o.y_max &&
           o.y_min <= y_max;
  }
  bool operator==(const BoundingBox&) const = default;
};

/// Intersection and union pixel counts of two masks.
struct Overlap {
  std::uint64_t intersection = 0;
  std::uint64_t union_count = 0;
};

/// Throws ValidationError (or DimensionError for bad dims) naming the first
/// violated RleMask invariant.
void validate_mask(const RleMask& mask);

/// Encodes a dense bitmap. Throws DimensionError on a zero-area grid.
RleMask rle_encode(const Bitmap& bitmap);

/// Decodes to a dense bitmap. Throws if the mask violates its invariants
/// (in particular a run sum that mismatches the declared dimensions).
Bitmap rle_decode(const RleMask& mask);

/// Mask with no foreground pixels on a w x h grid.
RleMask make_empty_mask(int width, int height);

/// Number of foreground pixels, computed on the run list without decoding.
std::uint64_t mask_area(const RleMask& mask);

/// True when the mask has no foreground pixels.
bool mask_empty(const RleMask& mask);

/// Intersection/union pixel counts via a merge scan over both run lists.
/// Throws DimensionError when dimensions differ.
Overlap mask_overlap(const RleMask& a, const RleMask& b);

/// IoU = |intersection| / |union|, in [0, 1]. Two empty masks yield 0 so an
/// empty detection can never match anything. Symmetric in its arguments.
double mask_iou(const RleMask& a, const RleMask& b);

/// Union (or intersection) of two masks, computed in run space.
RleMask rle_merge(const RleMask& a, const RleMask& b, bool intersect = false);

/// Union of an arbitrary set of masks on a w x h grid; empty set gives the
/// empty mask.
RleMask rle_union(int width, int height, std::span<const RleMask* const> masks);

/// Tight foreground bounding box; nullopt for an empty mask.
std::optional<BoundingBox> mask_bbox(const RleMask& mask);

}  // namespace trackstab
