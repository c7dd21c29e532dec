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

#include <vector>

#include "trackstab/mask.hpp"

namespace trackstab {

/// One per-frame model output: a mask with category and confidence.
struct Detection {
  int frame_index = 0;
  int category = 0;
  double score = 1.0;
  RleMask mask;

  bool operator==(const Detection&) const = default;
};

/// All detections of one frame; the list may be empty.
struct FrameDetections {
  int frame_index = 0;
  std::vector<Detection> detections;

  bool operator==(const FrameDetections&) const = default;
};

/// The full per-frame detection stream of one video. Frame indices are
/// contiguous from 0 and every mask shares the video dimensions.
struct VideoPredictions {
  int width = 0;
  int height = 0;
  std::vector<FrameDetections> frames;

  int num_frames() const { return static_cast<int>(frames.size()); }

  bool operator==(const VideoPredictions&) const = default;
};

/// A ground-truth instance: the identity is persistent across frames, so
/// reuse of the same gt_id in another frame means the same physical object.
struct GroundTruthInstance {
  int gt_id = 0;
  int category = 0;
  RleMask mask;

  bool operator==(const GroundTruthInstance&) const = default;
};

struct GroundTruthFrame {
  int frame_index = 0;
  std::vector<GroundTruthInstance> instances;

  bool operator==(const GroundTruthFrame&) const = default;
};

/// Per-frame instances with persistent identities (synthetic or annotated).
struct GroundTruthVideo {
  int width = 0;
  int height = 0;
  std::vector<GroundTruthFrame> frames;

  int num_frames() const { return static_cast<int>(frames.size()); }

  bool operator==(const GroundTruthVideo&) const = default;
};

/// Checks frame contiguity, score ranges, and per-mask invariants against
/// the video dimensions. Throws naming the offending frame/record.
void validate(const VideoPredictions& video);

/// Same checks plus per-frame gt_id uniqueness.
void validate(const GroundTruthVideo& video);

}  // namespace trackstab
