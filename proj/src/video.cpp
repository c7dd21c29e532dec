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

#include "trackstab/video.hpp"

#include <set>
#include <string>

namespace trackstab {
namespace {

void check_mask_in_video(const RleMask& mask, int width, int height,
                         const std::string& where) {
  try {
    validate_mask(mask);
  } catch (const Error& e) {
    throw ValidationError(where + ": " + e.what());
  }
  if (mask.width != width || mask.height != height) {
    throw ValidationError(where + ": mask dimensions " +
                          std::to_string(mask.width) + "x" +
                          std::to_string(mask.height) +
                          " differ from video dimensions " +
                          std::to_string(width) + "x" + std::to_string(height));
  }
}

void check_video_dims(int width, int height) {
  if (width <= 0 || height <= 0) {
    throw DimensionError("video dimensions must be positive, got " +
                         std::to_string(width) + "x" + std::to_string(height));
  }
}

}  // namespace

void validate(const VideoPredictions& video) {
  check_video_dims(video.width, video.height);
  for (std::size_t t = 0; t < video.frames.size(); ++t) {
    const FrameDetections& frame = video.frames[t];
    if (frame.frame_index != static_cast<int>(t)) {
      throw ValidationError("frame indices must be contiguous from 0: frame " +
                            std::to_string(t) + " carries index " +
                            std::to_string(frame.frame_index));
    }
    for (std::size_t k = 0; k < frame.detections.size(); ++k) {
      const Detection& det = frame.detections[k];
      const std::string where = "frame " + std::to_string(t) + ", detection " +
                                std::to_string(k);
      if (det.frame_index != frame.frame_index) {
        throw ValidationError(where + ": detection frame_index " +
                              std::to_string(det.frame_index) +
                              " differs from its frame");
      }
      if (det.score < 0.0 || det.score > 1.0) {
        throw ValidationError(where + ": score " + std::to_string(det.score) +
                              " outside [0, 1]");
      }
      check_mask_in_video(det.mask, video.width, video.height, where);
    }
  }
}

void validate(const GroundTruthVideo& video) {
  check_video_dims(video.width, video.height);
  for (std::size_t t = 0; t < video.frames.size(); ++t) {
    const GroundTruthFrame& frame = video.frames[t];
    if (frame.frame_index != static_cast<int>(t)) {
      throw ValidationError("frame indices must be contiguous from 0: frame " +
                            std::to_string(t) + " carries index " +
                            std::to_string(frame.frame_index));
    }
    std::set<int> seen;
    for (std::size_t k = 0; k < frame.instances.size(); ++k) {
      const GroundTruthInstance& inst = frame.instances[k];
      const std::string where = "frame " + std::to_string(t) + ", instance " +
                                std::to_string(k);
      if (!seen.insert(inst.gt_id).second) {
        throw ValidationError(where + ": gt_id " + std::to_string(inst.gt_id) +
                              " appears twice in one frame");
      }
      check_mask_in_video(inst.mask, video.width, video.height, where);
    }
  }
}

}  // namespace trackstab
