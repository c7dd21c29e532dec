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

#include <utility>
#include <vector>

#include "trackstab/video.hpp"

namespace trackstab {

/// Greedy tracking-by-matching parameters.
struct TrackerConfig {
  /// Minimum mask IoU for a (track, detection) pair to be matchable, in (0,1].
  double iou_threshold = 0.5;
  /// How many frames an unmatched track stays matchable. 0 means strict
  /// consecutive-frame matching.
  int max_age = 0;
  /// Detections below this score are dropped before association.
  double score_threshold = 0.0;
  /// When set, a track only matches detections of its own category.
  bool category_aware = true;
};

/// Throws ConfigError on out-of-range values.
void validate(const TrackerConfig& config);

/// Whether a track mask was observed by the model or filled in by a remedy.
enum class Provenance { kObserved, kFilled };

struct Observation {
  int frame_index = 0;
  Provenance provenance = Provenance::kObserved;
  RleMask mask;

  bool operator==(const Observation&) const = default;
};

/// An identity-labeled temporal sequence of masks. Observations are kept in
/// strictly increasing frame order.
struct Track {
  int track_id = 0;
  int category = 0;
  std::vector<Observation> observations;

  int first_frame() const { return observations.front().frame_index; }
  int last_frame() const { return observations.back().frame_index; }
  int observed_count() const;

  bool operator==(const Track&) const = default;
};

/// Tracker output for one video, together with the video metadata.
struct TrackSet {
  int width = 0;
  int height = 0;
  int num_frames = 0;
  std::vector<Track> tracks;  // sorted by track_id, ids unique

  bool operator==(const TrackSet&) const = default;
};

/// The last observation of a still-matchable track, as offered to associate().
struct TrackHead {
  int track_id = 0;
  int category = 0;
  RleMask mask;
};

/// One-to-one assignment between track heads and detections.
struct Assignment {
  std::vector<std::pair<int, int>> pairs;  // (track_id, detection index)
  std::vector<int> unmatched_tracks;       // track ids, ascending
  std::vector<int> unmatched_detections;   // detection indices, ascending
};

/// Greedy matching with a fixed IoU threshold. All candidate pairs with
/// IoU >= iou_threshold (and equal category when category_aware) are ranked
/// by descending IoU, ties broken by smaller track_id then smaller detection
/// index, and accepted greedily, skipping pairs whose track or detection is
/// already taken. Detections are expected to be score-filtered already.
Assignment associate(const std::vector<TrackHead>& active_tracks,
                     const FrameDetections& detections,
                     const TrackerConfig& config);

/// Runs greedy tracking-by-matching over the whole detection stream.
/// Frame-0 detections each birth a track; later unmatched detections birth
/// new tracks with fresh, monotonically increasing ids; tracks unmatched for
/// more than max_age frames are terminated. Deterministic in its inputs.
TrackSet run_tracker(const VideoPredictions& video, const TrackerConfig& config);

/// Throws when track ids collide, observations are out of order, or masks
/// disagree with the declared video dimensions.
void validate(const TrackSet& tracks);

}  // namespace trackstab
