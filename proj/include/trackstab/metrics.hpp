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

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "trackstab/tracker.hpp"
#include "trackstab/video.hpp"

namespace trackstab {

struct MetricsConfig {
  /// IoU threshold for matching track observations to ground-truth instances.
  double match_iou = 0.5;
  /// Rebirth proxy: max frames between a track death and a candidate rebirth.
  int proxy_gap = 3;
  /// Rebirth proxy: min IoU between the dead track's last mask and the
  /// newborn's first mask.
  double proxy_link_iou = 0.5;
  /// Tracks with at most this many observed frames count as short.
  int short_track_max_length = 3;
  /// Minimum observed length for a track to enter the instance count.
  int min_track_length = 1;
  /// When set, remedy-filled observations take part in matching, mIoU and
  /// flicker; by default only model-observed masks do.
  bool include_filled = false;
};

/// Aggregated per-video report. Ground-truth-dependent fields are absent
/// when no ground truth was supplied. flicker_index, short_track_count and
/// rebirth_count are ground-truth-free proxies and are labeled as such
/// wherever the report is rendered.
struct MetricsReport {
  std::optional<double> mean_frame_miou;
  std::optional<int> id_switches;
  std::optional<int> fragments;
  double flicker_index = 0.0;
  int short_track_count = 0;
  int rebirth_count = 0;
  int predicted_count = 0;
  std::optional<int> true_count;
  std::optional<int> counting_error;

  bool operator==(const MetricsReport&) const = default;
};

/// Per ground-truth identity: its existence frames in increasing order, each
/// carrying the matched track_id or nullopt when unmatched in that frame.
struct GtTrackAssociation {
  std::map<int, std::vector<std::pair<int, std::optional<int>>>> by_identity;
};

/// Frame-wise segmentation accuracy: binary-foreground IoU between the union
/// of predicted masks and the union of ground-truth masks of one frame. Both
/// unions empty yields 1. Class-agnostic by protocol.
double frame_miou(const FrameDetections& pred,
                  const std::vector<GroundTruthInstance>& gt, int width,
                  int height);

/// Per-frame one-to-one greedy IoU matching between ground-truth instances
/// and track observations, with the same order and tie rules as
/// associate(): descending IoU, then smaller gt_id, then smaller track_id.
GtTrackAssociation match_to_gt(const TrackSet& tracks,
                               const GroundTruthVideo& gt, double match_iou,
                               bool include_filled = false);

/// CLEAR-MOT identity switches: for each gt identity, transitions where the
/// matched track differs from the one at its most recent previously matched
/// frame. Holes alone do not create switches.
int id_switches(const GtTrackAssociation& association);

/// Interruptions: matched -> unmatched transitions later followed by another
/// matched frame, summed over gt identities. Trailing loss does not count.
int fragmentation(const GtTrackAssociation& association);

/// Ground-truth-free flicker proxy: mean of (1 - IoU) over all pairs of
/// masks observed on adjacent frames within a track; 0 without such pairs.
double flicker_index(const TrackSet& tracks, bool include_filled = false);

/// Ground-truth-free rebirth proxy: pairs (dead track, newborn track) whose
/// death-to-birth gap is at most `gap` missed frames and whose boundary
/// masks overlap with IoU >= link_iou. Temporal overlap disqualifies.
int gt_free_fragment_proxy(const TrackSet& tracks, int gap, double link_iou);

/// Tracks with at most max_length observed frames.
int short_track_count(const TrackSet& tracks, int max_length);

/// Number of distinct track identities, optionally restricted to a category
/// and to tracks with at least min_length observed frames.
int count_instances(const TrackSet& tracks, int min_length = 1,
                    std::optional<int> category = std::nullopt);

/// Signed count difference, predicted - true.
int counting_error(int predicted, int true_count);

/// Distinct ground-truth identities over the whole video.
int true_instance_count(const GroundTruthVideo& gt);

/// Populates a full report from tracks and (optionally) ground truth.
/// GT-dependent fields stay absent when gt is null.
MetricsReport build_report(const TrackSet& tracks, const GroundTruthVideo* gt,
                           const MetricsConfig& config);

}  // namespace trackstab
