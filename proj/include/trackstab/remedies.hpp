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

#include "trackstab/tracker.hpp"

namespace trackstab {

/// Post-hoc temporal regularization parameters. Both mechanisms are
/// independently switchable: relink_gap = 0 disables re-linking and
/// smooth_window = 1 disables mask smoothing.
struct RemedyConfig {
  /// Max missed frames between a track death and a rebirth for the two
  /// tracks to be merge candidates (frames strictly between the last frame
  /// of one and the first frame of the other).
  int relink_gap = 3;
  /// Min IoU between the dead track's last mask and the newborn's first
  /// mask, in (0, 1].
  double relink_iou = 0.5;
  /// Odd temporal window for per-pixel majority voting over a track's masks.
  int smooth_window = 3;
  /// When set, frames missing inside a merged track are filled by carrying
  /// the last observed mask, flagged Provenance::kFilled.
  bool fill_gaps = false;
};

/// Throws ConfigError on out-of-range values (even windows in particular).
void validate(const RemedyConfig& config);

/// One accepted merge, for auditing the relink pass.
struct MergeEvent {
  int kept_id = 0;      // id of the earlier track, which survives
  int absorbed_id = 0;  // id of the later track, folded into kept_id
  int death_frame = 0;  // last frame of the earlier track before the merge
  int birth_frame = 0;  // first frame of the later track
  double junction_iou = 0.0;
};

/// Repeatedly merges (dead, newborn) track pairs of the same category whose
/// death-to-birth gap is at most relink_gap missed frames and whose boundary
/// masks overlap with IoU >= relink_iou. Candidates are processed greedily
/// by descending IoU with (earlier death, smaller id) tie-break; the merged
/// track keeps the earlier track's id. Temporally overlapping tracks never
/// merge. With config.fill_gaps set, holes inside merged tracks are filled.
TrackSet relink_tracks(const TrackSet& tracks, const RemedyConfig& config,
                       std::vector<MergeEvent>* merge_log = nullptr);

/// Replaces every observed mask by the per-pixel majority vote over the
/// track's observed masks within [t - w/2, t + w/2] (window truncated at
/// track ends, ties keep the original pixel). Ids and frame coverage are
/// unchanged; window 1 is the identity transform.
TrackSet smooth_masks(const TrackSet& tracks, const RemedyConfig& config);

/// Fills every hole inside each track by carrying the nearest earlier mask,
/// flagged Provenance::kFilled.
TrackSet fill_track_gaps(const TrackSet& tracks);

/// The full remedy pipeline: relink, then smooth, then gap fill if enabled.
TrackSet apply_remedy(const TrackSet& tracks, const RemedyConfig& config,
                      std::vector<MergeEvent>* merge_log = nullptr);

}  // namespace trackstab
