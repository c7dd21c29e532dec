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

#include "trackstab/metrics.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace trackstab {
namespace {

double union_iou(int width, int height,
                 const std::vector<const RleMask*>& pred,
                 const std::vector<const RleMask*>& gt) {
  const RleMask pred_union = rle_union(width, height, pred);
  const RleMask gt_union = rle_union(width, height, gt);
  const Overlap o = mask_overlap(pred_union, gt_union);
  if (o.union_count == 0) return 1.0;  // nothing predicted, nothing to find
  return static_cast<double>(o.intersection) /
         static_cast<double>(o.union_count);
}

bool observation_counts(const Observation& obs, bool include_filled) {
  return include_filled || obs.provenance == Provenance::kObserved;
}

// (track_id, mask) pairs per frame, track_id ascending within a frame.
std::vector<std::vector<std::pair<int, const RleMask*>>> observations_by_frame(
    const TrackSet& tracks, int num_frames, bool include_filled) {
  std::vector<std::vector<std::pair<int, const RleMask*>>> by_frame(num_frames);
  for (const Track& track : tracks.tracks) {
    for (const Observation& obs : track.observations) {
      if (!observation_counts(obs, include_filled)) continue;
      if (obs.frame_index >= 0 && obs.frame_index < num_frames) {
        by_frame[obs.frame_index].emplace_back(track.track_id, &obs.mask);
      }
    }
  }
  return by_frame;
}

}  // namespace

double frame_miou(const FrameDetections& pred,
                  const std::vector<GroundTruthInstance>& gt, int width,
                  int height) {
  std::vector<const RleMask*> pred_masks;
  pred_masks.reserve(pred.detections.size());
  for (const Detection& det : pred.detections) pred_masks.push_back(&det.mask);
  std::vector<const RleMask*> gt_masks;
  gt_masks.reserve(gt.size());
  for (const GroundTruthInstance& inst : gt) gt_masks.push_back(&inst.mask);
  return union_iou(width, height, pred_masks, gt_masks);
}

GtTrackAssociation match_to_gt(const TrackSet& tracks,
                               const GroundTruthVideo& gt, double match_iou,
                               bool include_filled) {
  if (tracks.width != gt.width || tracks.height != gt.height) {
    throw DimensionError("track set and ground truth dimensions differ");
  }
  const int num_frames = std::max(tracks.num_frames, gt.num_frames());
  const auto by_frame = observations_by_frame(tracks, num_frames, include_filled);

  GtTrackAssociation association;
  for (const GroundTruthFrame& frame : gt.frames) {
    const int t = frame.frame_index;
    const auto& observations =
        (t < static_cast<int>(by_frame.size()))
            ? by_frame[t]
            : std::vector<std::pair<int, const RleMask*>>{};

    struct Candidate {
      double iou;
      int gt_id;
      int track_id;
      int gt_pos;
      int obs_pos;
    };
    std::vector<Candidate> candidates;
    for (std::size_t gi = 0; gi < frame.instances.size(); ++gi) {
      for (std::size_t oi = 0; oi < observations.size(); ++oi) {
        const double iou =
            mask_iou(frame.instances[gi].mask, *observations[oi].second);
        if (iou >= match_iou) {
          candidates.push_back({iou, frame.instances[gi].gt_id,
                                observations[oi].first, static_cast<int>(gi),
                                static_cast<int>(oi)});
        }
      }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) {
                if (a.iou != b.iou) return a.iou > b.iou;
                if (a.gt_id != b.gt_id) return a.gt_id < b.gt_id;
                return a.track_id < b.track_id;
              });

    std::vector<char> gt_taken(frame.instances.size(), 0);
    std::vector<char> obs_taken(observations.size(), 0);
    std::map<int, int> matched;  // gt_id -> track_id
    for (const Candidate& c : candidates) {
      if (gt_taken[c.gt_pos] || obs_taken[c.obs_pos]) continue;
      gt_taken[c.gt_pos] = 1;
      obs_taken[c.obs_pos] = 1;
      matched[c.gt_id] = c.track_id;
    }

    for (const GroundTruthInstance& inst : frame.instances) {
      const auto it = matched.find(inst.gt_id);
      association.by_identity[inst.gt_id].emplace_back(
          t, it == matched.end() ? std::nullopt
                                 : std::optional<int>(it->second));
    }
  }
  return association;
}

int id_switches(const GtTrackAssociation& association) {
  int switches = 0;
  for (const auto& [gt_id, timeline] : association.by_identity) {
    std::optional<int> last_match;
    for (const auto& [frame, track_id] : timeline) {
      if (!track_id) continue;
      if (last_match && *last_match != *track_id) ++switches;
      last_match = track_id;
    }
  }
  return switches;
}

int fragmentation(const GtTrackAssociation& association) {
  int fragments = 0;
  for (const auto& [gt_id, timeline] : association.by_identity) {
    bool seen_match = false;
    bool in_gap = false;
    for (const auto& [frame, track_id] : timeline) {
      if (track_id) {
        if (seen_match && in_gap) ++fragments;
        seen_match = true;
        in_gap = false;
      } else if (seen_match) {
        in_gap = true;
      }
    }
  }
  return fragments;
}

double flicker_index(const TrackSet& tracks, bool include_filled) {
  double total = 0.0;
  int pairs = 0;
  for (const Track& track : tracks.tracks) {
    for (std::size_t i = 0; i + 1 < track.observations.size(); ++i) {
      const Observation& a = track.observations[i];
      const Observation& b = track.observations[i + 1];
      if (b.frame_index != a.frame_index + 1) continue;  // hole in the track
      if (!observation_counts(a, include_filled) ||
          !observation_counts(b, include_filled)) {
        continue;
      }
      total += 1.0 - mask_iou(a.mask, b.mask);
      ++pairs;
    }
  }
  return pairs == 0 ? 0.0 : total / pairs;
}

int gt_free_fragment_proxy(const TrackSet& tracks, int gap, double link_iou) {
  int rebirths = 0;
  for (const Track& dead : tracks.tracks) {
    for (const Track& born : tracks.tracks) {
      if (dead.track_id == born.track_id) continue;
      const int missed = born.first_frame() - dead.last_frame() - 1;
      if (missed < 0 || missed > gap) continue;  // overlap disqualifies
      const double iou = mask_iou(dead.observations.back().mask,
                                  born.observations.front().mask);
      if (iou >= link_iou) ++rebirths;
    }
  }
  return rebirths;
}

int short_track_count(const TrackSet& tracks, int max_length) {
  int count = 0;
  for (const Track& track : tracks.tracks) {
    if (track.observed_count() <= max_length) ++count;
  }
  return count;
}

int count_instances(const TrackSet& tracks, int min_length,
                    std::optional<int> category) {
  int count = 0;
  for (const Track& track : tracks.tracks) {
    if (category && track.category != *category) continue;
    if (track.observed_count() >= min_length) ++count;
  }
  return count;
}

int counting_error(int predicted, int true_count) {
  return predicted - true_count;
}

int true_instance_count(const GroundTruthVideo& gt) {
  std::set<int> ids;
  for (const GroundTruthFrame& frame : gt.frames) {
    for (const GroundTruthInstance& inst : frame.instances) ids.insert(inst.gt_id);
  }
  return static_cast<int>(ids.size());
}

MetricsReport build_report(const TrackSet& tracks, const GroundTruthVideo* gt,
                           const MetricsConfig& config) {
  MetricsReport report;
  report.predicted_count =
      count_instances(tracks, config.min_track_length, std::nullopt);
  report.flicker_index = flicker_index(tracks, config.include_filled);
  report.short_track_count =
      short_track_count(tracks, config.short_track_max_length);
  report.rebirth_count =
      gt_free_fragment_proxy(tracks, config.proxy_gap, config.proxy_link_iou);

  if (gt == nullptr) return report;

  if (gt->width != tracks.width || gt->height != tracks.height) {
    throw DimensionError("track set and ground truth dimensions differ");
  }
  if (gt->num_frames() != tracks.num_frames) {
    throw DimensionError("track set covers " +
                         std::to_string(tracks.num_frames) +
                         " frames but ground truth has " +
                         std::to_string(gt->num_frames()));
  }

  const GtTrackAssociation association =
      match_to_gt(tracks, *gt, config.match_iou, config.include_filled);
  report.id_switches = id_switches(association);
  report.fragments = fragmentation(association);
  report.true_count = true_instance_count(*gt);
  report.counting_error =
      counting_error(report.predicted_count, *report.true_count);

  const auto by_frame = observations_by_frame(tracks, tracks.num_frames,
                                              config.include_filled);
  double miou_sum = 0.0;
  for (int t = 0; t < tracks.num_frames; ++t) {
    std::vector<const RleMask*> pred_masks;
    for (const auto& [id, mask] : by_frame[t]) pred_masks.push_back(mask);
    std::vector<const RleMask*> gt_masks;
    for (const GroundTruthInstance& inst : gt->frames[t].instances) {
      gt_masks.push_back(&inst.mask);
    }
    miou_sum += union_iou(tracks.width, tracks.height, pred_masks, gt_masks);
  }
  report.mean_frame_miou =
      tracks.num_frames == 0 ? 1.0 : miou_sum / tracks.num_frames;
  return report;
}

}  // namespace trackstab
