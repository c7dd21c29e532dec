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

#include "trackstab/tracker.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace trackstab {

void validate(const TrackerConfig& config) {
  if (!(config.iou_threshold > 0.0) || config.iou_threshold > 1.0) {
    throw ConfigError("iou_threshold must be in (0, 1], got " +
                      std::to_string(config.iou_threshold));
  }
  if (config.max_age < 0) {
    throw ConfigError("max_age must be nonnegative");
  }
  if (config.score_threshold < 0.0 || config.score_threshold > 1.0) {
    throw ConfigError("score_threshold must be in [0, 1]");
  }
}

int Track::observed_count() const {
  int n = 0;
  for (const Observation& obs : observations) {
    if (obs.provenance == Provenance::kObserved) ++n;
  }
  return n;
}

namespace {

struct Candidate {
  double iou = 0.0;
  int track_pos = 0;  // position in the active list
  int track_id = 0;
  int det_index = 0;
};

// Ranking used for greedy selection: descending IoU, ties by smaller
// track_id, then smaller detection index.
bool better(const Candidate& a, const Candidate& b) {
  if (a.iou != b.iou) return a.iou > b.iou;
  if (a.track_id != b.track_id) return a.track_id < b.track_id;
  return a.det_index < b.det_index;
}

}  // namespace

Assignment associate(const std::vector<TrackHead>& active_tracks,
                     const FrameDetections& detections,
                     const TrackerConfig& config) {
  validate(config);
  std::vector<Candidate> candidates;
  for (std::size_t ti = 0; ti < active_tracks.size(); ++ti) {
    const TrackHead& head = active_tracks[ti];
    for (std::size_t di = 0; di < detections.detections.size(); ++di) {
      const Detection& det = detections.detections[di];
      if (config.category_aware && head.category != det.category) continue;
      const double iou = mask_iou(head.mask, det.mask);
      if (iou >= config.iou_threshold) {
        candidates.push_back({iou, static_cast<int>(ti), head.track_id,
                              static_cast<int>(di)});
      }
    }
  }

  // Greedy sweep without materializing a sorted list: repeatedly take the
  // best remaining pair whose track and detection are both still free. The
  // sort-based route exists as an independent oracle in the tests.
  Assignment result;
  std::vector<char> track_taken(active_tracks.size(), 0);
  std::vector<char> det_taken(detections.detections.size(), 0);
  std::vector<char> used(candidates.size(), 0);
  for (;;) {
    int best = -1;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (used[i] || track_taken[candidates[i].track_pos] ||
          det_taken[candidates[i].det_index]) {
        continue;
      }
      if (best < 0 || better(candidates[i], candidates[best])) {
        best = static_cast<int>(i);
      }
    }
    if (best < 0) break;
    const Candidate& c = candidates[best];
    used[best] = 1;
    track_taken[c.track_pos] = 1;
    det_taken[c.det_index] = 1;
    result.pairs.emplace_back(c.track_id, c.det_index);
  }

  for (std::size_t ti = 0; ti < active_tracks.size(); ++ti) {
    if (!track_taken[ti]) {
      result.unmatched_tracks.push_back(active_tracks[ti].track_id);
    }
  }
  std::sort(result.unmatched_tracks.begin(), result.unmatched_tracks.end());
  for (std::size_t di = 0; di < detections.detections.size(); ++di) {
    if (!det_taken[di]) {
      result.unmatched_detections.push_back(static_cast<int>(di));
    }
  }
  return result;
}

TrackSet run_tracker(const VideoPredictions& video,
                     const TrackerConfig& config) {
  validate(config);
  validate(video);

  struct ActiveTrack {
    Track track;
    int last_frame = 0;
  };
  std::vector<ActiveTrack> active;
  std::vector<Track> finished;
  int next_id = 1;

  for (const FrameDetections& frame : video.frames) {
    const int t = frame.frame_index;

    FrameDetections retained;
    retained.frame_index = t;
    for (const Detection& det : frame.detections) {
      if (det.score >= config.score_threshold) retained.detections.push_back(det);
    }

    // Tracks whose last observation lies within max_age frames are offered
    // for matching (gap of t - last_frame - 1 missed frames <= max_age).
    std::vector<int> candidate_pos;
    std::vector<TrackHead> heads;
    for (std::size_t i = 0; i < active.size(); ++i) {
      if (t - active[i].last_frame <= config.max_age + 1) {
        candidate_pos.push_back(static_cast<int>(i));
        heads.push_back({active[i].track.track_id, active[i].track.category,
                         active[i].track.observations.back().mask});
      }
    }

    const Assignment assignment = associate(heads, retained, config);

    std::vector<char> det_matched(retained.detections.size(), 0);
    for (const auto& [track_id, det_index] : assignment.pairs) {
      for (int pos : candidate_pos) {
        if (active[pos].track.track_id == track_id) {
          active[pos].track.observations.push_back(
              {t, Provenance::kObserved, retained.detections[det_index].mask});
          active[pos].last_frame = t;
          break;
        }
      }
      det_matched[det_index] = 1;
    }

    // Unmatched detections birth new tracks, in detection order.
    for (std::size_t di = 0; di < retained.detections.size(); ++di) {
      if (det_matched[di]) continue;
      const Detection& det = retained.detections[di];
      Track track;
      track.track_id = next_id++;
      track.category = det.category;
      track.observations.push_back({t, Provenance::kObserved, det.mask});
      active.push_back({std::move(track), t});
    }

    // Terminate tracks that outlived max_age without a match.
    std::vector<ActiveTrack> still_active;
    for (ActiveTrack& at : active) {
      if (t - at.last_frame > config.max_age) {
        finished.push_back(std::move(at.track));
      } else {
        still_active.push_back(std::move(at));
      }
    }
    active = std::move(still_active);
  }

  for (ActiveTrack& at : active) finished.push_back(std::move(at.track));
  std::sort(finished.begin(), finished.end(),
            [](const Track& a, const Track& b) { return a.track_id < b.track_id; });

  TrackSet result;
  result.width = video.width;
  result.height = video.height;
  result.num_frames = video.num_frames();
  result.tracks = std::move(finished);
  return result;
}

void validate(const TrackSet& tracks) {
  if (tracks.num_frames < 0) {
    throw ValidationError("num_frames must be nonnegative");
  }
  if (tracks.width <= 0 || tracks.height <= 0) {
    throw DimensionError("track set dimensions must be positive");
  }
  std::set<int> ids;
  for (const Track& track : tracks.tracks) {
    if (!ids.insert(track.track_id).second) {
      throw ValidationError("duplicate track_id " +
                            std::to_string(track.track_id));
    }
    if (track.observations.empty()) {
      throw ValidationError("track " + std::to_string(track.track_id) +
                            " has no observations");
    }
    int prev = -1;
    for (const Observation& obs : track.observations) {
      if (obs.frame_index <= prev) {
        throw ValidationError("track " + std::to_string(track.track_id) +
                              ": observation frames must be strictly "
                              "increasing");
      }
      if (obs.frame_index < 0 || obs.frame_index >= tracks.num_frames) {
        throw ValidationError("track " + std::to_string(track.track_id) +
                              ": frame " + std::to_string(obs.frame_index) +
                              " outside [0, " +
                              std::to_string(tracks.num_frames) + ")");
      }
      prev = obs.frame_index;
      try {
        validate_mask(obs.mask);
      } catch (const Error& e) {
        throw ValidationError("track " + std::to_string(track.track_id) +
                              ", frame " + std::to_string(obs.frame_index) +
                              ": " + e.what());
      }
      if (obs.mask.width != tracks.width || obs.mask.height != tracks.height) {
        throw ValidationError("track " + std::to_string(track.track_id) +
                              ", frame " + std::to_string(obs.frame_index) +
                              ": mask dimensions differ from video");
      }
    }
  }
}

}  // namespace trackstab
