#pragma once

#include <cmath>
#include <cstddef>
#include <utility>

#include "gaitlab/errors.hpp"
#include "gaitlab/joints.hpp"
#include "gaitlab/recording.hpp"

namespace gaitlab {

inline constexpr double kDefaultJumpThresholdM = 0.5;
inline constexpr int kDefaultGuardFrames = 3;

struct TrimReport {
  std::size_t frames_dropped_head = 0;
  std::size_t frames_dropped_tail = 0;
  double jump_threshold_m = kDefaultJumpThresholdM;
  std::size_t retained_start = 0;  // inclusive indices into the input
  std::size_t retained_end = 0;
};

namespace detail {

inline bool core15_jump_between(const SkeletonFrame& a, const SkeletonFrame& b,
                                double threshold_m) {
  for (JointId j : core15().members) {
    const Vec3& pa = a.position(j);
    const Vec3& pb = b.position(j);
    const double dx = pb.x - pa.x, dy = pb.y - pa.y, dz = pb.z - pa.z;
    if (std::sqrt(dx * dx + dy * dy + dz * dz) > threshold_m) return true;
  }
  return false;
}

}  // namespace detail

// Drops leading/trailing frames involved in inter-frame jumps of any Core15
// joint larger than jump_threshold_m, plus guard_frames next to each dropped
// run. Repeats until the boundary transition is clean, so trimming an
// already-trimmed trial drops nothing. Interior frames are never touched.
inline std::pair<TrialRecording, TrimReport> trim_boundary_artifacts(
    const TrialRecording& trial,
    double jump_threshold_m = kDefaultJumpThresholdM,
    int guard_frames = kDefaultGuardFrames) {
  const auto& frames = trial.frames;
  const std::size_t n = frames.size();
  if (n < 2 * static_cast<std::size_t>(guard_frames) + 2)
    throw TooShortAfterTrimError("trial has " + std::to_string(n) +
                                 " frames, need at least " +
                                 std::to_string(2 * guard_frames + 2));

  auto jump = [&](std::size_t i) {  // between frames i and i+1
    return detail::core15_jump_between(frames[i], frames[i + 1],
                                       jump_threshold_m);
  };

  std::size_t head = 0;
  std::size_t tail = n - 1;
  while (head < tail) {
    bool advanced = false;
    while (head < tail && jump(head)) {
      ++head;
      advanced = true;
    }
    if (!advanced) break;
    head += static_cast<std::size_t>(guard_frames);
    if (head >= tail) break;
  }
  while (tail > head) {
    bool advanced = false;
    while (tail > head && jump(tail - 1)) {
      --tail;
      advanced = true;
    }
    if (!advanced) break;
    tail = tail > static_cast<std::size_t>(guard_frames)
               ? tail - static_cast<std::size_t>(guard_frames)
               : 0;
    if (tail <= head) break;
  }

  if (tail <= head)
    throw TooShortAfterTrimError("fewer than 2 frames remain after trimming");

  TrialRecording out;
  out.metadata = trial.metadata;
  out.frames.assign(frames.begin() + static_cast<std::ptrdiff_t>(head),
                    frames.begin() + static_cast<std::ptrdiff_t>(tail) + 1);

  TrimReport report;
  report.frames_dropped_head = head;
  report.frames_dropped_tail = n - 1 - tail;
  report.jump_threshold_m = jump_threshold_m;
  report.retained_start = head;
  report.retained_end = tail;
  return {std::move(out), report};
}

enum class WalkDirection { Forward, Back, Both };

// Splits an out-and-back trial at the extremum of SpineBase displacement
// along the walking axis (X for a sagittal camera). Forward keeps frames up
// to the turn (inclusive), Back keeps the turn onward, Both is the identity.
inline TrialRecording extract_walk_segment(const TrialRecording& trial,
                                           WalkDirection direction) {
  if (direction == WalkDirection::Both) return trial;
  const auto& frames = trial.frames;
  if (frames.size() < 2)
    throw NoTurnDetectedError("trial too short to contain a turn");

  const double x0 = frames.front().position(JointId::SpineBase).x;
  std::size_t turn = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < frames.size(); ++i) {
    const double d = std::abs(frames[i].position(JointId::SpineBase).x - x0);
    if (d > best) {
      best = d;
      turn = i;
    }
  }
  if (turn == frames.size() - 1)
    throw NoTurnDetectedError(
        "SpineBase displacement is monotone over the whole trial");

  TrialRecording out;
  out.metadata = trial.metadata;
  if (direction == WalkDirection::Forward)
    out.frames.assign(frames.begin(),
                      frames.begin() + static_cast<std::ptrdiff_t>(turn) + 1);
  else
    out.frames.assign(frames.begin() + static_cast<std::ptrdiff_t>(turn),
                      frames.end());
  return out;
}

}  // namespace gaitlab
