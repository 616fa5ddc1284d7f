#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gaitlab/errors.hpp"
#include "gaitlab/joints.hpp"

namespace gaitlab {

enum class TrackingState { Tracked, Inferred, NotTracked };

inline std::string_view tracking_state_name(TrackingState s) {
  switch (s) {
    case TrackingState::Tracked: return "Tracked";
    case TrackingState::Inferred: return "Inferred";
    case TrackingState::NotTracked: return "NotTracked";
  }
  return "?";
}

inline std::optional<TrackingState> parse_tracking_state(std::string_view s) {
  if (s == "Tracked") return TrackingState::Tracked;
  if (s == "Inferred") return TrackingState::Inferred;
  if (s == "NotTracked") return TrackingState::NotTracked;
  return std::nullopt;
}

enum class Sex { F, M, Unspecified };

// NW is normal walking; the rest are motion-restricting devices.
enum class Condition { NW, AB, KB, CANE, WALKER };

enum class Camera { Frontal, Sagittal };

enum class Axis { X, Y, Z };

inline std::string_view sex_name(Sex s) {
  switch (s) {
    case Sex::F: return "F";
    case Sex::M: return "M";
    case Sex::Unspecified: return "Unspecified";
  }
  return "?";
}

inline std::optional<Sex> parse_sex(std::string_view s) {
  if (s == "F") return Sex::F;
  if (s == "M") return Sex::M;
  if (s == "Unspecified") return Sex::Unspecified;
  return std::nullopt;
}

inline constexpr std::array<Condition, 5> kAllConditions = {
    Condition::NW, Condition::AB, Condition::KB, Condition::CANE,
    Condition::WALKER};

inline std::string_view condition_name(Condition c) {
  switch (c) {
    case Condition::NW: return "NW";
    case Condition::AB: return "AB";
    case Condition::KB: return "KB";
    case Condition::CANE: return "CANE";
    case Condition::WALKER: return "WALKER";
  }
  return "?";
}

inline std::optional<Condition> parse_condition(std::string_view s) {
  for (auto c : kAllConditions)
    if (condition_name(c) == s) return c;
  return std::nullopt;
}

inline std::string_view camera_name(Camera c) {
  return c == Camera::Frontal ? "Frontal" : "Sagittal";
}

inline std::optional<Camera> parse_camera(std::string_view s) {
  if (s == "Frontal") return Camera::Frontal;
  if (s == "Sagittal") return Camera::Sagittal;
  return std::nullopt;
}

inline std::string_view axis_name(Axis a) {
  switch (a) {
    case Axis::X: return "X";
    case Axis::Y: return "Y";
    case Axis::Z: return "Z";
  }
  return "?";
}

inline std::optional<Axis> parse_axis(std::string_view s) {
  if (s == "X" || s == "x") return Axis::X;
  if (s == "Y" || s == "y") return Axis::Y;
  if (s == "Z" || s == "z") return Axis::Z;
  return std::nullopt;
}

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend bool operator==(const Vec3&, const Vec3&) = default;

  double operator[](Axis a) const {
    switch (a) {
      case Axis::X: return x;
      case Axis::Y: return y;
      case Axis::Z: return z;
    }
    return x;
  }
};

// One sensor frame: all 25 joints, absent ones marked NotTracked.
struct SkeletonFrame {
  std::int64_t timestamp_ms = 0;  // since trial start, non-negative
  std::array<Vec3, kJointCount> positions{};
  std::array<TrackingState, kJointCount> tracking{};

  SkeletonFrame() { tracking.fill(TrackingState::Tracked); }

  const Vec3& position(JointId j) const {
    return positions[static_cast<std::size_t>(j)];
  }
  Vec3& position(JointId j) { return positions[static_cast<std::size_t>(j)]; }
  TrackingState state(JointId j) const {
    return tracking[static_cast<std::size_t>(j)];
  }
  void set_state(JointId j, TrackingState s) {
    tracking[static_cast<std::size_t>(j)] = s;
  }

  friend bool operator==(const SkeletonFrame&, const SkeletonFrame&) = default;
};

struct TrialMetadata {
  std::string subject_id;
  Sex sex = Sex::Unspecified;
  Condition condition = Condition::NW;
  Camera camera = Camera::Sagittal;
  int day = 1;
  int trial_no = 1;
  double fps_nominal = 30.0;

  friend bool operator==(const TrialMetadata&, const TrialMetadata&) = default;

  // Uniqueness key within a dataset.
  std::string key() const {
    return subject_id + "/" + std::string(condition_name(condition)) + "/" +
           std::string(camera_name(camera)) + "/d" + std::to_string(day) +
           "/t" + std::to_string(trial_no);
  }
};

struct TrialRecording {
  TrialMetadata metadata;
  std::vector<SkeletonFrame> frames;

  friend bool operator==(const TrialRecording&, const TrialRecording&) =
      default;
};

// One scalar channel (one joint, one axis) over the frames of a trial.
struct JointSeries {
  JointId joint = JointId::SpineBase;
  Axis axis = Axis::Y;
  TrialMetadata provenance;
  std::vector<double> values;
};

inline JointSeries joint_series(const TrialRecording& trial, JointId joint,
                                Axis axis) {
  JointSeries s{joint, axis, trial.metadata, {}};
  s.values.reserve(trial.frames.size());
  for (const auto& f : trial.frames) s.values.push_back(f.position(joint)[axis]);
  return s;
}

}  // namespace gaitlab
