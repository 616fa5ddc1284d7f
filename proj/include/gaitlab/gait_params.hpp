#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gaitlab/joints.hpp"
#include "gaitlab/recording.hpp"

namespace gaitlab {

// Frontal-plane tilt parameters, each a fixed joint pair.
enum class GaitParameterId { SpineTilt, HipTilt, ShoulderTilt };

inline constexpr std::array<GaitParameterId, 3> kAllGaitParameters = {
    GaitParameterId::SpineTilt, GaitParameterId::HipTilt,
    GaitParameterId::ShoulderTilt};

inline std::string_view gait_parameter_name(GaitParameterId p) {
  switch (p) {
    case GaitParameterId::SpineTilt: return "V1";
    case GaitParameterId::HipTilt: return "V2";
    case GaitParameterId::ShoulderTilt: return "V3";
  }
  return "?";
}

inline std::optional<GaitParameterId> parse_gait_parameter(
    std::string_view name) {
  if (name == "V1" || name == "v1" || name == "spine") return GaitParameterId::SpineTilt;
  if (name == "V2" || name == "v2" || name == "hip") return GaitParameterId::HipTilt;
  if (name == "V3" || name == "v3" || name == "shoulder") return GaitParameterId::ShoulderTilt;
  return std::nullopt;
}

// (point 1, point 2) per parameter; tilt is endpoint-order invariant.
inline std::pair<JointId, JointId> gait_parameter_joints(GaitParameterId p) {
  switch (p) {
    case GaitParameterId::SpineTilt:
      return {JointId::SpineBase, JointId::SpineShoulder};
    case GaitParameterId::HipTilt:
      return {JointId::HipLeft, JointId::HipRight};
    case GaitParameterId::ShoulderTilt:
      return {JointId::ShoulderLeft, JointId::ShoulderRight};
  }
  return {JointId::SpineBase, JointId::SpineShoulder};
}

// Slope of the segment between two joints in the frontal plane. A vertical
// segment (x2 == x1) is a value, not a failure.
struct Slope {
  double m = 0.0;
  bool vertical = false;

  static Slope of(double value) { return {value, false}; }
  static Slope vertical_sentinel() { return {0.0, true}; }
};

inline Slope slope(double x1, double y1, double x2, double y2) {
  if (x2 == x1) return Slope::vertical_sentinel();
  return Slope::of((y2 - y1) / (x2 - x1));
}

// arctan(m) in degrees; the vertical sentinel maps to exactly 90.
inline double tilt_degrees(Slope s) {
  if (s.vertical) return 90.0;
  return std::atan(s.m) * 180.0 / std::numbers::pi;
}

struct TiltSeries {
  GaitParameterId parameter = GaitParameterId::SpineTilt;
  TrialMetadata provenance;
  std::vector<double> values;  // degrees, one per frame, in (-90, 90]
};

// One tilt angle per frame from that frame's joint pair (X, Y coordinates).
inline TiltSeries tilt_series(const TrialRecording& trial,
                              GaitParameterId param) {
  const auto [j1, j2] = gait_parameter_joints(param);
  TiltSeries out{param, trial.metadata, {}};
  out.values.reserve(trial.frames.size());
  for (const auto& f : trial.frames) {
    const Vec3& p1 = f.position(j1);
    const Vec3& p2 = f.position(j2);
    out.values.push_back(tilt_degrees(slope(p1.x, p1.y, p2.x, p2.y)));
  }
  return out;
}

}  // namespace gaitlab
