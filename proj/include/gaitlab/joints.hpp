#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gaitlab {

// The fixed 25-joint skeleton delivered by the sensor.
enum class JointId : int {
  SpineBase = 0,
  SpineMid,
  Neck,
  Head,
  ShoulderLeft,
  ElbowLeft,
  WristLeft,
  HandLeft,
  ShoulderRight,
  ElbowRight,
  WristRight,
  HandRight,
  HipLeft,
  KneeLeft,
  AnkleLeft,
  FootLeft,
  HipRight,
  KneeRight,
  AnkleRight,
  FootRight,
  SpineShoulder,
  HandTipLeft,
  ThumbLeft,
  HandTipRight,
  ThumbRight,
};

inline constexpr std::size_t kJointCount = 25;

inline constexpr std::array<std::string_view, kJointCount> kJointNames = {
    "SpineBase",  "SpineMid",   "Neck",          "Head",       "ShoulderLeft",
    "ElbowLeft",  "WristLeft",  "HandLeft",      "ShoulderRight",
    "ElbowRight", "WristRight", "HandRight",     "HipLeft",    "KneeLeft",
    "AnkleLeft",  "FootLeft",   "HipRight",      "KneeRight",  "AnkleRight",
    "FootRight",  "SpineShoulder", "HandTipLeft", "ThumbLeft", "HandTipRight",
    "ThumbRight",
};

inline std::string_view joint_name(JointId id) {
  return kJointNames[static_cast<std::size_t>(id)];
}

// Total over the 25-name set, rejects anything else.
inline std::optional<JointId> parse_joint(std::string_view name) {
  for (std::size_t i = 0; i < kJointCount; ++i)
    if (kJointNames[i] == name) return static_cast<JointId>(i);
  return std::nullopt;
}

inline std::array<JointId, kJointCount> all_joints() {
  std::array<JointId, kJointCount> out{};
  for (std::size_t i = 0; i < kJointCount; ++i)
    out[i] = static_cast<JointId>(i);
  return out;
}

enum class JointGroupId { Core15, MiddleFive, LeftFive, RightFive, TiltJoints };

struct JointGroup {
  JointGroupId id;
  std::vector<JointId> members;
};

// The fifteen walking-relevant joints, in the order they are reported:
// head, neck, shoulders, spine, hips, feet, knees, ankles.
inline const JointGroup& core15() {
  static const JointGroup g{
      JointGroupId::Core15,
      {JointId::Head, JointId::Neck, JointId::ShoulderLeft,
       JointId::ShoulderRight, JointId::SpineShoulder, JointId::SpineMid,
       JointId::SpineBase, JointId::HipLeft, JointId::HipRight,
       JointId::FootLeft, JointId::FootRight, JointId::KneeLeft,
       JointId::KneeRight, JointId::AnkleLeft, JointId::AnkleRight}};
  return g;
}

inline const JointGroup& middle_five() {
  static const JointGroup g{JointGroupId::MiddleFive,
                            {JointId::Head, JointId::Neck, JointId::SpineBase,
                             JointId::SpineMid, JointId::SpineShoulder}};
  return g;
}

inline const JointGroup& left_five() {
  static const JointGroup g{
      JointGroupId::LeftFive,
      {JointId::ShoulderLeft, JointId::HipLeft, JointId::KneeLeft,
       JointId::AnkleLeft, JointId::FootLeft}};
  return g;
}

inline const JointGroup& right_five() {
  static const JointGroup g{
      JointGroupId::RightFive,
      {JointId::ShoulderRight, JointId::HipRight, JointId::KneeRight,
       JointId::AnkleRight, JointId::FootRight}};
  return g;
}

// Joints consumed by the tilt parameters.
inline const JointGroup& tilt_joints() {
  static const JointGroup g{
      JointGroupId::TiltJoints,
      {JointId::SpineShoulder, JointId::SpineBase, JointId::HipLeft,
       JointId::HipRight, JointId::ShoulderLeft, JointId::ShoulderRight}};
  return g;
}

inline std::string_view joint_group_name(JointGroupId id) {
  switch (id) {
    case JointGroupId::Core15: return "core15";
    case JointGroupId::MiddleFive: return "middle5";
    case JointGroupId::LeftFive: return "left5";
    case JointGroupId::RightFive: return "right5";
    case JointGroupId::TiltJoints: return "tilt";
  }
  return "?";
}

inline std::optional<JointGroup> parse_joint_group(std::string_view name) {
  if (name == "core15") return core15();
  if (name == "middle5") return middle_five();
  if (name == "left5") return left_five();
  if (name == "right5") return right_five();
  if (name == "tilt") return tilt_joints();
  return std::nullopt;
}

// Joint selection for operations that also accept the full 25-joint set
// (the aggregate D statistic sums over all 25 joints).
inline std::optional<std::vector<JointId>> parse_joint_selection(
    std::string_view name) {
  if (name == "all") {
    std::vector<JointId> v;
    for (auto j : all_joints()) v.push_back(j);
    return v;
  }
  if (auto g = parse_joint_group(name)) return g->members;
  return std::nullopt;
}

}  // namespace gaitlab
