#pragma once

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "gaitlab/errors.hpp"
#include "gaitlab/recording.hpp"

namespace gaitlab {

namespace detail {

// Shortest representation that round-trips to the same double.
inline std::string format_double(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, p);
}

inline bool parse_double(std::string_view s, double& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [p, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && p == last;
}

inline bool parse_int64(std::string_view s, std::int64_t& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [p, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && p == last;
}

inline std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find(',', start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

inline std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace detail

inline constexpr std::string_view kRecordingCsvHeader =
    "timestamp_ms,joint,x,y,z,tracking_state";

// Parses the canonical recording format: `# key=value` header lines for
// subject_id, sex, condition, camera, day, trial_no, fps, then CSV rows
// `timestamp_ms,joint,x,y,z,tracking_state`. Rows sharing a timestamp form
// one frame; a joint absent from a frame is marked NotTracked with its
// position carried over from the previous frame (0,0,0 on the first).
inline TrialRecording parse_recording(std::string_view text) {
  TrialRecording trial;
  std::set<std::string> seen_keys;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool csv_header_seen = false;

  SkeletonFrame frame;
  std::array<bool, kJointCount> present{};
  bool frame_open = false;
  std::int64_t prev_ts = -1;

  auto close_frame = [&] {
    if (!frame_open) return;
    for (std::size_t j = 0; j < kJointCount; ++j) {
      if (present[j]) continue;
      frame.tracking[j] = TrackingState::NotTracked;
      frame.positions[j] = trial.frames.empty()
                               ? Vec3{}
                               : trial.frames.back().positions[j];
    }
    trial.frames.push_back(frame);
    frame_open = false;
  };

  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view line = detail::strip_cr(
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos
                                                      : nl - pos));
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (line.empty()) continue;

    if (line[0] == '#') {
      if (csv_header_seen)
        throw BadHeaderError("header line after data", line_no);
      std::string_view kv = line.substr(1);
      while (!kv.empty() && kv.front() == ' ') kv.remove_prefix(1);
      auto eq = kv.find('=');
      if (eq == std::string_view::npos)
        throw BadHeaderError("malformed header line", line_no);
      std::string key(kv.substr(0, eq));
      std::string value(kv.substr(eq + 1));
      seen_keys.insert(key);
      auto& md = trial.metadata;
      if (key == "subject_id") {
        md.subject_id = value;
      } else if (key == "sex") {
        auto s = parse_sex(value);
        if (!s) throw BadHeaderError("bad sex value \"" + value + "\"", line_no);
        md.sex = *s;
      } else if (key == "condition") {
        auto c = parse_condition(value);
        if (!c)
          throw BadHeaderError("bad condition value \"" + value + "\"",
                               line_no);
        md.condition = *c;
      } else if (key == "camera") {
        auto c = parse_camera(value);
        if (!c)
          throw BadHeaderError("bad camera value \"" + value + "\"", line_no);
        md.camera = *c;
      } else if (key == "day") {
        std::int64_t d;
        if (!detail::parse_int64(value, d) || d < 1)
          throw BadHeaderError("bad day value \"" + value + "\"", line_no);
        md.day = static_cast<int>(d);
      } else if (key == "trial_no") {
        std::int64_t t;
        if (!detail::parse_int64(value, t) || t < 1)
          throw BadHeaderError("bad trial_no value \"" + value + "\"", line_no);
        md.trial_no = static_cast<int>(t);
      } else if (key == "fps") {
        double f;
        if (!detail::parse_double(value, f) || !(f > 0))
          throw BadHeaderError("bad fps value \"" + value + "\"", line_no);
        md.fps_nominal = f;
      } else {
        throw BadHeaderError("unknown header key \"" + key + "\"", line_no);
      }
      continue;
    }

    if (!csv_header_seen) {
      static const char* required[] = {"subject_id", "sex",      "condition",
                                       "camera",     "day",      "trial_no",
                                       "fps"};
      for (auto* k : required)
        if (!seen_keys.count(k))
          throw BadHeaderError(std::string("missing header key \"") + k + "\"",
                               line_no);
      if (line != kRecordingCsvHeader)
        throw BadHeaderError("expected CSV header \"" +
                                 std::string(kRecordingCsvHeader) + "\"",
                             line_no);
      csv_header_seen = true;
      continue;
    }

    auto fields = detail::split_csv(line);
    if (fields.size() != 6) throw MissingFieldError(line_no);
    for (auto f : fields)
      if (f.empty()) throw MissingFieldError(line_no);

    std::int64_t ts;
    if (!detail::parse_int64(fields[0], ts))
      throw MissingFieldError(line_no, "bad timestamp field");
    auto joint = parse_joint(fields[1]);
    if (!joint) throw UnknownJointError(std::string(fields[1]), line_no);
    Vec3 p;
    if (!detail::parse_double(fields[2], p.x) ||
        !detail::parse_double(fields[3], p.y) ||
        !detail::parse_double(fields[4], p.z))
      throw MissingFieldError(line_no, "bad coordinate field");
    auto state = parse_tracking_state(fields[5]);
    if (!state)
      throw MissingFieldError(line_no, "bad tracking_state field");

    if (!frame_open || ts != frame.timestamp_ms) {
      close_frame();
      if (ts <= prev_ts || ts < 0) throw NonMonotonicTimestampError(line_no);
      prev_ts = ts;
      frame = SkeletonFrame{};
      frame.timestamp_ms = ts;
      present.fill(false);
      frame_open = true;
    }
    auto idx = static_cast<std::size_t>(*joint);
    frame.positions[idx] = p;
    frame.tracking[idx] = *state;
    present[idx] = true;
  }
  close_frame();

  if (!csv_header_seen) throw BadHeaderError("empty input", line_no);
  return trial;
}

// Deterministic inverse of parse_recording: fixed header order, all 25
// joints emitted per frame, shortest round-trip float formatting.
inline std::string write_recording(const TrialRecording& trial) {
  std::string out;
  const auto& md = trial.metadata;
  out += "# subject_id=" + md.subject_id + "\n";
  out += "# sex=" + std::string(sex_name(md.sex)) + "\n";
  out += "# condition=" + std::string(condition_name(md.condition)) + "\n";
  out += "# camera=" + std::string(camera_name(md.camera)) + "\n";
  out += "# day=" + std::to_string(md.day) + "\n";
  out += "# trial_no=" + std::to_string(md.trial_no) + "\n";
  out += "# fps=" + detail::format_double(md.fps_nominal) + "\n";
  out += std::string(kRecordingCsvHeader) + "\n";
  for (const auto& f : trial.frames) {
    for (std::size_t j = 0; j < kJointCount; ++j) {
      out += std::to_string(f.timestamp_ms);
      out += ',';
      out += kJointNames[j];
      out += ',';
      out += detail::format_double(f.positions[j].x);
      out += ',';
      out += detail::format_double(f.positions[j].y);
      out += ',';
      out += detail::format_double(f.positions[j].z);
      out += ',';
      out += tracking_state_name(f.tracking[j]);
      out += '\n';
    }
  }
  return out;
}

inline TrialRecording load_recording(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileMissingError(path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_recording(ss.str());
}

inline void save_recording(const TrialRecording& trial,
                           const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << write_recording(trial);
}

inline constexpr std::string_view kManifestCsvHeader =
    "file,subject_id,condition,camera,day,trial_no";

// Loads every trial listed in a manifest. Manifest fields override the
// per-file header metadata; paths resolve relative to the manifest.
inline std::vector<TrialRecording> load_manifest(
    const std::filesystem::path& manifest_path) {
  std::ifstream in(manifest_path, std::ios::binary);
  if (!in) throw FileMissingError(manifest_path.string());
  const auto base = manifest_path.parent_path();

  struct Entry {
    std::string file;
    TrialMetadata overrides;
  };
  std::vector<Entry> entries;
  std::set<std::string> keys;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = detail::strip_cr(raw);
    if (line.empty()) continue;
    if (line_no == 1) {
      if (line != kManifestCsvHeader)
        throw BadHeaderError("expected manifest header \"" +
                                 std::string(kManifestCsvHeader) + "\"",
                             line_no);
      continue;
    }
    auto fields = detail::split_csv(line);
    if (fields.size() != 6) throw MissingFieldError(line_no);
    Entry e;
    e.file = std::string(fields[0]);
    e.overrides.subject_id = std::string(fields[1]);
    auto cond = parse_condition(fields[2]);
    if (!cond) throw MissingFieldError(line_no, "bad condition field");
    e.overrides.condition = *cond;
    auto cam = parse_camera(fields[3]);
    if (!cam) throw MissingFieldError(line_no, "bad camera field");
    e.overrides.camera = *cam;
    std::int64_t day, trial_no;
    if (!detail::parse_int64(fields[4], day) || day < 1 ||
        !detail::parse_int64(fields[5], trial_no) || trial_no < 1)
      throw MissingFieldError(line_no, "bad day/trial_no field");
    e.overrides.day = static_cast<int>(day);
    e.overrides.trial_no = static_cast<int>(trial_no);

    auto key = e.overrides.subject_id + "/" +
               std::string(condition_name(e.overrides.condition)) + "/" +
               std::string(camera_name(e.overrides.camera)) + "/d" +
               std::to_string(e.overrides.day) + "/t" +
               std::to_string(e.overrides.trial_no);
    if (!keys.insert(key).second) throw DuplicateTrialKeyError(key);
    entries.push_back(std::move(e));
  }

  std::vector<TrialRecording> trials;
  std::vector<std::pair<std::string, std::string>> file_errors;
  for (const auto& e : entries) {
    try {
      auto trial = load_recording(base / e.file);
      trial.metadata.subject_id = e.overrides.subject_id;
      trial.metadata.condition = e.overrides.condition;
      trial.metadata.camera = e.overrides.camera;
      trial.metadata.day = e.overrides.day;
      trial.metadata.trial_no = e.overrides.trial_no;
      trials.push_back(std::move(trial));
    } catch (const Error& err) {
      file_errors.emplace_back(e.file, err.what());
    }
  }
  if (!file_errors.empty()) throw ManifestError(std::move(file_errors));
  return trials;
}

}  // namespace gaitlab
