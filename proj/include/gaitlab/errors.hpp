#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gaitlab {

// Base for every failure this library reports.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// ---- recording / parsing ----------------------------------------------

struct ParseError : Error {
  std::size_t line;  // 1-based line in the input stream, 0 if not line-bound
  ParseError(const std::string& msg, std::size_t line_no)
      : Error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
};

struct BadHeaderError : ParseError {
  using ParseError::ParseError;
};

struct UnknownJointError : ParseError {
  std::string joint_name;
  UnknownJointError(std::string name, std::size_t line_no)
      : ParseError("unknown joint \"" + name + "\"", line_no),
        joint_name(std::move(name)) {}
};

struct NonMonotonicTimestampError : ParseError {
  explicit NonMonotonicTimestampError(std::size_t line_no)
      : ParseError("timestamp not strictly increasing", line_no) {}
};

struct MissingFieldError : ParseError {
  explicit MissingFieldError(std::size_t line_no,
                             const std::string& what = "missing field")
      : ParseError(what, line_no) {}
};

struct FileMissingError : Error {
  explicit FileMissingError(const std::string& path)
      : Error("file missing: " + path) {}
};

struct DuplicateTrialKeyError : Error {
  explicit DuplicateTrialKeyError(const std::string& key)
      : Error("duplicate trial key: " + key) {}
};

// Per-file failures collected while loading a manifest.
struct ManifestError : Error {
  std::vector<std::pair<std::string, std::string>> file_errors;  // (file, what)
  explicit ManifestError(std::vector<std::pair<std::string, std::string>> errs)
      : Error(compose(errs)), file_errors(std::move(errs)) {}

 private:
  static std::string compose(
      const std::vector<std::pair<std::string, std::string>>& errs) {
    std::string msg = "manifest load failed:";
    for (const auto& [file, what] : errs) msg += "\n  " + file + ": " + what;
    return msg;
  }
};

// ---- preprocess --------------------------------------------------------

struct TooShortAfterTrimError : Error {
  using Error::Error;
};

struct NoTurnDetectedError : Error {
  using Error::Error;
};

// ---- entropy -----------------------------------------------------------

struct SeriesTooShortError : Error {
  using Error::Error;
};

struct NonPositiveToleranceError : Error {
  using Error::Error;
};

struct ZeroVarianceError : Error {
  using Error::Error;
};

// ---- stats -------------------------------------------------------------

struct ReplicateMismatchError : Error {
  using Error::Error;
};

struct MissingChannelError : Error {
  std::string channel;
  explicit MissingChannelError(const std::string& ch)
      : Error("missing channel: " + ch), channel(ch) {}
};

struct UndefinedSeError : Error {
  std::string channel;
  UndefinedSeError(const std::string& ch, const std::string& where)
      : Error("undefined SE for channel " + ch + " in " + where), channel(ch) {}
};

struct UnbalancedDesignError : Error {
  using Error::Error;
};

struct InsufficientReplicationError : Error {
  using Error::Error;
};

// ---- classify ----------------------------------------------------------

struct ClassTooSmallError : Error {
  using Error::Error;
};

struct NonBinaryLabelsError : Error {
  using Error::Error;
};

struct LengthMismatchError : Error {
  using Error::Error;
};

struct EmptyFeatureSetError : Error {
  using Error::Error;
};

// ---- viz ---------------------------------------------------------------

struct PlotSpecError : Error {
  using Error::Error;
};

}  // namespace gaitlab
