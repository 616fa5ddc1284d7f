#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gaitlab/errors.hpp"
#include "gaitlab/gait_params.hpp"
#include "gaitlab/joints.hpp"
#include "gaitlab/recording.hpp"

namespace gaitlab {

struct SeParams {
  int m = 2;     // embedding dimension
  double r = 0.2;  // tolerance, same units as the series
  int tau = 1;   // lag between template elements
};

// Self-matches are excluded; counts are unordered template pairs (i < j)
// over the common index range shared by the m and m+1 templates, so the
// ratio is a valid conditional probability.
struct SeOutcome {
  bool defined = false;
  double value = 0.0;             // -ln(A/B) when defined, >= 0
  std::uint64_t match_count_m = 0;    // B: pairs matching at dimension m
  std::uint64_t match_count_m1 = 0;   // A: pairs also matching at m+1
  SeParams params;
  std::size_t n = 0;              // series length
};

namespace detail {

inline void check_se_preconditions(std::size_t n, const SeParams& p) {
  if (p.m < 1 || p.tau < 1)
    throw SeriesTooShortError("embedding dimension and lag must be >= 1");
  if (!(p.r > 0.0))
    throw NonPositiveToleranceError("tolerance r must be positive, got " +
                                    std::to_string(p.r));
  const std::size_t need =
      static_cast<std::size_t>(p.tau) * static_cast<std::size_t>(p.m) + 2;
  if (n < need)
    throw SeriesTooShortError("series length " + std::to_string(n) +
                              " below minimum " + std::to_string(need) +
                              " for m=" + std::to_string(p.m) +
                              " tau=" + std::to_string(p.tau));
}

inline SeOutcome se_outcome_from_counts(std::uint64_t b, std::uint64_t a,
                                        const SeParams& p, std::size_t n) {
  SeOutcome out;
  out.match_count_m = b;
  out.match_count_m1 = a;
  out.params = p;
  out.n = n;
  if (a > 0 && b > 0) {
    out.defined = true;
    double v = -std::log(static_cast<double>(a) / static_cast<double>(b));
    out.value = v == 0.0 ? 0.0 : v;
  }
  return out;
}

}  // namespace detail

// Brute-force reference: every template pair checked under the maximum norm.
inline SeOutcome sample_entropy_naive(std::span<const double> series,
                                      const SeParams& params) {
  detail::check_se_preconditions(series.size(), params);
  const std::size_t n = series.size();
  const std::size_t tau = static_cast<std::size_t>(params.tau);
  const std::size_t m = static_cast<std::size_t>(params.m);
  const std::size_t templates = n - tau * m;

  std::uint64_t b = 0, a = 0;
  for (std::size_t i = 0; i < templates; ++i) {
    for (std::size_t j = i + 1; j < templates; ++j) {
      bool match = true;
      for (std::size_t k = 0; k < m; ++k) {
        if (std::abs(series[i + k * tau] - series[j + k * tau]) > params.r) {
          match = false;
          break;
        }
      }
      if (!match) continue;
      ++b;
      if (std::abs(series[i + m * tau] - series[j + m * tau]) <= params.r) ++a;
    }
  }
  return detail::se_outcome_from_counts(b, a, params, n);
}

// Same counts as the naive version, but candidate pairs are pruned by
// sorting template start values: pairs can only match when their first
// components are within r.
inline SeOutcome sample_entropy(std::span<const double> series,
                                const SeParams& params) {
  detail::check_se_preconditions(series.size(), params);
  const std::size_t n = series.size();
  const std::size_t tau = static_cast<std::size_t>(params.tau);
  const std::size_t m = static_cast<std::size_t>(params.m);
  const std::size_t templates = n - tau * m;

  std::vector<std::uint32_t> order(templates);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
    return series[x] < series[y];
  });

  std::uint64_t b = 0, a = 0;
  std::size_t window_end = 0;
  for (std::size_t s = 0; s < templates; ++s) {
    const double base = series[order[s]];
    if (window_end < s + 1) window_end = s + 1;
    while (window_end < templates &&
           series[order[window_end]] - base <= params.r)
      ++window_end;
    for (std::size_t t = s + 1; t < window_end; ++t) {
      const std::size_t i = order[s], j = order[t];
      bool match = true;
      for (std::size_t k = 1; k < m; ++k) {
        if (std::abs(series[i + k * tau] - series[j + k * tau]) > params.r) {
          match = false;
          break;
        }
      }
      if (!match) continue;
      ++b;
      if (std::abs(series[i + m * tau] - series[j + m * tau]) <= params.r) ++a;
    }
  }
  return detail::se_outcome_from_counts(b, a, params, n);
}

// r = 0.2 x sample standard deviation (n-1 denominator).
inline double default_tolerance(std::span<const double> series) {
  if (series.size() < 2)
    throw ZeroVarianceError("series too short for a tolerance estimate");
  const double mean =
      std::accumulate(series.begin(), series.end(), 0.0) /
      static_cast<double>(series.size());
  double ss = 0.0;
  for (double v : series) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / static_cast<double>(series.size() - 1));
  if (sd == 0.0)
    throw ZeroVarianceError("series has zero variance; supply r explicitly");
  return 0.2 * sd;
}

// Per-channel parameter policy: fixed r, or r = 0.2 sigma of each channel.
struct SePolicy {
  int m = 2;
  int tau = 1;
  std::optional<double> r;  // absent -> default_tolerance per channel

  SeParams resolve(std::span<const double> series) const {
    return SeParams{m, r ? *r : default_tolerance(series), tau};
  }
};

inline std::string channel_key(JointId joint, Axis axis) {
  return std::string(joint_name(joint)) + "." + std::string(axis_name(axis));
}

inline std::string channel_key(GaitParameterId p) {
  return std::string(gait_parameter_name(p));
}

// Map from channel (joint+axis or gait parameter) to its SE value for one
// trial. Undefined outcomes are preserved, never dropped.
struct SeProfile {
  TrialMetadata provenance;
  std::map<std::string, SeOutcome> entries;
};

inline SeProfile se_profile(const TrialRecording& trial,
                            std::span<const JointId> joints, Axis axis,
                            const SePolicy& policy) {
  SeProfile profile{trial.metadata, {}};
  for (JointId j : joints) {
    const std::string key = channel_key(j, axis);
    auto series = joint_series(trial, j, axis);
    try {
      profile.entries[key] =
          sample_entropy(series.values, policy.resolve(series.values));
    } catch (const SeriesTooShortError& e) {
      throw SeriesTooShortError(key + ": " + e.what());
    } catch (const NonPositiveToleranceError& e) {
      throw NonPositiveToleranceError(key + ": " + e.what());
    } catch (const ZeroVarianceError& e) {
      throw ZeroVarianceError(key + ": " + e.what());
    }
  }
  return profile;
}

inline SeProfile se_profile(const TrialRecording& trial,
                            const JointGroup& joints, Axis axis,
                            const SePolicy& policy) {
  return se_profile(trial, std::span<const JointId>(joints.members), axis,
                    policy);
}

inline SeProfile se_profile_params(const TrialRecording& trial,
                                   std::span<const GaitParameterId> params,
                                   const SePolicy& policy) {
  SeProfile profile{trial.metadata, {}};
  for (GaitParameterId p : params) {
    const std::string key = channel_key(p);
    auto series = tilt_series(trial, p);
    try {
      profile.entries[key] =
          sample_entropy(series.values, policy.resolve(series.values));
    } catch (const SeriesTooShortError& e) {
      throw SeriesTooShortError(key + ": " + e.what());
    } catch (const NonPositiveToleranceError& e) {
      throw NonPositiveToleranceError(key + ": " + e.what());
    } catch (const ZeroVarianceError& e) {
      throw ZeroVarianceError(key + ": " + e.what());
    }
  }
  return profile;
}

}  // namespace gaitlab
