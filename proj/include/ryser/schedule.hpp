// Copyright 2026 The ryser-transfer Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RYSER_SCHEDULE_HPP
#define RYSER_SCHEDULE_HPP

#include <cmath>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ryser/exact.hpp"

namespace ryser {

enum class ScheduleMode { paper, adaptive, custom };

inline std::string to_string(ScheduleMode m) {
  switch (m) {
    case ScheduleMode::paper: return "paper";
    case ScheduleMode::adaptive: return "adaptive";
    case ScheduleMode::custom: return "custom";
  }
  return "?";
}

inline ScheduleMode parse_schedule_mode(const std::string& s) {
  if (s == "paper") return ScheduleMode::paper;
  if (s == "adaptive") return ScheduleMode::adaptive;
  if (s == "custom") return ScheduleMode::custom;
  throw InvalidInput("unknown schedule mode '" + s + "' (expected paper or adaptive)");
}

/// Scales for a sequence of length ell. k holds k_0..k_{ell+1} and m holds
/// m_0..m_ell with m_i = k_{i+1} * ... * k_{ell+1}. Sequence item t
/// (0-based) runs at scale k_{t+1}, m_{t+1}; k_0 only bounds the final
/// descent into the matching.
struct ParameterSchedule {
  std::size_t r = 2, ell = 1;
  ScheduleMode mode = ScheduleMode::paper;
  std::vector<Integer> k, m;

  const Integer& k_item(std::size_t t) const { return k.at(t + 1); }
  const Integer& m_item(std::size_t t) const { return m.at(t + 1); }
  std::size_t max_bits() const {
    std::size_t b = 0;
    for (const auto& x : k) b = std::max(b, bit_length(x));
    for (const auto& x : m) b = std::max(b, bit_length(x));
    return b;
  }
};

inline constexpr double max_schedule_bits = 1.5e8;

namespace detail {

inline double pow_double(double b, std::size_t e) { return std::pow(b, static_cast<double>(e)); }

inline void finish_schedule(ParameterSchedule& s) {
  const std::size_t n = s.ell + 1;
  s.m.assign(n, Integer(1));
  Integer acc = 1;
  for (std::size_t i = n; i-- > 0;) {
    acc *= s.k[i + 1];
    s.m[i] = acc;
  }
}

}  // namespace detail

/// k_0 > 2^{9r}, k_{i-1}^{4r} <= k_i, m_i as documented, nonincreasing m.
/// Returns the first defect found.
inline std::optional<std::string> validate_schedule(const ParameterSchedule& s) {
  if (s.k.size() != s.ell + 2) return "k must have ell+2 entries";
  if (s.m.size() != s.ell + 1) return "m must have ell+1 entries";
  Integer floor_k = pow(2UL, 9 * s.r);
  for (std::size_t i = 0; i < s.k.size(); ++i)
    if (s.k[i] <= floor_k) return "k_" + std::to_string(i) + " <= 2^{9r}";
  const unsigned long q = 4 * s.r;
  for (std::size_t i = 1; i < s.k.size(); ++i) {
    auto c = cmp_power(s.k[i - 1], s.k[i], 1, q);  // k_{i-1} vs k_i^{1/4r}
    if (c > 0) return "k_" + std::to_string(i - 1) + " > k_" + std::to_string(i) + "^{1/4r}";
    if (s.mode == ScheduleMode::paper && c != 0)
      return "paper mode needs k_" + std::to_string(i - 1) + " = k_" + std::to_string(i) + "^{1/4r}";
  }
  Integer acc = 1;
  for (std::size_t i = s.m.size(); i-- > 0;) {
    acc *= s.k[i + 1];
    if (s.m[i] != acc) return "m_" + std::to_string(i) + " is not the product of later k";
  }
  for (std::size_t i = 1; i < s.m.size(); ++i)
    if (s.m[i] > s.m[i - 1]) return "m is not nonincreasing";
  return std::nullopt;
}

/// Builds a schedule in paper mode (k_i = 9^{(4r)^{i+1}}) or adaptive mode
/// (k_i = (2^{9r}+1)^{(4r)^i}). Refuses sizes beyond max_schedule_bits.
inline ParameterSchedule make_schedule(std::size_t r, std::size_t ell, ScheduleMode mode) {
  if (r < 2 || ell < 1) throw InvalidInput("schedule needs r >= 2 and ell >= 1");
  if (mode == ScheduleMode::custom) throw InvalidInput("custom schedules are built from an explicit k list");
  const double base_bits = mode == ScheduleMode::paper ? std::log2(9.0) : 9.0 * static_cast<double>(r) + 1e-9;
  const std::size_t shift = mode == ScheduleMode::paper ? 1 : 0;
  double total = 0;
  for (std::size_t i = 1; i <= ell + 1; ++i) total += base_bits * detail::pow_double(4.0 * r, i + shift);
  if (total > max_schedule_bits)
    throw GuardExceeded("schedule for r=" + std::to_string(r) + ", ell=" + std::to_string(ell) +
                        " needs about " + std::to_string(static_cast<long long>(total)) + " bits");
  ParameterSchedule s{r, ell, mode, {}, {}};
  Integer base = mode == ScheduleMode::paper ? Integer(9) : pow(2UL, 9 * r) + 1;
  Integer exponent = pow(4UL * r, shift);
  for (std::size_t i = 0; i <= ell + 1; ++i) {
    s.k.push_back(pow(base, exponent.get_ui()));
    exponent *= static_cast<unsigned long>(4 * r);
  }
  detail::finish_schedule(s);
  return s;
}

/// A schedule from explicit k_0..k_{ell+1}; validated.
inline ParameterSchedule make_custom_schedule(std::size_t r, std::vector<Integer> k) {
  if (k.size() < 3) throw InvalidInput("custom schedule needs at least 3 k values");
  ParameterSchedule s{r, k.size() - 2, ScheduleMode::custom, std::move(k), {}};
  detail::finish_schedule(s);
  if (auto bad = validate_schedule(s)) throw InvalidInput("invalid schedule: " + *bad);
  return s;
}

/// Memoized make_schedule; paper-mode values are expensive to rebuild.
inline const ParameterSchedule& cached_schedule(std::size_t r, std::size_t ell, ScheduleMode mode) {
  static std::mutex mu;
  static std::map<std::tuple<std::size_t, std::size_t, int>, ParameterSchedule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(r, ell, static_cast<int>(mode));
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, make_schedule(r, ell, mode)).first;
  return it->second;
}

/// The formal radius 9^{(4r)^{ell+3}} as text, with its size in bits.
inline std::string engine_bound_string(std::size_t r, std::size_t ell) {
  return "9^(" + std::to_string(4 * r) + "^" + std::to_string(ell + 3) + ")";
}

/// Whether n <= 2 * 9^{(4r)^{ell+3}}.
inline bool within_engine_bound(std::size_t n, std::size_t r, std::size_t ell) {
  double bits = std::log2(9.0) * detail::pow_double(4.0 * r, ell + 3) + 1.0;
  if (bits > 70) return true;
  Integer bound = 2 * pow(9UL, pow(4UL * r, ell + 3).get_ui());
  return Integer(static_cast<unsigned long>(n)) <= bound;
}

}  // namespace ryser

#endif  // RYSER_SCHEDULE_HPP
