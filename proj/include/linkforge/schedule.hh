#ifndef LINKFORGE_SCHEDULE_HH
#define LINKFORGE_SCHEDULE_HH

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linkforge/time.hh"

namespace linkforge {

// Piecewise-constant, right-continuous step function of time. Steps take
// effect at their start instant (left-inclusive); starts strictly increase
// and the first start is 0, so lookups are total on t >= 0.
template <typename V>
class StepSchedule {
 public:
  struct Step {
    TimeUs start;
    V value;
  };

  StepSchedule() = default;

  explicit StepSchedule(std::vector<Step> steps) : steps_(std::move(steps)) {
    if (auto err = check(steps_); !err.empty()) {
      throw std::invalid_argument("schedule: " + err);
    }
  }

  static StepSchedule constant(V value) {
    return StepSchedule({{0, value}});
  }

  // Empty string when `steps` forms a valid schedule.
  static std::string check(const std::vector<Step>& steps) {
    if (steps.empty()) return "at least one step required";
    if (steps.front().start != 0) return "first start must be 0";
    for (std::size_t i = 1; i < steps.size(); ++i) {
      if (steps[i].start <= steps[i - 1].start) {
        return "starts strictly increasing (violated at step " +
               std::to_string(i) + ")";
      }
    }
    return {};
  }

  // Value of the last step with start <= t.
  V at(TimeUs t) const {
    // upper_bound: first step with start > t; predecessor is the active one.
    auto it = std::upper_bound(
        steps_.begin(), steps_.end(), t,
        [](TimeUs lhs, const Step& s) { return lhs < s.start; });
    return std::prev(it)->value;
  }

  const std::vector<Step>& steps() const { return steps_; }

  bool operator==(const StepSchedule&) const = default;

 private:
  std::vector<Step> steps_;
};

using CapacitySchedule = StepSchedule<std::int64_t>; // bits per second, > 0
using LossSchedule = StepSchedule<double>;           // probability in [0, 1]

inline std::int64_t capacity_at(const CapacitySchedule& s, TimeUs t) {
  return s.at(t);
}

inline double loss_at(const LossSchedule& s, TimeUs t) { return s.at(t); }

// Mean capacity over [from, to), weighting each step by the time it is
// active inside the window. Used for ratio bins that straddle a step.
inline double mean_capacity_over(const CapacitySchedule& s, TimeUs from,
                                 TimeUs to) {
  if (to <= from) return static_cast<double>(capacity_at(s, from));
  double bit_area = 0.0; // integral of rate over the window, in bits
  const auto& steps = s.steps();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    TimeUs seg_start = std::max(from, steps[i].start);
    TimeUs seg_end = (i + 1 < steps.size()) ? std::min(to, steps[i + 1].start) : to;
    if (seg_end > seg_start) {
      bit_area += static_cast<double>(steps[i].value) * to_s(seg_end - seg_start);
    }
  }
  return bit_area / to_s(to - from);
}

} // namespace linkforge

#endif
