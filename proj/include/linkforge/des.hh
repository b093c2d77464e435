#ifndef LINKFORGE_DES_HH
#define LINKFORGE_DES_HH

#include <cstdint>
#include <functional>
#include <queue>
#include <utility>
#include <vector>

#include "linkforge/time.hh"

namespace linkforge {

// Minimal discrete-event core. Events fire in (time, insertion-order) order;
// the insertion counter makes simultaneous events deterministic.
class EventLoop {
 public:
  using Fn = std::function<void()>;

  TimeUs now() const { return now_; }

  void schedule(TimeUs t, Fn fn) {
    q_.push(Ev{t < now_ ? now_ : t, ties_++, std::move(fn)});
  }

  void schedule_in(TimeUs delay, Fn fn) { schedule(now_ + delay, std::move(fn)); }

  // Runs every event with t < until, then parks the clock at `until`.
  void run_until(TimeUs until) {
    while (!q_.empty() && q_.top().t < until) {
      Ev ev = std::move(const_cast<Ev&>(q_.top()));
      q_.pop();
      now_ = ev.t;
      ev.fn();
    }
    now_ = until;
  }

  bool empty() const { return q_.empty(); }
  std::size_t pending() const { return q_.size(); }

 private:
  struct Ev {
    TimeUs t;
    std::uint64_t tie;
    Fn fn;
  };
  struct After {
    bool operator()(const Ev& a, const Ev& b) const {
      return a.t != b.t ? a.t > b.t : a.tie > b.tie;
    }
  };

  std::priority_queue<Ev, std::vector<Ev>, After> q_;
  TimeUs now_ = 0;
  std::uint64_t ties_ = 0;
};

} // namespace linkforge

#endif
