#ifndef LINKFORGE_MEDIUM_HH
#define LINKFORGE_MEDIUM_HH

#include <array>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "linkforge/link.hh"
#include "linkforge/packet.hh"
#include "linkforge/rng.hh"
#include "linkforge/schedule.hh"
#include "linkforge/time.hh"

namespace linkforge {

// Shared half-duplex medium: one serializer drained from two bounded
// tail-drop FIFOs under weighted round-robin, time-varying capacity and
// scheduled wire loss. `turnaround` charges dead air whenever consecutive
// grants change direction (0 = ideal, strictly work-conserving medium).
struct MediumConfig {
  CapacitySchedule capacity = CapacitySchedule::constant(10'000'000);
  LossSchedule loss = LossSchedule::constant(0.0);
  TimeUs prop_delay = from_ms(1);
  std::int64_t buffer_up = 1000;   // packets
  std::int64_t buffer_down = 1000; // packets
  std::int64_t weight_up = 1;
  std::int64_t weight_down = 1;
  TimeUs turnaround = 0;
  std::uint64_t seed = 1;

  std::string check() const; // empty when valid
};

// Airtime a packet of this size occupies at the rate active at time t.
// Integer microseconds, rounded up, never below 1.
TimeUs serialize_time(const Packet& pkt, TimeUs t, const CapacitySchedule& c);

class Medium : public Link {
 public:
  explicit Medium(MediumConfig cfg);

  void attach(Simulation& sim) override;
  void submit(Simulation& sim, Packet pkt) override;
  const LinkCounters& counters() const override { return counters_; }

  // Tail-drop admission into the direction's queue. Exposed (with the grant
  // pump) so unit tests can drive the medium without a full simulation.
  enum class Admit : std::uint8_t { Accepted, Dropped };
  Admit enqueue(const Packet& pkt, TimeUs now);

  // Next direction to serve when the medium goes idle: weighted round-robin
  // between backlogged queues, nothing when both are empty.
  std::optional<Direction> arbitrate(TimeUs now) const;

  const MediumConfig& config() const { return cfg_; }
  std::int64_t queue_len(Direction d) const {
    return static_cast<std::int64_t>(queue(d).size());
  }
  TimeUs busy_until() const { return busy_until_; }

  // Wire-loss draw for a packet completing serialization at time t.
  bool draw_wire_loss(Direction d, TimeUs t);

  // Serialization intervals [start, end) per grant, recorded when enabled;
  // the half-duplex property test asserts they never overlap.
  struct GrantInterval {
    Direction dir;
    TimeUs start;
    TimeUs end;
  };
  void record_grants(bool on) { record_grants_ = on; }
  const std::vector<GrantInterval>& grant_log() const { return grant_log_; }

 private:
  std::deque<Packet>& queue(Direction d) {
    return d == Direction::Up ? queue_up_ : queue_down_;
  }
  const std::deque<Packet>& queue(Direction d) const {
    return d == Direction::Up ? queue_up_ : queue_down_;
  }
  std::int64_t buffer(Direction d) const {
    return d == Direction::Up ? cfg_.buffer_up : cfg_.buffer_down;
  }
  std::int64_t weight(Direction d) const {
    return d == Direction::Up ? cfg_.weight_up : cfg_.weight_down;
  }

  void maybe_grant(Simulation& sim);

  MediumConfig cfg_;
  std::deque<Packet> queue_up_;
  std::deque<Packet> queue_down_;

  bool serializing_ = false;
  TimeUs busy_until_ = 0;
  std::optional<Direction> last_dir_;
  std::int64_t burst_left_ = 0; // grants left in the current WRR burst

  std::array<Rng, 2> loss_rng_;
  LinkCounters counters_;

  bool record_grants_ = false;
  std::vector<GrantInterval> grant_log_;

  Simulation* sim_ = nullptr;
};

} // namespace linkforge

#endif
