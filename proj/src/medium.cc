#include "linkforge/medium.hh"

#include "linkforge/sim.hh"

namespace linkforge {

std::string MediumConfig::check() const {
  if (auto err = CapacitySchedule::check(capacity.steps()); !err.empty()) {
    return "capacity: " + err;
  }
  for (const auto& step : capacity.steps()) {
    if (step.value <= 0) return "capacity: rates must be positive";
  }
  if (auto err = LossSchedule::check(loss.steps()); !err.empty()) {
    return "loss: " + err;
  }
  for (const auto& step : loss.steps()) {
    if (step.value < 0.0 || step.value > 1.0) {
      return "loss: probabilities must be in [0, 1]";
    }
  }
  if (prop_delay < 0) return "prop_delay must be non-negative";
  if (buffer_up < 1 || buffer_down < 1) return "buffers must be >= 1 packet";
  if (weight_up < 1 || weight_down < 1) return "weights must be >= 1";
  if (turnaround < 0) return "turnaround must be non-negative";
  return {};
}

TimeUs serialize_time(const Packet& pkt, TimeUs t, const CapacitySchedule& c) {
  std::int64_t rate = capacity_at(c, t);
  std::int64_t bits_us = static_cast<std::int64_t>(pkt.size_bytes) * 8 * kSecond;
  TimeUs us = (bits_us + rate - 1) / rate; // ceil
  return us < 1 ? 1 : us;
}

Medium::Medium(MediumConfig cfg) : cfg_(std::move(cfg)) {
  Rng root(cfg_.seed);
  loss_rng_[static_cast<int>(Direction::Up)] = root.fork(0xA1);
  loss_rng_[static_cast<int>(Direction::Down)] = root.fork(0xB2);
}

void Medium::attach(Simulation& sim) { sim_ = &sim; }

Medium::Admit Medium::enqueue(const Packet& pkt, TimeUs now) {
  auto& c = counters_[pkt.dir];
  ++c.submitted;
  if (queue_len(pkt.dir) >= buffer(pkt.dir)) {
    ++c.queue_drops;
    return Admit::Dropped;
  }
  queue(pkt.dir).push_back(pkt);
  ++c.in_queue;
  return Admit::Accepted;
}

std::optional<Direction> Medium::arbitrate(TimeUs /*now*/) const {
  bool up = !queue_up_.empty();
  bool down = !queue_down_.empty();
  if (!up && !down) return std::nullopt;
  if (up != down) return up ? Direction::Up : Direction::Down;
  // Both backlogged: finish the current weighted burst, then switch sides.
  if (last_dir_ && burst_left_ > 0) return *last_dir_;
  return last_dir_ ? reverse(*last_dir_) : Direction::Up;
}

bool Medium::draw_wire_loss(Direction d, TimeUs t) {
  double p = loss_at(cfg_.loss, t);
  if (p <= 0.0) return false;
  return loss_rng_[static_cast<int>(d)].u01() < p;
}

void Medium::submit(Simulation& sim, Packet pkt) {
  if (enqueue(pkt, sim.now()) == Admit::Accepted) maybe_grant(sim);
}

void Medium::maybe_grant(Simulation& sim) {
  if (serializing_) return;
  auto dir = arbitrate(sim.now());
  if (!dir) return;

  Packet pkt = queue(*dir).front();
  queue(*dir).pop_front();
  --counters_[*dir].in_queue;
  ++counters_[*dir].in_service;

  // Changing transmitter costs dead air (radio turnaround / contention).
  TimeUs gap = (last_dir_ && *last_dir_ != *dir) ? cfg_.turnaround : 0;
  if (last_dir_ == *dir) {
    if (burst_left_ > 0) --burst_left_;
  } else {
    burst_left_ = weight(*dir) - 1;
  }
  last_dir_ = *dir;

  TimeUs start = sim.now() + gap;
  TimeUs done = start + serialize_time(pkt, start, cfg_.capacity);
  serializing_ = true;
  busy_until_ = done;
  if (record_grants_) grant_log_.push_back({*dir, start, done});

  sim.schedule(done, [this, &sim, pkt]() {
    Direction d = pkt.dir;
    serializing_ = false;
    --counters_[d].in_service;
    if (draw_wire_loss(d, sim.now())) {
      ++counters_[d].wire_losses;
    } else {
      ++counters_[d].in_propagation;
      Packet out = pkt;
      sim.schedule_in(cfg_.prop_delay, [this, &sim, out]() {
        --counters_[out.dir].in_propagation;
        ++counters_[out.dir].delivered;
        counters_[out.dir].delivered_bytes += out.size_bytes;
        sim.deliver(out);
      });
    }
    maybe_grant(sim);
  });
}

} // namespace linkforge
