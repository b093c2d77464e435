#ifndef LINKFORGE_CROSS_TRAFFIC_HH
#define LINKFORGE_CROSS_TRAFFIC_HH

#include <cstdint>
#include <deque>
#include <vector>

#include "linkforge/packet.hh"
#include "linkforge/time.hh"

namespace linkforge {

// Constant-bit-rate source: equally spaced packets, no feedback. Send times
// are computed from the packet index, so spacing never accumulates rounding
// drift: send k happens at start + floor(k * bits * 1e6 / rate).
class CbrStream {
 public:
  CbrStream(std::int64_t rate_bps, int packet_bytes, Direction dir, int flow_id,
            TimeUs start_at = 0);

  // All packets due at or before `now`.
  std::vector<Packet> tick(TimeUs now);

  // Time of the next emission (for timer scheduling).
  TimeUs next_send() const { return send_time(count_); }

  std::int64_t rate_bps() const { return rate_bps_; }
  std::int64_t packets_emitted() const { return count_; }

 private:
  TimeUs send_time(std::int64_t k) const;

  std::int64_t rate_bps_;
  int packet_bytes_;
  Direction dir_;
  int flow_id_;
  TimeUs start_at_;
  std::int64_t count_ = 0;
};

// Fairness-relevant skeleton of TCP congestion avoidance: additive increase
// 1/cwnd per ack, multiplicative halving on loss. Loss is detected from ack
// gaps (three acks past a hole confirm it) or a 1 s silence timeout; there
// is no retransmission, lost payload stays lost, which is all the fairness
// experiments need.
class AimdStream {
 public:
  AimdStream(int flow_id, Direction dir, std::int64_t rate_cap_bps = 0,
             int packet_bytes = kDefaultDataBytes);

  // Window room: in_flight stays within ceil(cwnd).
  bool can_send() const;

  Packet emit(TimeUs now);

  // Ack for one data seq; the path is FIFO so any outstanding seq below the
  // acked one has been dropped. Returns how many such holes were freed.
  std::int64_t on_ack(std::int64_t acked_seq, TimeUs now);

  // Loss reaction (gap confirmed or timeout): cwnd <- max(1, cwnd/2).
  void on_loss();

  // True when `now` is at least `timeout` past the last ack while packets
  // are outstanding; clears the outstanding set and halves.
  bool check_timeout(TimeUs now, TimeUs timeout);

  double cwnd() const { return cwnd_; }
  std::int64_t in_flight() const {
    return static_cast<std::int64_t>(outstanding_.size());
  }
  std::int64_t next_seq() const { return next_seq_; }
  std::int64_t losses_detected() const { return losses_detected_; }
  std::int64_t rate_cap_bps() const { return rate_cap_bps_; }
  int packet_bytes() const { return packet_bytes_; }

 private:
  int flow_id_;
  Direction dir_;
  std::int64_t rate_cap_bps_; // 0 = uncapped
  int packet_bytes_;

  double cwnd_ = 2.0;
  std::int64_t next_seq_ = 0;
  std::deque<std::int64_t> outstanding_; // seqs in flight, increasing
  TimeUs last_ack_at_ = 0;

  // Gap confirmation: armed when a hole appears, fires after 3 acks above
  // it. After a halving, holes among seqs sent before the halving are
  // ignored (one reaction per loss episode).
  bool gap_armed_ = false;
  int acks_past_gap_ = 0;
  std::int64_t recovery_seq_ = -1;
  std::int64_t losses_detected_ = 0;
};

} // namespace linkforge

#endif
