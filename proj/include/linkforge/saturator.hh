#ifndef LINKFORGE_SATURATOR_HH
#define LINKFORGE_SATURATOR_HH

#include <cstdint>
#include <deque>
#include <optional>

#include "linkforge/log.hh"
#include "linkforge/packet.hh"
#include "linkforge/time.hh"

namespace linkforge {

// Window controller tuning. The sender holds the smoothed feedback delay
// inside [target_delay_low, target_delay_high]: +1 packet per ACK below the
// band, *0.9 above it, hold inside. window_cap bounds the window outright;
// matching it to the bottleneck buffer prevents driver-side overruns, while
// a cap sized for a deep-buffer link overruns a shallow one.
struct ControllerParams {
  TimeUs target_delay_low = from_ms(50);
  TimeUs target_delay_high = from_ms(100);
  double ewma_alpha = 0.125;   // in (0, 1]
  std::int64_t window_cap = 1000;
  std::int64_t initial_window = 16;

  std::string check() const; // empty when valid
};

// Named tunings: the cellular profile keeps its historical deep-buffer
// delay band; the wifi profile targets shallow AP buffers and is meant to
// run with window_cap equal to the bottleneck buffer.
ControllerParams cellular_profile();
ControllerParams wifi_profile();

enum class SaturatorMode : std::uint8_t { OneWay, TwoWay };

// Sender half of the saturation protocol: keeps `window` packets in flight,
// reacts to smoothed RTT only. Pure state machine; callers supply time.
class SaturatorSender {
 public:
  SaturatorSender(ControllerParams params, Direction dir, int flow_id,
                  int packet_bytes = kDefaultDataBytes);

  // Emits the next data packet iff the window has room.
  std::optional<Packet> send_opportunity(TimeUs now);

  // Ack processing: frees the acked packet (and, because the path is FIFO,
  // every older outstanding packet, which the ack proves was dropped),
  // updates the RTT estimate and applies the window law.
  void on_ack(const AckPacket& ack, TimeUs now);

  // Recovers from total feedback loss: if no ack has arrived within
  // `timeout`, forget all outstanding packets and restart from the initial
  // window. Fires at most once per silent period.
  // Returns true when the reset fired.
  bool stall_watchdog(TimeUs now, TimeUs timeout);

  std::int64_t window() const { return window_; }
  std::int64_t in_flight() const { return static_cast<std::int64_t>(outstanding_.size()); }
  std::int64_t next_seq() const { return next_seq_; }
  TimeUs ewma_rtt() const { return ewma_rtt_; }
  std::int64_t packets_sent() const { return next_seq_; }
  std::int64_t inferred_lost() const { return inferred_lost_; }
  std::int64_t unknown_acks() const { return unknown_acks_; }
  std::int64_t watchdog_resets() const { return watchdog_resets_; }
  Direction dir() const { return dir_; }
  int flow_id() const { return flow_id_; }
  const ControllerParams& params() const { return params_; }

  const FlowLog& send_log() const { return send_log_; }
  FlowLog& send_log() { return send_log_; }

 private:
  struct Outstanding {
    std::int64_t seq;
    TimeUs sent_at;
  };

  ControllerParams params_;
  Direction dir_;
  int flow_id_;
  int packet_bytes_;

  std::int64_t window_;
  std::int64_t next_seq_ = 0;
  TimeUs ewma_rtt_ = 0;
  bool have_rtt_ = false;
  std::deque<Outstanding> outstanding_; // seq-ordered; size() == in_flight

  TimeUs last_progress_ = 0; // last ack arrival (or watchdog reset)
  std::int64_t inferred_lost_ = 0;
  std::int64_t unknown_acks_ = 0;
  std::int64_t watchdog_resets_ = 0;

  FlowLog send_log_;
};

// Receiver half: logs arrivals and acks every data packet, duplicates
// included (they are counted separately).
class SaturatorReceiver {
 public:
  SaturatorReceiver(Direction dir, int flow_id) : dir_(dir), flow_id_(flow_id) {}

  AckPacket on_data(const Packet& pkt, TimeUs now);

  std::int64_t packets_received() const { return packets_received_; }
  std::int64_t bytes_received() const { return bytes_received_; }
  std::int64_t duplicates() const { return duplicates_; }

  const FlowLog& recv_log() const { return recv_log_; }
  FlowLog& recv_log() { return recv_log_; }

 private:
  Direction dir_;
  int flow_id_;
  std::int64_t packets_received_ = 0;
  std::int64_t bytes_received_ = 0;
  std::int64_t duplicates_ = 0;
  std::int64_t highest_seq_ = -1; // arrivals are FIFO; lower seq == duplicate
  FlowLog recv_log_;
};

} // namespace linkforge

#endif
