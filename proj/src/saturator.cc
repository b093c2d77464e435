#include "linkforge/saturator.hh"

#include <algorithm>
#include <cmath>

namespace linkforge {

std::string ControllerParams::check() const {
  if (target_delay_low <= 0) return "target_delay_low must be positive";
  if (target_delay_low >= target_delay_high) {
    return "target_delay_low must be below target_delay_high";
  }
  if (!(ewma_alpha > 0.0 && ewma_alpha <= 1.0)) {
    return "ewma_alpha must be in (0, 1]";
  }
  if (window_cap < 1) return "window_cap must be positive";
  if (initial_window < 1) return "initial_window must be positive";
  if (initial_window > window_cap) {
    return "initial_window must not exceed window_cap";
  }
  return {};
}

ControllerParams cellular_profile() {
  ControllerParams p;
  p.target_delay_low = from_ms(500);
  p.target_delay_high = from_ms(750);
  p.window_cap = 2000;
  p.initial_window = 16;
  return p;
}

ControllerParams wifi_profile() {
  ControllerParams p;
  p.target_delay_low = from_ms(50);
  p.target_delay_high = from_ms(100);
  p.window_cap = 1000; // callers set this to the bottleneck buffer size
  p.initial_window = 16;
  return p;
}

SaturatorSender::SaturatorSender(ControllerParams params, Direction dir,
                                 int flow_id, int packet_bytes)
    : params_(params),
      dir_(dir),
      flow_id_(flow_id),
      packet_bytes_(packet_bytes),
      window_(std::min(params.initial_window, params.window_cap)) {}

std::optional<Packet> SaturatorSender::send_opportunity(TimeUs now) {
  if (in_flight() >= window_) return std::nullopt;
  Packet pkt;
  pkt.seq = next_seq_++;
  pkt.size_bytes = packet_bytes_;
  pkt.dir = dir_;
  pkt.kind = PacketKind::Data;
  pkt.flow_id = flow_id_;
  pkt.sent_at = now;
  outstanding_.push_back({pkt.seq, now});
  send_log_.push_back({LogEvent::DataSent, now, pkt.seq, pkt.size_bytes, dir_, -1});
  return pkt;
}

void SaturatorSender::on_ack(const AckPacket& ack, TimeUs now) {
  if (ack.acked_seq < 0 || ack.acked_seq >= next_seq_) {
    ++unknown_acks_; // never sent; state unchanged
    return;
  }
  // Data and feedback both travel FIFO paths, so an ack for seq s means any
  // still-outstanding seq < s was dropped somewhere along the way.
  while (!outstanding_.empty() && outstanding_.front().seq < ack.acked_seq) {
    outstanding_.pop_front();
    ++inferred_lost_;
  }
  if (outstanding_.empty() || outstanding_.front().seq != ack.acked_seq) {
    ++unknown_acks_; // duplicate or stale ack; state unchanged
    return;
  }

  TimeUs sample = now - outstanding_.front().sent_at;
  outstanding_.pop_front();
  last_progress_ = now;

  if (!have_rtt_) {
    ewma_rtt_ = sample;
    have_rtt_ = true;
  } else {
    double next = static_cast<double>(ewma_rtt_) +
                  params_.ewma_alpha * static_cast<double>(sample - ewma_rtt_);
    ewma_rtt_ = std::llround(next);
  }

  if (ewma_rtt_ < params_.target_delay_low) {
    window_ = std::min(window_ + 1, params_.window_cap);
  } else if (ewma_rtt_ > params_.target_delay_high) {
    window_ = std::max<std::int64_t>(
        1, static_cast<std::int64_t>(std::floor(0.9 * static_cast<double>(window_))));
  }
  // inside the band: hold

  send_log_.push_back({LogEvent::AckRecv, now, ack.acked_seq, ack.size_bytes,
                       dir_, ewma_rtt_});
}

bool SaturatorSender::stall_watchdog(TimeUs now, TimeUs timeout) {
  if (outstanding_.empty()) {
    last_progress_ = std::max(last_progress_, now);
    return false;
  }
  if (now - last_progress_ < timeout) return false;
  inferred_lost_ += static_cast<std::int64_t>(outstanding_.size());
  outstanding_.clear();
  window_ = std::min(params_.initial_window, params_.window_cap);
  last_progress_ = now;
  ++watchdog_resets_;
  return true;
}

AckPacket SaturatorReceiver::on_data(const Packet& pkt, TimeUs now) {
  if (pkt.seq <= highest_seq_) {
    ++duplicates_;
  } else {
    highest_seq_ = pkt.seq;
  }
  ++packets_received_;
  bytes_received_ += pkt.size_bytes;
  recv_log_.push_back({LogEvent::DataRecv, now, pkt.seq, pkt.size_bytes, dir_, -1});

  AckPacket ack;
  ack.acked_seq = pkt.seq;
  ack.recv_time = now;
  recv_log_.push_back({LogEvent::AckSent, now, pkt.seq, ack.size_bytes, dir_, -1});
  return ack;
}

} // namespace linkforge
