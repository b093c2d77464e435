#include "linkforge/cross_traffic.hh"

#include <cmath>

namespace linkforge {

CbrStream::CbrStream(std::int64_t rate_bps, int packet_bytes, Direction dir,
                     int flow_id, TimeUs start_at)
    : rate_bps_(rate_bps),
      packet_bytes_(packet_bytes),
      dir_(dir),
      flow_id_(flow_id),
      start_at_(start_at) {}

TimeUs CbrStream::send_time(std::int64_t k) const {
  // k * bits * 1e6 stays well under int64 range for day-long runs.
  return start_at_ + (k * packet_bytes_ * 8 * kSecond) / rate_bps_;
}

std::vector<Packet> CbrStream::tick(TimeUs now) {
  std::vector<Packet> out;
  while (send_time(count_) <= now) {
    Packet pkt;
    pkt.seq = count_++;
    pkt.size_bytes = packet_bytes_;
    pkt.dir = dir_;
    pkt.kind = PacketKind::Cross;
    pkt.flow_id = flow_id_;
    pkt.sent_at = now;
    out.push_back(pkt);
  }
  return out;
}

AimdStream::AimdStream(int flow_id, Direction dir, std::int64_t rate_cap_bps,
                       int packet_bytes)
    : flow_id_(flow_id),
      dir_(dir),
      rate_cap_bps_(rate_cap_bps),
      packet_bytes_(packet_bytes) {}

bool AimdStream::can_send() const {
  return in_flight() < static_cast<std::int64_t>(std::ceil(cwnd_));
}

Packet AimdStream::emit(TimeUs now) {
  Packet pkt;
  pkt.seq = next_seq_++;
  pkt.size_bytes = packet_bytes_;
  pkt.dir = dir_;
  pkt.kind = PacketKind::Cross;
  pkt.flow_id = flow_id_;
  pkt.sent_at = now;
  outstanding_.push_back(pkt.seq);
  return pkt;
}

std::int64_t AimdStream::on_ack(std::int64_t acked_seq, TimeUs now) {
  std::int64_t holes = 0;
  while (!outstanding_.empty() && outstanding_.front() < acked_seq) {
    outstanding_.pop_front();
    ++holes;
  }
  if (outstanding_.empty() || outstanding_.front() != acked_seq) {
    return holes; // stale or duplicate ack
  }
  outstanding_.pop_front();
  last_ack_at_ = now;

  cwnd_ += 1.0 / cwnd_; // congestion avoidance

  if (holes > 0 && !gap_armed_ && acked_seq > recovery_seq_) {
    gap_armed_ = true;
    acks_past_gap_ = 0;
  }
  if (gap_armed_ && ++acks_past_gap_ >= 3) {
    gap_armed_ = false;
    on_loss();
    recovery_seq_ = next_seq_;
  }
  return holes;
}

void AimdStream::on_loss() {
  cwnd_ = std::max(1.0, cwnd_ / 2.0); // halving is exact in binary fp
  ++losses_detected_;
}

bool AimdStream::check_timeout(TimeUs now, TimeUs timeout) {
  if (outstanding_.empty()) {
    if (last_ack_at_ < now) last_ack_at_ = now;
    return false;
  }
  if (now - last_ack_at_ < timeout) return false;
  outstanding_.clear();
  gap_armed_ = false;
  on_loss();
  recovery_seq_ = next_seq_;
  last_ack_at_ = now;
  return true;
}

} // namespace linkforge
