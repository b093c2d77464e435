#ifndef LINKFORGE_PACKET_HH
#define LINKFORGE_PACKET_HH

#include <cstdint>
#include <string>

#include "linkforge/time.hh"

namespace linkforge {

enum class Direction : std::uint8_t { Up, Down };

inline Direction reverse(Direction d) {
  return d == Direction::Up ? Direction::Down : Direction::Up;
}

inline const char* to_string(Direction d) {
  return d == Direction::Up ? "up" : "down";
}

// Payload classes on the wire. Data = measurement traffic (saturator, bulk),
// Cross = competing traffic, Ack = feedback riding the shared medium.
enum class PacketKind : std::uint8_t { Data, Ack, Cross };

constexpr int kMaxPacketBytes = 1504; // Ethernet MTU plus margin
constexpr int kDefaultDataBytes = 1500;
constexpr int kAckBytes = 40;

struct Packet {
  std::int64_t seq = 0;       // unique per (flow_id, dir)
  int size_bytes = kDefaultDataBytes; // in [1, kMaxPacketBytes]
  Direction dir = Direction::Up;
  PacketKind kind = PacketKind::Data;
  int flow_id = 0;
  TimeUs sent_at = 0;
  TimeUs delivered_at = -1;   // -1 until delivered
};

// Feedback unit produced by a receiver for one data packet.
struct AckPacket {
  std::int64_t acked_seq = 0;
  TimeUs recv_time = 0;       // receiver clock when the data packet arrived
  int size_bytes = kAckBytes;
};

} // namespace linkforge

#endif
