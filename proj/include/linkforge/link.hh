#ifndef LINKFORGE_LINK_HH
#define LINKFORGE_LINK_HH

#include <array>
#include <cstdint>

#include "linkforge/packet.hh"
#include "linkforge/time.hh"

namespace linkforge {

class Simulation;

// Per-direction packet accounting. Conservation invariant:
//   submitted == delivered + queue_drops + wire_losses + in_queue
//              + in_service + in_propagation
// holds at any instant for both directions.
struct DirCounters {
  std::int64_t submitted = 0;
  std::int64_t delivered = 0;
  std::int64_t delivered_bytes = 0;
  std::int64_t queue_drops = 0;
  std::int64_t wire_losses = 0;
  std::int64_t in_queue = 0;
  std::int64_t in_service = 0;
  std::int64_t in_propagation = 0;
};

struct LinkCounters {
  std::array<DirCounters, 2> dir; // indexed by Direction

  DirCounters& operator[](Direction d) { return dir[static_cast<int>(d)]; }
  const DirCounters& operator[](Direction d) const {
    return dir[static_cast<int>(d)];
  }
};

// A bidirectional packet conduit flows submit into; deliveries come back
// through Simulation::deliver. Implementations drive themselves by
// scheduling events on the simulation's event loop.
class Link {
 public:
  virtual ~Link() = default;

  // Called once before the run starts.
  virtual void attach(Simulation& sim) = 0;

  // Hand one packet to the link at the current simulation time.
  virtual void submit(Simulation& sim, Packet pkt) = 0;

  virtual const LinkCounters& counters() const = 0;
};

} // namespace linkforge

#endif
