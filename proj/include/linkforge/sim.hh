#ifndef LINKFORGE_SIM_HH
#define LINKFORGE_SIM_HH

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "linkforge/des.hh"
#include "linkforge/link.hh"
#include "linkforge/log.hh"
#include "linkforge/packet.hh"
#include "linkforge/rng.hh"
#include "linkforge/time.hh"

namespace linkforge {

class Simulation;

// One traffic source/sink pair attached to a link. A Flow object holds both
// endpoints of its conversation; deliveries are routed back to it and the
// packet kind tells which endpoint consumes them (Data/Cross -> far-end
// receiver, Ack -> sender).
class Flow {
 public:
  Flow(int flow_id, Direction data_dir, std::string kind)
      : flow_id_(flow_id), data_dir_(data_dir), kind_(std::move(kind)) {}
  virtual ~Flow() = default;

  virtual void start(Simulation& sim) = 0;
  virtual void deliver(Simulation& sim, const Packet& pkt) = 0;

  // False while the flow still has work that only an event can advance;
  // used to flag scenarios whose event queue starved.
  virtual bool idle() const = 0;

  virtual const FlowLog& send_log() const = 0;
  virtual const FlowLog& recv_log() const = 0;

  int flow_id() const { return flow_id_; }
  Direction data_dir() const { return data_dir_; }
  const std::string& kind() const { return kind_; }

 private:
  int flow_id_;
  Direction data_dir_;
  std::string kind_;
};

struct RunResult {
  std::vector<TaggedRecord> rows; // merged, time-ordered event rows
  LinkCounters link;
  bool starved = false; // event queue emptied while a flow had pending work
};

// Deterministic single-threaded event-driven run of a set of flows over one
// link. Equal (config, seed) means bit-identical logs.
class Simulation {
 public:
  Simulation(Link& link, TimeUs duration, std::uint64_t seed)
      : link_(link), duration_(duration), root_rng_(seed) {}

  void add_flow(std::unique_ptr<Flow> flow);

  RunResult run();

  TimeUs now() const { return loop_.now(); }
  TimeUs duration() const { return duration_; }

  void schedule(TimeUs t, EventLoop::Fn fn) { loop_.schedule(t, std::move(fn)); }
  void schedule_in(TimeUs delay, EventLoop::Fn fn) {
    loop_.schedule_in(delay, std::move(fn));
  }

  // Flow -> link entry point; stamps sent_at with the current time.
  void submit(Packet pkt);

  // Link -> flow exit point; stamps delivered_at.
  void deliver(Packet pkt);

  // Out-of-band feedback path (the "separate interface"): hands the packet
  // to its flow after `delay`, bypassing the link entirely.
  void deliver_direct(Packet pkt, TimeUs delay);

  Rng fork_rng(std::uint64_t stream_tag) const {
    return root_rng_.fork(stream_tag);
  }

  const std::vector<std::unique_ptr<Flow>>& flows() const { return flows_; }

 private:
  Link& link_;
  TimeUs duration_;
  Rng root_rng_;
  EventLoop loop_;
  std::vector<std::unique_ptr<Flow>> flows_;
};

} // namespace linkforge

#endif
