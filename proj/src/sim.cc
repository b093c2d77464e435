#include "linkforge/sim.hh"

#include <cassert>
#include <stdexcept>

namespace linkforge {

void Simulation::add_flow(std::unique_ptr<Flow> flow) {
  assert(flow);
  if (flow->flow_id() != static_cast<int>(flows_.size())) {
    throw std::logic_error("flow ids must be dense and in insertion order");
  }
  flows_.push_back(std::move(flow));
}

void Simulation::submit(Packet pkt) {
  pkt.sent_at = now();
  link_.submit(*this, pkt);
}

void Simulation::deliver(Packet pkt) {
  pkt.delivered_at = now();
  auto id = static_cast<std::size_t>(pkt.flow_id);
  if (id >= flows_.size()) throw std::logic_error("delivery for unknown flow");
  flows_[id]->deliver(*this, pkt);
}

void Simulation::deliver_direct(Packet pkt, TimeUs delay) {
  schedule_in(delay, [this, pkt]() mutable { deliver(pkt); });
}

RunResult Simulation::run() {
  link_.attach(*this);
  for (auto& flow : flows_) flow->start(*this);
  loop_.run_until(duration_);

  RunResult result;
  result.link = link_.counters();
  if (loop_.empty()) {
    for (const auto& flow : flows_) {
      if (!flow->idle()) result.starved = true;
    }
  }
  std::vector<std::pair<int, const FlowLog*>> logs;
  logs.reserve(flows_.size() * 2);
  for (const auto& flow : flows_) {
    logs.emplace_back(flow->flow_id(), &flow->send_log());
    logs.emplace_back(flow->flow_id(), &flow->recv_log());
  }
  result.rows = merge_logs(logs);
  return result;
}

} // namespace linkforge
