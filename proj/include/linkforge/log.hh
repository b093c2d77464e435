#ifndef LINKFORGE_LOG_HH
#define LINKFORGE_LOG_HH

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "linkforge/packet.hh"
#include "linkforge/time.hh"

namespace linkforge {

enum class LogEvent : std::uint8_t { DataSent, DataRecv, AckSent, AckRecv };

const char* to_string(LogEvent e);

// One protocol event as seen by a sender or receiver machine.
// rtt_est_us is only meaningful for AckRecv rows (-1 elsewhere).
struct LogRecord {
  LogEvent event;
  TimeUs t = 0;
  std::int64_t seq = 0;
  int size_bytes = 0;
  Direction dir = Direction::Up;
  TimeUs rtt_est_us = -1;
};

using FlowLog = std::vector<LogRecord>;

// Canonical log row format shared by every flow type:
//   event,t_us,seq,size_bytes,dir,rtt_est_us,flow_id
// rtt_est_us is printed empty when absent. write_run_csv merges per-flow logs
// into one file, stably ordered by (t, flow order, row order).
extern const char* kRunCsvHeader;

struct TaggedRecord {
  LogRecord rec;
  int flow_id;
};

void append_csv_row(std::string& out, const LogRecord& rec, int flow_id);

std::vector<TaggedRecord> merge_logs(
    const std::vector<std::pair<int, const FlowLog*>>& logs);

std::string run_csv(const std::vector<TaggedRecord>& rows);

// Inverse of run_csv; throws std::runtime_error with a line number on
// malformed input.
std::vector<TaggedRecord> parse_run_csv(std::istream& in);

} // namespace linkforge

#endif
