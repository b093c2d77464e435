#include "linkforge/log.hh"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace linkforge {

const char* kRunCsvHeader = "event,t_us,seq,size_bytes,dir,rtt_est_us,flow_id";

const char* to_string(LogEvent e) {
  switch (e) {
    case LogEvent::DataSent: return "DataSent";
    case LogEvent::DataRecv: return "DataRecv";
    case LogEvent::AckSent: return "AckSent";
    case LogEvent::AckRecv: return "AckRecv";
  }
  return "?";
}

void append_csv_row(std::string& out, const LogRecord& rec, int flow_id) {
  out += to_string(rec.event);
  out += ',';
  out += std::to_string(rec.t);
  out += ',';
  out += std::to_string(rec.seq);
  out += ',';
  out += std::to_string(rec.size_bytes);
  out += ',';
  out += to_string(rec.dir);
  out += ',';
  if (rec.rtt_est_us >= 0) out += std::to_string(rec.rtt_est_us);
  out += ',';
  out += std::to_string(flow_id);
  out += '\n';
}

std::vector<TaggedRecord> merge_logs(
    const std::vector<std::pair<int, const FlowLog*>>& logs) {
  std::vector<TaggedRecord> rows;
  std::size_t total = 0;
  for (const auto& [id, log] : logs) total += log->size();
  rows.reserve(total);
  for (const auto& [id, log] : logs) {
    for (const auto& rec : *log) rows.push_back({rec, id});
  }
  // Per-flow logs are already time-ordered; stable sort keeps the flow order
  // (and each flow's row order) as the tie-break, so output is deterministic.
  std::stable_sort(rows.begin(), rows.end(),
                   [](const TaggedRecord& a, const TaggedRecord& b) {
                     return a.rec.t < b.rec.t;
                   });
  return rows;
}

std::string run_csv(const std::vector<TaggedRecord>& rows) {
  std::string out = kRunCsvHeader;
  out += '\n';
  for (const auto& row : rows) append_csv_row(out, row.rec, row.flow_id);
  return out;
}

namespace {

LogEvent parse_event(const std::string& s, int line) {
  if (s == "DataSent") return LogEvent::DataSent;
  if (s == "DataRecv") return LogEvent::DataRecv;
  if (s == "AckSent") return LogEvent::AckSent;
  if (s == "AckRecv") return LogEvent::AckRecv;
  throw std::runtime_error("log csv line " + std::to_string(line) +
                           ": unknown event '" + s + "'");
}

std::int64_t parse_i64(const std::string& s, int line, const char* what) {
  try {
    std::size_t pos = 0;
    std::int64_t v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("log csv line " + std::to_string(line) + ": bad " +
                             std::string(what) + " '" + s + "'");
  }
}

} // namespace

std::vector<TaggedRecord> parse_run_csv(std::istream& in) {
  std::vector<TaggedRecord> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1) {
      if (line != kRunCsvHeader) {
        throw std::runtime_error("log csv line 1: unexpected header");
      }
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (line.back() == ',') f.push_back("");
    if (f.size() != 7) {
      throw std::runtime_error("log csv line " + std::to_string(lineno) +
                               ": expected 7 fields, got " +
                               std::to_string(f.size()));
    }
    TaggedRecord row;
    row.rec.event = parse_event(f[0], lineno);
    row.rec.t = parse_i64(f[1], lineno, "t_us");
    row.rec.seq = parse_i64(f[2], lineno, "seq");
    row.rec.size_bytes = static_cast<int>(parse_i64(f[3], lineno, "size_bytes"));
    if (f[4] == "up") {
      row.rec.dir = Direction::Up;
    } else if (f[4] == "down") {
      row.rec.dir = Direction::Down;
    } else {
      throw std::runtime_error("log csv line " + std::to_string(lineno) +
                               ": bad dir '" + f[4] + "'");
    }
    row.rec.rtt_est_us = f[5].empty() ? -1 : parse_i64(f[5], lineno, "rtt_est_us");
    row.flow_id = static_cast<int>(parse_i64(f[6], lineno, "flow_id"));
    rows.push_back(row);
  }
  return rows;
}

} // namespace linkforge
