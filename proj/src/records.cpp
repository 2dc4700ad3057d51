#include "vpal/records.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>

namespace vpal {

namespace {

using nlohmann::ordered_json;

constexpr std::string_view kTypeNames[] = {"v_palindrome_hit", "anchor_result", "verification_report",
                                           "heuristic_report", "scalar"};

std::string u64_string(std::uint64_t x) { return std::to_string(x); }

std::uint64_t parse_u64(const std::string& s) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw DomainError("not an unsigned integer: " + s);
  return out;
}

std::uint32_t parse_u32(const std::string& s) {
  const std::uint64_t x = parse_u64(s);
  if (x > UINT32_MAX) throw DomainError("value out of range: " + s);
  return static_cast<std::uint32_t>(x);
}

Natural natural_at(const ordered_json& j, const char* key) { return Natural::parse(j.at(key).get<std::string>()); }

ordered_json naturals(const std::vector<Natural>& xs) {
  ordered_json out = ordered_json::array();
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

std::vector<Natural> naturals_from(const ordered_json& j) {
  std::vector<Natural> out;
  for (const auto& x : j) out.push_back(Natural::parse(x.get<std::string>()));
  return out;
}

std::string joined(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ';';
    out += p;
  }
  return out;
}

std::string bool_string(bool b) { return b ? "true" : "false"; }

ordered_json payload_json(const VPalindromeHit& h) {
  return {{"n", h.n.str()}, {"reversal", h.reversal.str()}, {"shared_v", h.shared_v.str()}, {"base", u64_string(h.base)}};
}

ordered_json payload_json(const AnchorResult& a) {
  return {{"m", u64_string(a.m)},
          {"p", a.p.str()},
          {"q", a.q.str()},
          {"p_verdict", {{"status", to_string(a.p_verdict.status)}, {"certainty", u64_string(a.p_verdict.certainty)}}},
          {"q_verdict", {{"status", to_string(a.q_verdict.status)}, {"certainty", u64_string(a.q_verdict.certainty)}}},
          {"is_candidate", a.is_candidate},
          {"meets_floor", a.meets_floor}};
}

ordered_json payload_json(const VerificationReport& r) {
  return {{"bound", r.bound.str()},
          {"brute_force_hits", naturals(r.brute_force_hits)},
          {"characterization_hits", naturals(r.characterization_hits)},
          {"consistent", r.consistent}};
}

ordered_json payload_json(const HeuristicReport& r) {
  ordered_json terms = ordered_json::array();
  for (double t : r.terms) terms.push_back(format_real(t));
  return {{"C", format_real(r.C)},
          {"n_start", u64_string(r.n_start)},
          {"N", u64_string(r.N)},
          {"terms", std::move(terms)},
          {"partial_sum", format_real(r.partial_sum)},
          {"envelope_sum", format_real(r.envelope_sum)},
          {"tail_bound", format_real(r.tail_bound)}};
}

ordered_json payload_json(const ScalarResult& s) { return {{"name", s.name}, {"input", s.input}, {"value", s.value}}; }

PrimalityVerdict verdict_from(const ordered_json& j) {
  return {parse_primality_status(j.at("status").get<std::string>()), parse_u32(j.at("certainty").get<std::string>())};
}

Payload payload_from(std::string_view type, const ordered_json& j) {
  if (type == "v_palindrome_hit") {
    return VPalindromeHit{natural_at(j, "n"), natural_at(j, "reversal"), natural_at(j, "shared_v"),
                          parse_u32(j.at("base").get<std::string>())};
  }
  if (type == "anchor_result") {
    AnchorResult a;
    a.m = parse_u32(j.at("m").get<std::string>());
    a.p = natural_at(j, "p");
    a.q = natural_at(j, "q");
    a.p_verdict = verdict_from(j.at("p_verdict"));
    a.q_verdict = verdict_from(j.at("q_verdict"));
    a.is_candidate = j.at("is_candidate").get<bool>();
    a.meets_floor = j.at("meets_floor").get<bool>();
    return a;
  }
  if (type == "verification_report") {
    VerificationReport r;
    r.bound = natural_at(j, "bound");
    r.brute_force_hits = naturals_from(j.at("brute_force_hits"));
    r.characterization_hits = naturals_from(j.at("characterization_hits"));
    r.consistent = j.at("consistent").get<bool>();
    return r;
  }
  if (type == "heuristic_report") {
    HeuristicReport r;
    r.C = parse_real(j.at("C").get<std::string>());
    r.n_start = parse_u64(j.at("n_start").get<std::string>());
    r.N = parse_u64(j.at("N").get<std::string>());
    for (const auto& t : j.at("terms")) r.terms.push_back(parse_real(t.get<std::string>()));
    r.partial_sum = parse_real(j.at("partial_sum").get<std::string>());
    r.envelope_sum = parse_real(j.at("envelope_sum").get<std::string>());
    r.tail_bound = parse_real(j.at("tail_bound").get<std::string>());
    return r;
  }
  if (type == "scalar") {
    return ScalarResult{j.at("name").get<std::string>(), j.at("input").get<std::string>(),
                        j.at("value").get<std::string>()};
  }
  throw DomainError("unknown record type: " + std::string(type));
}

std::vector<std::string> csv_header(const Payload& p) {
  switch (p.index()) {
    case 0:
      return {"n", "reversal", "shared_v", "base"};
    case 1:
      return {"m", "p", "q", "p_verdict", "p_certainty", "q_verdict", "q_certainty", "is_candidate", "meets_floor"};
    case 2:
      return {"bound", "brute_force_hits", "characterization_hits", "consistent"};
    case 3:
      return {"C", "n_start", "N", "partial_sum", "envelope_sum", "tail_bound", "terms"};
    default:
      return {"name", "input", "value"};
  }
}

struct CsvRow {
  std::vector<std::string> operator()(const VPalindromeHit& h) const {
    return {h.n.str(), h.reversal.str(), h.shared_v.str(), u64_string(h.base)};
  }
  std::vector<std::string> operator()(const AnchorResult& a) const {
    return {u64_string(a.m),
            a.p.str(),
            a.q.str(),
            std::string(to_string(a.p_verdict.status)),
            u64_string(a.p_verdict.certainty),
            std::string(to_string(a.q_verdict.status)),
            u64_string(a.q_verdict.certainty),
            bool_string(a.is_candidate),
            bool_string(a.meets_floor)};
  }
  std::vector<std::string> operator()(const VerificationReport& r) const {
    std::vector<std::string> bf, ch;
    for (const auto& x : r.brute_force_hits) bf.push_back(x.str());
    for (const auto& x : r.characterization_hits) ch.push_back(x.str());
    return {r.bound.str(), joined(bf), joined(ch), bool_string(r.consistent)};
  }
  std::vector<std::string> operator()(const HeuristicReport& r) const {
    std::vector<std::string> terms;
    for (double t : r.terms) terms.push_back(format_real(t));
    return {format_real(r.C),           u64_string(r.n_start),      u64_string(r.N), format_real(r.partial_sum),
            format_real(r.envelope_sum), format_real(r.tail_bound), joined(terms)};
  }
  std::vector<std::string> operator()(const ScalarResult& s) const { return {s.name, s.input, s.value}; }
};

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    if (fields[i].find_first_of(",\"\r\n") == std::string::npos) {
      out += fields[i];
      continue;
    }
    out += '"';
    for (char c : fields[i]) {
      if (c == '"') out += '"';
      out += c;
    }
    out += '"';
  }
  out += '\n';
  return out;
}

std::string bfile_value(const Payload& p) {
  if (const auto* h = std::get_if<VPalindromeHit>(&p)) return h->n.str();
  if (const auto* a = std::get_if<AnchorResult>(&p)) return a->p.str();
  if (const auto* s = std::get_if<ScalarResult>(&p)) {
    Natural::parse(s->value);  // must be an integer
    return s->value;
  }
  throw DomainError("b-file export needs integer-valued records, got " + std::string(payload_type(p)));
}

}  // namespace

std::string_view payload_type(const Payload& payload) { return kTypeNames[payload.index()]; }

std::string format_real(double x) {
  if (!std::isfinite(x)) throw DomainError("real value is not finite");
  char buf[512];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed);
  if (ec != std::errc{}) throw DomainError("cannot format real value");
  return std::string(buf, ptr);
}

double parse_real(std::string_view s) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out, std::chars_format::fixed);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw DomainError("not a decimal real: " + std::string(s));
  return out;
}

ordered_json to_json(const OutputRecord& record) {
  ordered_json j = {{"schema_version", record.schema_version}, {"type", payload_type(record.payload)}};
  const ordered_json body = std::visit([](const auto& p) { return payload_json(p); }, record.payload);
  for (const auto& [key, value] : body.items()) j[key] = value;
  return j;
}

OutputRecord record_from_json(const ordered_json& j) {
  try {
    OutputRecord r;
    r.schema_version = j.at("schema_version").get<std::string>();
    if (r.schema_version != kSchemaVersion) throw DomainError("unsupported schema_version " + r.schema_version);
    r.payload = payload_from(j.at("type").get<std::string>(), j);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed record: ") + e.what());
  }
}

ExportFormat parse_export_format(std::string_view name) {
  if (name == "jsonl") return ExportFormat::jsonl;
  if (name == "csv") return ExportFormat::csv;
  if (name == "bfile") return ExportFormat::bfile;
  throw DomainError("unknown export format: " + std::string(name));
}

RecordWriter::RecordWriter(std::ostream& out, ExportFormat format) : out_(out), format_(format) {}

void RecordWriter::write(const OutputRecord& record) {
  const std::size_t index = record.payload.index();
  if (format_ != ExportFormat::jsonl && payload_index_ && *payload_index_ != index) {
    throw HeterogeneousRecords("cannot mix " + std::string(kTypeNames[*payload_index_]) + " and " +
                               std::string(kTypeNames[index]) + " records");
  }
  switch (format_) {
    case ExportFormat::jsonl:
      out_ << to_json(record).dump() << '\n';
      break;
    case ExportFormat::csv:
      if (!payload_index_) out_ << csv_line(csv_header(record.payload));
      out_ << csv_line(std::visit(CsvRow{}, record.payload));
      break;
    case ExportFormat::bfile:
      out_ << (count_ + 1) << ' ' << bfile_value(record.payload) << '\n';
      break;
  }
  payload_index_ = index;
  ++count_;
}

void export_records(std::span<const OutputRecord> records, ExportFormat format, std::ostream& out) {
  RecordWriter writer(out, format);
  for (const auto& r : records) writer.write(r);
}

std::vector<OutputRecord> read_jsonl(std::istream& in) {
  std::vector<OutputRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(record_from_json(ordered_json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw DomainError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace vpal
