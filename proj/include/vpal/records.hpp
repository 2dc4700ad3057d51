#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "vpal/anchors.hpp"
#include "vpal/heuristic.hpp"
#include "vpal/vpal.hpp"

namespace vpal {

inline constexpr const char* kSchemaVersion = "1";

/// A single named value, e.g. v(198) = 18 or a family member.
struct ScalarResult {
  std::string name;
  std::string input;
  std::string value;

  friend bool operator==(const ScalarResult&, const ScalarResult&) = default;
};

using Payload = std::variant<VPalindromeHit, AnchorResult, VerificationReport, HeuristicReport, ScalarResult>;

struct OutputRecord {
  std::string schema_version = kSchemaVersion;
  Payload payload;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

/// "v_palindrome_hit", "anchor_result", "verification_report",
/// "heuristic_report" or "scalar".
std::string_view payload_type(const Payload& payload);

// Every number is a decimal string; reals use the shortest fixed-point
// string that parses back to the same double, so no exponent ever appears.
nlohmann::ordered_json to_json(const OutputRecord& record);
/// DomainError on a malformed record.
OutputRecord record_from_json(const nlohmann::ordered_json& j);

std::string format_real(double x);
double parse_real(std::string_view s);

enum class ExportFormat { jsonl, csv, bfile };

ExportFormat parse_export_format(std::string_view name);

/// Streaming encoder. jsonl: one record per line. csv: header row then one
/// row per record. bfile: "index value" lines, index from 1; only records
/// with an integer value (hits, anchors, scalars) qualify. csv and bfile
/// throw HeterogeneousRecords when the payload type changes mid-stream.
class RecordWriter {
 public:
  RecordWriter(std::ostream& out, ExportFormat format);

  void write(const OutputRecord& record);

 private:
  std::ostream& out_;
  ExportFormat format_;
  std::optional<std::size_t> payload_index_;
  std::uint64_t count_ = 0;
};

void export_records(std::span<const OutputRecord> records, ExportFormat format, std::ostream& out);

/// Parses JSONL; blank lines are skipped.
std::vector<OutputRecord> read_jsonl(std::istream& in);

}  // namespace vpal
