#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

#include "vpal/arith.hpp"

namespace vpal {

// Append-only anchor-search checkpoint.
//
// Line 1 is a JSON header naming the format, its version and the search
// parameters. Every following line is one JSON record for a completed m:
//
//   {"floor":4,"format":"vpal-anchor-checkpoint","rounds":64,"version":1}
//   {"m":5,"p_verdict":"composite","q_verdict":"composite","rounds":64,"timestamp":"2026-10-19T12:00:00Z"}
//
// Each record is flushed to disk (fsync) before the next one is computed.
// Any line that does not parse, a duplicate m, a header whose parameters
// differ from the requested ones, or a final line without its newline makes
// the file CheckpointCorrupt.

inline constexpr int kCheckpointVersion = 1;
inline constexpr const char* kCheckpointFormat = "vpal-anchor-checkpoint";

struct CheckpointParameters {
  std::uint32_t rounds = kDefaultRounds;
  std::uint32_t floor = 4;
  friend bool operator==(const CheckpointParameters&, const CheckpointParameters&) = default;
};

struct CheckpointRecord {
  std::uint32_t m = 0;
  PrimalityVerdict p_verdict;
  PrimalityVerdict q_verdict;
  std::uint32_t rounds = 0;
  std::string timestamp;
};

class AnchorCheckpoint {
 public:
  /// Creates the file with a header if it does not exist, otherwise loads
  /// and validates it against `params`.
  static AnchorCheckpoint open(const std::filesystem::path& path, const CheckpointParameters& params);

  AnchorCheckpoint(AnchorCheckpoint&&) noexcept;
  AnchorCheckpoint& operator=(AnchorCheckpoint&&) noexcept;
  AnchorCheckpoint(const AnchorCheckpoint&) = delete;
  AnchorCheckpoint& operator=(const AnchorCheckpoint&) = delete;
  ~AnchorCheckpoint();

  const std::map<std::uint32_t, CheckpointRecord>& records() const noexcept { return records_; }
  const CheckpointParameters& parameters() const noexcept { return params_; }

  /// Writes one record and fsyncs it. DomainError on a duplicate m.
  void append(const CheckpointRecord& record);

 private:
  AnchorCheckpoint(std::filesystem::path path, CheckpointParameters params, int fd);

  std::filesystem::path path_;
  CheckpointParameters params_;
  int fd_ = -1;
  std::map<std::uint32_t, CheckpointRecord> records_;
};

/// Current UTC time as ISO-8601 with a trailing Z.
std::string utc_timestamp();

}  // namespace vpal
