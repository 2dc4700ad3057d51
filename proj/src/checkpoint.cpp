#include "vpal/checkpoint.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>
#include <ctime>
#include <fstream>
#include <sstream>
#include <utility>
#include <json.hpp>

namespace vpal {

namespace {

using nlohmann::json;

[[noreturn]] void corrupt(const std::filesystem::path& path, const std::string& what) {
  throw CheckpointCorrupt("checkpoint " + path.string() + ": " + what);
}

void write_all(int fd, const std::string& data, const std::filesystem::path& path) {
  std::size_t written = 0;
  while (written < data.size()) {
    const ssize_t n = ::write(fd, data.data() + written, data.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw Error("write to " + path.string() + " failed: " + std::strerror(errno));
    }
    written += static_cast<std::size_t>(n);
  }
  if (::fsync(fd) != 0) throw Error("fsync of " + path.string() + " failed: " + std::strerror(errno));
}

json verdict_json(const PrimalityVerdict& v) { return std::string(to_string(v.status)); }

PrimalityVerdict verdict_from(const json& j, std::uint32_t rounds) {
  const auto status = parse_primality_status(j.get<std::string>());
  return {status, status == PrimalityStatus::probable_prime ? rounds : 0U};
}

CheckpointRecord parse_record(const std::string& line, const CheckpointParameters& params,
                              const std::filesystem::path& path, std::size_t line_no) {
  try {
    const json j = json::parse(line);
    CheckpointRecord r;
    r.m = j.at("m").get<std::uint32_t>();
    r.rounds = j.at("rounds").get<std::uint32_t>();
    r.p_verdict = verdict_from(j.at("p_verdict"), r.rounds);
    r.q_verdict = verdict_from(j.at("q_verdict"), r.rounds);
    r.timestamp = j.at("timestamp").get<std::string>();
    if (r.m == 0) corrupt(path, "line " + std::to_string(line_no) + ": m must be positive");
    if (r.rounds != params.rounds) corrupt(path, "line " + std::to_string(line_no) + ": rounds differ from header");
    return r;
  } catch (const CheckpointCorrupt&) {
    throw;
  } catch (const std::exception& e) {
    corrupt(path, "line " + std::to_string(line_no) + ": " + e.what());
  }
}

}  // namespace

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

AnchorCheckpoint::AnchorCheckpoint(std::filesystem::path path, CheckpointParameters params, int fd)
    : path_(std::move(path)), params_(params), fd_(fd) {}

AnchorCheckpoint::AnchorCheckpoint(AnchorCheckpoint&& other) noexcept
    : path_(std::move(other.path_)),
      params_(other.params_),
      fd_(std::exchange(other.fd_, -1)),
      records_(std::move(other.records_)) {}

AnchorCheckpoint& AnchorCheckpoint::operator=(AnchorCheckpoint&& other) noexcept {
  if (this != &other) {
    if (fd_ >= 0) ::close(fd_);
    path_ = std::move(other.path_);
    params_ = other.params_;
    fd_ = std::exchange(other.fd_, -1);
    records_ = std::move(other.records_);
  }
  return *this;
}

AnchorCheckpoint::~AnchorCheckpoint() {
  if (fd_ >= 0) ::close(fd_);
}

AnchorCheckpoint AnchorCheckpoint::open(const std::filesystem::path& path, const CheckpointParameters& params) {
  std::error_code ec;
  const bool exists = std::filesystem::exists(path, ec);
  if (!exists) {
    const int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_EXCL | O_APPEND | O_CLOEXEC, 0644);
    if (fd < 0) throw Error("cannot create checkpoint " + path.string() + ": " + std::strerror(errno));
    AnchorCheckpoint cp(path, params, fd);
    const json header = {{"format", kCheckpointFormat},
                         {"version", kCheckpointVersion},
                         {"rounds", params.rounds},
                         {"floor", params.floor}};
    write_all(fd, header.dump() + "\n", path);
    return cp;
  }

  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read checkpoint " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string content = buffer.str();
  if (content.empty()) corrupt(path, "empty file");
  if (content.back() != '\n') corrupt(path, "last record is truncated");

  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < content.size()) {
    const std::size_t end = content.find('\n', start);
    lines.push_back(content.substr(start, end - start));
    start = end + 1;
  }

  try {
    const json header = json::parse(lines.front());
    if (header.at("format").get<std::string>() != kCheckpointFormat) corrupt(path, "unknown format");
    if (header.at("version").get<int>() != kCheckpointVersion) corrupt(path, "unsupported version");
    const CheckpointParameters stored{header.at("rounds").get<std::uint32_t>(), header.at("floor").get<std::uint32_t>()};
    if (!(stored == params)) {
      corrupt(path, "parameters (rounds=" + std::to_string(stored.rounds) + ", floor=" + std::to_string(stored.floor) +
                        ") differ from the requested search");
    }
  } catch (const CheckpointCorrupt&) {
    throw;
  } catch (const std::exception& e) {
    corrupt(path, std::string("bad header: ") + e.what());
  }

  std::map<std::uint32_t, CheckpointRecord> records;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    CheckpointRecord r = parse_record(lines[i], params, path, i + 1);
    if (!records.emplace(r.m, std::move(r)).second) corrupt(path, "duplicate record on line " + std::to_string(i + 1));
  }

  const int fd = ::open(path.c_str(), O_WRONLY | O_APPEND | O_CLOEXEC);
  if (fd < 0) throw Error("cannot open checkpoint " + path.string() + ": " + std::strerror(errno));
  AnchorCheckpoint cp(path, params, fd);
  cp.records_ = std::move(records);
  return cp;
}

void AnchorCheckpoint::append(const CheckpointRecord& record) {
  if (records_.contains(record.m)) throw DomainError("checkpoint already holds m=" + std::to_string(record.m));
  const json j = {{"m", record.m},
                  {"p_verdict", verdict_json(record.p_verdict)},
                  {"q_verdict", verdict_json(record.q_verdict)},
                  {"rounds", record.rounds},
                  {"timestamp", record.timestamp}};
  write_all(fd_, j.dump() + "\n", path_);
  records_.emplace(record.m, record);
}

}  // namespace vpal
