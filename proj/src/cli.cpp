#include "vpal/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

#include "vpal/anchors.hpp"
#include "vpal/digits.hpp"
#include "vpal/heuristic.hpp"
#include "vpal/parallel.hpp"
#include "vpal/records.hpp"
#include "vpal/vpal.hpp"

namespace vpal::cli {

namespace {

// Shared settings; flags win over VPAL_* environment variables, which win
// over these defaults.
struct Settings {
  unsigned threads = default_thread_count();
  std::uint32_t rounds = kDefaultRounds;
  std::uint64_t budget = EffortBudget{}.steps;
  std::string format = "human";
};

// Reads an unsigned setting from the environment when set; a malformed
// value is an error rather than silently ignored.
template <typename T>
void env_setting(const char* name, T& value) {
  const char* text = std::getenv(name);
  if (text == nullptr || *text == '\0') return;
  const std::string_view sv(text);
  T parsed{};
  const auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), parsed);
  if (ec != std::errc{} || ptr != sv.data() + sv.size()) {
    throw DomainError(std::string(name) + " is not a non-negative integer: " + text);
  }
  value = parsed;
}

const std::vector<std::string> kFormats = {"human", "jsonl", "csv", "bfile"};

void add_format(CLI::App* cmd, Settings& s) {
  cmd->add_option("--format", s.format, "Output format")->check(CLI::IsMember(kFormats))->capture_default_str();
}

// Emits machine records, or defers to the human renderer.
class Emitter {
 public:
  Emitter(std::ostream& out, const std::string& format) : out_(out) {
    if (format != "human") writer_.emplace(out, parse_export_format(format));
  }

  bool machine() const { return writer_.has_value(); }
  std::ostream& out() { return out_; }
  void record(Payload payload) { writer_->write(OutputRecord{kSchemaVersion, std::move(payload)}); }

 private:
  std::ostream& out_;
  std::optional<RecordWriter> writer_;
};

std::string verdict_text(const PrimalityVerdict& v) {
  std::string s(to_string(v.status));
  if (v.status == PrimalityStatus::probable_prime) s += "(" + std::to_string(v.certainty) + ")";
  return s;
}

std::string list_text(const std::vector<Natural>& xs) {
  if (xs.empty()) return "(none)";
  std::string s;
  for (const auto& x : xs) {
    if (!s.empty()) s += ' ';
    s += x.str();
  }
  return s;
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arithmetic of v-palindromes: the additive function v, digit reversal, enumeration, "
               "prime anchor search and the finiteness heuristic.",
               "vpal"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  Settings s;
  auto* threads_opt = app.add_option("--threads", s.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  auto* rounds_opt = app.add_option("--rounds", s.rounds, "Miller-Rabin rounds above 64 bits")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  auto* budget_opt = app.add_option("--budget", s.budget, "Factorization step budget per number")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string number;
  std::uint32_t base = 10;

  auto* v_cmd = app.add_subcommand("v", "Print v(N)");
  v_cmd->add_option("N", number, "Positive integer")->required();
  add_format(v_cmd, s);

  auto* reverse_cmd = app.add_subcommand("reverse", "Print the base-B reverse of N");
  reverse_cmd->add_option("N", number, "Positive integer")->required();
  reverse_cmd->add_option("--base", base, "Radix")->capture_default_str();
  add_format(reverse_cmd, s);

  auto* check_cmd = app.add_subcommand("check", "Test whether N is a v-palindrome");
  check_cmd->add_option("N", number, "Positive integer")->required();
  check_cmd->add_option("--base", base, "Radix")->capture_default_str();
  add_format(check_cmd, s);

  std::uint64_t lo = 1, hi = 1;
  bool canonical = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List v-palindromes in [lo, hi]");
  enumerate_cmd->add_option("--lo", lo, "Lower bound")->required();
  enumerate_cmd->add_option("--hi", hi, "Upper bound")->required();
  enumerate_cmd->add_option("--base", base, "Radix")->capture_default_str();
  enumerate_cmd->add_flag("--canonical", canonical, "Only hits with n < reverse(n)");
  add_format(enumerate_cmd, s);

  std::string family;
  std::uint32_t k = 1;
  bool family_check = false;
  auto* family_cmd = app.add_subcommand("family", "Members of the infinite families 19...98 and 1818...18");
  family_cmd->add_option("family", family, "nines or repeat18")
      ->required()
      ->check(CLI::IsMember({"nines", "repeat18"}));
  family_cmd->add_option("--k", k, "Index, at least 1")->required();
  family_cmd->add_flag("--check", family_check, "Also test the member with the v-palindrome predicate");
  add_format(family_cmd, s);

  std::uint32_t m_from = 1, m_to = 1, floor = kDefaultAnchorFloor;
  std::string checkpoint;
  auto* anchors_cmd = app.add_subcommand("anchors", "Test anchor pairs 5*10^m-1, 5*10^m-3 for m in [from, to]");
  anchors_cmd->add_option("--from", m_from, "First m")->required();
  anchors_cmd->add_option("--to", m_to, "Last m")->required();
  anchors_cmd->add_option("--floor", floor, "Smallest m that may yield a candidate")->capture_default_str();
  anchors_cmd->add_option("--checkpoint", checkpoint, "Append-only checkpoint file to resume from");
  add_format(anchors_cmd, s);

  std::uint64_t bound = 2;
  auto* verify_cmd = app.add_subcommand("verify", "Brute-force prime v-palindromes up to a bound against the anchors");
  verify_cmd->add_option("--bound", bound, "Upper bound, at least 2")->required();
  verify_cmd->add_option("--base", base, "Radix of the brute-force side")->capture_default_str();
  verify_cmd->add_option("--floor", floor, "Smallest m that may yield a candidate")->capture_default_str();
  add_format(verify_cmd, s);

  std::uint64_t n_from = 1, n_to = 1;
  double model_c = kDefaultModelConstant;
  bool show_terms = false;
  auto* heuristic_cmd = app.add_subcommand("heuristic", "Expected number of prime v-palindromes for m in [from, to]");
  heuristic_cmd->add_option("--from", n_from, "First index")->required();
  heuristic_cmd->add_option("--to", n_to, "Last index")->required();
  heuristic_cmd->add_option("--C", model_c, "Twin-prime model constant")->capture_default_str();
  heuristic_cmd->add_flag("--terms", show_terms, "Print every term (human format)");
  add_format(heuristic_cmd, s);

  std::string export_format;
  std::string input;
  auto* export_cmd = app.add_subcommand("export", "Re-encode JSONL records read from stdin");
  export_cmd->add_option("--format", export_format, "Target format")
      ->required()
      ->check(CLI::IsMember({"jsonl", "csv", "bfile"}));
  export_cmd->add_option("--input", input, "Read records from this file instead of stdin");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "vpal: " << e.what() << "\n";
    return kExitDomain;
  }

  try {
    if (threads_opt->count() == 0) env_setting("VPAL_THREADS", s.threads);
    if (rounds_opt->count() == 0) env_setting("VPAL_ROUNDS", s.rounds);
    if (budget_opt->count() == 0) env_setting("VPAL_BUDGET", s.budget);
  } catch (const DomainError& e) {
    err << "vpal: " << e.what() << "\n";
    return kExitDomain;
  }
  if (s.threads == 0 || s.rounds == 0 || s.budget == 0) {
    err << "vpal: --threads, --rounds and --budget must be positive\n";
    return kExitDomain;
  }

  const EffortBudget budget{s.budget};
  try {
    Emitter emit(out, s.format);

    if (v_cmd->parsed()) {
      const Natural n = Natural::parse(number);
      const Natural value = v(n, budget);
      if (emit.machine()) emit.record(ScalarResult{"v", n.str(), value.str()});
      else out << value << "\n";
    } else if (reverse_cmd->parsed()) {
      const Natural n = Natural::parse(number);
      const Natural r = reverse(n, base);
      if (emit.machine()) emit.record(ScalarResult{"reverse", n.str(), r.str()});
      else out << r << "\n";
    } else if (check_cmd->parsed()) {
      const Natural n = Natural::parse(number);
      if (n.is_zero()) throw DomainError("v-palindromes are defined for n >= 1");
      if (base < 2) throw DomainError("base must be at least 2");
      std::string reason;
      std::optional<VPalindromeHit> hit;
      Natural r, vn, vr;
      if (n.divisible_by(base)) {
        reason = "multiple of base " + std::to_string(base);
      } else {
        r = reverse(n, base);
        if (r == n) {
          reason = "equals its reversal";
        } else {
          vn = v(n, budget);
          vr = v(r, budget);
          if (vn == vr) hit = VPalindromeHit{n, r, vn, base};
        }
      }
      if (emit.machine()) {
        if (hit) emit.record(*hit);
        else emit.record(ScalarResult{"is_v_palindrome", n.str(), "false"});
      } else if (hit) {
        out << "true n=" << n << " reversal=" << r << " shared_v=" << vn << "\n";
      } else if (!reason.empty()) {
        out << "false n=" << n << " (" << reason << ")\n";
      } else {
        out << "false n=" << n << " reversal=" << r << " v(n)=" << vn << " v(reversal)=" << vr << "\n";
      }
    } else if (enumerate_cmd->parsed()) {
      EnumerationOptions options;
      options.base = base;
      options.mode = canonical ? EnumerationMode::canonical : EnumerationMode::all;
      options.threads = s.threads;
      options.budget = budget;
      enumerate(lo, hi, options, [&](const VPalindromeHit& h) {
        if (emit.machine()) emit.record(h);
        else out << h.n << ' ' << h.reversal << ' ' << h.shared_v << '\n';
      });
    } else if (family_cmd->parsed()) {
      const Natural value = family == "nines" ? family_nines(k) : family_repeat18(k);
      const std::string name = "family_" + family;
      if (family_check) {
        const bool member = is_v_palindrome(value, 10, budget);
        if (emit.machine()) {
          emit.record(ScalarResult{name, std::to_string(k), value.str()});
          emit.record(ScalarResult{"is_v_palindrome", value.str(), member ? "true" : "false"});
        } else {
          out << value << ' ' << (member ? "true" : "false") << "\n";
        }
      } else if (emit.machine()) {
        emit.record(ScalarResult{name, std::to_string(k), value.str()});
      } else {
        out << value << "\n";
      }
    } else if (anchors_cmd->parsed()) {
      SearchOptions options;
      options.rounds = s.rounds;
      options.floor = floor;
      options.threads = s.threads;
      if (!checkpoint.empty()) options.checkpoint = checkpoint;
      const auto results = search_anchors(m_from, m_to, options);
      if (!emit.machine()) out << "m\tp_verdict\tq_verdict\tmeets_floor\tcandidate\n";
      for (const auto& r : results) {
        if (emit.machine()) {
          emit.record(r);
        } else {
          out << r.m << '\t' << verdict_text(r.p_verdict) << '\t' << verdict_text(r.q_verdict) << '\t'
              << (r.meets_floor ? "yes" : "no") << '\t' << (r.is_candidate ? "yes" : "no") << '\n';
        }
      }
    } else if (verify_cmd->parsed()) {
      VerifyOptions options;
      options.base = base;
      options.rounds = s.rounds;
      options.floor = floor;
      options.threads = s.threads;
      options.budget = budget;
      const VerificationReport report = verify_characterization(bound, options);
      if (emit.machine()) {
        emit.record(report);
      } else {
        out << "bound " << report.bound << "\n"
            << "brute_force_hits " << list_text(report.brute_force_hits) << "\n"
            << "characterization_hits " << list_text(report.characterization_hits) << "\n"
            << "consistent " << (report.consistent ? "true" : "false") << "\n";
      }
      if (!report.consistent) err << "vpal: brute force and characterization disagree\n";
    } else if (heuristic_cmd->parsed()) {
      const HeuristicReport report = expected_count(n_from, n_to, model_c);
      if (emit.machine()) {
        emit.record(report);
      } else {
        if (show_terms) {
          for (std::uint64_t n = report.n_start; n <= report.N; ++n) {
            out << n << ' ' << format_real(report.terms[n - report.n_start]) << ' '
                << format_real(envelope_term(n, report.C)) << '\n';
          }
        }
        out << "C " << format_real(report.C) << "\n"
            << "partial_sum " << format_real(report.partial_sum) << "\n"
            << "envelope_sum " << format_real(report.envelope_sum) << "\n"
            << "tail_bound " << format_real(report.tail_bound) << "\n";
      }
    } else if (export_cmd->parsed()) {
      std::vector<OutputRecord> records;
      if (input.empty()) {
        records = read_jsonl(in);
      } else {
        std::ifstream file(input);
        if (!file) throw DomainError("cannot open " + input);
        records = read_jsonl(file);
      }
      export_records(records, parse_export_format(export_format), out);
    }
  } catch (const BudgetExceeded& e) {
    err << "vpal: " << e.what() << "\n";
    return kExitBudget;
  } catch (const CheckpointCorrupt& e) {
    err << "vpal: " << e.what() << "\n";
    return kExitBudget;
  } catch (const DomainError& e) {
    err << "vpal: " << e.what() << "\n";
    return kExitDomain;
  } catch (const HeterogeneousRecords& e) {
    err << "vpal: " << e.what() << "\n";
    return kExitDomain;
  } catch (const Error& e) {
    err << "vpal: " << e.what() << "\n";
    return kExitBudget;
  }
  out.flush();
  return kExitOk;
}

}  // namespace vpal::cli
