#include "cli.hpp"

#include <cstdlib>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pnw/critstats.hpp"
#include "pnw/error.hpp"
#include "pnw/generator.hpp"
#include "pnw/infinite.hpp"
#include "pnw/ops.hpp"
#include "pnw/word.hpp"

namespace pnw::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

enum class Format { Plain, Csv, Json };

const std::map<std::string, Format> kFormats{
    {"plain", Format::Plain}, {"csv", Format::Csv}, {"json", Format::Json}};
const std::map<std::string, Order> kOrders{{"lex", Order::Lex}, {"gray", Order::Gray}};

std::size_t env_cap(const char* name, std::size_t fallback) {
  if (const char* value = std::getenv(name)) {
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(value, &end, 10);
    if (end != value && *end == '\0') return static_cast<std::size_t>(parsed);
  }
  return fallback;
}

// Thrown by command handlers to leave with a specific exit status.
struct Exit {
  int code;
  std::string message;
};

void require_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) {
    throw Exit{kUsage, std::string(what) + " of length " + std::to_string(n) +
                           " refused: cap is " + std::to_string(cap) +
                           " (raise it with --cap)"};
  }
}

Word parse_word(const std::string& text) {
  try {
    return Word::parse(text);
  } catch (const std::invalid_argument& e) {
    throw Exit{kUsage, e.what()};
  }
}

// Streams words one per line into a reusable buffer.
class WordWriter {
 public:
  WordWriter(std::ostream& out, Format format) : out_(out), format_(format) {}

  void operator()(const Word& w) {
    if (format_ == Format::Json) {
      line_ += first_ ? "\"" : ",\"";
    }
    for (auto b : w.symbols()) line_.push_back(static_cast<char>('0' + b));
    if (format_ == Format::Json) {
      line_.push_back('"');
    } else {
      line_.push_back('\n');
    }
    first_ = false;
    if (line_.size() >= (1u << 16)) flush();
  }

  void flush() {
    out_ << line_;
    line_.clear();
  }

 private:
  std::ostream& out_;
  Format format_;
  std::string line_;
  bool first_ = true;
};

void print_count(std::ostream& out, Format format, ordered_json doc, std::uint64_t count) {
  if (format == Format::Json) {
    doc["count"] = count;
    out << doc.dump() << '\n';
  } else {
    out << count << '\n';
  }
}

template <class Generate>
void emit_words(std::ostream& out, Format format, ordered_json header, bool count_only,
                Generate&& generate) {
  if (count_only) {
    print_count(out, format, std::move(header), generate([](const Word&) {}));
    return;
  }
  if (format == Format::Csv) out << "word\n";
  if (format == Format::Json) {
    std::string head = header.dump();
    head.pop_back();  // reopen the object
    out << head << ",\"words\":[";
  }
  WordWriter writer(out, format);
  const std::uint64_t count = generate([&](const Word& w) { writer(w); });
  writer.flush();
  if (format == Format::Json) out << "],\"count\":" << count << "}\n";
}

ordered_json check_report(const Word& w) {
  ordered_json doc;
  const bool pn = is_prefix_normal(w);
  doc["is_prefix_normal"] = pn;
  const auto r = pnw::last_one(w);
  doc["r"] = r ? ordered_json(*r) : ordered_json(nullptr);
  if (pn && r) doc["phi"] = compute_phi(w).value;
  const CritPrefix cp = critical_prefix(w);
  doc["critical_prefix"] = {{"s", cp.s}, {"t", cp.t}};
  const DensityProfile dp = density_profile(w);
  doc["delta"] = dp.delta.str();
  doc["iota"] = dp.iota;
  doc["kappa"] = dp.kappa;
  return doc;
}

std::string table_to_plain(const CountsTable& table) {
  std::string csv = table_to_csv(table);
  for (char& c : csv) {
    if (c == ',') c = '\t';
  }
  return csv;
}

struct OracleOutcome {
  bool pass = true;
};

void oracle_line(std::ostream& out, OracleOutcome& outcome, bool ok, const std::string& what) {
  out << (ok ? "PASS " : "FAIL ") << what << '\n';
  outcome.pass = outcome.pass && ok;
}

int run_oracle(std::size_t n, std::size_t cap, std::ostream& out) {
  const std::vector<Word> expected = oracle_enumerate(n, cap);
  OracleOutcome outcome;
  for (Order order : {Order::Lex, Order::Gray}) {
    std::vector<Word> got;
    bubble_flip_all(n, order, [&](const Word& w) { got.push_back(w); });
    const std::string tag = std::string(to_string(order)) + " n=" + std::to_string(n);

    std::set<Word> distinct(got.begin(), got.end());
    oracle_line(out, outcome, distinct.size() == got.size(), tag + " duplicate-free");
    oracle_line(out, outcome,
                std::vector<Word>(distinct.begin(), distinct.end()) == expected,
                tag + " set equals brute force (" + std::to_string(expected.size()) + " words)");
    if (order == Order::Lex) {
      bool ascending = true;
      for (std::size_t i = 1; i < got.size(); ++i) ascending = ascending && got[i - 1] < got[i];
      oracle_line(out, outcome, ascending, tag + " strictly ascending");
    } else {
      std::size_t worst = 0;
      for (std::size_t i = 1; i < got.size(); ++i) {
        worst = std::max(worst, hamming(got[i - 1], got[i]));
      }
      const std::size_t closure = got.empty() ? 0 : hamming(got.back(), got.front());
      oracle_line(out, outcome, worst <= 3 && closure <= 3,
                  tag + " hamming <= 3 (max " + std::to_string(worst) + ", cyclic " +
                      std::to_string(closure) + ")");
    }
  }
  out << (outcome.pass ? "PASS" : "FAIL") << '\n';
  return outcome.pass ? kOk : kFalse;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Prefix normal words: Bubble-Flip generation, critical prefixes, flip extensions"};
  app.require_subcommand(1);

  std::size_t gen_cap = env_cap("PNW_GEN_CAP", kDefaultGenerationCap);
  std::size_t oracle_cap = env_cap("PNW_ORACLE_CAP", kDefaultOracleCap);

  std::size_t n = 0;
  std::size_t s = 1;
  std::size_t t = 0;
  std::size_t s_max = 7;
  std::size_t t_max = 0;
  unsigned jobs = 1;
  bool count_only = false;
  bool detect = false;
  std::size_t steps = 1;
  std::uint64_t scan_cap = 0;
  std::string word_text;
  std::string order_name = "lex";
  std::string format_name = "plain";

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "plain, csv or json")
        ->check(CLI::IsMember(kFormats, CLI::ignore_case));
  };
  auto add_order = [&](CLI::App* cmd) {
    cmd->add_option("--order", order_name, "lex (in-order) or gray (post-order)")
        ->check(CLI::IsMember(kOrders, CLI::ignore_case));
  };

  auto* gen = app.add_subcommand("gen", "List all prefix normal words of length n");
  gen->add_option("-n", n, "word length")->required();
  add_order(gen);
  gen->add_flag("--count-only", count_only, "print only |L_n|");
  add_format(gen);
  gen->add_option("--cap", gen_cap, "maximum n (env PNW_GEN_CAP)")->capture_default_str();

  auto* crit = app.add_subcommand("critset", "List words with critical prefix 1^s 0^t");
  crit->add_option("-n", n, "word length")->required();
  crit->add_option("-s", s, "leading ones")->required();
  crit->add_option("-t", t, "following zeros")->required();
  crit->add_flag("--count-only", count_only, "print only the set size");
  add_order(crit);
  add_format(crit);
  crit->add_option("--cap", gen_cap, "maximum n (env PNW_GEN_CAP)")->capture_default_str();

  auto* table = app.add_subcommand("table", "CritSet size matrix, rows s, columns t");
  table->add_option("-n", n, "word length")->required();
  table->add_option("--s-max", s_max, "largest s")->default_val(7);
  table->add_option("--t-max", t_max, "largest t (default n)");
  table->add_option("--jobs,-j", jobs, "worker threads")->default_val(1);
  add_format(table);
  table->add_option("--cap", gen_cap, "maximum n (env PNW_GEN_CAP)")->capture_default_str();

  auto* hist = app.add_subcommand("hist", "Critical prefix length histogram over L_n");
  hist->add_option("-n", n, "word length")->required();
  add_format(hist);
  hist->add_option("--cap", gen_cap, "maximum n (env PNW_GEN_CAP)")->capture_default_str();

  auto* check = app.add_subcommand("check", "Report prefix normality, phi, critical prefix, density");
  check->add_option("word", word_text, "binary word")->required();

  auto* extend = app.add_subcommand("extend", "Flip-extend a prefix normal word ending in 1");
  extend->add_option("word", word_text, "seed word")->required();
  extend->add_option("--steps", steps, "number of flipext applications")->default_val(1);
  extend->add_flag("--detect", detect, "certify the ultimately periodic limit");
  extend->add_option("--scan-cap", scan_cap, "symbols to scan before giving up");

  auto* oracle = app.add_subcommand("oracle", "Compare the generator against brute force");
  oracle->add_option("-n", n, "word length")->required();
  oracle->add_option("--cap", oracle_cap, "maximum n (env PNW_ORACLE_CAP)")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  const Order order = kOrders.at(CLI::detail::to_lower(order_name));
  const Format format = kFormats.at(CLI::detail::to_lower(format_name));

  try {
    if (gen->parsed()) {
      require_cap(n, gen_cap, "enumeration");
      ordered_json header = {{"n", n}, {"order", to_string(order)}};
      emit_words(out, format, header, count_only,
                 [&](auto&& visit) { return bubble_flip_all(n, order, visit); });
      return kOk;
    }
    if (crit->parsed()) {
      require_cap(n, gen_cap, "enumeration");
      if (s == 0) throw Exit{kUsage, "critset needs s >= 1 (only 0^n has s = 0)"};
      ordered_json header = {{"n", n}, {"s", s}, {"t", t}, {"order", to_string(order)}};
      emit_words(out, format, header, count_only, [&](auto&& visit) {
        return critset(CritSetQuery{s, t, n}, order, visit);
      });
      return kOk;
    }
    if (table->parsed()) {
      require_cap(n, gen_cap, "table");
      if (s_max == 0) throw Exit{kUsage, "--s-max must be at least 1"};
      if (table->count("--t-max") == 0) t_max = n;
      const CountsTable counts = critset_table(n, s_max, t_max, jobs);
      out << (format == Format::Json  ? table_to_json(counts)
              : format == Format::Csv ? table_to_csv(counts)
                                      : table_to_plain(counts));
      return kOk;
    }
    if (hist->parsed()) {
      require_cap(n, gen_cap, "histogram");
      const Histogram h = critprefix_histogram(n, gen_cap);
      if (format == Format::Json) {
        out << histogram_to_json(h);
      } else {
        std::string csv = histogram_to_csv(h);
        if (format == Format::Plain) csv.erase(0, csv.find('\n') + 1);
        out << csv;
      }
      return kOk;
    }
    if (check->parsed()) {
      const Word w = parse_word(word_text);
      if (w.empty()) throw Exit{kUsage, "check needs a nonempty word"};
      const ordered_json doc = check_report(w);
      out << doc.dump() << '\n';
      return doc["is_prefix_normal"].get<bool>() ? kOk : kFalse;
    }
    if (extend->parsed()) {
      const Word w = parse_word(word_text);
      if (detect) {
        std::optional<std::uint64_t> cap_opt;
        if (extend->count("--scan-cap") > 0) cap_opt = scan_cap;
        const ExtensionReport report = detect_period(w, cap_opt);
        out << report_to_json(report) << '\n';
        if (!report.certified) {
          err << "scan cap reached after " << report.scanned_length
              << " symbols without a periodicity certificate\n";
          return kResourceCap;
        }
        return kOk;
      }
      Word v = w;
      for (std::size_t i = 0; i < steps; ++i) v = flipext(v);
      if (steps == 0) flipext(w);  // still validates the seed
      out << v.str() << '\n';
      return kOk;
    }
    if (oracle->parsed()) {
      require_cap(n, oracle_cap, "oracle comparison");
      return run_oracle(n, oracle_cap, out);
    }
  } catch (const Exit& e) {
    err << "error: " << e.message << '\n';
    return e.code;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kResourceCap;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace pnw::cli
