#include "pnw/infinite.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "json.hpp"
#include "pnw/error.hpp"
#include "pnw/ops.hpp"

namespace pnw {

Rational::Rational(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

DensityProfile density_profile(const Word& w) {
  if (w.empty()) throw std::invalid_argument("density profile of the empty word is undefined");
  std::size_t best_ones = w[1];
  std::size_t best_len = 1;
  std::size_t ones = w[1];
  for (std::size_t i = 2; i <= w.size(); ++i) {
    ones += w[i];
    // Strict: ties keep the shorter prefix.
    if (static_cast<unsigned __int128>(ones) * best_len <
        static_cast<unsigned __int128>(best_ones) * i) {
      best_ones = ones;
      best_len = i;
    }
  }
  return {Rational(best_ones, best_len), best_len, best_ones};
}

namespace {
void require_extendable(const Word& w, const char* who) {
  if (w.empty() || w[w.size()] != 1) {
    throw PreconditionError(std::string(who) + ": seed '" + w.str() + "' must end with 1");
  }
  if (!is_prefix_normal(w)) {
    throw PreconditionError(std::string(who) + ": seed " + w.str() + " is not prefix normal");
  }
}
}  // namespace

Word flipext(const Word& w) {
  require_extendable(w, "flipext");
  std::vector<std::uint8_t> candidate(w.symbols().begin(), w.symbols().end());
  // w 0^{|w|} 1 is always prefix normal, so k <= |w|.
  for (std::size_t k = 0;; ++k) {
    candidate.push_back(1);
    if (suffix_limited_pn_check(candidate, candidate.size())) return Word(std::move(candidate));
    candidate.back() = 0;
  }
}

FlipExtStream::FlipExtStream(Word seed) : seed_(std::move(seed)) {
  require_extendable(seed_, "flipext stream");
  buf_.assign(seed_.symbols().begin(), seed_.symbols().end());
}

void FlipExtStream::extend_one() {
  buf_.push_back(1);
  if (!suffix_limited_pn_check(buf_, seed_.size())) buf_.back() = 0;
}

void FlipExtStream::ensure(std::size_t length) {
  while (buf_.size() < length) extend_one();
}

std::uint8_t FlipExtStream::next() { return at(++cursor_); }

std::uint8_t FlipExtStream::at(std::size_t i) {
  if (i == 0) throw std::out_of_range("stream positions start at 1");
  ensure(i);
  return buf_[i - 1];
}

Word FlipExtStream::prefix(std::size_t length) {
  ensure(length);
  return Word(std::vector<std::uint8_t>(buf_.begin(), buf_.begin() + length));
}

IotaFactorization iota_factorize(const Word& w, std::size_t iota) {
  if (iota == 0) throw std::invalid_argument("iota factorization needs iota >= 1");
  IotaFactorization out;
  const auto s = w.symbols();
  std::size_t pos = 0;
  for (; pos + iota <= s.size(); pos += iota) {
    out.blocks.emplace_back(std::vector<std::uint8_t>(s.begin() + pos, s.begin() + pos + iota));
  }
  out.tail = Word(std::vector<std::uint8_t>(s.begin() + pos, s.end()));
  return out;
}

std::optional<std::uint64_t> checked_binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    c = c * (n - i) / (i + 1);  // exact: c * (n - i) is divisible by i + 1
    if (c > UINT64_MAX) return std::nullopt;
  }
  return static_cast<std::uint64_t>(c);
}

namespace {
struct Bounds {
  std::uint64_t m;
  std::uint64_t preperiod;
};

Bounds preperiod_bounds(const Word& seed, const DensityProfile& dp) {
  const std::uint64_t iota = dp.iota;
  const std::uint64_t m = (seed.size() + iota - 1) / iota;
  const auto binom = checked_binomial(iota, dp.kappa);
  std::uint64_t bound = 0;
  if (!binom || __builtin_mul_overflow(*binom - 1, m, &bound) ||
      __builtin_mul_overflow(bound, iota, &bound)) {
    throw std::overflow_error("preperiod bound for seed " + seed.str() +
                              " does not fit in 64 bits; refusing an unbounded scan");
  }
  return {m, bound};
}
}  // namespace

std::uint64_t default_scan_cap(const Word& seed) {
  const DensityProfile dp = density_profile(seed);
  const Bounds b = preperiod_bounds(seed, dp);
  std::uint64_t tail = 0;
  std::uint64_t cap = 0;
  if (__builtin_mul_overflow(b.m + 2, std::uint64_t{dp.iota}, &tail) ||
      __builtin_add_overflow(std::max<std::uint64_t>(b.preperiod, seed.size()), tail, &cap)) {
    throw std::overflow_error("scan cap for seed " + seed.str() + " does not fit in 64 bits");
  }
  return cap;
}

ExtensionReport detect_period(const Word& seed, std::optional<std::uint64_t> scan_cap) {
  FlipExtStream stream(seed);  // validates the seed
  const DensityProfile dp = density_profile(seed);
  const Bounds bounds = preperiod_bounds(seed, dp);
  const std::uint64_t cap = scan_cap ? *scan_cap : default_scan_cap(seed);

  ExtensionReport report;
  report.seed = seed;
  report.delta = dp.delta;
  report.iota = dp.iota;
  report.kappa = dp.kappa;
  report.m_blocks = bounds.m;
  report.preperiod_bound = bounds.preperiod;

  const std::size_t iota = dp.iota;
  auto same_block = [&](std::size_t a, std::size_t b) {  // 1-based block indices
    const auto s = stream.symbols();
    return std::equal(s.begin() + (a - 1) * iota, s.begin() + a * iota, s.begin() + (b - 1) * iota);
  };

  // Blocks are the iota-grid cells ((b-1) iota, b iota]; the run must start
  // after |seed|.
  const std::size_t first_block = seed.size() / iota + 1;
  std::uint64_t run = 0;
  for (std::size_t b = first_block;; ++b) {
    if (static_cast<std::uint64_t>(b) * iota > cap) {
      stream.ensure(std::max<std::uint64_t>(cap, stream.generated()));
      report.scanned_length = stream.generated();
      report.scanned_prefix = stream.prefix(stream.generated());
      return report;
    }
    stream.ensure(b * iota);
    run = (b > first_block && same_block(b, b - 1)) ? run + 1 : 1;
    if (run == bounds.m + 1) {
      std::size_t start = (b - bounds.m - 1) * iota + 1;
      const auto s = stream.symbols();
      while (start > 1 && s[start - 2] == s[start - 2 + iota]) --start;
      report.preperiod = stream.prefix(start - 1);
      report.period = Word(std::vector<std::uint8_t>(s.begin() + (start - 1),
                                                     s.begin() + (start - 1) + iota));
      report.scanned_length = stream.generated();
      report.certified = true;
      break;
    }
  }

  auto& c = report.checks;
  c.length_ok = report.period.size() == dp.iota;
  c.weight_ok = report.period.ones() == dp.kappa;
  c.bound_ok = report.preperiod.size() <= bounds.preperiod;
  c.aligned_pn_ok = report.preperiod.size() % iota != 0 || is_prefix_normal(report.period);
  return report;
}

std::string report_to_json(const ExtensionReport& report) {
  nlohmann::ordered_json doc;
  doc["seed"] = report.seed.str();
  doc["delta"] = report.delta.str();
  doc["iota"] = report.iota;
  doc["kappa"] = report.kappa;
  doc["preperiod"] = report.preperiod.str();
  doc["period"] = report.period.str();
  doc["preperiod_bound"] = report.preperiod_bound;
  doc["scanned_length"] = report.scanned_length;
  doc["checks"] = {{"length_ok", report.checks.length_ok},
                   {"weight_ok", report.checks.weight_ok},
                   {"bound_ok", report.checks.bound_ok},
                   {"aligned_pn_ok", report.checks.aligned_pn_ok}};
  doc["certified"] = report.certified;
  if (!report.certified) {
    doc["error"] = "scan cap exceeded";
    doc["scanned_prefix"] = report.scanned_prefix.str();
  }
  return doc.dump();
}

bool verify_densest(const Word& seed, std::size_t n, std::size_t cap) {
  FlipExtStream stream(seed);
  if (n < seed.size()) {
    throw PreconditionError("verify_densest: length " + std::to_string(n) +
                            " is shorter than the seed");
  }
  const Word v = stream.prefix(n);
  for (const Word& z : oracle_enumerate(n, cap)) {
    if (!std::equal(seed.symbols().begin(), seed.symbols().end(), z.symbols().begin())) continue;
    std::size_t pv = 0;
    std::size_t pz = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      pv += v[i];
      pz += z[i];
      if (pv < pz) return false;
    }
  }
  return true;
}

}  // namespace pnw
