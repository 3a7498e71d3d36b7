#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pnw/word.hpp"

namespace pnw {

/// Non-negative fraction kept in lowest terms; ordering is exact.
class Rational {
 public:
  /// Throws std::invalid_argument if den is 0.
  Rational(std::uint64_t num, std::uint64_t den);

  std::uint64_t num() const noexcept { return num_; }
  std::uint64_t den() const noexcept { return den_; }
  std::string str() const;  // "p/q"

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    using wide = unsigned __int128;
    return static_cast<wide>(a.num_) * b.den_ <=> static_cast<wide>(b.num_) * a.den_;
  }
  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  std::uint64_t num_;
  std::uint64_t den_;
};

/// Minimum prefix density delta = P(iota)/iota, where iota is the shortest
/// prefix attaining it and kappa = P(iota).
struct DensityProfile {
  Rational delta{0, 1};
  std::size_t iota = 0;
  std::size_t kappa = 0;

  friend bool operator==(const DensityProfile&, const DensityProfile&) = default;
};

/// Throws std::invalid_argument on the empty word.
DensityProfile density_profile(const Word& w);

/// w 0^k 1 for the smallest k keeping the word prefix normal. Every suffix of
/// the candidate is checked. Throws PreconditionError unless w is prefix
/// normal and ends with 1.
Word flipext(const Word& w);

/// Lazily produces flipext^omega(seed) one symbol at a time. Each new symbol
/// is a 1 exactly when the suffixes of length <= |seed| still satisfy the
/// prefix normal condition, which makes every produced prefix agree with the
/// corresponding flipext iterate.
class FlipExtStream {
 public:
  /// Throws PreconditionError unless seed is prefix normal and ends with 1.
  explicit FlipExtStream(Word seed);

  /// Next symbol of the infinite word (starting with position 1).
  std::uint8_t next();

  /// Symbol at 1-based position i, generating as far as needed.
  std::uint8_t at(std::size_t i);

  Word prefix(std::size_t length);

  /// Generates symbols until at least `length` are available.
  void ensure(std::size_t length);

  std::size_t generated() const noexcept { return buf_.size(); }
  std::span<const std::uint8_t> symbols() const noexcept { return buf_; }
  const Word& seed() const noexcept { return seed_; }

 private:
  void extend_one();

  Word seed_;
  std::vector<std::uint8_t> buf_;
  std::size_t cursor_ = 0;
};

struct IotaFactorization {
  std::vector<Word> blocks;
  Word tail;
};

/// Cuts w into iota-length blocks plus a shorter tail.
/// Throws std::invalid_argument if iota is 0.
IotaFactorization iota_factorize(const Word& w, std::size_t iota);

/// Ultimately periodic decomposition u x^omega of flipext^omega(seed).
struct ExtensionReport {
  Word seed;
  Rational delta{0, 1};
  std::size_t iota = 0;
  std::size_t kappa = 0;
  Word preperiod;
  Word period;
  std::uint64_t m_blocks = 0;         // ceil(|seed| / iota)
  std::uint64_t preperiod_bound = 0;  // (C(iota, kappa) - 1) * m_blocks * iota
  std::uint64_t scanned_length = 0;
  bool certified = false;
  Word scanned_prefix;  // only filled when the scan cap was hit

  struct Checks {
    bool length_ok = false;      // |x| = iota
    bool weight_ok = false;      // |x|_1 = kappa
    bool bound_ok = false;       // |u| <= preperiod_bound
    bool aligned_pn_ok = false;  // |u| = 0 mod iota implies x prefix normal
    bool all() const noexcept { return length_ok && weight_ok && bound_ok && aligned_pn_ok; }
  } checks;
};

/// C(iota, kappa) in checked 64-bit arithmetic; nullopt on overflow.
std::optional<std::uint64_t> checked_binomial(std::uint64_t n, std::uint64_t k) noexcept;

/// Smallest scan length that the periodicity certificate can need:
/// max(bound, |seed|) + (m + 2) * iota. Throws std::overflow_error if it does
/// not fit in 64 bits.
std::uint64_t default_scan_cap(const Word& seed);

/// Generates flipext^omega(seed) and cuts it into iota-blocks. Periodicity is
/// certified once one block value repeats m + 1 times in a row, the run
/// starting after position |seed|. The preperiod is then shortened as far as
/// the period allows, so x is never a suffix of u.
///
/// When `scan_cap` symbols are produced without a certificate the report
/// comes back with certified = false and the scanned prefix attached.
/// Throws PreconditionError for invalid seeds and std::overflow_error when
/// the preperiod bound does not fit in 64 bits.
ExtensionReport detect_period(const Word& seed, std::optional<std::uint64_t> scan_cap = {});

/// Serializes a report as a single-line JSON object.
std::string report_to_json(const ExtensionReport& report);

/// True iff for every z in L_n having seed as a prefix, P_v(i) >= P_z(i) for
/// all i <= n, with v = flipext^omega(seed). Throws PreconditionError for
/// invalid seeds or n < |seed|, CapExceeded when n > cap.
bool verify_densest(const Word& seed, std::size_t n, std::size_t cap = kDefaultOracleCap);

}  // namespace pnw
