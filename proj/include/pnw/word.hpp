#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pnw {

inline constexpr std::size_t kDefaultOracleCap = 20;

/// A finite binary word w_1 ... w_n.
///
/// Positions are 1-based in every public accessor. Storage is one byte per
/// symbol so that symbol access is O(1) and in-place edits are cheap.
class Word {
 public:
  Word() = default;

  /// The all-zero word of length n.
  explicit Word(std::size_t n) : bits_(n, 0) {}

  /// Throws std::invalid_argument if any symbol is not 0 or 1.
  explicit Word(std::vector<std::uint8_t> symbols);

  /// Parses an ASCII '0'/'1' string, position 1 first.
  static Word parse(std::string_view text);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }

  // 1-based, unchecked.
  std::uint8_t operator[](std::size_t i) const noexcept { return bits_[i - 1]; }

  // 1-based, throws std::out_of_range.
  std::uint8_t at(std::size_t i) const;

  // 1-based, unchecked. Mutation is reserved for in-place traversals; the
  // free operations in ops.hpp never modify their inputs.
  void set(std::size_t i, std::uint8_t bit) noexcept { bits_[i - 1] = bit; }

  void push_back(std::uint8_t bit);

  /// Zero-based view of the underlying symbols.
  std::span<const std::uint8_t> symbols() const noexcept { return bits_; }

  std::size_t ones() const noexcept;
  std::string str() const;

  /// Lexicographic order (the symbol-wise order of std::vector).
  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// 1^s 0^t, the leading run of ones and the run of zeros after it.
struct CritPrefix {
  std::size_t s = 0;
  std::size_t t = 0;

  std::size_t length() const noexcept { return s + t; }
  friend bool operator==(const CritPrefix&, const CritPrefix&) = default;
};

/// P(i): number of ones among w_1 ... w_i. Throws std::out_of_range for i > |w|.
std::size_t rank1(const Word& w, std::size_t i);

/// Reference prefix-normality test: every factor u has |u|_1 <= P(|u|).
/// Direct O(n^2) double loop; this is the oracle of record.
bool is_prefix_normal(const Word& w);

/// Throws std::invalid_argument on the empty word.
CritPrefix critical_prefix(const Word& w);

/// Position of the rightmost 1, or nullopt for words without a 1.
std::optional<std::size_t> last_one(const Word& w) noexcept;

/// Throws std::invalid_argument on a length mismatch.
std::size_t hamming(const Word& u, const Word& v);

/// All prefix normal words of length n, lexicographically ascending, obtained
/// by filtering {0,1}^n through is_prefix_normal. Throws CapExceeded if n > cap.
std::vector<Word> oracle_enumerate(std::size_t n, std::size_t cap = kDefaultOracleCap);

}  // namespace pnw
