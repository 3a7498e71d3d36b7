#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "pnw/word.hpp"

namespace pnw {

/// phi(w): the leftmost position j > r(w) at which a 1 can be placed while
/// keeping w prefix normal, or n + 1 when no such position exists.
struct PhiValue {
  std::size_t value = 0;
  std::size_t n = 0;

  bool flippable() const noexcept { return value <= n; }
  friend bool operator==(const PhiValue&, const PhiValue&) = default;
};

/// Complement symbol j. Throws std::out_of_range unless 1 <= j <= |w|.
Word flip(const Word& w, std::size_t j);

/// Shift the rightmost 1 one position to the right.
/// Throws PreconditionError for words without a 1 or with r(w) = n.
Word bubble(const Word& w);

/// Checked phi. Throws PreconditionError if w is all-zero or not prefix normal.
PhiValue compute_phi(const Word& w);

/// The unchecked two-counter scan behind compute_phi. `symbols` is the
/// zero-based storage of a prefix normal word whose last 1 sits at 1-based
/// position r >= 1. Reads at most r - 1 symbols; each read is added to
/// `*reads` when it is non-null.
std::size_t phi_scan(std::span<const std::uint8_t> symbols, std::size_t r,
                     std::uint64_t* reads = nullptr) noexcept;

/// Characterization of legal flips after the last 1: flip(w, j) is prefix
/// normal unless some k < r has a k-suffix of w_1..w_r with P(k) ones followed
/// (in the prefix) by j - r zeros after position k.
/// Throws PreconditionError unless w is prefix normal and r(w) < j <= |w|.
bool flip_is_pn(const Word& w, std::size_t j);

/// phi(bubble(w)) in O(1) from r(w), the second leftmost 1, |w|_1 and phi(w).
/// Requires ones >= 2 and r < n.
constexpr std::size_t phi_after_bubble(std::size_t n, std::size_t ones, std::size_t r,
                                       std::size_t second_one, std::size_t phi) noexcept {
  const std::size_t cap = n + 1;
  if (ones == 2) return phi + 2 < cap ? phi + 2 : cap;
  // |w_1 ... w_{phi - r}|_1 > 1  <=>  the second 1 sits at or before phi - r.
  if (second_one + r <= phi) return phi;
  return phi + 1 < cap ? phi + 1 : cap;
}

/// Checked form of phi_after_bubble. Throws PreconditionError unless w is
/// prefix normal, |w|_1 >= 2, r(w) < n and phi_w equals compute_phi(w).
PhiValue phi_of_bubble(const Word& w, PhiValue phi_w);

/// True iff every suffix of v of length t <= limit satisfies the prefix
/// normal condition. For v = (flip-extension of a prefix normal seed) 0^k 1
/// and limit >= |seed| this decides prefix normality of v in O(limit).
bool suffix_limited_pn_check(std::span<const std::uint8_t> v, std::size_t limit) noexcept;

inline bool suffix_limited_pn_check(const Word& v, std::size_t limit) noexcept {
  return suffix_limited_pn_check(v.symbols(), limit);
}

}  // namespace pnw
