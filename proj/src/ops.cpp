#include "pnw/ops.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "pnw/error.hpp"

namespace pnw {

Word flip(const Word& w, std::size_t j) {
  if (j < 1 || j > w.size()) {
    throw std::out_of_range("flip position " + std::to_string(j) + " outside [1, " +
                            std::to_string(w.size()) + "]");
  }
  Word out = w;
  out.set(j, static_cast<std::uint8_t>(1 - w[j]));
  return out;
}

Word bubble(const Word& w) {
  const auto r = last_one(w);
  if (!r) throw PreconditionError("bubble: word " + w.str() + " has no 1");
  if (*r == w.size()) throw PreconditionError("bubble: word " + w.str() + " ends with 1");
  Word out = w;
  out.set(*r, 0);
  out.set(*r + 1, 1);
  return out;
}

std::size_t phi_scan(std::span<const std::uint8_t> symbols, std::size_t r,
                     std::uint64_t* reads) noexcept {
  const std::size_t n = symbols.size();
  auto sym = [&](std::size_t i) -> std::size_t {  // 1-based
    if (reads) ++*reads;
    return symbols[i - 1];
  };
  std::size_t f = 0;  // ones in w_1..w_i
  std::size_t g = 0;  // ones in w_{r-i+1}..w_r
  std::size_t longest = 0;
  std::size_t i = 1;
  while (i < r) {
    f += sym(i);
    g += sym(r - i + 1);
    if (f == g) {
      // Prefix and suffix of length i balance; measure the zero run after the
      // prefix. Skipped positions cannot break the balance in a prefix
      // normal word, so g needs no catching up.
      std::size_t run = 0;
      ++i;
      while (i < r && sym(i) == 0) {
        ++run;
        ++i;
      }
      longest = std::max(longest, run);
    } else {
      ++i;
    }
  }
  return std::min(r + longest + 1, n + 1);
}

PhiValue compute_phi(const Word& w) {
  const auto r = last_one(w);
  if (!r) throw PreconditionError("phi: word " + w.str() + " has no 1");
  if (!is_prefix_normal(w)) throw PreconditionError("phi: word " + w.str() + " is not prefix normal");
  return {phi_scan(w.symbols(), *r), w.size()};
}

bool flip_is_pn(const Word& w, std::size_t j) {
  const auto r = last_one(w);
  if (!r) throw PreconditionError("flip_is_pn: word " + w.str() + " has no 1");
  if (j <= *r || j > w.size()) {
    throw PreconditionError("flip_is_pn: position " + std::to_string(j) + " must lie in (" +
                            std::to_string(*r) + ", " + std::to_string(w.size()) + "]");
  }
  if (!is_prefix_normal(w)) {
    throw PreconditionError("flip_is_pn: word " + w.str() + " is not prefix normal");
  }
  const std::size_t gap = j - *r;
  std::vector<std::size_t> prefix(w.size() + 1, 0);
  for (std::size_t i = 1; i <= w.size(); ++i) prefix[i] = prefix[i - 1] + w[i];
  for (std::size_t k = 1; k < *r; ++k) {
    const std::size_t suffix_ones = prefix[*r] - prefix[*r - k];
    const bool zeros_follow = prefix[k + gap] == prefix[k];
    if (suffix_ones == prefix[k] && zeros_follow) return false;
  }
  return true;
}

PhiValue phi_of_bubble(const Word& w, PhiValue phi_w) {
  const std::size_t n = w.size();
  const auto r = last_one(w);
  const std::size_t ones = w.ones();
  if (ones < 2) throw PreconditionError("phi_of_bubble: word " + w.str() + " needs at least two 1s");
  if (*r == n) throw PreconditionError("phi_of_bubble: word " + w.str() + " ends with 1");
  const PhiValue expected = compute_phi(w);  // also checks prefix normality
  if (phi_w != expected) {
    throw PreconditionError("phi_of_bubble: supplied phi " + std::to_string(phi_w.value) +
                            " does not match phi(" + w.str() + ") = " +
                            std::to_string(expected.value));
  }
  std::size_t second = 0;
  for (std::size_t i = 1, seen = 0; i <= n; ++i) {
    if (w[i] == 1 && ++seen == 2) {
      second = i;
      break;
    }
  }
  return {phi_after_bubble(n, ones, *r, second, phi_w.value), n};
}

bool suffix_limited_pn_check(std::span<const std::uint8_t> v, std::size_t limit) noexcept {
  const std::size_t n = v.size();
  const std::size_t upto = std::min(limit, n);
  std::size_t suffix = 0;
  std::size_t prefix = 0;
  for (std::size_t t = 1; t <= upto; ++t) {
    suffix += v[n - t];
    prefix += v[t - 1];
    if (suffix > prefix) return false;
  }
  return true;
}

}  // namespace pnw
