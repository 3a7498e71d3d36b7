#include "pnw/word.hpp"

#include <algorithm>
#include <stdexcept>

#include "pnw/error.hpp"

namespace pnw {

Word::Word(std::vector<std::uint8_t> symbols) : bits_(std::move(symbols)) {
  for (auto b : bits_) {
    if (b > 1) throw std::invalid_argument("word symbols must be 0 or 1");
  }
}

Word Word::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("malformed word '" + std::string(text) +
                                  "': expected only '0' and '1'");
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return Word(std::move(bits));
}

std::uint8_t Word::at(std::size_t i) const {
  if (i < 1 || i > bits_.size()) {
    throw std::out_of_range("position " + std::to_string(i) + " outside [1, " +
                            std::to_string(bits_.size()) + "]");
  }
  return bits_[i - 1];
}

void Word::push_back(std::uint8_t bit) {
  if (bit > 1) throw std::invalid_argument("word symbols must be 0 or 1");
  bits_.push_back(bit);
}

std::size_t Word::ones() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::string Word::str() const {
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) out[i] = static_cast<char>('0' + bits_[i]);
  return out;
}

std::size_t rank1(const Word& w, std::size_t i) {
  if (i > w.size()) {
    throw std::out_of_range("rank1 index " + std::to_string(i) + " exceeds length " +
                            std::to_string(w.size()));
  }
  std::size_t count = 0;
  for (std::size_t k = 1; k <= i; ++k) count += w[k];
  return count;
}

bool is_prefix_normal(const Word& w) {
  const std::size_t n = w.size();
  std::vector<std::size_t> prefix(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) prefix[i] = prefix[i - 1] + w[i];
  for (std::size_t len = 1; len <= n; ++len) {
    for (std::size_t start = 2; start + len - 1 <= n; ++start) {
      if (prefix[start + len - 1] - prefix[start - 1] > prefix[len]) return false;
    }
  }
  return true;
}

CritPrefix critical_prefix(const Word& w) {
  if (w.empty()) throw std::invalid_argument("critical prefix of the empty word is undefined");
  CritPrefix cp;
  std::size_t i = 1;
  while (i <= w.size() && w[i] == 1) {
    ++cp.s;
    ++i;
  }
  while (i <= w.size() && w[i] == 0) {
    ++cp.t;
    ++i;
  }
  return cp;
}

std::optional<std::size_t> last_one(const Word& w) noexcept {
  for (std::size_t i = w.size(); i >= 1; --i) {
    if (w[i] == 1) return i;
  }
  return std::nullopt;
}

std::size_t hamming(const Word& u, const Word& v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("hamming distance needs equal lengths (" +
                                std::to_string(u.size()) + " vs " + std::to_string(v.size()) +
                                ")");
  }
  std::size_t d = 0;
  for (std::size_t i = 1; i <= u.size(); ++i) d += (u[i] != v[i]);
  return d;
}

std::vector<Word> oracle_enumerate(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw CapExceeded("oracle enumeration of length " + std::to_string(n) +
                      " refused: cap is " + std::to_string(cap) + " (2^n candidates)");
  }
  std::vector<Word> out;
  const std::uint64_t total = std::uint64_t{1} << n;
  Word w(n);
  // Counting from 0 with position 1 as the most significant bit visits
  // {0,1}^n in lexicographic order.
  for (std::uint64_t code = 0; code < total; ++code) {
    for (std::size_t i = 1; i <= n; ++i) {
      w.set(i, static_cast<std::uint8_t>((code >> (n - i)) & 1u));
    }
    if (is_prefix_normal(w)) out.push_back(w);
  }
  return out;
}

}  // namespace pnw
