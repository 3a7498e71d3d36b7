#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "pnw/error.hpp"
#include "pnw/word.hpp"

namespace pnw {

inline constexpr std::size_t kDefaultGenerationCap = 40;

/// LEX visits the computation tree in-order (lexicographically ascending
/// output); GRAY visits it post-order (consecutive Hamming distance <= 3).
enum class Order : std::uint8_t { Lex, Gray };

std::string_view to_string(Order order) noexcept;

/// Walks the computation tree T(w) on PN(w): the left child of a node is its
/// bubble, the right child its flip at phi. One in-place buffer holds the
/// current node; the path from the root is an explicit stack, so each
/// advance() costs O(n) symbol operations.
class TraversalState {
 public:
  /// Throws PreconditionError unless root is prefix normal with |root|_1 >= 2.
  TraversalState(Word root, Order order);

  /// Moves to the next node in the chosen order. The first call positions
  /// the state on the first word. Returns false once the traversal is done.
  bool advance();

  /// The current node. Only meaningful after advance() returned true; the
  /// reference is invalidated by the next advance().
  const Word& current() const noexcept { return word_; }

  Order order() const noexcept { return order_; }
  bool done() const noexcept { return done_; }
  std::size_t depth() const noexcept { return path_.empty() ? 0 : path_.size() - 1; }
  std::size_t last_one() const noexcept { return r_; }
  std::size_t second_one() const noexcept { return second_; }
  /// phi of the current node.
  std::size_t phi() const noexcept { return path_.back().phi; }

  /// Symbol reads and writes performed so far (phi scans, bubbles, flips and
  /// their reversals).
  std::uint64_t work() const noexcept { return work_; }

 private:
  enum class Branch : std::uint8_t { Root, Bubble, Flip };
  struct Frame {
    Branch branch;
    std::size_t phi;
    std::size_t parent_r;  // restored when leaving a flip node
  };

  void start();
  std::size_t scan_phi();
  void descend_left();
  void push_flip(std::size_t j);
  void pop_bubble();
  void pop_flip();

  Word word_;
  Order order_;
  std::size_t n_ = 0;
  std::size_t r_ = 0;
  std::size_t second_ = 0;
  std::size_t ones_ = 0;
  std::vector<Frame> path_;
  bool started_ = false;
  bool done_ = false;
  std::uint64_t work_ = 0;
};

/// Advances and returns a copy of the next word, or nullopt when done.
std::optional<Word> next_word(TraversalState& state);

namespace detail {
inline std::uint64_t checked_increment(std::uint64_t count) {
  if (count == UINT64_MAX) throw std::overflow_error("visit counter overflow");
  return count + 1;
}
}  // namespace detail

/// Calls visit(const Word&) once for every word of PN(root) and returns the
/// number of visits. The word passed to visit is the traversal's internal
/// buffer and must not be retained.
template <class Visit>
std::uint64_t generate_pn(const Word& root, Order order, Visit&& visit) {
  TraversalState state(root, order);
  std::uint64_t count = 0;
  while (state.advance()) {
    visit(state.current());
    count = detail::checked_increment(count);
  }
  return count;
}

/// Every prefix normal word of length n: 0^n, 10^{n-1}, then PN(110^{n-2}).
template <class Visit>
std::uint64_t bubble_flip_all(std::size_t n, Order order, Visit&& visit) {
  if (n == 0) {
    visit(Word());
    return 1;
  }
  Word w(n);
  visit(w);
  w.set(1, 1);
  visit(w);
  if (n == 1) return 2;
  w.set(2, 1);
  return 2 + generate_pn(w, order, visit);
}

/// |L_n|. Throws CapExceeded if n > cap.
std::uint64_t count_pn(std::size_t n, std::size_t cap = kDefaultGenerationCap);

/// Input range over PN(root) that yields copies of each word.
class PnRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Word;
    using difference_type = std::ptrdiff_t;
    using pointer = const Word*;
    using reference = const Word&;

    iterator() = default;
    explicit iterator(TraversalState* state) : state_(state) { fetch(); }

    reference operator*() const { return value_; }
    pointer operator->() const { return &value_; }
    iterator& operator++() {
      fetch();
      return *this;
    }
    void operator++(int) { fetch(); }
    friend bool operator==(const iterator& a, const iterator& b) { return a.state_ == b.state_; }

   private:
    void fetch() {
      if (state_ && state_->advance()) {
        value_ = state_->current();
      } else {
        state_ = nullptr;
      }
    }
    TraversalState* state_ = nullptr;
    Word value_;
  };

  PnRange(Word root, Order order) : state_(std::move(root), order) {}
  iterator begin() { return iterator(&state_); }
  iterator end() { return iterator(); }

 private:
  TraversalState state_;
};

}  // namespace pnw
