#include "pnw/generator.hpp"

#include <cassert>
#include <string>

#include "pnw/ops.hpp"

namespace pnw {

std::string_view to_string(Order order) noexcept {
  return order == Order::Lex ? "lex" : "gray";
}

TraversalState::TraversalState(Word root, Order order)
    : word_(std::move(root)), order_(order), n_(word_.size()) {
  ones_ = word_.ones();
  if (ones_ < 2) {
    throw PreconditionError("traversal root " + word_.str() + " needs at least two 1s");
  }
  if (!is_prefix_normal(word_)) {
    throw PreconditionError("traversal root " + word_.str() + " is not prefix normal");
  }
  for (std::size_t i = 1, seen = 0; i <= n_; ++i) {
    if (word_[i] == 1) {
      r_ = i;
      if (++seen == 2) second_ = i;
    }
  }
  path_.reserve(n_ + 1);
}

std::size_t TraversalState::scan_phi() { return phi_scan(word_.symbols(), r_, &work_); }

void TraversalState::start() {
  path_.push_back({Branch::Root, scan_phi(), 0});
  descend_left();
}

// Bubble down to the leftmost descendant. phi of each bubble child follows
// from its parent's phi in O(1).
void TraversalState::descend_left() {
  while (r_ < n_) {
    const std::size_t child_phi = phi_after_bubble(n_, ones_, r_, second_, path_.back().phi);
    word_.set(r_, 0);
    word_.set(r_ + 1, 1);
    ++r_;
    if (ones_ == 2) second_ = r_;
    work_ += 2;
    assert(child_phi == phi_scan(word_.symbols(), r_));
    path_.push_back({Branch::Bubble, child_phi, 0});
  }
}

void TraversalState::push_flip(std::size_t j) {
  const std::size_t parent_r = r_;
  word_.set(j, 1);
  r_ = j;
  ++ones_;  // second_ is unchanged: the node already had two 1s
  work_ += 1;
  path_.push_back({Branch::Flip, scan_phi(), parent_r});
}

void TraversalState::pop_bubble() {
  word_.set(r_, 0);
  word_.set(r_ - 1, 1);
  --r_;
  if (ones_ == 2) second_ = r_;
  work_ += 2;
  path_.pop_back();
}

void TraversalState::pop_flip() {
  word_.set(r_, 0);
  r_ = path_.back().parent_r;
  --ones_;
  work_ += 1;
  path_.pop_back();
}

bool TraversalState::advance() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    start();
    return true;
  }

  if (order_ == Order::Lex) {
    // In-order successor: leftmost descendant of the right child if there
    // is one, otherwise the parent of the first left child on the way up.
    if (path_.back().phi <= n_) {
      push_flip(path_.back().phi);
      descend_left();
      return true;
    }
    while (path_.back().branch == Branch::Flip) pop_flip();
    if (path_.back().branch == Branch::Root) {
      done_ = true;
      return false;
    }
    pop_bubble();
    return true;
  }

  // Post-order successor.
  switch (path_.back().branch) {
    case Branch::Root:
      done_ = true;
      return false;
    case Branch::Flip:
      pop_flip();
      return true;
    case Branch::Bubble:
      pop_bubble();
      if (path_.back().phi <= n_) {
        push_flip(path_.back().phi);
        descend_left();
      }
      return true;
  }
  return false;
}

std::optional<Word> next_word(TraversalState& state) {
  if (!state.advance()) return std::nullopt;
  return state.current();
}

std::uint64_t count_pn(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw CapExceeded("enumeration of length " + std::to_string(n) + " refused: cap is " +
                      std::to_string(cap));
  }
  return bubble_flip_all(n, Order::Lex, [](const Word&) {});
}

}  // namespace pnw
