#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pnw/generator.hpp"
#include "pnw/ops.hpp"
#include "pnw/word.hpp"

namespace pnw {

/// Prefix normal words of length n whose critical prefix is exactly 1^s 0^t.
struct CritSetQuery {
  std::size_t s = 1;
  std::size_t t = 0;
  std::size_t n = 0;
};

/// Visits every word of CritSet(s, t, n) and returns how many there were.
///
/// For s + t < n and t >= 1 the set is v = 1^s 0^t 1 0^{n-s-t-1} together
/// with PN(flip(v, phi(v))): LEX visits v first, GRAY visits it last (it is
/// the parent of the subtree's final word). A t = 0 query only matches 1^n.
/// Throws std::invalid_argument when s = 0; the only such word is 0^n.
template <class Visit>
std::uint64_t critset(const CritSetQuery& q, Order order, Visit&& visit);

/// CritSet sizes for s in [1, s_max], t in [0, t_max]; rows s, columns t.
struct CountsTable {
  std::size_t n = 0;
  std::size_t s_max = 0;
  std::size_t t_max = 0;
  std::vector<std::uint64_t> cells;  // row-major, (s - 1) * (t_max + 1) + t

  std::uint64_t at(std::size_t s, std::size_t t) const { return cells.at((s - 1) * (t_max + 1) + t); }
  std::uint64_t total() const;
};

/// Throws std::invalid_argument if s_max is 0. Cells are independent and
/// filled by up to `jobs` worker threads.
CountsTable critset_table(std::size_t n, std::size_t s_max, std::size_t t_max,
                          unsigned jobs = 1);

/// Number of words of L_n per critical prefix length s + t (0^n counted at n).
struct Histogram {
  std::size_t n = 0;
  std::map<std::size_t, std::uint64_t> bins;

  std::uint64_t total() const;
};

/// Single Bubble-Flip pass over L_n. Throws CapExceeded if n > cap.
Histogram critprefix_histogram(std::size_t n, std::size_t cap = kDefaultGenerationCap);

// -- text formats ----------------------------------------------------------

/// Header `s\t,<t values>`, then one row per s.
std::string table_to_csv(const CountsTable& table);
/// {"n":..,"cells":[{"s":..,"t":..,"count":..},...]}
std::string table_to_json(const CountsTable& table);
/// `length,count,percent`, one row per nonempty bin.
std::string histogram_to_csv(const Histogram& hist);
std::string histogram_to_json(const Histogram& hist);

// -- implementation --------------------------------------------------------

template <class Visit>
std::uint64_t critset(const CritSetQuery& q, Order order, Visit&& visit) {
  if (q.s == 0) {
    throw std::invalid_argument("critset needs s >= 1 (only 0^n has s = 0)");
  }
  const std::size_t u_len = q.s + q.t;
  if (u_len > q.n) return 0;

  Word v(q.n);
  for (std::size_t i = 1; i <= q.s; ++i) v.set(i, 1);
  if (u_len == q.n) {
    visit(v);
    return 1;
  }
  // A leading run 1^s followed directly by another 1 is not a run of length s.
  if (q.t == 0) return 0;

  v.set(u_len + 1, 1);
  if (!is_prefix_normal(v)) {
    throw std::logic_error("internal invariant: " + v.str() + " must be prefix normal");
  }
  const PhiValue phi = compute_phi(v);
  std::uint64_t count = 0;
  if (order == Order::Lex) {
    visit(v);
    count = 1;
  }
  if (phi.flippable()) {
    count += generate_pn(flip(v, phi.value), order, visit);
  }
  if (order == Order::Gray) {
    visit(v);
    count = detail::checked_increment(count);
  }
  return count;
}

}  // namespace pnw
