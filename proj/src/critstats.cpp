#include "pnw/critstats.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace pnw {

std::uint64_t CountsTable::total() const {
  return std::accumulate(cells.begin(), cells.end(), std::uint64_t{0});
}

std::uint64_t Histogram::total() const {
  std::uint64_t sum = 0;
  for (const auto& [len, count] : bins) sum += count;
  return sum;
}

CountsTable critset_table(std::size_t n, std::size_t s_max, std::size_t t_max, unsigned jobs) {
  if (s_max == 0) throw std::invalid_argument("critset table needs s_max >= 1");
  CountsTable table{n, s_max, t_max, std::vector<std::uint64_t>(s_max * (t_max + 1), 0)};

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t cell = next++; cell < table.cells.size(); cell = next++) {
      const CritSetQuery q{cell / (t_max + 1) + 1, cell % (t_max + 1), n};
      table.cells[cell] = critset(q, Order::Lex, [](const Word&) {});
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(table.cells.size())));
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < jobs; ++i) pool.emplace_back(worker);
  worker();
  return table;
}

Histogram critprefix_histogram(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw CapExceeded("histogram of length " + std::to_string(n) + " refused: cap is " +
                      std::to_string(cap));
  }
  Histogram hist{n, {}};
  if (n == 0) return hist;
  bubble_flip_all(n, Order::Lex, [&](const Word& w) { ++hist.bins[critical_prefix(w).length()]; });
  return hist;
}

std::string table_to_csv(const CountsTable& table) {
  std::ostringstream out;
  out << "s\\t";
  for (std::size_t t = 0; t <= table.t_max; ++t) out << ',' << t;
  out << '\n';
  for (std::size_t s = 1; s <= table.s_max; ++s) {
    out << s;
    for (std::size_t t = 0; t <= table.t_max; ++t) out << ',' << table.at(s, t);
    out << '\n';
  }
  return out.str();
}

std::string table_to_json(const CountsTable& table) {
  nlohmann::json cells = nlohmann::json::array();
  for (std::size_t s = 1; s <= table.s_max; ++s) {
    for (std::size_t t = 0; t <= table.t_max; ++t) {
      cells.push_back({{"s", s}, {"t", t}, {"count", table.at(s, t)}});
    }
  }
  nlohmann::json doc = {{"n", table.n}, {"cells", std::move(cells)}};
  return doc.dump() + "\n";
}

namespace {
std::string percent(std::uint64_t count, std::uint64_t total) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f",
                total == 0 ? 0.0 : 100.0 * static_cast<double>(count) / static_cast<double>(total));
  return buf;
}
}  // namespace

std::string histogram_to_csv(const Histogram& hist) {
  const std::uint64_t total = hist.total();
  std::ostringstream out;
  out << "length,count,percent\n";
  for (const auto& [len, count] : hist.bins) {
    out << len << ',' << count << ',' << percent(count, total) << '\n';
  }
  return out.str();
}

std::string histogram_to_json(const Histogram& hist) {
  nlohmann::json bins = nlohmann::json::array();
  for (const auto& [len, count] : hist.bins) bins.push_back({{"length", len}, {"count", count}});
  nlohmann::json doc = {{"n", hist.n}, {"total", hist.total()}, {"bins", std::move(bins)}};
  return doc.dump() + "\n";
}

}  // namespace pnw
