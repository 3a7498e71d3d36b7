#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracle.hpp"
#include "pnw/error.hpp"
#include "pnw/word.hpp"

using namespace pnw;
using pnw::testing::word;

TEST_CASE("parse and print") {
  const Word w = word("1101000100110100");
  CHECK(w.size() == 16);
  CHECK(w[1] == 1);
  CHECK(w[3] == 0);
  CHECK(w.str() == "1101000100110100");
  CHECK(word("").empty());
  CHECK_THROWS_AS(word("10a1"), std::invalid_argument);
  CHECK_THROWS_AS(Word(std::vector<std::uint8_t>{0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(w.at(0), std::out_of_range);
  CHECK_THROWS_AS(w.at(17), std::out_of_range);
}

TEST_CASE("rank1") {
  CHECK(rank1(word("1101000100110100"), 4) == 3);
  CHECK(rank1(word("1101000100110100"), 0) == 0);
  CHECK(rank1(word(""), 0) == 0);
  CHECK(rank1(word("110100101001"), 11) == 5);
  CHECK_THROWS_AS(rank1(word("101"), 4), std::out_of_range);
}

TEST_CASE("rank1 is non-decreasing with unit steps") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Word w = testing::random_word(rng, 1 + rng() % 40);
    for (std::size_t i = 1; i <= w.size(); ++i) {
      const std::size_t step = rank1(w, i) - rank1(w, i - 1);
      CHECK(step <= 1);
    }
    CHECK(rank1(w, w.size()) == w.ones());
  }
}

TEST_CASE("is_prefix_normal examples") {
  CHECK(is_prefix_normal(word("11001010")));
  CHECK_FALSE(is_prefix_normal(word("11001101")));
  CHECK_FALSE(is_prefix_normal(word("1101000100110100")));
  CHECK(is_prefix_normal(word("")));
  CHECK(is_prefix_normal(word("0000")));
  CHECK_FALSE(is_prefix_normal(word("01")));
}

TEST_CASE("two formulations of prefix normality agree up to length 14") {
  for (std::size_t n = 0; n <= 14; ++n) {
    Word w(n);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
      for (std::size_t i = 1; i <= n; ++i) w.set(i, (code >> (n - i)) & 1u);
      REQUIRE(is_prefix_normal(w) == testing::window_prefix_normal(w));
    }
  }
}

TEST_CASE("basic facts on prefix normal words") {
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto language = oracle_enumerate(n);
    for (const Word& w : language) {
      // (i) a nonzero prefix normal word starts with 1
      if (w.ones() > 0) CHECK(w[1] == 1);
      // (ii) prefixes stay prefix normal
      for (std::size_t i = 1; i < n; ++i) {
        CHECK(is_prefix_normal(Word(std::vector<std::uint8_t>(w.symbols().begin(),
                                                              w.symbols().begin() + i))));
      }
      // (iii) appending zeros keeps it prefix normal
      Word padded = w;
      for (int i = 0; i < 5; ++i) {
        padded.push_back(0);
        CHECK(is_prefix_normal(padded));
      }
      // (iv) w1 is prefix normal iff P(i+1) > ones in the i-suffix for all i < n
      // (vacuous and false for w = 0)
      bool condition = true;
      for (std::size_t i = 1; i < n; ++i) {
        std::size_t suffix = 0;
        for (std::size_t k = n - i + 1; k <= n; ++k) suffix += w[k];
        condition = condition && rank1(w, i + 1) > suffix;
      }
      Word appended = w;
      appended.push_back(1);
      if (w.ones() > 0) CHECK(is_prefix_normal(appended) == condition);
    }
  }
}

TEST_CASE("critical_prefix") {
  CHECK(critical_prefix(word("1100001001")) == CritPrefix{2, 4});
  CHECK(critical_prefix(word("0011101001")) == CritPrefix{0, 2});
  CHECK(critical_prefix(word("1111000000")) == CritPrefix{4, 6});
  CHECK(critical_prefix(word("111")) == CritPrefix{3, 0});
  CHECK_THROWS_AS(critical_prefix(word("")), std::invalid_argument);
}

TEST_CASE("critical prefix reconstructs a prefix followed by 1") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const Word w = testing::random_word(rng, 1 + rng() % 20);
    const CritPrefix cp = critical_prefix(w);
    if (cp.s == 0) CHECK(cp.t > 0);
    for (std::size_t i = 1; i <= cp.length(); ++i) CHECK(w[i] == (i <= cp.s ? 1 : 0));
    if (cp.length() < w.size()) CHECK(w[cp.length() + 1] == 1);
  }
}

TEST_CASE("last_one") {
  CHECK(last_one(word("11010000")) == 4);
  CHECK_FALSE(last_one(word("0000")).has_value());
  CHECK(last_one(word("10010")) == 4);
  CHECK_FALSE(last_one(word("")).has_value());
}

TEST_CASE("hamming") {
  for (std::size_t n = 2; n <= 10; ++n) {
    CHECK(hamming(testing::ones_then_zeros(2, n - 2), Word(n)) == 2);
  }
  CHECK(hamming(word("11000001"), word("11000001")) == 0);
  CHECK(hamming(word("11000001"), word("11000011")) == 1);
  CHECK_THROWS_AS(hamming(word("10"), word("100")), std::invalid_argument);
}

TEST_CASE("oracle_enumerate") {
  auto strs = [](const std::vector<Word>& ws) {
    std::vector<std::string> out;
    for (const auto& w : ws) out.push_back(w.str());
    return out;
  };
  CHECK(strs(oracle_enumerate(3)) == std::vector<std::string>{"000", "100", "101", "110", "111"});
  CHECK(strs(oracle_enumerate(1)) == std::vector<std::string>{"0", "1"});
  const auto l5 = oracle_enumerate(5);
  CHECK(l5.size() == 14);
  CHECK(l5.front().str() == "00000");
  CHECK(l5.back().str() == "11111");
  CHECK(oracle_enumerate(0).size() == 1);
  CHECK_THROWS_AS(oracle_enumerate(21), CapExceeded);
  CHECK_THROWS_AS(oracle_enumerate(6, 5), CapExceeded);
}
