#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>

#include "tensorwalks/combinat.hpp"

using namespace tensorwalks;

namespace {

// Set partitions of {0..k-1} as block-label vectors (restricted growth strings).
void for_each_set_partition(int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> a(static_cast<std::size_t>(k), 0);
  std::function<void(int, int)> rec = [&](int i, int m) {
    if (i == k) {
      f(a);
      return;
    }
    for (int b = 0; b <= m; ++b) {
      a[static_cast<std::size_t>(i)] = b;
      rec(i + 1, std::max(m, b + 1));
    }
  };
  if (k == 0) f(a);
  else rec(1, 1);
}

std::vector<int> block_sizes(const std::vector<int>& a) {
  std::vector<int> sizes;
  for (int b : a) {
    if (b >= static_cast<int>(sizes.size())) sizes.resize(static_cast<std::size_t>(b) + 1, 0);
    ++sizes[static_cast<std::size_t>(b)];
  }
  return sizes;
}

// Euler's pentagonal recurrence.
long partition_count(int n) {
  std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int j = 1;; ++j) {
      const int g1 = j * (3 * j - 1) / 2, g2 = j * (3 * j + 1) / 2;
      if (g1 > m) break;
      const long sign = j % 2 ? 1 : -1;
      p[static_cast<std::size_t>(m)] += sign * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) p[static_cast<std::size_t>(m)] += sign * p[static_cast<std::size_t>(m - g2)];
    }
  return p[static_cast<std::size_t>(n)];
}

}  // namespace

TEST_SUITE("combinat") {
  TEST_CASE("partitions") {
    CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});
    CHECK(partitions_of(4) == std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
    for (int n = 0; n <= 14; ++n) CHECK(static_cast<long>(partitions_of(n).size()) == partition_count(n));
    CHECK(partitions_of(10).size() == 42);
  }

  TEST_CASE("Stirling and Bell numbers against set-partition enumeration") {
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(0, 3) == 0);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(2, 1) == 1);
    CHECK(stirling2(2, 2) == 1);
    for (int k = 0; k <= 7; ++k) {
      std::vector<long> by_blocks(static_cast<std::size_t>(k) + 1, 0);
      long total = 0;
      for_each_set_partition(k, [&](const std::vector<int>& a) {
        ++by_blocks[block_sizes(a).size()];
        ++total;
      });
      for (int l = 0; l <= k; ++l)
        CHECK(stirling2(static_cast<unsigned>(k), static_cast<unsigned>(l)) == by_blocks[static_cast<std::size_t>(l)]);
      CHECK(bell(static_cast<unsigned>(k)) == total);
    }
    CHECK(bell(2) == 2);
    CHECK(bell(4) == 15);
  }

  TEST_CASE("Kostka numbers for hook content") {
    CHECK(kostka_hook_content({2, 2}, 2) == 1);
    CHECK(kostka_hook_content({2, 2}, 3) == 2);
    CHECK(kostka_hook_content({2, 2}, 4) == 2);
    for (int n = 1; n <= 6; ++n)
      for (int l = 0; l <= n; ++l) CHECK(kostka_hook_content({n}, l) == 1);
  }

  TEST_CASE("rencontres against permutation enumeration") {
    CHECK(rencontres(2, 1) == 0);
    CHECK(rencontres(2, 2) == 1);
    CHECK(rencontres(4, 2) == 6);
    for (int n = 1; n <= 6; ++n) {
      std::vector<long> count(static_cast<std::size_t>(n) + 1, 0);
      std::vector<int> s(static_cast<std::size_t>(n));
      std::iota(s.begin(), s.end(), 0);
      do {
        int fixed = 0;
        for (int i = 0; i < n; ++i) fixed += s[static_cast<std::size_t>(i)] == i;
        ++count[static_cast<std::size_t>(fixed)];
      } while (std::next_permutation(s.begin(), s.end()));
      for (int m = 0; m <= n; ++m) CHECK(rencontres(n, m) == count[static_cast<std::size_t>(m)]);
    }
  }

  TEST_CASE("centralizer orders") {
    CHECK(z_lambda({1, 1, 1, 1}) == 24);
    CHECK(z_lambda({2, 1, 1}) == 4);
    CHECK(z_multipartition({{1}, {1}}, 2) == 4);
    for (int n = 1; n <= 6; ++n) {
      Rational s = 0;
      for (const auto& lam : partitions_of(n)) s += Rational(1) / Rational(z_lambda(lam));
      CHECK(s == 1);
    }
    Rational s = 0;
    for (const auto& a : multipartitions_of(3, 2)) s += Rational(1) / Rational(z_multipartition(a, 2));
    CHECK(s == 1);
  }

  TEST_CASE("multinomials") {
    CHECK(multinomial(6, {2, 4}) == 15);
    CHECK(multinomial(6, {6}) == 1);
    CHECK(multinomial(12, {4, 4, 4}) == 34650);
    CHECK_THROWS(multinomial(5, {2, 2}));
  }

  TEST_CASE("even-block set partitions") {
    CHECK(even_block_partitions(1, 1) == 1);
    CHECK(even_block_partitions(2, 2) == 3);
    CHECK(even_block_partitions(2, 1) == 1);
    for (int k = 1; k <= 4; ++k) {
      std::vector<long> by_blocks(static_cast<std::size_t>(2 * k) + 1, 0);
      for_each_set_partition(2 * k, [&](const std::vector<int>& a) {
        const auto sizes = block_sizes(a);
        if (std::all_of(sizes.begin(), sizes.end(), [](int x) { return x % 2 == 0; })) ++by_blocks[sizes.size()];
      });
      for (int s = 1; s <= k; ++s) CHECK(even_block_partitions(k, s) == by_blocks[static_cast<std::size_t>(s)]);
    }
  }
}
