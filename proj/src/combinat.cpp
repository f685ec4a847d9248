#include "tensorwalks/combinat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "tensorwalks/errors.hpp"

namespace tensorwalks {

int partition_size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

int fixed_points(const Partition& p) { return part_multiplicity(p, 1); }

int part_multiplicity(const Partition& p, int j) {
  return static_cast<int>(std::count(p.begin(), p.end(), j));
}

namespace {

void partitions_rec(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

void compositions_rec(int remaining, int slots, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (slots == 1) {
    cur.push_back(remaining);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int first = remaining; first >= 0; --first) {
    cur.push_back(first);
    compositions_rec(remaining - first, slots - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw UsageError("partitions_of: n must be nonnegative");
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<MultiPartition> multipartitions_of(int n, int r) {
  if (n < 0 || r < 1) throw UsageError("multipartitions_of: need n >= 0 and r >= 1");
  std::vector<std::vector<int>> sizes;
  std::vector<int> cur;
  compositions_rec(n, r, cur, sizes);
  std::vector<MultiPartition> out;
  for (const auto& comp : sizes) {
    std::vector<std::vector<Partition>> choices;
    for (int s : comp) choices.push_back(partitions_of(s));
    std::vector<std::size_t> idx(static_cast<std::size_t>(r), 0);
    bool done = false;
    while (!done) {
      MultiPartition a;
      for (std::size_t i = 0; i < idx.size(); ++i) a.push_back(choices[i][idx[i]]);
      out.push_back(std::move(a));
      std::size_t pos = idx.size();
      while (true) {
        if (pos == 0) {
          done = true;
          break;
        }
        --pos;
        if (++idx[pos] < choices[pos].size()) break;
        idx[pos] = 0;
      }
    }
  }
  MultiPartition identity(static_cast<std::size_t>(r));
  identity[0] = Partition(static_cast<std::size_t>(n), 1);
  auto it = std::find(out.begin(), out.end(), identity);
  std::rotate(out.begin(), it, it + 1);
  return out;
}

std::string partition_label(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

std::string multipartition_label(const MultiPartition& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += partition_label(a[i]);
  }
  return s + ")";
}

Count stirling2(unsigned k, unsigned l) {
  Count sum = 0;
  for (unsigned j = 0; j <= l; ++j) {
    Count term = binomial(l, j) * pow_count(Count(j), k);
    if ((l - j) % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  // 0^0 = 1 makes the j = 0 term carry the {0,0} = 1 boundary case.
  Count f = factorial(l);
  if (sum % f != 0) throw ConsistencyError("stirling2: alternating sum not divisible by l!");
  return sum / f;
}

Count bell(unsigned n) {
  Count sum = 0;
  for (unsigned l = 0; l <= n; ++l) sum += stirling2(n, l);
  return sum;
}

Count kostka_hook_content(const Partition& lam, int l) {
  const int n = partition_size(lam);
  if (l < 0 || l > n) throw UsageError("kostka_hook_content: l out of range");
  // Zeros can only sit in the first row; the values 1..l, all distinct,
  // then fill lam / (n-l) one cell at a time keeping a partition shape.
  if (lam.empty()) return 1;
  if (n - l > lam[0]) return 0;
  Partition shape{n - l};
  if (n - l == 0) shape.clear();
  std::map<Partition, Count> memo;
  std::function<Count(Partition&)> grow = [&](Partition& cur) -> Count {
    if (cur == lam) return 1;
    auto it = memo.find(cur);
    if (it != memo.end()) return it->second;
    Count total = 0;
    for (std::size_t row = 0; row < lam.size(); ++row) {
      const int len = row < cur.size() ? cur[row] : 0;
      if (len >= lam[row]) continue;
      if (row > 0 && (row - 1 >= cur.size() || cur[row - 1] <= len)) continue;
      if (row > cur.size()) continue;
      Partition next = cur;
      if (row == next.size())
        next.push_back(1);
      else
        ++next[row];
      total += grow(next);
    }
    memo.emplace(cur, total);
    return total;
  };
  return grow(shape);
}

Count rencontres(int n, int m) {
  if (n < 0 || m < 0 || m > n) throw UsageError("rencontres: need 0 <= m <= n");
  // C(n, m) * D_{n-m}, D_j = sum_i (-1)^i j!/i!
  const int j = n - m;
  Count d = 0;
  for (int i = 0; i <= j; ++i) {
    Count term = factorial(static_cast<unsigned>(j)) / factorial(static_cast<unsigned>(i));
    if (i % 2 == 0)
      d += term;
    else
      d -= term;
  }
  return binomial(static_cast<unsigned>(n), static_cast<unsigned>(m)) * d;
}

Count z_lambda(const Partition& lam) {
  std::map<int, unsigned> mult;
  for (int part : lam) ++mult[part];
  Count z = 1;
  for (const auto& [j, p] : mult) z *= pow_count(Count(j), p) * factorial(p);
  return z;
}

Count z_multipartition(const MultiPartition& alpha, int r) {
  Count z = 1;
  unsigned parts = 0;
  for (const auto& a : alpha) {
    z *= z_lambda(a);
    parts += static_cast<unsigned>(a.size());
  }
  return z * pow_count(Count(r), parts);
}

Count multinomial(int k, const std::vector<int>& parts) {
  int sum = 0;
  for (int p : parts) {
    if (p < 0) throw UsageError("multinomial: negative part");
    sum += p;
  }
  if (sum != k) throw UsageError("multinomial: parts sum to " + std::to_string(sum) + ", expected " + std::to_string(k));
  Count out = factorial(static_cast<unsigned>(k));
  for (int p : parts) out /= factorial(static_cast<unsigned>(p));
  return out;
}

Count even_block_partitions(int k, int s) {
  if (k < 1 || s < 1) throw UsageError("even_block_partitions: need k >= 1 and s >= 1");
  Count sum = 0;
  for (int j = 0; j <= s; ++j) {
    Count term = binomial(static_cast<unsigned>(2 * s), static_cast<unsigned>(s - j)) *
                 pow_count(Count(j), static_cast<unsigned>(2 * k));
    if ((s - j) % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  Count den = factorial(static_cast<unsigned>(s)) * pow_count(Count(2), static_cast<unsigned>(s - 1));
  if (sum % den != 0) throw ConsistencyError("even_block_partitions: alternating sum not divisible");
  return sum / den;
}

}  // namespace tensorwalks
