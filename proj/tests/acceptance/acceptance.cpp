// Acceptance criteria: one PASS/FAIL line per criterion, each with a pinned
// wall-clock limit. Exit status is nonzero if any line fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "tensorwalks/closed_forms.hpp"
#include "tensorwalks/combinat.hpp"
#include "tensorwalks/diagram.hpp"
#include "tensorwalks/group.hpp"
#include "tensorwalks/quiver.hpp"
#include "tensorwalks/verify.hpp"

using namespace tensorwalks;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
  // Folds in suite results; `only` restricts to checks whose name starts with it.
  void suite(const std::string& name, const std::string& only = "") {
    for (const auto& r : run_suite(name))
      if (only.empty() || r.name.rfind(only, 0) == 0) require(r.pass, r.suite + ": " + r.name + ": " + r.detail);
  }
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<void(Outcome&)> body;
};

std::vector<CycNum> ints(std::initializer_list<long> v) {
  std::vector<CycNum> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

void criterion_z10(Outcome& o) {
  const GroupData g = build_cyclic(10);
  const ModuleChar v = standard_module_cyclic(10);
  const WalkMatrix a = mckay_adjacency(g, v);
  o.require(walk_count_matrix(a, 6, 0, 8) == 15, "matrix (A^6)_{0,8} != 15");
  o.require(walk_count_character(g, v, 6, 0, 8) == 15, "character sum 0->8 at k=6 != 15");
  o.require(cyclic_walks(10, 6, 0, 8) == 15, "binomial sum 0->8 at k=6 != 15");
  o.require(walk_count_matrix(a, 12, 0, 0) == 948, "matrix (A^12)_{0,0} != 948");
  o.require(walk_count_character(g, v, 12, 0, 0) == 948, "character sum 0->0 at k=12 != 948");
  o.require(cyclic_walks(10, 12, 0, 0) == 948, "binomial sum 0->0 at k=12 != 948");
  o.require(centralizer_dim(g, v, 6) == 948, "dim Z_6(Z_10) != 948");
}

void criterion_z4z2(Outcome& o) {
  const std::vector<int> radii{4, 2};
  const GroupData g = build_abelian(radii);
  const ModuleChar v = coordinate_module(radii);
  const WalkMatrix a = mckay_adjacency(g, v);
  const auto character = walk_counts_character(g, v, 6, 0);
  const auto matrix = walk_rows(a, 0, 6)[6];
  const std::vector<std::pair<std::vector<int>, long>> want{{{2, 0}, 16}, {{1, 1}, 12}, {{0, 0}, 16}, {{3, 1}, 20}};
  for (const auto& [c, n] : want) {
    const std::size_t i = abelian_index(radii, c);
    const std::string at = "(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + ")";
    o.require(matrix[i] == n, "matrix multiplicity at " + at);
    o.require(character[i] == n, "character multiplicity at " + at);
    o.require(abelian_walks(radii, 6, c) == n, "multinomial multiplicity at " + at);
  }
  const BratteliDiagram d = bratteli(g, v, 6);
  o.require(d.level_dims == std::vector<Count>{1, 2, 6, 20, 72, 272, 1056}, "Bratteli right column");
  for (unsigned k = 1; k <= 6; ++k) {
    const Rational closed = pow_rational(2, k - 1) + pow_rational(4, k - 1);
    o.require(Rational(d.level_dims[k]) == closed, "dim Z_" + std::to_string(k) + " != 2^(k-1) + 4^(k-1)");
  }
}

void criterion_s4(Outcome& o) {
  const GroupData s4 = build_symmetric(4);
  const std::vector<std::vector<CycNum>> table{ints({1, 1, 1, 1, 1}), ints({3, 1, -1, 0, -1}), ints({2, 0, 2, -1, 0}),
                                               ints({3, -1, -1, 0, 1}), ints({1, -1, 1, 1, -1})};
  o.require(s4.char_table == table, "S_4 character table differs from the printed table");
  std::vector<Count> sizes;
  for (const auto& c : s4.classes) sizes.push_back(c.size);
  o.require(sizes == std::vector<Count>{1, 6, 3, 8, 6}, "S_4 class sizes");
  o.suite("symmetric", "S_4");
}

void criterion_sn(Outcome& o) {
  o.require(bell(2) == 2 && bell(4) == 15, "Bell numbers B(2), B(4)");
  Count b4 = 0;
  for (unsigned l = 0; l <= 4; ++l) b4 += stirling2(4, l);
  o.require(b4 == 15, "sum_l S(4,l) != 15");
  o.suite("symmetric", "permutation average");
  o.suite("symmetric", "dim Z_k(S_n)");
}

void criterion_paley(Outcome& o) {
  o.require(paley_closed_form({7, PaleyKind::QuadraticResidue}, 1) == 1, "P_7 residue target at k=1 != 1");
  o.suite("paley");
}

void criterion_linear(Outcome& o) { o.suite("linear"); }

void criterion_diagram(Outcome& o) {
  o.require(count_basis({4, 2}, 6) == 1056, "basis of Z_6(Z_4 x Z_2) != 1056");
  o.require(enumerate_basis({4, 2}, 6).size() == 1056, "enumerated basis of Z_6(Z_4 x Z_2) != 1056");
  o.suite("diagram");
}

void criterion_gauss(Outcome& o) {
  for (const auto& [p, square] : std::vector<std::pair<int, long>>{{5, 5}, {7, -7}, {13, 13}}) {
    const auto rep = gauss_sum_check(p);
    o.require(rep.holds && rep.square == square, "g(1)^2 at p=" + std::to_string(p));
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Z_10: (A^6)_{0,8} = 15, dim Z_6 = 948 by matrix, character and binomial sums", 1.0, criterion_z10},
      {2, "Z_4 x Z_2: level-6 multiplicities, Bratteli column, 2^(k-1) + 4^(k-1)", 1.0, criterion_z4z2},
      {3, "S_4: character table and the five closed forms for 1 <= k <= 10", 5.0, criterion_s4},
      {4, "S_n: character sums = Stirling-Kostka sums (n <= 5, k <= 6), Bell numbers", 30.0, criterion_sn},
      {5, "Paley: corrected evaluator = multinomial sum = brute force; printed line (i) fails at (7,1)", 10.0,
       criterion_paley},
      {6, "wreath products: evaluators, brute force, EGF, Z2 wr S2 Poincare series, T(k,s) sums", 60.0,
       [](Outcome& o) { o.suite("wreath"); }},
      {7, "GL2/SL2 (q = 3, 5, 7): closed dims, Poincare coefficients, class sizes", 5.0, criterion_linear},
      {8, "generic engines on built-in full tables with |G| <= 200, random digraphs", 120.0,
       [](Outcome& o) { o.suite("engines"); }},
      {9, "abelian EGF products = walk counts (prod r_j <= 64, k <= 10), hypercube pattern", 30.0,
       [](Outcome& o) { o.suite("abelian"); }},
      {10, "diagram algebra: basis sizes, worked composition, closure and associativity", 10.0, criterion_diagram},
      {11, "Gauss sums: g(1)^2 = 5, -7, 13 in Q(zeta_p)", 1.0, criterion_gauss},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= c.limit_seconds)
      o.require(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    if (!o.pass) ++failures;
    std::printf("%s %2d  %s  [%.3f s, limit %.0f s]%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs,
                c.limit_seconds, o.pass ? "" : "  -- ", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
