#include "tensorwalks/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "tensorwalks/errors.hpp"

namespace tensorwalks {

std::size_t GroupData::irrep_index(const std::string& label) const {
  for (std::size_t i = 0; i < irreps.size(); ++i)
    if (irreps[i].label == label) return i;
  throw UsageError("unknown irreducible label '" + label + "' for group " + name);
}

ModuleChar make_module(const GroupData& g, std::string label, std::vector<CycNum> values) {
  if (values.size() != g.classes.size())
    throw std::invalid_argument("make_module: one value per class required");
  auto d = values.at(0).as_rational();
  if (!d || d->get_den() != 1 || *d <= 0)
    throw ConsistencyError("make_module: value at identity class must be a positive integer");
  ModuleChar m;
  m.label = std::move(label);
  m.dim = d->get_num();
  m.self_dual = std::all_of(values.begin(), values.end(), [](const CycNum& v) { return v == v.conj(); });
  m.values = std::move(values);
  return m;
}

GroupData build_trivial() {
  GroupData g;
  g.name = "1";
  g.family = "trivial";
  g.order = 1;
  g.classes.push_back({"e", 1});
  g.irreps.push_back({"0", 1});
  g.char_table = {{CycNum(1L)}};
  return g;
}

// ---------------------------------------------------------------------------
// Cyclic and abelian

GroupData build_cyclic(int r) {
  if (r < 2) throw UsageError("cyclic group needs r >= 2");
  if (r > kMaxAbelianOrder) throw UsageError("cyclic group order exceeds " + std::to_string(kMaxAbelianOrder));
  GroupData g;
  g.name = "Z" + std::to_string(r);
  g.family = "cyclic";
  g.params = {r};
  g.order = r;
  g.exponent = r;
  for (int b = 0; b < r; ++b) g.classes.push_back({std::to_string(b), 1});
  for (int a = 0; a < r; ++a) {
    g.irreps.push_back({std::to_string(a), 1});
    std::vector<CycNum> row;
    for (int b = 0; b < r; ++b) row.push_back(CycNum::root_of_unity(r, static_cast<std::int64_t>(a) * b));
    g.char_table.push_back(std::move(row));
  }
  return g;
}

ModuleChar circulant_module(int r, const std::vector<int>& connection) {
  if (r < 2) throw UsageError("circulant needs r >= 2");
  if (connection.empty()) throw UsageError("circulant needs a nonempty connection set");
  for (int s : connection)
    if (s <= 0 || s >= r) throw UsageError("circulant residue " + std::to_string(s) + " outside 1.." + std::to_string(r - 1));
  const GroupData g = build_cyclic(r);
  std::vector<CycNum> values;
  for (int b = 0; b < r; ++b) {
    CycNum v;
    for (int s : connection) v += CycNum::root_of_unity(r, static_cast<std::int64_t>(s) * b);
    values.push_back(v);
  }
  std::string label = "circulant(" + std::to_string(r) + ";";
  for (std::size_t i = 0; i < connection.size(); ++i) label += (i ? "," : "") + std::to_string(connection[i]);
  return make_module(g, label + ")", std::move(values));
}

ModuleChar standard_module_cyclic(int r) {
  ModuleChar m = circulant_module(r, {1, r - 1});
  m.label = "G_1+G_" + std::to_string(r - 1);
  return m;
}

std::vector<int> quadratic_residues(int p) {
  std::vector<int> out;
  for (int x = 1; x <= (p - 1) / 2; ++x) out.push_back(static_cast<int>(static_cast<std::int64_t>(x) * x % p));
  std::sort(out.begin(), out.end());
  return out;
}

ModuleChar paley_module(int p) {
  if (p < 3 || !is_prime(p)) throw UsageError("paley: " + std::to_string(p) + " is not an odd prime");
  ModuleChar m = circulant_module(p, quadratic_residues(p));
  m.label = "paley(" + std::to_string(p) + ")";
  return m;
}

namespace {

int checked_abelian_order(const std::vector<int>& radii) {
  if (radii.empty()) throw UsageError("abelian group needs at least one factor");
  std::int64_t order = 1;
  for (int r : radii) {
    if (r < 2) throw UsageError("abelian factor Z" + std::to_string(r) + " needs r >= 2");
    order *= r;
    if (order > kMaxAbelianOrder) throw UsageError("abelian group order exceeds " + std::to_string(kMaxAbelianOrder));
  }
  return static_cast<int>(order);
}

std::string tuple_label(const std::vector<int>& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

std::string abelian_name(const std::vector<int>& radii) {
  std::string s;
  for (std::size_t i = 0; i < radii.size(); ++i) s += (i ? "xZ" : "Z") + std::to_string(radii[i]);
  return s;
}

}  // namespace

std::size_t abelian_index(const std::vector<int>& radii, const std::vector<int>& a) {
  if (a.size() != radii.size()) throw UsageError("tuple length does not match the number of factors");
  std::size_t idx = 0;
  for (std::size_t j = 0; j < radii.size(); ++j)
    idx = idx * static_cast<std::size_t>(radii[j]) + static_cast<std::size_t>(mod_floor(a[j], radii[j]));
  return idx;
}

std::vector<int> abelian_tuple(const std::vector<int>& radii, std::size_t index) {
  std::vector<int> a(radii.size());
  for (std::size_t j = radii.size(); j-- > 0;) {
    a[j] = static_cast<int>(index % static_cast<std::size_t>(radii[j]));
    index /= static_cast<std::size_t>(radii[j]);
  }
  return a;
}

GroupData build_abelian(const std::vector<int>& radii) {
  const int order = checked_abelian_order(radii);
  int L = 1;
  for (int r : radii) L = static_cast<int>(lcm_int(L, r));
  GroupData g;
  g.name = abelian_name(radii);
  g.family = "abelian";
  g.params = radii;
  g.order = order;
  g.exponent = L;
  std::vector<std::vector<int>> tuples;
  for (int i = 0; i < order; ++i) tuples.push_back(abelian_tuple(radii, static_cast<std::size_t>(i)));
  for (const auto& b : tuples) g.classes.push_back({tuple_label(b), 1});
  for (const auto& a : tuples) {
    g.irreps.push_back({tuple_label(a), 1});
    std::vector<CycNum> row;
    for (const auto& b : tuples) {
      std::int64_t e = 0;
      for (std::size_t j = 0; j < radii.size(); ++j)
        e += static_cast<std::int64_t>(a[j]) * b[j] * (L / radii[j]);
      row.push_back(CycNum::root_of_unity(L, e));
    }
    g.char_table.push_back(std::move(row));
  }
  return g;
}

ModuleChar coordinate_module(const std::vector<int>& radii) {
  const GroupData g = build_abelian(radii);
  std::vector<CycNum> values;
  for (std::size_t i = 0; i < g.classes.size(); ++i) {
    const auto b = abelian_tuple(radii, i);
    CycNum v;
    for (std::size_t j = 0; j < radii.size(); ++j) v += CycNum::root_of_unity(g.exponent, static_cast<std::int64_t>(b[j]) * (g.exponent / radii[j]));
    values.push_back(v);
  }
  return make_module(g, "coordinate", std::move(values));
}

// ---------------------------------------------------------------------------
// Symmetric groups

namespace {

using BetaKey = std::pair<std::vector<int>, std::size_t>;

// Beads of the beta-set, descending; removing a rim hook of length h moves
// one bead down by h into an empty position.
long long mn_rec(const std::vector<int>& beads, const Partition& mu, std::size_t j,
                 std::map<std::pair<std::vector<int>, Partition>, long long>& memo) {
  if (j == mu.size()) return 1;
  Partition suffix(mu.begin() + static_cast<std::ptrdiff_t>(j), mu.end());
  auto key = std::make_pair(beads, suffix);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int h = mu[j];
  long long total = 0;
  for (std::size_t i = 0; i < beads.size(); ++i) {
    const int target = beads[i] - h;
    if (target < 0) continue;
    if (std::find(beads.begin(), beads.end(), target) != beads.end()) continue;
    int between = 0;
    for (int b : beads)
      if (b > target && b < beads[i]) ++between;
    std::vector<int> next = beads;
    next[i] = target;
    std::sort(next.begin(), next.end(), std::greater<>());
    const long long sub = mn_rec(next, mu, j + 1, memo);
    total += (between % 2 == 0) ? sub : -sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

std::vector<int> beta_set(const Partition& lam) {
  std::vector<int> beads;
  const int L = static_cast<int>(lam.size());
  for (int i = 0; i < L; ++i) beads.push_back(lam[static_cast<std::size_t>(i)] + (L - 1 - i));
  return beads;
}

}  // namespace

Count sn_character(const Partition& lam, const Partition& mu) {
  if (partition_size(lam) != partition_size(mu)) throw UsageError("sn_character: sizes differ");
  std::map<std::pair<std::vector<int>, Partition>, long long> memo;
  return Count(static_cast<long>(mn_rec(beta_set(lam), mu, 0, memo)));
}

GroupData build_symmetric(int n) {
  if (n < 2 || n > kMaxSymmetricN)
    throw UsageError("symmetric group S_n needs 2 <= n <= " + std::to_string(kMaxSymmetricN));
  GroupData g;
  g.name = "S" + std::to_string(n);
  g.family = "symmetric";
  g.params = {n};
  g.order = factorial(static_cast<unsigned>(n));
  g.exponent = 1;
  auto irreps = partitions_of(n);
  std::vector<Partition> classes(irreps.rbegin(), irreps.rend());
  for (const auto& mu : classes) g.classes.push_back({partition_label(mu), g.order / z_lambda(mu)});
  std::map<std::pair<std::vector<int>, Partition>, long long> memo;
  for (const auto& lam : irreps) {
    std::vector<CycNum> row;
    for (const auto& mu : classes) row.push_back(CycNum(static_cast<long>(mn_rec(beta_set(lam), mu, 0, memo))));
    g.irreps.push_back({partition_label(lam), row[0].as_rational()->get_num()});
    g.char_table.push_back(std::move(row));
  }
  return g;
}

ModuleChar permutation_module(int n) {
  const GroupData g = build_symmetric(n);
  auto parts = partitions_of(n);
  std::vector<CycNum> values;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) values.push_back(CycNum(static_cast<long>(fixed_points(*it))));
  return make_module(g, "permutation", std::move(values));
}

// ---------------------------------------------------------------------------
// Wreath products Z_r wr S_n (invariant-only data)

GroupData build_wreath_invariant(int r, int n) {
  if (r < 2) throw UsageError("wreath product needs r >= 2");
  if (n < 1 || n > kMaxWreathN) throw UsageError("wreath product needs 1 <= n <= " + std::to_string(kMaxWreathN));
  GroupData g;
  g.name = "Z" + std::to_string(r) + "wrS" + std::to_string(n);
  g.family = "wreath";
  g.params = {r, n};
  g.order = pow_count(Count(r), static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(n));
  g.tier = Tier::InvariantOnly;
  g.exponent = r;
  for (const auto& a : multipartitions_of(n, r)) g.classes.push_back({multipartition_label(a), g.order / z_multipartition(a, r)});
  return g;
}

ModuleChar monomial_module(int r, int n) {
  const GroupData g = build_wreath_invariant(r, n);
  std::vector<CycNum> values;
  for (const auto& a : multipartitions_of(n, r)) {
    CycNum v;
    for (int i = 0; i < r; ++i) {
      const int f = fixed_points(a[static_cast<std::size_t>(i)]);
      if (f != 0) v += CycNum(static_cast<long>(f)) * CycNum::root_of_unity(r, i);
    }
    values.push_back(v);
  }
  return make_module(g, "monomial", std::move(values));
}

// ---------------------------------------------------------------------------
// GL2(F_q), SL2(F_q): table rows expanded into explicit classes.

namespace {

struct TableRow {
  std::string tag;
  int count;
  Count size;
  long chi_v;
  long chi_vq;
};

void check_linear_q(int q) {
  if (q < 3 || q % 2 == 0) throw UsageError("q must be an odd prime power, got " + std::to_string(q));
  if (!prime_power_base(q)) throw UsageError("q must be an odd prime power, got " + std::to_string(q));
  if (q > kMaxLinearQ) throw UsageError("q exceeds " + std::to_string(kMaxLinearQ));
}

std::vector<TableRow> gl2_rows(int q) {
  const Count Q = q;
  return {{"a_x", q - 1, 1, q + 1, q},
          {"b_x", q - 1, Q * Q - 1, 1, 0},
          {"c_xy", (q - 1) * (q - 2) / 2, Q * Q + Q, 2, 1},
          {"d_xy", q * (q - 1) / 2, Q * Q - Q, 0, -1}};
}

std::vector<TableRow> sl2_rows(int q) {
  const Count Q = q;
  return {{"pmI", 2, 1, q + 1, q},
          {"u_x", (q - 3) / 2, Q * (Q + 1), 2, 1},
          {"v_y", 2, (Q * Q - 1) / 2, 1, 0},
          {"-v_y", 2, (Q * Q - 1) / 2, 1, 0},
          {"w_xy", (q - 1) / 2, Q * (Q - 1), 0, -1}};
}

GroupData from_rows(const std::string& name, const std::string& family, int q, Count order,
                    const std::vector<TableRow>& rows) {
  GroupData g;
  g.name = name;
  g.family = family;
  g.params = {q};
  g.order = std::move(order);
  g.tier = Tier::InvariantOnly;
  g.exponent = 1;
  for (const auto& row : rows)
    for (int i = 1; i <= row.count; ++i) g.classes.push_back({row.tag + "#" + std::to_string(i), row.size, row.count});
  return g;
}

std::pair<ModuleChar, ModuleChar> modules_from_rows(const GroupData& g, const std::vector<TableRow>& rows) {
  std::vector<CycNum> v;
  std::vector<CycNum> vq;
  for (const auto& row : rows)
    for (int i = 0; i < row.count; ++i) {
      v.emplace_back(row.chi_v);
      vq.emplace_back(row.chi_vq);
    }
  return {make_module(g, "induced", std::move(v)), make_module(g, "steinberg", std::move(vq))};
}

}  // namespace

GroupData build_gl2(int q) {
  check_linear_q(q);
  const Count Q = q;
  return from_rows("GL2(" + std::to_string(q) + ")", "gl2", q, Q * (Q + 1) * (Q - 1) * (Q - 1), gl2_rows(q));
}

std::pair<ModuleChar, ModuleChar> gl2_modules(int q) { return modules_from_rows(build_gl2(q), gl2_rows(q)); }

GroupData build_sl2(int q) {
  check_linear_q(q);
  const Count Q = q;
  return from_rows("SL2(" + std::to_string(q) + ")", "sl2", q, Q * (Q - 1) * (Q + 1), sl2_rows(q));
}

std::pair<ModuleChar, ModuleChar> sl2_modules(int q) { return modules_from_rows(build_sl2(q), sl2_rows(q)); }

ModuleChar module_from_irreps(const GroupData& g, const std::vector<int>& mult, std::string label) {
  if (!g.full()) throw UnsupportedError("module_from_irreps needs a full character table");
  if (mult.size() != g.irreps.size()) throw UsageError("module_from_irreps: one multiplicity per irreducible");
  std::vector<CycNum> values(g.classes.size());
  for (std::size_t l = 0; l < mult.size(); ++l) {
    if (mult[l] < 0) throw UsageError("module_from_irreps: negative multiplicity");
    if (mult[l] == 0) continue;
    for (std::size_t c = 0; c < values.size(); ++c) values[c] += CycNum(static_cast<long>(mult[l])) * g.char_table[l][c];
  }
  return make_module(g, std::move(label), std::move(values));
}

// ---------------------------------------------------------------------------
// Spec parser

namespace {

class SpecParser {
 public:
  explicit SpecParser(const std::string& text) : s_(text) {}

  GroupModule parse() {
    skip_ws();
    if (pos_ >= s_.size()) fail("empty group spec");
    GroupModule out = parse_group();
    skip_ws();
    if (peek_word("@")) {
      const std::size_t at = pos_;
      expect("@");
      skip_ws();
      if (!peek_word("steinberg")) fail("expected 'steinberg' after '@'");
      expect("steinberg");
      if (out.group.family == "gl2") {
        out.module = gl2_modules(out.group.params[0]).second;
      } else if (out.group.family == "sl2") {
        out.module = sl2_modules(out.group.params[0]).second;
      } else {
        throw ParseError("'@steinberg' applies only to GL2/SL2", at);
      }
      out.spec += "@steinberg";
    }
    skip_ws();
    if (pos_ < s_.size()) fail(std::string("unexpected character '") + s_[pos_] + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  // Matches a literal allowing whitespace between its characters.
  bool peek_word(const std::string& w) {
    std::size_t p = pos_;
    for (char c : w) {
      while (p < s_.size() && std::isspace(static_cast<unsigned char>(s_[p]))) ++p;
      if (p >= s_.size() || s_[p] != c) return false;
      ++p;
    }
    return true;
  }

  void expect(const std::string& w) {
    for (char c : w) {
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
      ++pos_;
    }
  }

  int parse_int() {
    skip_ws();
    const std::size_t start = pos_;
    int value = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (pos_ - start >= 6) fail("integer too large");
      value = value * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return value;
  }

  std::vector<int> int_list() {
    std::vector<int> v{parse_int()};
    while (peek_word(",")) {
      expect(",");
      v.push_back(parse_int());
    }
    return v;
  }

  GroupModule parse_group() {
    if (peek_word("GL2(")) {
      expect("GL2(");
      const int q = parse_int();
      expect(")");
      GroupData g = build_gl2(q);
      return {g, gl2_modules(q).first, "GL2(" + std::to_string(q) + ")"};
    }
    if (peek_word("SL2(")) {
      expect("SL2(");
      const int q = parse_int();
      expect(")");
      GroupData g = build_sl2(q);
      return {g, sl2_modules(q).first, "SL2(" + std::to_string(q) + ")"};
    }
    if (peek_word("paley(")) {
      expect("paley(");
      const int p = parse_int();
      expect(")");
      if (p < 3 || !is_prime(p)) throw UsageError("paley: " + std::to_string(p) + " is not an odd prime");
      return {build_cyclic(p), paley_module(p), "paley(" + std::to_string(p) + ")"};
    }
    if (peek_word("circulant(")) {
      expect("circulant(");
      const int r = parse_int();
      expect(";");
      auto conn = int_list();
      expect(")");
      ModuleChar m = circulant_module(r, conn);
      return {build_cyclic(r), m, m.label};
    }
    if (peek_word("hypercube(")) {
      expect("hypercube(");
      const int n = parse_int();
      expect(")");
      if (n < 1) throw UsageError("hypercube needs n >= 1");
      if (n > 8) throw UsageError("hypercube dimension exceeds 8");
      std::vector<int> radii(static_cast<std::size_t>(n), 2);
      return {build_abelian(radii), coordinate_module(radii), "hypercube(" + std::to_string(n) + ")"};
    }
    if (peek_word("S")) {
      expect("S");
      const int n = parse_int();
      return {build_symmetric(n), permutation_module(n), "S" + std::to_string(n)};
    }
    if (peek_word("Z")) {
      expect("Z");
      std::vector<int> radii{parse_int()};
      if (peek_word("wr")) {
        expect("wr");
        expect("S");
        const int n = parse_int();
        const int r = radii[0];
        return {build_wreath_invariant(r, n), monomial_module(r, n),
                "Z" + std::to_string(r) + "wrS" + std::to_string(n)};
      }
      while (peek_word("x")) {
        expect("x");
        expect("Z");
        radii.push_back(parse_int());
      }
      if (radii.size() == 1) {
        const int r = radii[0];
        return {build_cyclic(r), standard_module_cyclic(r), "Z" + std::to_string(r)};
      }
      return {build_abelian(radii), coordinate_module(radii), abelian_name(radii)};
    }
    fail("expected a group (Z, S, GL2, SL2, paley, circulant, hypercube)");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupModule parse_spec(const std::string& text) { return SpecParser(text).parse(); }

}  // namespace tensorwalks
