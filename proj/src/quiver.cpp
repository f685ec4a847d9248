#include "tensorwalks/quiver.hpp"

#include "charsum.hpp"
#include "tensorwalks/errors.hpp"
#include "tensorwalks/parallel.hpp"

namespace tensorwalks {

using detail::CharSum;
using detail::SparseCyc;

WalkMatrix WalkMatrix::identity(std::size_t n) {
  WalkMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool WalkMatrix::symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

WalkMatrix WalkMatrix::transpose() const {
  WalkMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

WalkMatrix operator*(const WalkMatrix& x, const WalkMatrix& y) {
  const std::size_t n = x.n_;
  WalkMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      const Count& xil = x(i, l);
      if (xil == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (y(l, j) != 0) out(i, j) += xil * y(l, j);
    }
  return out;
}

namespace {

int sum_conductor(const GroupData& g, const ModuleChar& v) {
  std::int64_t n = g.exponent;
  for (const auto& x : v.values) n = lcm_int(n, x.conductor());
  return static_cast<int>(n);
}

Count checked_count(const std::optional<Rational>& sum, const Count& order, const std::string& what) {
  if (!sum) throw ConsistencyError(what + ": character sum is not rational");
  const Rational q = *sum / Rational(order);
  if (q.get_den() != 1) throw ConsistencyError(what + ": character sum " + q.get_str() + " is not an integer");
  if (q < 0) throw ConsistencyError(what + ": character sum " + q.get_str() + " is negative");
  return q.get_num();
}

struct SparseTables {
  int n = 1;
  std::vector<std::vector<SparseCyc>> chi;       // [irrep][class]
  std::vector<std::vector<SparseCyc>> chi_conj;  // [irrep][class]
  std::vector<SparseCyc> v;
};

SparseTables sparse_tables(const GroupData& g, const ModuleChar& v) {
  SparseTables t;
  t.n = sum_conductor(g, v);
  for (const auto& row : g.char_table) {
    std::vector<SparseCyc> r;
    std::vector<SparseCyc> rc;
    for (const auto& x : row) {
      r.push_back(SparseCyc::from(x, t.n));
      rc.push_back(SparseCyc::from(x.conj(), t.n));
    }
    t.chi.push_back(std::move(r));
    t.chi_conj.push_back(std::move(rc));
  }
  for (const auto& x : v.values) t.v.push_back(SparseCyc::from(x, t.n));
  return t;
}

void require_full(const GroupData& g, const std::string& what) {
  if (!g.full())
    throw UnsupportedError(what + " needs a full character table; " + g.name + " carries invariant data only");
}

void require_module(const GroupData& g, const ModuleChar& v) {
  if (v.values.size() != g.classes.size()) throw UsageError("module does not match the group's class list");
}

std::vector<SparseCyc> module_powers(const ModuleChar& v, unsigned k, int n) {
  std::vector<SparseCyc> out;
  out.reserve(v.values.size());
  for (const auto& x : v.values) out.push_back(SparseCyc::from(x.pow(k), n));
  return out;
}

}  // namespace

WalkMatrix mckay_adjacency(const GroupData& g, const ModuleChar& v) {
  require_full(g, "mckay_adjacency");
  require_module(g, v);
  const SparseTables t = sparse_tables(g, v);
  const std::size_t n = g.irreps.size();
  WalkMatrix a(n);
  parallel_for(n, [&](std::size_t nu) {
    for (std::size_t lam = 0; lam < n; ++lam) {
      CharSum acc(t.n);
      for (std::size_t mu = 0; mu < g.classes.size(); ++mu)
        acc.add(g.classes[mu].size, t.chi[nu][mu], t.v[mu], t.chi_conj[lam][mu]);
      a(nu, lam) = checked_count(acc.rational_value(), g.order,
                                 "adjacency entry (" + g.irreps[nu].label + "," + g.irreps[lam].label + ")");
    }
  });
  return a;
}

WalkMatrix matrix_power(const WalkMatrix& a, unsigned k) {
  WalkMatrix result = WalkMatrix::identity(a.size());
  WalkMatrix base = a;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Count walk_count_matrix(const WalkMatrix& a, unsigned k, std::size_t from, std::size_t to) {
  if (from >= a.size() || to >= a.size()) throw UsageError("walk endpoint out of range");
  return matrix_power(a, k)(from, to);
}

std::vector<std::vector<Count>> walk_rows(const WalkMatrix& a, std::size_t from, unsigned K) {
  const std::size_t n = a.size();
  if (from >= n) throw UsageError("walk endpoint out of range");
  std::vector<std::vector<Count>> rows;
  std::vector<Count> cur(n);
  cur[from] = 1;
  rows.push_back(cur);
  for (unsigned k = 1; k <= K; ++k) {
    std::vector<Count> next(n);
    for (std::size_t nu = 0; nu < n; ++nu) {
      if (cur[nu] == 0) continue;
      for (std::size_t lam = 0; lam < n; ++lam)
        if (a(nu, lam) != 0) next[lam] += cur[nu] * a(nu, lam);
    }
    cur = std::move(next);
    rows.push_back(cur);
  }
  return rows;
}

Count walk_count_character(const GroupData& g, const ModuleChar& v, unsigned k, std::size_t from, std::size_t to) {
  require_module(g, v);
  if (!g.full()) {
    if (from != 0 || to != 0)
      throw UnsupportedError(g.name + " carries invariant data only; only walks from the trivial node back to it are available");
    return invariant_dim(g, v, k);
  }
  if (from >= g.irreps.size() || to >= g.irreps.size()) throw UsageError("walk endpoint out of range");
  const int n = sum_conductor(g, v);
  const auto vk = module_powers(v, k, n);
  CharSum acc(n);
  for (std::size_t mu = 0; mu < g.classes.size(); ++mu)
    acc.add(g.classes[mu].size, SparseCyc::from(g.char_table[from][mu], n), vk[mu],
            SparseCyc::from(g.char_table[to][mu].conj(), n));
  return checked_count(acc.rational_value(), g.order, "walk count");
}

std::vector<Count> walk_counts_character(const GroupData& g, const ModuleChar& v, unsigned k, std::size_t from) {
  require_full(g, "walk_counts_character");
  require_module(g, v);
  if (from >= g.irreps.size()) throw UsageError("walk endpoint out of range");
  const int n = sum_conductor(g, v);
  std::vector<SparseCyc> weighted;
  for (std::size_t mu = 0; mu < g.classes.size(); ++mu)
    weighted.push_back(SparseCyc::from(g.char_table[from][mu] * v.values[mu].pow(k), n));
  std::vector<Count> out(g.irreps.size());
  parallel_for(g.irreps.size(), [&](std::size_t to) {
    CharSum acc(n);
    for (std::size_t mu = 0; mu < g.classes.size(); ++mu)
      acc.add(g.classes[mu].size, weighted[mu], SparseCyc::from(g.char_table[to][mu].conj(), n));
    out[to] = checked_count(acc.rational_value(), g.order, "walk count to " + g.irreps[to].label);
  });
  return out;
}

Count invariant_dim(const GroupData& g, const ModuleChar& v, unsigned k) {
  require_module(g, v);
  const int n = sum_conductor(g, v);
  const auto vk = module_powers(v, k, n);
  const SparseCyc one = SparseCyc::from(CycNum(1L), n);
  CharSum acc(n);
  for (std::size_t mu = 0; mu < g.classes.size(); ++mu) acc.add(g.classes[mu].size, vk[mu], one);
  return checked_count(acc.rational_value(), g.order, "invariant dimension");
}

Count centralizer_dim(const GroupData& g, const ModuleChar& v, unsigned k) {
  if (!v.self_dual)
    throw UnsupportedError("centralizer_dim requires a self-dual module (chi_V real-valued); " + v.label + " on " +
                           g.name + " is not");
  return invariant_dim(g, v, 2 * k);
}

BratteliDiagram bratteli(const GroupData& g, const ModuleChar& v, unsigned K) {
  require_full(g, "bratteli");
  BratteliDiagram d;
  for (const auto& ir : g.irreps) d.labels.push_back(ir.label);
  d.edges = mckay_adjacency(g, v);
  d.levels = walk_rows(d.edges, 0, K);
  d.real_module = v.self_dual;
  for (const auto& level : d.levels) {
    Count s = 0;
    for (const auto& m : level) s += m * m;
    d.level_dims.push_back(s);
  }
  return d;
}

EigenReport eigen_check(const GroupData& g, const ModuleChar& v, const WalkMatrix& a) {
  require_full(g, "eigen_check");
  const std::size_t n = g.irreps.size();
  for (std::size_t nu = 0; nu < n; ++nu)
    for (std::size_t mu = 0; mu < g.classes.size(); ++mu) {
      CycNum lhs;
      for (std::size_t lam = 0; lam < n; ++lam)
        if (a(nu, lam) != 0) lhs += CycNum(Rational(a(nu, lam))) * g.char_table[lam][mu];
      if (!(lhs == v.values[mu] * g.char_table[nu][mu])) return {false, nu, mu};
    }
  return {};
}

bool row_dimension_check(const GroupData& g, const ModuleChar& v, const WalkMatrix& a) {
  require_full(g, "row_dimension_check");
  for (std::size_t nu = 0; nu < a.size(); ++nu) {
    Count s = 0;
    for (std::size_t lam = 0; lam < a.size(); ++lam) s += a(nu, lam) * g.irreps[lam].dim;
    if (s != g.irreps[nu].dim * v.dim) return false;
  }
  return true;
}

OrthogonalityReport orthogonality_check(const GroupData& g) {
  OrthogonalityReport rep;
  Count total = 0;
  for (const auto& c : g.classes) total += c.size;
  rep.class_sizes = total == g.order && !g.classes.empty() && g.classes[0].size == 1;
  if (!g.full()) return rep;
  const std::size_t n = g.irreps.size();
  if (n != g.classes.size()) {
    rep.rows = rep.columns = false;
    return rep;
  }
  Count d2 = 0;
  for (const auto& ir : g.irreps) d2 += ir.dim * ir.dim;
  rep.degrees = d2 == g.order;
  const int N = g.exponent;
  std::vector<std::vector<SparseCyc>> chi(n);
  std::vector<std::vector<SparseCyc>> conj(n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m) {
      chi[l].push_back(SparseCyc::from(g.char_table[l][m], N));
      conj[l].push_back(SparseCyc::from(g.char_table[l][m].conj(), N));
    }
  for (std::size_t a = 0; a < n && rep.rows; ++a)
    for (std::size_t b = 0; b < n && rep.rows; ++b) {
      CharSum acc(N);
      for (std::size_t m = 0; m < n; ++m) acc.add(g.classes[m].size, chi[a][m], conj[b][m]);
      const auto q = acc.rational_value();
      rep.rows = q && *q == (a == b ? Rational(g.order) : Rational(0));
    }
  for (std::size_t m1 = 0; m1 < n && rep.columns; ++m1)
    for (std::size_t m2 = 0; m2 < n && rep.columns; ++m2) {
      CharSum acc(N);
      for (std::size_t l = 0; l < n; ++l) acc.add(1, chi[l][m1], conj[l][m2]);
      const auto q = acc.rational_value();
      rep.columns = q && *q == (m1 == m2 ? Rational(g.order / g.classes[m1].size) : Rational(0));
    }
  return rep;
}

}  // namespace tensorwalks
