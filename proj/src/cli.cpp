#include "tensorwalks/cli.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "tensorwalks/closed_forms.hpp"
#include "tensorwalks/diagram.hpp"
#include "tensorwalks/errors.hpp"
#include "tensorwalks/group.hpp"
#include "tensorwalks/quiver.hpp"
#include "tensorwalks/serialize.hpp"
#include "tensorwalks/series.hpp"
#include "tensorwalks/verify.hpp"

namespace tensorwalks {

namespace {

// Closed forms that enumerate compositions are skipped beyond this many terms.
constexpr unsigned long kMaxClosedTerms = 2'000'000;
// diagalg --list refuses bases larger than this.
constexpr unsigned long kMaxListedElements = 200'000;

struct Options {
  std::string group;
  std::string module = "default";
  std::string from;
  std::string to;
  std::string lambda;
  std::string target;
  std::string method = "auto";
  std::string format = "json";
  std::string suite = "all";
  unsigned k = 0;
  unsigned levels = 6;
  unsigned order = 10;
  bool csv = false;
  bool list = false;
  bool count = false;
  bool centralizer = false;
};

enum class Kind { Trivial, Cyclic, Circulant, Paley, Abelian, Symmetric, Wreath, GL2, SL2 };

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

// ---------------------------------------------------------------------------
// Context: the parsed group and lazily built adjacency.

class Context {
 public:
  explicit Context(const Options& o) : gm_(load(o)) {
    const std::string& f = gm_.group.family;
    if (f == "trivial") kind_ = Kind::Trivial;
    else if (starts_with(gm_.spec, "paley(")) kind_ = Kind::Paley;
    else if (starts_with(gm_.spec, "circulant(")) kind_ = Kind::Circulant;
    else if (f == "cyclic") kind_ = Kind::Cyclic;
    else if (f == "abelian") kind_ = Kind::Abelian;
    else if (f == "symmetric") kind_ = Kind::Symmetric;
    else if (f == "wreath") kind_ = Kind::Wreath;
    else if (f == "gl2") kind_ = Kind::GL2;
    else kind_ = Kind::SL2;
  }

  const GroupData& g() const { return gm_.group; }
  const ModuleChar& v() const { return gm_.module; }
  const std::string& spec() const { return gm_.spec; }
  Kind kind() const { return kind_; }
  bool steinberg() const { return spec().find("@steinberg") != std::string::npos; }

  const WalkMatrix& adjacency() {
    require_full("the McKay quiver");
    if (!a_) a_ = mckay_adjacency(g(), v());
    return *a_;
  }

  void require_full(const std::string& what) const {
    if (!g().full())
      throw UnsupportedError(g().name + " carries invariant data only; " + what + " needs a full character table");
  }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for (const auto& ir : g().irreps) out.push_back(ir.label);
    return out;
  }

  // Irrep by label, by index, or (abelian) by an unparenthesized tuple.
  std::size_t node(const std::string& text) const {
    std::string t;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty() || t == "trivial") return 0;
    if (!g().full()) {
      if (t == "0") return 0;
      throw UnsupportedError(g().name + " carries invariant data only; only the trivial irreducible is available");
    }
    for (std::size_t i = 0; i < g().irreps.size(); ++i)
      if (g().irreps[i].label == t || g().irreps[i].label == "(" + t + ")") return i;
    if (kind_ == Kind::Abelian) {
      std::string body = t;
      if (body.size() >= 2 && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
      std::vector<int> tuple;
      std::stringstream ss(body);
      std::string part;
      while (std::getline(ss, part, ',')) tuple.push_back(parse_int(part, text));
      if (tuple.size() != g().params.size()) throw UsageError("irreducible '" + text + "' has the wrong length");
      return abelian_index(g().params, tuple);
    }
    if (kind_ == Kind::Cyclic || kind_ == Kind::Circulant || kind_ == Kind::Paley) {
      const int r = g().params[0];
      return static_cast<std::size_t>(mod_floor(parse_int(t, text), r));
    }
    const int idx = parse_int(t, text);
    if (idx < 0 || static_cast<std::size_t>(idx) >= g().irreps.size())
      throw UsageError("irreducible index " + t + " out of range for " + g().name);
    return static_cast<std::size_t>(idx);
  }

 private:
  static int parse_int(const std::string& s, const std::string& original) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw UsageError("cannot read irreducible '" + original + "'");
    }
  }

  static GroupModule load(const Options& o) {
    if (o.group.empty()) throw UsageError("--group is required");
    std::string m = o.module;
    std::transform(m.begin(), m.end(), m.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (m == "default" || m == "v" || m == "induced") return parse_spec(o.group);
    if (m == "steinberg") {
      if (o.group.find('@') != std::string::npos) return parse_spec(o.group);
      return parse_spec(o.group + "@steinberg");
    }
    throw UsageError("unknown module '" + o.module + "' (default, V, steinberg)");
  }

  GroupModule gm_;
  Kind kind_ = Kind::Trivial;
  std::optional<WalkMatrix> a_;
};

bool small_enough(unsigned k, std::size_t parts) {
  if (parts == 0) return true;
  return binomial(k + static_cast<unsigned>(parts) - 1, static_cast<unsigned>(parts) - 1) <= kMaxClosedTerms;
}

// Connection residues of a circulant module, with multiplicity, read off
// the quiver row of the trivial node.
std::vector<int> connection_of(Context& ctx) {
  const WalkMatrix& a = ctx.adjacency();
  std::vector<int> conn;
  for (std::size_t j = 0; j < a.size(); ++j)
    for (Count m = a(0, j); m > 0; m -= 1) conn.push_back(static_cast<int>(j));
  return conn;
}

// ---------------------------------------------------------------------------
// walks

using Route = std::pair<std::string, std::function<Count()>>;

std::vector<Route> closed_routes(Context& ctx, unsigned k, std::size_t from, std::size_t to) {
  std::vector<Route> out;
  const GroupData& g = ctx.g();
  switch (ctx.kind()) {
    case Kind::Cyclic:
    case Kind::Circulant:
    case Kind::Paley: {
      const int r = g.params[0];
      const int c = static_cast<int>(mod_floor(static_cast<long>(to) - static_cast<long>(from), r));
      if (ctx.kind() == Kind::Cyclic)
        out.emplace_back("binomial", [=] { return cyclic_walks(r, k, static_cast<int>(from), static_cast<int>(to)); });
      if (ctx.kind() == Kind::Paley) out.emplace_back("paley", [=] { return paley_closed_form({r, paley_kind(r, c)}, k); });
      const auto conn = connection_of(ctx);
      if (small_enough(k, conn.size()))
        out.emplace_back("multinomial", [=] { return circulant_walks(r, conn, k, c); });
      break;
    }
    case Kind::Abelian: {
      const auto& radii = g.params;
      if (!small_enough(k, radii.size())) break;
      const auto a = abelian_tuple(radii, from);
      auto c = abelian_tuple(radii, to);
      for (std::size_t j = 0; j < c.size(); ++j) c[j] = static_cast<int>(mod_floor(c[j] - a[j], radii[j]));
      out.emplace_back("multinomial", [=] { return abelian_walks(radii, k, c); });
      break;
    }
    case Kind::Symmetric:
      if (from == 0) {
        const int n = g.params[0];
        const Partition lam = partitions_of(n)[to];
        out.emplace_back("stirling-kostka", [=] { return sn_irrep_dim_formula(n, k, lam); });
      }
      break;
    case Kind::Wreath:
      if (from == 0 && to == 0 && small_enough(k, static_cast<std::size_t>(g.params[1])))
        out.emplace_back("wreath", [&g, k] { return wreath_invariants(g.params[0], g.params[1], k); });
      break;
    case Kind::GL2:
    case Kind::SL2:
      if (from == 0 && to == 0) {
        const int q = g.params[0];
        const LinearModule which = ctx.steinberg() ? LinearModule::Steinberg : LinearModule::InducedV;
        if (ctx.kind() == Kind::GL2) out.emplace_back("gl2", [=] { return gl2_dims(q, k, which); });
        else out.emplace_back("sl2", [=] { return sl2_dims(q, k, which); });
      }
      break;
    case Kind::Trivial:
      break;
  }
  return out;
}

Count count_walks(Context& ctx, unsigned k, std::size_t from, std::size_t to, const std::string& method) {
  std::vector<Route> routes;
  const bool any = method == "auto";
  if (any || method == "matrix") {
    if (ctx.g().full()) routes.emplace_back("matrix", [&, k, from, to] { return walk_count_matrix(ctx.adjacency(), k, from, to); });
    else if (!any) ctx.require_full("--method matrix");
  }
  if (any || method == "character")
    routes.emplace_back("character", [&, k, from, to] { return walk_count_character(ctx.g(), ctx.v(), k, from, to); });
  if (any || method == "closed") {
    auto closed = closed_routes(ctx, k, from, to);
    if (closed.empty() && !any) throw UnsupportedError("no closed form for " + ctx.spec() + " with these endpoints");
    if (!any) closed.resize(1);
    for (auto& r : closed) routes.push_back(std::move(r));
  }
  if (routes.empty()) throw UsageError("unknown method '" + method + "' (auto, matrix, character, closed)");
  std::optional<Count> value;
  std::string first;
  for (const auto& [name, f] : routes) {
    const Count c = f();
    if (!value) {
      value = c;
      first = name;
    } else if (*value != c) {
      throw ConsistencyError("walk count mismatch: " + first + " gives " + value->get_str() + ", " + name + " gives " +
                             c.get_str());
    }
  }
  return *value;
}

// ---------------------------------------------------------------------------
// Output helpers

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + csv_field(fields[i]);
  return out + "\n";
}

std::string json_text(const Json& j) { return j.dump() + "\n"; }

std::string word_text(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + std::to_string(w[i]);
  return s;
}

// ---------------------------------------------------------------------------
// Verbs

std::string do_walks(const Options& o) {
  Context ctx(o);
  const Count c = count_walks(ctx, o.k, ctx.node(o.from), ctx.node(o.to), o.method);
  if (o.csv) return csv_row({"count"}) + csv_row({c.get_str()});
  return json_text(Json{{"count", c.get_str()}});
}

std::string do_dims(const Options& o) {
  Context ctx(o);
  ctx.require_full("per-irreducible multiplicities");
  const std::size_t from = ctx.node(o.from);
  const auto by_character = walk_counts_character(ctx.g(), ctx.v(), o.k, from);
  const auto by_matrix = walk_rows(ctx.adjacency(), from, o.k)[o.k];
  if (by_character != by_matrix) throw ConsistencyError("dims: matrix and character routes differ");
  const auto labels = ctx.labels();
  if (o.csv) {
    std::string s = csv_row({"lambda", "count"});
    for (std::size_t l = 0; l < labels.size(); ++l) s += csv_row({labels[l], by_matrix[l].get_str()});
    return s;
  }
  Json dims = Json::object();
  for (std::size_t l = 0; l < labels.size(); ++l) dims[labels[l]] = by_matrix[l].get_str();
  return json_text(Json{{"k", o.k}, {"dims", dims}});
}

std::string do_invariants(const Options& o) {
  Context ctx(o);
  std::vector<Count> seq;
  if (o.centralizer) {
    if (!ctx.v().self_dual)
      throw UnsupportedError("module " + ctx.v().label + " is not self-dual; the centralizer dimension is not a trace moment");
    for (unsigned k = 0; k <= o.k; ++k) {
      const Count z = centralizer_dim(ctx.g(), ctx.v(), k);
      const Count w = count_walks(ctx, 2 * k, 0, 0, "auto");
      if (z != w) throw ConsistencyError("centralizer: trace moment " + z.get_str() + " vs walk count " + w.get_str());
      seq.push_back(z);
    }
  } else {
    for (unsigned k = 0; k <= o.k; ++k) seq.push_back(count_walks(ctx, k, 0, 0, o.method));
  }
  const char* key = o.centralizer ? "centralizer" : "invariants";
  if (o.csv) {
    std::string s = csv_row({"k", key});
    for (std::size_t k = 0; k < seq.size(); ++k) s += csv_row({std::to_string(k), seq[k].get_str()});
    return s;
  }
  return json_text(Json{{key, count_list(seq)}});
}

std::string poly_text(const Polynomial& p) { return p.to_string("t"); }

Json ratfunc_json(const RatFunc& f) {
  Json j = to_json(f);
  j["num_text"] = poly_text(f.num());
  j["den_text"] = poly_text(f.den());
  return j;
}

std::string ratfunc_csv(const RatFunc& f) {
  std::string s = csv_row({"degree", "num", "den"});
  const int d = std::max(f.num().degree(), f.den().degree());
  for (int i = 0; i <= d; ++i) s += csv_row({std::to_string(i), f.num().coeff(i).get_str(), f.den().coeff(i).get_str()});
  return s;
}

// The displayed closed form, when one exists for this group and target.
std::optional<UnreducedRatFunc> paper_form(Context& ctx, std::size_t lam) {
  if (lam != 0) return std::nullopt;
  const auto which = ctx.steinberg() ? LinearModule::Steinberg : LinearModule::InducedV;
  if (ctx.kind() == Kind::GL2) return gl2_poincare_unreduced(ctx.g().params[0], which);
  if (ctx.kind() == Kind::SL2) return sl2_poincare_unreduced(ctx.g().params[0], which);
  if (ctx.kind() == Kind::Wreath && ctx.g().params[0] == 2 && ctx.g().params[1] == 2)
    return UnreducedRatFunc{Polynomial(std::vector<Rational>{1, 0, -3}), {Polynomial(std::vector<Rational>{1, 0, -4})}};
  return std::nullopt;
}

std::string do_poincare(const Options& o) {
  Context ctx(o);
  const std::size_t lam = ctx.node(o.lambda);
  const std::string& m = o.method;
  if (m != "auto" && m != "cramer" && m != "character" && m != "paper")
    throw UsageError("unknown method '" + m + "' (auto, cramer, character, paper)");

  std::optional<RatFunc> cramer;
  std::optional<CharacterPoincare> character;
  std::optional<UnreducedRatFunc> paper;
  if (m == "cramer" || (m == "auto" && ctx.g().full())) cramer = poincare_cramer(ctx.adjacency(), lam);
  if (m == "character" || m == "auto") character = poincare_character(ctx.g(), ctx.v(), lam);
  if (m == "paper" || m == "auto") {
    paper = paper_form(ctx, lam);
    if (!paper && m == "paper") throw UnsupportedError("no displayed closed form for " + ctx.spec());
  }
  std::optional<RatFunc> reduced;
  auto agree = [&](const RatFunc& f, const char* name) {
    if (!reduced) reduced = f;
    else if (!(*reduced == f)) throw ConsistencyError(std::string("poincare: ") + name + " route disagrees");
  };
  if (cramer) agree(*cramer, "cramer");
  if (character) agree(character->series, "character");
  if (paper) agree(RatFunc(paper->num, paper->den()), "closed-form");

  if (m == "paper") {
    if (o.csv) return ratfunc_csv(*reduced);
    return json_text(Json{{"num", poly_text(paper->num)},
                          {"den", factor_text(paper->den_factors)},
                          {"reduced", ratfunc_json(*reduced)}});
  }
  if (o.csv) return ratfunc_csv(*reduced);
  Json j = ratfunc_json(*reduced);
  if (m == "character" || (m == "auto" && !cramer)) j["unreduced_den_degree"] = character->unreduced_den_degree;
  return json_text(j);
}

std::string do_egf(const Options& o) {
  Context ctx(o);
  const std::size_t target = ctx.node(o.target);
  EgfTruncation e;
  std::function<Count(unsigned)> check;
  if (ctx.kind() == Kind::Abelian) {
    const auto& radii = ctx.g().params;
    const auto c = abelian_tuple(radii, target);
    e = abelian_walks_egf(radii, c, o.order);
    check = [&ctx, target](unsigned k) { return walk_count_character(ctx.g(), ctx.v(), k, 0, target); };
  } else if (ctx.kind() == Kind::Wreath) {
    e = wreath_invariants_egf(ctx.g().params[0], ctx.g().params[1], o.order);
    check = [&ctx](unsigned k) { return invariant_dim(ctx.g(), ctx.v(), k); };
  } else {
    throw UnsupportedError("egf is available for abelian groups (Z_r1 x ... x Z_rn, hypercube) and Z_r wr S_n");
  }
  for (unsigned k = 0; k <= o.order; ++k)
    if (e.coeffs[k] != Rational(check(k)))
      throw ConsistencyError("egf: k! coefficient at k = " + std::to_string(k) + " differs from the walk count");
  if (o.csv) {
    std::string s = csv_row({"k", "coeff"});
    for (unsigned k = 0; k <= o.order; ++k) s += csv_row({std::to_string(k), e.coeffs[k].get_str()});
    return s;
  }
  return json_text(to_json(e));
}

std::string do_bratteli(const Options& o) {
  Context ctx(o);
  ctx.require_full("the Bratteli diagram");
  const BratteliDiagram d = bratteli(ctx.g(), ctx.v(), o.levels);
  if (o.format == "dot") return bratteli_dot(d);
  if (o.format != "json") throw UsageError("unknown format '" + o.format + "' (json, dot)");
  if (o.csv) {
    std::string s = csv_row({"level", "lambda", "multiplicity"});
    for (std::size_t k = 0; k < d.levels.size(); ++k)
      for (std::size_t l = 0; l < d.labels.size(); ++l) s += csv_row({std::to_string(k), d.labels[l], d.levels[k][l].get_str()});
    return s;
  }
  return json_text(to_json(d));
}

std::string do_quiver(const Options& o) {
  Context ctx(o);
  const WalkMatrix& a = ctx.adjacency();
  const auto labels = ctx.labels();
  if (o.format == "dot") return quiver_dot(a, labels);
  if (o.format != "json") throw UsageError("unknown format '" + o.format + "' (json, dot)");
  if (o.csv) {
    std::vector<std::string> header{""};
    header.insert(header.end(), labels.begin(), labels.end());
    std::string s = csv_row(header);
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::vector<std::string> row{labels[i]};
      for (std::size_t j = 0; j < a.size(); ++j) row.push_back(a(i, j).get_str());
      s += csv_row(row);
    }
    return s;
  }
  return json_text(Json{{"group", to_json(ctx.g(), ctx.v())}, {"quiver", to_json(a, labels)}});
}

std::string do_diagalg(const Options& o) {
  Context ctx(o);
  if (ctx.kind() != Kind::Abelian)
    throw UnsupportedError("diagalg needs Z_r1 x ... x Z_rn with its coordinate module (n >= 2, or hypercube)");
  if (o.list && o.count) throw UsageError("--list and --count are exclusive");
  const auto& radii = ctx.g().params;
  std::optional<std::vector<int>> target;
  if (!o.target.empty()) target = abelian_tuple(radii, ctx.node(o.target));

  const Count n = count_basis(radii, o.k, target);
  Count check = 0;
  for (std::size_t idx = 0; idx < ctx.g().irreps.size(); ++idx) {
    const auto c = abelian_tuple(radii, idx);
    if (target && c != *target) continue;
    const Count d = abelian_walks(radii, o.k, c);
    check += d * d;
  }
  if (n != check) throw ConsistencyError("diagalg: basis count " + n.get_str() + " vs sum of squares " + check.get_str());

  if (!o.list) {
    if (o.csv) return csv_row({"count"}) + csv_row({n.get_str()});
    return json_text(Json{{"count", n.get_str()}});
  }
  if (n > kMaxListedElements)
    throw UnsupportedError("basis has " + n.get_str() + " elements; --list is limited to " +
                           std::to_string(kMaxListedElements));
  std::string csv = csv_row({"bottom", "top"});
  Json elements = Json::array();
  for_each_basis_element(radii, o.k, target, [&](const DiagramElement& e) {
    if (o.csv) csv += csv_row({word_text(e.bottom), word_text(e.top)});
    else elements.push_back(to_json(e));
  });
  if (o.csv) return csv;
  return json_text(Json{{"count", n.get_str()}, {"elements", elements}});
}

std::string do_verify(const Options& o, bool& failed) {
  const auto results = run_suite(o.suite);
  failed = std::any_of(results.begin(), results.end(), [](const CheckResult& r) { return !r.pass; });
  if (o.csv) {
    std::string s = csv_row({"suite", "name", "pass", "detail"});
    for (const auto& r : results) s += csv_row({r.suite, r.name, r.pass ? "true" : "false", r.detail});
    return s;
  }
  Json checks = Json::array();
  for (const auto& r : results)
    checks.push_back(Json{{"suite", r.suite}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  return json_text(Json{{"suite", o.suite}, {"passed", !failed}, {"checks", checks}});
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact walk counts on McKay quivers, tensor-power invariants and Poincare series", "tensor-walks"};
  app.require_subcommand(1, 1);
  Options o;

  auto common = [&](CLI::App* s, bool needs_group = true) {
    auto* g = s->add_option("--group,-g", o.group, "group spec, e.g. Z10, Z4xZ2, S4, Z2wrS3, GL2(3), paley(13)");
    if (needs_group) g->required();
    s->add_option("--module,-m", o.module, "module: default (V) or steinberg");
    s->add_flag("--csv", o.csv, "CSV instead of JSON");
  };

  auto* walks = app.add_subcommand("walks", "number of k-step walks from one irreducible to another");
  common(walks);
  walks->add_option("--k", o.k, "walk length")->required();
  walks->add_option("--from", o.from, "start node (default: trivial)");
  walks->add_option("--to", o.to, "end node (default: trivial)");
  walks->add_option("--method", o.method, "auto, matrix, character or closed");

  auto* dims = app.add_subcommand("dims", "multiplicities of every irreducible in the k-th tensor power");
  common(dims);
  dims->add_option("--k", o.k, "tensor power")->required();
  dims->add_option("--from", o.from, "start node (default: trivial)");

  auto* inv = app.add_subcommand("invariants", "dimensions of invariants for k = 0..K");
  common(inv);
  inv->add_option("--k", o.k, "largest tensor power")->required();
  inv->add_option("--method", o.method, "auto, matrix, character or closed");
  inv->add_flag("--centralizer", o.centralizer, "centralizer-algebra dimensions instead");

  auto* poin = app.add_subcommand("poincare", "Poincare series as a reduced rational function");
  common(poin);
  poin->add_option("--lambda", o.lambda, "target irreducible (default: trivial)");
  poin->add_option("--method", o.method, "auto, cramer, character or paper");

  auto* egf = app.add_subcommand("egf", "exponential generating function, k! times coefficients");
  common(egf);
  egf->add_option("--order", o.order, "truncation order");
  egf->add_option("--target", o.target, "target irreducible (default: trivial)");

  auto* brat = app.add_subcommand("bratteli", "Bratteli diagram levels 0..K");
  common(brat);
  brat->add_option("--levels", o.levels, "number of levels");
  brat->add_option("--format", o.format, "json or dot");

  auto* quiv = app.add_subcommand("quiver", "McKay quiver adjacency");
  common(quiv);
  quiv->add_option("--format", o.format, "json or dot");

  auto* diag = app.add_subcommand("diagalg", "diagram-algebra basis for an abelian group");
  common(diag);
  diag->add_option("--k", o.k, "word length")->required();
  diag->add_option("--target", o.target, "restrict to one target irreducible");
  diag->add_flag("--list", o.list, "list the basis");
  diag->add_flag("--count", o.count, "count the basis (default)");

  auto* ver = app.add_subcommand("verify", "run the cross-check suites");
  ver->add_option("--suite", o.suite, "all, cyclic, abelian, symmetric, paley, wreath, linear, engines, diagram, gauss");
  ver->add_flag("--csv", o.csv, "CSV instead of JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    std::string text;
    bool failed = false;
    if (walks->parsed()) text = do_walks(o);
    else if (dims->parsed()) text = do_dims(o);
    else if (inv->parsed()) text = do_invariants(o);
    else if (poin->parsed()) text = do_poincare(o);
    else if (egf->parsed()) text = do_egf(o);
    else if (brat->parsed()) text = do_bratteli(o);
    else if (quiv->parsed()) text = do_quiver(o);
    else if (diag->parsed()) text = do_diagalg(o);
    else text = do_verify(o, failed);
    out << text << std::flush;
    return failed ? 4 : 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << "\n";
    return 3;
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace tensorwalks
