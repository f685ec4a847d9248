#include "tensorwalks/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace tensorwalks {

namespace {

Json rational_list(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(q.get_str());
  return out;
}

Json word_json(const Word& w) {
  Json out = Json::array();
  for (int x : w) out.push_back(x);
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string html_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

}  // namespace

Json count_list(const std::vector<Count>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(c.get_str());
  return out;
}

Json to_json(const GroupData& g, const ModuleChar& v) {
  Json j;
  j["name"] = g.name;
  j["order"] = g.order.get_str();
  j["tier"] = g.full() ? "FullTable" : "InvariantOnly";
  Json classes = Json::array();
  for (const auto& c : g.classes) classes.push_back(Json{{"label", c.label}, {"size", c.size.get_str()}});
  j["classes"] = std::move(classes);
  Json chi = Json::array();
  for (const auto& x : v.values) chi.push_back(x.to_string());
  j["chi_V"] = std::move(chi);
  return j;
}

Json to_json(const WalkMatrix& a, const std::vector<std::string>& labels) {
  Json j;
  j["labels"] = labels;
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < a.size(); ++k) row.push_back(a(i, k).get_str());
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j;
}

Json to_json(const BratteliDiagram& d) {
  Json j;
  j["labels"] = d.labels;
  Json levels = Json::array();
  for (const auto& level : d.levels) levels.push_back(count_list(level));
  j["levels"] = std::move(levels);
  j["level_dims"] = count_list(d.level_dims);
  j["real_module"] = d.real_module;
  j["edges"] = to_json(d.edges, d.labels)["matrix"];
  return j;
}

Json to_json(const RatFunc& f) {
  return Json{{"num", rational_list(f.num().coeffs())}, {"den", rational_list(f.den().coeffs())}};
}

Json to_json(const EgfTruncation& e) { return Json{{"order", e.order}, {"coeffs", rational_list(e.coeffs)}}; }

Json to_json(const DiagramElement& e) { return Json{{"bottom", word_json(e.bottom)}, {"top", word_json(e.top)}}; }

std::string factor_text(const std::vector<Polynomial>& factors) {
  std::string out;
  for (const auto& f : factors) {
    std::string s = f.to_string("t");
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    out += "(" + s + ")";
  }
  return out;
}

std::string quiver_dot(const WalkMatrix& a, const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << "digraph Q {\n";
  for (std::size_t i = 0; i < labels.size(); ++i) os << "  n" << i << " [label=\"" << dot_escape(labels[i]) << "\"];\n";
  auto edge = [&](std::size_t i, std::size_t k, const Count& m, bool undirected) {
    os << "  n" << i << " -> n" << k;
    std::vector<std::string> attrs;
    if (undirected) attrs.push_back("dir=none");
    if (m > 1) attrs.push_back("label=\"" + m.get_str() + "\"");
    if (!attrs.empty()) {
      os << " [";
      for (std::size_t x = 0; x < attrs.size(); ++x) os << (x ? ", " : "") << attrs[x];
      os << "]";
    }
    os << ";\n";
  };
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a(i, k) == 0) continue;
      if (a(i, k) == a(k, i)) {
        if (k >= i) edge(i, k, a(i, k), true);
      } else {
        edge(i, k, a(i, k), false);
      }
    }
  os << "}\n";
  return os.str();
}

std::string bratteli_dot(const BratteliDiagram& d) {
  std::ostringstream os;
  os << "digraph B {\n  rankdir=TB;\n";
  for (std::size_t k = 0; k < d.levels.size(); ++k) {
    os << "  { rank=same;";
    for (std::size_t l = 0; l < d.labels.size(); ++l) {
      const Count& m = d.levels[k][l];
      if (m == 0) continue;
      os << " L" << k << "_" << l << " [label=<" << html_escape(d.labels[l]) << "<sub>" << m.get_str() << "</sub>>];";
    }
    os << " }\n";
  }
  for (std::size_t k = 0; k + 1 < d.levels.size(); ++k)
    for (std::size_t i = 0; i < d.labels.size(); ++i) {
      if (d.levels[k][i] == 0) continue;
      for (std::size_t l = 0; l < d.labels.size(); ++l) {
        const Count& a = d.edges(i, l);
        if (a == 0 || d.levels[k + 1][l] == 0) continue;
        os << "  L" << k << "_" << i << " -> L" << k + 1 << "_" << l;
        if (a > 1) os << " [label=\"" << a.get_str() << "\"]";
        os << ";\n";
      }
    }
  os << "}\n";
  return os.str();
}

}  // namespace tensorwalks
