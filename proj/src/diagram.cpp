#include "tensorwalks/diagram.hpp"

#include <map>
#include <sstream>

#include "tensorwalks/errors.hpp"
#include "tensorwalks/group.hpp"

namespace tensorwalks {

namespace {

void require_radii(const std::vector<int>& radii) {
  if (radii.empty()) throw UsageError("diagram: no factors");
  for (int r : radii)
    if (r < 1) throw UsageError("diagram: radii must be positive");
}

std::vector<int> require_target(const std::vector<int>& radii, const std::vector<int>& c) {
  if (c.size() != radii.size()) throw UsageError("diagram: target has the wrong length");
  std::vector<int> out(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) out[j] = static_cast<int>(mod_floor(c[j], radii[j]));
  return out;
}

// Every word in [1,n]^k in lexicographic order.
std::vector<Word> all_words(int n, unsigned k) {
  std::vector<Word> out;
  Word w(k, 1);
  for (;;) {
    out.push_back(w);
    std::size_t pos = k;
    while (pos > 0 && w[pos - 1] == n) w[--pos] = 1;
    if (pos == 0) break;
    ++w[pos - 1];
  }
  return out;
}

// Words grouped by target, each group in lexicographic order.
std::map<std::vector<int>, std::vector<Word>> words_by_target(const std::vector<int>& radii, unsigned k) {
  std::map<std::vector<int>, std::vector<Word>> out;
  for (auto& w : all_words(static_cast<int>(radii.size()), k)) out[word_target(radii, w)].push_back(std::move(w));
  return out;
}

}  // namespace

std::vector<int> word_target(const std::vector<int>& radii, const Word& w) {
  std::vector<int> c(radii.size(), 0);
  for (int letter : w) {
    if (letter < 1 || letter > static_cast<int>(radii.size())) throw UsageError("diagram: letter out of range");
    auto& x = c[static_cast<std::size_t>(letter - 1)];
    x = (x + 1) % radii[static_cast<std::size_t>(letter - 1)];
  }
  return c;
}

bool validate(const DiagramElement& e) {
  if (e.radii.empty() || e.bottom.size() != e.top.size()) return false;
  const int n = static_cast<int>(e.radii.size());
  for (int r : e.radii)
    if (r < 1) return false;
  std::vector<std::int64_t> diff(e.radii.size(), 0);
  for (int x : e.bottom) {
    if (x < 1 || x > n) return false;
    ++diff[static_cast<std::size_t>(x - 1)];
  }
  for (int x : e.top) {
    if (x < 1 || x > n) return false;
    --diff[static_cast<std::size_t>(x - 1)];
  }
  for (std::size_t j = 0; j < diff.size(); ++j)
    if (mod_floor(diff[j], e.radii[j]) != 0) return false;
  return true;
}

void for_each_basis_element(const std::vector<int>& radii, unsigned k, const std::optional<std::vector<int>>& target,
                            const std::function<void(const DiagramElement&)>& visit) {
  require_radii(radii);
  const auto groups = words_by_target(radii, k);
  std::optional<std::vector<int>> want;
  if (target) want = require_target(radii, *target);
  // Lexicographic in (bottom, top): walk bottoms in order, tops from the
  // bottom's own target group.
  DiagramElement e{radii, {}, {}};
  for (const auto& bottom : all_words(static_cast<int>(radii.size()), k)) {
    const auto c = word_target(radii, bottom);
    if (want && c != *want) continue;
    e.bottom = bottom;
    for (const auto& top : groups.at(c)) {
      e.top = top;
      visit(e);
    }
  }
}

std::vector<DiagramElement> enumerate_basis(const std::vector<int>& radii, unsigned k,
                                            const std::optional<std::vector<int>>& target) {
  std::vector<DiagramElement> out;
  for_each_basis_element(radii, k, target, [&](const DiagramElement& e) { out.push_back(e); });
  return out;
}

Count count_basis(const std::vector<int>& radii, unsigned k, const std::optional<std::vector<int>>& target) {
  require_radii(radii);
  std::map<std::vector<int>, Count> counts;
  for (const auto& w : all_words(static_cast<int>(radii.size()), k)) counts[word_target(radii, w)] += 1;
  if (target) {
    const auto it = counts.find(require_target(radii, *target));
    return it == counts.end() ? Count(0) : Count(it->second * it->second);
  }
  Count total = 0;
  for (const auto& [c, m] : counts) total += m * m;
  return total;
}

std::optional<DiagramElement> compose(const DiagramElement& e1, const DiagramElement& e2) {
  if (e1.radii != e2.radii) throw UsageError("compose: radii differ");
  if (e1.k() != e2.k()) throw UsageError("compose: word lengths differ");
  if (e2.top != e1.bottom) return std::nullopt;
  return DiagramElement{e1.radii, e2.bottom, e1.top};
}

std::optional<Word> action_on_tensor(const DiagramElement& e, const Word& w) {
  if (w.size() != e.k()) throw UsageError("action_on_tensor: word length differs");
  if (w != e.bottom) return std::nullopt;
  return e.top;
}

namespace {

std::string join_row(const Word& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i];
  return os.str();
}

// Nodes per label: "t3" is the third top node, "b4" the fourth bottom node.
std::map<int, std::vector<std::string>> label_blocks(const DiagramElement& e) {
  std::map<int, std::vector<std::string>> blocks;
  for (std::size_t i = 0; i < e.top.size(); ++i) blocks[e.top[i]].push_back("t" + std::to_string(i + 1));
  for (std::size_t i = 0; i < e.bottom.size(); ++i) blocks[e.bottom[i]].push_back("b" + std::to_string(i + 1));
  return blocks;
}

}  // namespace

std::string render_text(const DiagramElement& e) {
  std::ostringstream os;
  os << "top:    " << join_row(e.top) << "\n";
  os << "bottom: " << join_row(e.bottom) << "\n";
  os << "blocks:";
  for (const auto& [label, nodes] : label_blocks(e)) {
    os << " " << label << "={";
    for (std::size_t i = 0; i < nodes.size(); ++i) os << (i ? "," : "") << nodes[i];
    os << "}";
  }
  os << "\n";
  return os.str();
}

std::string render_dot(const DiagramElement& e) {
  std::ostringstream os;
  os << "graph E {\n";
  os << "  node [shape=circle, fixedsize=true, width=0.3];\n";
  for (const char* row : {"t", "b"}) {
    const Word& w = row[0] == 't' ? e.top : e.bottom;
    os << "  { rank=same;";
    for (std::size_t i = 0; i < w.size(); ++i) os << " " << row << i + 1 << " [label=\"" << w[i] << "\"];";
    os << " }\n";
  }
  for (std::size_t i = 0; i + 1 < e.top.size(); ++i)
    os << "  t" << i + 1 << " -- t" << i + 2 << " [style=invis];\n";
  for (std::size_t i = 0; i + 1 < e.bottom.size(); ++i)
    os << "  b" << i + 1 << " -- b" << i + 2 << " [style=invis];\n";
  for (const auto& [label, nodes] : label_blocks(e))
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) os << "  " << nodes[i] << " -- " << nodes[i + 1] << ";\n";
  os << "}\n";
  return os.str();
}

bool equivariance_check(const std::vector<int>& radii, unsigned k) {
  require_radii(radii);
  Count order = 1;
  for (int r : radii) order *= r;
  const auto words = all_words(static_cast<int>(radii.size()), k);
  for (std::size_t ai = 0; ai < order.get_ui(); ++ai) {
    const auto a = abelian_tuple(radii, ai);
    for (const auto& w : words) {
      CycNum from_word(1L);
      for (int letter : w) {
        const auto j = static_cast<std::size_t>(letter - 1);
        from_word *= CycNum::root_of_unity(radii[j], a[j]);
      }
      const auto c = word_target(radii, w);
      CycNum from_target(1L);
      for (std::size_t j = 0; j < radii.size(); ++j)
        from_target *= CycNum::root_of_unity(radii[j], static_cast<std::int64_t>(a[j]) * c[j]);
      if (!(from_word == from_target)) return false;
    }
  }
  return true;
}

}  // namespace tensorwalks
