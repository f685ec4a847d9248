#pragma once

// Diagram basis E_gamma^beta of the centralizer algebra for a product of
// cyclic groups acting on the sum of its coordinate characters. Letters of
// the words are 1-based factor indices.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tensorwalks/exact.hpp"

namespace tensorwalks {

using Word = std::vector<int>;

struct DiagramElement {
  std::vector<int> radii;
  Word bottom;  // gamma
  Word top;     // beta
  std::size_t k() const noexcept { return bottom.size(); }
  friend bool operator==(const DiagramElement& a, const DiagramElement& b) {
    return a.radii == b.radii && a.bottom == b.bottom && a.top == b.top;
  }
};

// sum_i eps_{w_i}, componentwise mod r_j.
std::vector<int> word_target(const std::vector<int>& radii, const Word& w);

// (#gamma_i = j) = (#beta_i = j) mod r_j for every j, equal lengths, letters in range.
bool validate(const DiagramElement& e);

// Elements ordered lexicographically by (bottom, top). With a target only
// pairs whose words both reach it; without, every valid pair.
std::vector<DiagramElement> enumerate_basis(const std::vector<int>& radii, unsigned k,
                                            const std::optional<std::vector<int>>& target = std::nullopt);
// Same order, without materializing the list.
void for_each_basis_element(const std::vector<int>& radii, unsigned k, const std::optional<std::vector<int>>& target,
                            const std::function<void(const DiagramElement&)>& visit);
// Size of enumerate_basis, from word counts per target.
Count count_basis(const std::vector<int>& radii, unsigned k, const std::optional<std::vector<int>>& target = std::nullopt);

// e1 stacked on e2 (e2 applied first): nonzero iff e2.top == e1.bottom, giving
// bottom = e2.bottom, top = e1.top. Throws UsageError on a radii/length mismatch.
std::optional<DiagramElement> compose(const DiagramElement& e1, const DiagramElement& e2);

// E_gamma^beta x(w) = x(beta) if w = gamma, zero otherwise.
std::optional<Word> action_on_tensor(const DiagramElement& e, const Word& w);

// Two labelled rows (top first) and the blocks of equal-label nodes.
std::string render_text(const DiagramElement& e);
// Graphviz graph; each label class is joined as a chain through its top
// nodes left to right, then its bottom nodes left to right.
std::string render_dot(const DiagramElement& e);

// For every word w of length k and every group element a:
// prod_i w_{r_{w_i}}^{a_{w_i}} = chi_{target(w)}(a) in exact arithmetic.
bool equivariance_check(const std::vector<int>& radii, unsigned k);

}  // namespace tensorwalks
