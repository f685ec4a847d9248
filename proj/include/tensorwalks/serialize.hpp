#pragma once

// JSON and Graphviz renderings. Counts and rationals are emitted as decimal
// strings so that no consumer truncates them to 64 bits.

#include <string>
#include <vector>

#include <json.hpp>

#include "tensorwalks/diagram.hpp"
#include "tensorwalks/group.hpp"
#include "tensorwalks/quiver.hpp"
#include "tensorwalks/series.hpp"

namespace tensorwalks {

using Json = nlohmann::ordered_json;

Json to_json(const GroupData& g, const ModuleChar& v);
Json to_json(const WalkMatrix& a, const std::vector<std::string>& labels);
Json to_json(const BratteliDiagram& d);
// {"num": [...], "den": [...]} with rational-string coefficients, lowest degree first.
Json to_json(const RatFunc& f);
Json to_json(const EgfTruncation& e);
Json to_json(const DiagramElement& e);
Json count_list(const std::vector<Count>& v);

// "(1+t)(1-t)(1-3t)"
std::string factor_text(const std::vector<Polynomial>& factors);

// Quiver as a digraph: a pair with a_{nu,lam} = a_{lam,nu} is drawn once with
// dir=none, other arrows directed; multiplicities above 1 become edge labels.
std::string quiver_dot(const WalkMatrix& a, const std::vector<std::string>& labels);
// Levels 0..K; node label lam with the multiplicity as a subscript; edges
// nu -> lam between consecutive levels where both are present.
std::string bratteli_dot(const BratteliDiagram& d);

}  // namespace tensorwalks
