#pragma once

// Conjugacy-class and character data for the finite groups handled by the
// library, module characters, family builders and the spec-string parser.

#include <string>
#include <utility>
#include <vector>

#include "tensorwalks/combinat.hpp"
#include "tensorwalks/exact.hpp"

namespace tensorwalks {

enum class Tier { FullTable, InvariantOnly };

struct ClassInfo {
  std::string label;
  Count size;
  // Number of classes the originating table row stands for (GL2/SL2 rows);
  // 1 for every other family.
  int row_class_count = 1;
};

struct IrrepInfo {
  std::string label;
  Count dim;
};

struct GroupData {
  std::string name;
  std::string family;  // "cyclic", "abelian", "symmetric", "wreath", "gl2", "sl2", "trivial"
  std::vector<int> params;
  Count order;
  Tier tier = Tier::FullTable;
  std::vector<ClassInfo> classes;
  std::vector<IrrepInfo> irreps;              // FullTable only
  std::vector<std::vector<CycNum>> char_table;  // [irrep][class], FullTable only
  int exponent = 1;

  bool full() const noexcept { return tier == Tier::FullTable; }
  std::size_t class_count() const noexcept { return classes.size(); }
  std::size_t irrep_count() const noexcept { return irreps.size(); }
  // Index of an irrep by label; throws UsageError if absent.
  std::size_t irrep_index(const std::string& label) const;
};

struct ModuleChar {
  std::string label;
  std::vector<CycNum> values;  // chi_V on each class
  Count dim;
  bool self_dual = false;
};

// Builds a module character from class values and checks the identity value.
ModuleChar make_module(const GroupData& g, std::string label, std::vector<CycNum> values);

// Limits on family parameters (desk scale).
inline constexpr int kMaxAbelianOrder = 256;
inline constexpr int kMaxSymmetricN = 12;
inline constexpr int kMaxWreathN = 8;
inline constexpr int kMaxLinearQ = 13;

GroupData build_trivial();
GroupData build_cyclic(int r);
ModuleChar standard_module_cyclic(int r);
ModuleChar circulant_module(int r, const std::vector<int>& connection);
ModuleChar paley_module(int p);
std::vector<int> quadratic_residues(int p);

GroupData build_abelian(const std::vector<int>& radii);
ModuleChar coordinate_module(const std::vector<int>& radii);
// Index of the tuple a (each a_j mod r_j) in the class/irrep order of build_abelian.
std::size_t abelian_index(const std::vector<int>& radii, const std::vector<int>& a);
std::vector<int> abelian_tuple(const std::vector<int>& radii, std::size_t index);

GroupData build_symmetric(int n);
ModuleChar permutation_module(int n);
// chi_lam(mu) by Murnaghan-Nakayama.
Count sn_character(const Partition& lam, const Partition& mu);

GroupData build_wreath_invariant(int r, int n);
ModuleChar monomial_module(int r, int n);

GroupData build_gl2(int q);
std::pair<ModuleChar, ModuleChar> gl2_modules(int q);  // (V, V_q)
GroupData build_sl2(int q);
std::pair<ModuleChar, ModuleChar> sl2_modules(int q);

// sum_lam mult[lam] chi_lam over a FullTable group.
ModuleChar module_from_irreps(const GroupData& g, const std::vector<int>& mult, std::string label);

struct GroupModule {
  GroupData group;
  ModuleChar module;
  std::string spec;  // canonical spec string
};

// Parses the textual group spec, e.g. "Z4xZ2", "S4", "Z2wrS3", "GL2(3)",
// "SL2(5)@steinberg", "paley(13)", "circulant(13;1,3,4)", "hypercube(3)".
// Whitespace-insensitive. ParseError carries the byte offset; invalid
// parameters raise UsageError.
GroupModule parse_spec(const std::string& text);

}  // namespace tensorwalks
