#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace cylrig {

enum class OpKind {
  identity,
  rotation_z,
  halfturn_perp,
  sigma_axial,
  sigma_horizontal,
  improper_z,
  inversion,
};

// A cylinder-preserving isometry. Cylinder axis is z. The exact ops are
// diagonal sign matrices stored in `diag`.
struct SymmetryOp {
  OpKind kind = OpKind::identity;
  int n = 1;  // only meaningful for rotation_z / improper_z
  std::array<int, 3> diag{1, 1, 1};
  bool exact = true;

  static SymmetryOp identity();
  static SymmetryOp inversion();
  static SymmetryOp sigma_axial();       // mirror in the xz-plane
  static SymmetryOp sigma_horizontal();  // mirror in the xy-plane
  static SymmetryOp halfturn_perp();     // half-turn about the x-axis
  static SymmetryOp halfturn_perp_y();   // half-turn about the y-axis
  static SymmetryOp rotation_z(int n);
  static SymmetryOp improper_z(int n);

  // Trace of the 3x3 matrix, when it is an integer.
  std::optional<int> trace() const;
  // Whether the op has any fixed point on the cylinder.
  bool has_cylinder_fixed_points() const;
  std::string describe() const;

  bool operator==(const SymmetryOp&) const = default;
};

enum class GroupName { trivial, Ci, Cs_axial, Cs_horizontal, C2, C2v, C2h, C2z };

std::string group_name_str(GroupName g);
std::optional<GroupName> parse_group_name(const std::string& s);

struct GroupSpec {
  GroupName name = GroupName::trivial;
  std::vector<SymmetryOp> elements;  // identity first
  std::vector<std::string> labels;   // document keys: id, inv, sigma, sigma_p, c2p, c2z

  static GroupSpec make(GroupName name);

  int order() const { return static_cast<int>(elements.size()); }
  // Index of the element with the given label, or -1.
  int index_of_label(const std::string& label) const;
  int index_of_kind(OpKind kind) const;
  // Index of elements[a] * elements[b]. Only defined for exact groups.
  int compose(int a, int b) const;
  // The generator labels a document must supply.
  std::vector<std::string> generator_labels() const;
  // Ci, Cs, C2 and C2z have a single non-identity element.
  bool is_order_two() const { return order() == 2; }
  // Ci and Cs: red and blue trees are swapped. C2: each tree is invariant.
  bool swaps_trees() const;
  // Groups handled by the construction module.
  bool constructible() const;
  // Ci, Cs and C2 share a family name used for the base catalog.
  std::string family() const;
};

}  // namespace cylrig
