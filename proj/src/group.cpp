#include "cylrig/group.hpp"

#include <stdexcept>

#include "cylrig/error.hpp"

namespace cylrig {

SymmetryOp SymmetryOp::identity() { return {}; }

SymmetryOp SymmetryOp::inversion() {
  return {OpKind::inversion, 2, {-1, -1, -1}, true};
}

SymmetryOp SymmetryOp::sigma_axial() {
  return {OpKind::sigma_axial, 1, {1, -1, 1}, true};
}

SymmetryOp SymmetryOp::sigma_horizontal() {
  return {OpKind::sigma_horizontal, 1, {1, 1, -1}, true};
}

SymmetryOp SymmetryOp::halfturn_perp() {
  return {OpKind::halfturn_perp, 2, {1, -1, -1}, true};
}

SymmetryOp SymmetryOp::halfturn_perp_y() {
  return {OpKind::halfturn_perp, 2, {-1, 1, -1}, true};
}

SymmetryOp SymmetryOp::rotation_z(int n) {
  if (n < 2) throw std::invalid_argument("rotation_z needs n >= 2");
  if (n == 2) return {OpKind::rotation_z, 2, {-1, -1, 1}, true};
  return {OpKind::rotation_z, n, {1, 1, 1}, false};
}

SymmetryOp SymmetryOp::improper_z(int n) {
  if (n < 2) throw std::invalid_argument("improper_z needs n >= 2");
  if (n == 2) return inversion();
  return {OpKind::improper_z, n, {1, 1, -1}, false};
}

std::optional<int> SymmetryOp::trace() const {
  switch (kind) {
    case OpKind::identity:
      return 3;
    case OpKind::halfturn_perp:
      return -1;
    case OpKind::sigma_axial:
    case OpKind::sigma_horizontal:
      return 1;
    case OpKind::inversion:
      return -3;
    case OpKind::rotation_z:
      // 1 + 2cos(2pi/n)
      switch (n) {
        case 2: return -1;
        case 3: return 0;
        case 4: return 1;
        case 6: return 2;
        default: return std::nullopt;
      }
    case OpKind::improper_z:
      // -1 + 2cos(2pi/n)
      switch (n) {
        case 3: return -2;
        case 4: return -1;
        case 6: return 0;
        default: return std::nullopt;
      }
  }
  return std::nullopt;
}

bool SymmetryOp::has_cylinder_fixed_points() const {
  return kind != OpKind::rotation_z && kind != OpKind::improper_z &&
         kind != OpKind::inversion;
}

std::string SymmetryOp::describe() const {
  switch (kind) {
    case OpKind::identity: return "identity";
    case OpKind::rotation_z: return "rotation_z(" + std::to_string(n) + ")";
    case OpKind::halfturn_perp: return "halfturn_perp";
    case OpKind::sigma_axial: return "sigma_axial";
    case OpKind::sigma_horizontal: return "sigma_horizontal";
    case OpKind::improper_z: return "improper_z(" + std::to_string(n) + ")";
    case OpKind::inversion: return "inversion";
  }
  return "?";
}

std::string group_name_str(GroupName g) {
  switch (g) {
    case GroupName::trivial: return "trivial";
    case GroupName::Ci: return "Ci";
    case GroupName::Cs_axial: return "Cs_axial";
    case GroupName::Cs_horizontal: return "Cs_horizontal";
    case GroupName::C2: return "C2";
    case GroupName::C2v: return "C2v";
    case GroupName::C2h: return "C2h";
    case GroupName::C2z: return "C2z";
  }
  return "?";
}

std::optional<GroupName> parse_group_name(const std::string& s) {
  for (GroupName g : {GroupName::trivial, GroupName::Ci, GroupName::Cs_axial,
                      GroupName::Cs_horizontal, GroupName::C2, GroupName::C2v,
                      GroupName::C2h, GroupName::C2z}) {
    if (group_name_str(g) == s) return g;
  }
  return std::nullopt;
}

GroupSpec GroupSpec::make(GroupName name) {
  GroupSpec g;
  g.name = name;
  g.elements.push_back(SymmetryOp::identity());
  g.labels.push_back("id");
  auto add = [&](SymmetryOp op, const char* label) {
    g.elements.push_back(op);
    g.labels.push_back(label);
  };
  switch (name) {
    case GroupName::trivial:
      break;
    case GroupName::Ci:
      add(SymmetryOp::inversion(), "inv");
      break;
    case GroupName::Cs_axial:
      add(SymmetryOp::sigma_axial(), "sigma");
      break;
    case GroupName::Cs_horizontal:
      add(SymmetryOp::sigma_horizontal(), "sigma_p");
      break;
    case GroupName::C2:
      add(SymmetryOp::halfturn_perp(), "c2p");
      break;
    case GroupName::C2v:
      add(SymmetryOp::sigma_axial(), "sigma");
      add(SymmetryOp::sigma_horizontal(), "sigma_p");
      add(SymmetryOp::halfturn_perp(), "c2p");
      break;
    case GroupName::C2h:
      // The half-turn axis must be perpendicular to the mirror for closure.
      add(SymmetryOp::sigma_axial(), "sigma");
      add(SymmetryOp::halfturn_perp_y(), "c2p");
      add(SymmetryOp::inversion(), "inv");
      break;
    case GroupName::C2z:
      add(SymmetryOp::rotation_z(2), "c2z");
      break;
  }
  return g;
}

int GroupSpec::index_of_label(const std::string& label) const {
  for (size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return static_cast<int>(i);
  }
  return -1;
}

int GroupSpec::index_of_kind(OpKind kind) const {
  for (size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].kind == kind) return static_cast<int>(i);
  }
  return -1;
}

int GroupSpec::compose(int a, int b) const {
  const auto& x = elements.at(a);
  const auto& y = elements.at(b);
  if (!x.exact || !y.exact) throw InternalError("compose on non-exact op");
  std::array<int, 3> d{x.diag[0] * y.diag[0], x.diag[1] * y.diag[1],
                       x.diag[2] * y.diag[2]};
  for (size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].exact && elements[i].diag == d) return static_cast<int>(i);
  }
  throw InternalError("group " + group_name_str(name) + " is not closed");
}

std::vector<std::string> GroupSpec::generator_labels() const {
  switch (name) {
    case GroupName::C2v: return {"sigma", "sigma_p"};
    case GroupName::C2h: return {"sigma", "c2p"};
    default: return {labels.begin() + 1, labels.end()};
  }
}

bool GroupSpec::swaps_trees() const {
  return name == GroupName::Ci || name == GroupName::Cs_axial ||
         name == GroupName::Cs_horizontal;
}

bool GroupSpec::constructible() const {
  return name == GroupName::Ci || name == GroupName::Cs_axial ||
         name == GroupName::Cs_horizontal || name == GroupName::C2;
}

std::string GroupSpec::family() const {
  switch (name) {
    case GroupName::Cs_axial:
    case GroupName::Cs_horizontal:
      return "Cs";
    default:
      return group_name_str(name);
  }
}

}  // namespace cylrig
