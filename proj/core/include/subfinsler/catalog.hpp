#ifndef SUBFINSLER_CATALOG_HPP
#define SUBFINSLER_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "subfinsler/structure_constants.hpp"

namespace subfinsler {

enum class Family {
  A4g1,
  G21p2g1,
  Two_g21,
  G31pg1,
  G32pg1,
  G33pg1,
  G34a_pg1,
  G35a_pg1,
  G36pg1,
  G37pg1,
  G41,
  G42a,
  G43,
  G44,
  G45ab,
  G46ab,
  G47,
  G48a,
  G49a,
  G410,
};

/// Catalog family plus its real parameters. Parameter domains are validated
/// exactly as printed, boundaries included or excluded as stated.
struct AlgebraFamily {
  Family family;
  double alpha = 0.0;
  double beta = 0.0;

  static AlgebraFamily make(Family f, double alpha = 0.0, double beta = 0.0);
  static AlgebraFamily parse(const std::string& name, const std::vector<double>& params);

  std::string name() const;
  int param_count() const;
  void validate() const;  ///< throws DomainError outside the printed domain
};

/// Structure tensor with exactly the catalog's nonzero commutators.
StructureConstants build_algebra(const AlgebraFamily& fam);

/// Number of equivalence classes of generating 3-subspaces, with the
/// multi-valued table cells resolved by the explicit parameter conditions.
int catalog_k(const AlgebraFamily& fam);

/// All family names, in catalog order.
std::vector<std::string> family_names();

/// Representative parameter choices covering every k-resolution branch.
std::vector<AlgebraFamily> representative_instances();

} // namespace subfinsler

#endif
