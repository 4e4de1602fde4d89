#ifndef SUBFINSLER_LIE_CORE_HPP
#define SUBFINSLER_LIE_CORE_HPP

#include <vector>

#include "subfinsler/structure_constants.hpp"
#include "subfinsler/subspace.hpp"

namespace subfinsler {

/// span{ [x, b] : b basis of s }.
Subspace ad_image(const StructureConstants& c, const Vec4& x, const Subspace& s);

/// Bracket closure test: iterate S <- S + [S, S] until stable and compare
/// against the full algebra.
bool generates(const StructureConstants& c, const Subspace& q);

/// { x : [x, q] ⊂ q }.
Subspace normalizer(const StructureConstants& c, const Subspace& q);

/// { x : [x, s] = 0 }.
Subspace centralizer(const StructureConstants& c, const Subspace& s);

/// Derived subspace [g, g].
Subspace derived_subspace(const StructureConstants& c);

/// A maximal family of ad-invariant lines sharing one character. When the
/// family subspace is one-dimensional the line is isolated; otherwise every
/// line inside `space` is invariant with the same character (e.g. central
/// planes).
struct IdealLineFamily {
  Subspace space;
  Vec4 direction;  ///< canonical representative line
  Vec4 character;  ///< lambda with [x, v] = lambda(x) v, evaluated on E1..E4
  bool central = false;
};

/// All real lines <v> with [Ej, v] ∥ v for every j, grouped into families of
/// a common character. Candidate eigenvalues come per operator; each family
/// is verified directly against all four ad-operators.
std::vector<IdealLineFamily> one_dim_ideals(const StructureConstants& c);

/// Existence criterion for a generating hyperplane: false iff the algebra is
/// commutative or has a commutative 3-dim ideal I together with z acting as
/// the identity on I.
bool admits_generating_hyperplane(const StructureConstants& c);

} // namespace subfinsler

#endif
