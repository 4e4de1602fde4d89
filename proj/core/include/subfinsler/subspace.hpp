#ifndef SUBFINSLER_SUBSPACE_HPP
#define SUBFINSLER_SUBSPACE_HPP

#include <vector>

#include "subfinsler/common.hpp"

namespace subfinsler {

constexpr double kDefaultRankTol = 1e-9;

/// Columns of V that are numerically in the kernel of M, at the relative
/// singular-value threshold rank_tol (columns are orthonormal).
Eigen::MatrixXd nullspace(const Eigen::MatrixXd& m, double rank_tol = kDefaultRankTol);

/// Linear subspace of R^4 held as an orthonormal column basis. Rank decisions
/// use singular values with the relative threshold rank_tol.
class Subspace {
public:
  Subspace() : rank_tol_(kDefaultRankTol) {}

  /// Span of the given columns; dependent columns are dropped at rank_tol.
  static Subspace span(const Mat4x& columns, double rank_tol = kDefaultRankTol);

  /// Strict constructor: throws DomainError unless the columns are
  /// independent at rank_tol.
  static Subspace from_columns(const Mat4x& columns, double rank_tol = kDefaultRankTol);

  static Subspace zero(double rank_tol = kDefaultRankTol) { return Subspace(rank_tol); }
  static Subspace line(const Vec4& v, double rank_tol = kDefaultRankTol);
  static Subspace full(double rank_tol = kDefaultRankTol);

  int dim() const { return static_cast<int>(basis_.cols()); }
  double rank_tol() const { return rank_tol_; }

  /// Orthonormal basis, one column per dimension.
  const Mat4x& basis() const { return basis_; }
  Vec4 basis_vector(int i) const { return basis_.col(i); }

  /// Orthogonal projector onto the subspace.
  Mat4 projector() const;

  bool contains(const Vec4& v) const;
  bool contains(const Subspace& other) const;

  /// Component of v orthogonal to the subspace.
  Vec4 residual(const Vec4& v) const;

private:
  explicit Subspace(double rank_tol) : basis_(4, 0), rank_tol_(rank_tol) {}

  Mat4x basis_;
  double rank_tol_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

} // namespace subfinsler

#endif
