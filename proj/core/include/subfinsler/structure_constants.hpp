#ifndef SUBFINSLER_STRUCTURE_CONSTANTS_HPP
#define SUBFINSLER_STRUCTURE_CONSTANTS_HPP

#include <array>

#include "subfinsler/common.hpp"

namespace subfinsler {

/// Structure tensor of a four-dimensional real Lie algebra in a fixed basis
/// (E1..E4): [Ei, Ej] = sum_k c(i,j,k) Ek. Only the pairs i < j are stored;
/// antisymmetry in (i, j) is supplied by the accessors. Indices are 0-based
/// in code, 1-based in file formats and reports.
class StructureConstants {
public:
  StructureConstants() { c_.fill({0.0, 0.0, 0.0, 0.0}); }

  static constexpr int dim = 4;

  double get(int i, int j, int k) const {
    if (i == j) return 0.0;
    if (i < j) return c_[pair_index(i, j)][k];
    return -c_[pair_index(j, i)][k];
  }

  void set(int i, int j, int k, double value) {
    if (i == j) {
      if (value != 0.0) throw DomainError("structure constant with i == j must vanish");
      return;
    }
    if (i < j)
      c_[pair_index(i, j)][k] = value;
    else
      c_[pair_index(j, i)][k] = -value;
  }

  /// [x, y] in coordinates.
  Vec4 bracket(const Vec4& x, const Vec4& y) const;

  /// Matrix of ad(x): column j is [x, Ej].
  Mat4 ad(const Vec4& x) const;

  double max_abs() const;

  /// Structure tensor written in the basis given by the columns of frame.
  /// frame must be invertible.
  StructureConstants change_of_basis(const Mat4& frame) const;

private:
  static int pair_index(int i, int j) {
    static constexpr int idx[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    return idx[i][j];
  }

  std::array<std::array<double, 4>, 6> c_;
};

/// Max over basis triples i < j < k of the sup-norm of the Jacobi cyclic sum
/// [Ei,[Ej,Ek]] + [Ej,[Ek,Ei]] + [Ek,[Ei,Ej]]. Zero for a valid Lie algebra.
double check_jacobi(const StructureConstants& c);

} // namespace subfinsler

#endif
