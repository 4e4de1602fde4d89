#ifndef SUBFINSLER_COMMON_HPP
#define SUBFINSLER_COMMON_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace subfinsler {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Mat4x = Eigen::Matrix<double, 4, Eigen::Dynamic>;

/// Base class for every error the library throws.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input outside its documented domain (bad family parameters, bad body, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Requested an operation that requires a bracket-generating subspace.
class NotGenerating : public Error {
public:
  using Error::Error;
};

/// q ∩ N(q) did not come out one-dimensional at the working rank tolerance.
class DegenerateIntersection : public Error {
public:
  using Error::Error;
};

/// Fixed-step integrator error monitor tripped.
class StepTooLarge : public Error {
public:
  using Error::Error;
};

/// Caller forced a solution branch inconsistent with the discriminant.
class BranchError : public Error {
public:
  using Error::Error;
};

/// Structure constants land in the numerically ambiguous band between the
/// two dispatch branches of the support-function criterion.
class InconsistentCase : public Error {
public:
  using Error::Error;
};

/// Problem file could not be parsed into valid module inputs.
class ParseError : public Error {
public:
  using Error::Error;
};

/// Case labelling was asked for a tensor that is not a catalog entry.
class UnknownFamily : public Error {
public:
  using Error::Error;
};

/// Deterministic splitmix64-based generator. Used instead of the standard
/// distributions so that sampled values are identical across platforms and
/// so that independent sub-streams can be derived from (seed, index).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  /// Independent deterministic sub-stream for (seed, stream index).
  static Rng substream(std::uint64_t seed, std::uint64_t index) {
    Rng r(seed + 0x9e3779b97f4a7c15ULL * (index + 1));
    r.next();
    return r;
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller (no implementation-defined distributions).
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  Vec4 gaussian_vec4() {
    Vec4 v;
    for (int i = 0; i < 4; ++i) v[i] = gaussian();
    return v;
  }

private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Flip v so its first coordinate above the noise floor is positive and
/// scale it to unit Euclidean length. Makes reported directions reproducible.
inline Vec4 canonical_direction(Vec4 v) {
  const double n = v.norm();
  if (n == 0.0) return v;
  v /= n;
  const double floor = 1e-9;
  for (int i = 0; i < 4; ++i) {
    if (std::abs(v[i]) > floor) {
      if (v[i] < 0.0) v = -v;
      break;
    }
  }
  return v;
}

} // namespace subfinsler

#endif
