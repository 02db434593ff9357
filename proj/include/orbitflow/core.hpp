#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace orbitflow {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// chart-level failures
struct SingularMetric : Error { using Error::Error; };
struct OutOfChart : Error { using Error::Error; };
struct StencilUnderflow : Error { using Error::Error; };
struct ChartMismatch : Error { using Error::Error; };

// model construction failures
struct NonPositiveRadius : Error { using Error::Error; };
struct InvalidCap : Error { using Error::Error; };
struct DegenerateWarping : Error { using Error::Error; };
struct NonPositiveTau : Error { using Error::Error; };

// deformation-calculus failures
struct PoleEvaluation : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct IndefinitePerturbation : Error { using Error::Error; };
struct DistanceFieldUnavailable : Error { using Error::Error; };

// flow failures
struct ZeroKappaZeroEps : Error { using Error::Error; };
struct StepUnderflow : Error { using Error::Error; };
struct NotPositiveInitial : Error { using Error::Error; };
struct NoFeasibleEps : Error { using Error::Error; };

// export failures
struct IoError : Error { using Error::Error; };

/// Raised when a profile cannot be realized as a surface of revolution.
/// Carries the offending parameter interval.
struct NotEmbeddable : Error {
  NotEmbeddable(const std::string& msg, double lo, double hi)
      : Error(msg), interval_lo(lo), interval_hi(hi) {}
  double interval_lo;
  double interval_hi;
};

// configuration / harness failures
struct ConfigError : Error { using Error::Error; };

/// Uniform double in [lo, hi) built from the top 53 bits of the generator.
/// Hand-rolled so that seeded runs are bit-identical across standard
/// library implementations.
inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + u * (hi - lo);
}

}  // namespace orbitflow
