#ifndef WEYR_REDUCE_HPP
#define WEYR_REDUCE_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "weyr/deformations.hpp"
#include "weyr/verify.hpp"

namespace weyr {

using FloatMatrix = Eigen::MatrixXcd;

FloatMatrix to_float(const ExactMatrix& m);

struct ReduceOptions {
    double tol = 1e-10;
    int max_iter = 50;
    double cond_cap = 1e8;
};

enum class ReduceStatus { Converged, NoConvergence, SingularTransform };

struct ReductionResult {
    FloatMatrix transform;  // S with S(0) = I
    std::vector<std::complex<double>> params;
    double residual = 0.0;  // max-norm of S^-1(A+E)S - base - pattern(params)
    int iterations = 0;
    ReduceStatus status = ReduceStatus::Converged;
};

/// Maps A+E into the deformation normal form of a miniversal template by
/// a chord-Newton iteration whose Jacobian (the augmented tangent matrix)
/// is factored once at the base point. Deterministic.
ReductionResult reduce_similarity(const Template& t, const FloatMatrix& e,
                                  const ReduceOptions& opts = {});

/// Parameter values of the linearization at the base point: the exact
/// first-order response to the perturbation direction e.
std::vector<std::complex<double>> first_order_params(const Template& t,
                                                     const FloatMatrix& e);

struct PairReductionResult {
    FloatMatrix left;   // S
    FloatMatrix right;  // R
    std::vector<std::complex<double>> params;
    double residual = 0.0;
    int iterations = 0;
    ReduceStatus status = ReduceStatus::Converged;
};

/// Experimental: same chord iteration for pairs. Pencils transform as
/// (S^-1 A R, S^-1 B R), contragredient pairs as (S^-1 A R, R^-1 B S).
PairReductionResult reduce_pair(const TemplatePair& tp, TangentKind kind,
                                const FloatMatrix& e_first,
                                const FloatMatrix& e_second,
                                const ReduceOptions& opts = {});

}  // namespace weyr

#endif
