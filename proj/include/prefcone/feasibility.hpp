#pragma once

#include "prefcone/linalg.hpp"

namespace prefcone {

/// Outcome of the nonnegative-combination problem
///   exists lambda >= 0 with  sum_i lambda_i * generators[i] = target ?
/// Exactly one of the two certificate fields is populated:
///  - member: `coefficients` (size = #generators) with all entries >= 0 and
///    sum coefficients[i] * generators[i] == target;
///  - not member: `farkas` (size = dim) with farkas . generators[i] >= 0 for
///    every i and farkas . target < 0.
struct ConicCertificate {
    bool member = false;
    RVector coefficients;
    RVector farkas;
};

/// Exact phase-1 simplex (Bland's rule, deterministic). Generators must all
/// have the same dimension as the target.
ConicCertificate conic_express(const RMatrix& generators, const RVector& target);

/// Re-check a certificate by plain arithmetic; used by tests and the
/// certificate re-validation command.
bool check_combination(const RMatrix& generators, const RVector& target,
                       const RVector& coefficients);
bool check_farkas(const RMatrix& generators, const RVector& target,
                  const RVector& farkas);

} // namespace prefcone
