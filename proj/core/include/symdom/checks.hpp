#pragma once

#include "symdom/fibre.hpp"
#include "symdom/intertwine.hpp"
#include "symdom/report.hpp"

namespace symdom {

/// factorization_check over random (g, z) plus exact nilpotency S(w)^{n+1} = 0.
CheckRecord check_factorization(int d, int n, int samples, std::uint64_t seed, double tol);

/// I_lambda (K_w q) by Cauchy differentiation against the closed form, as a
/// ratio that must not depend on the sample point.
CheckRecord check_intertwiner_on_kernel(const LittleKernelParams& p, int n, int samples, std::uint64_t seed,
                                        double tol);

/// big action o I_lambda = I_lambda o little action on random polynomial sections.
CheckRecord check_intertwining(const BigKernelParams& p, int lambda, int samples, std::uint64_t seed, double tol);

/// Selected kappa variant and its error against the oracle.
CheckRecord check_kappa(const BigKernelParams& p, double tol);

}  // namespace symdom
