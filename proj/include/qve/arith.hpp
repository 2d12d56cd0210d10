#pragma once

#include <cstdint>
#include <vector>

#include "qve/specfun.hpp"

namespace qve {

// Multiplicative coefficient table (mu or alpha = mu * mu), indexed 1..n.
struct CoeffTable {
    std::vector<int16_t> values; // values[k] for 0 <= k <= n; values[0] = 0
    int64_t n = 0;

    int value(int64_t k) const { return values[static_cast<size_t>(k)]; }
};

// Moebius function mu(k) for 1 <= k <= n.  Capacity-guarded at n = 1e9.
CoeffTable moebius_sieve(int64_t n);

// alpha = mu * mu (Dirichlet convolution): alpha(p) = -2, alpha(p^2) = 1,
// alpha(p^j) = 0 for j >= 3, multiplicative.
CoeffTable alpha_sieve(int64_t n);

// Smoothed Dirichlet polynomial sum_{k <= x^{1.1}} mu(k) k^{-1-2it} e^{-k/x},
// approximating 1/zeta(1+2it).  Requires t >= 10, x >= 2.
ComplexValue afe_inv_zeta(double t, double x);

// Same with alpha(k) in place of mu(k), approximating 1/zeta(1+2it)^2.
ComplexValue afe_inv_zeta_sq(double t, double x);

} // namespace qve
