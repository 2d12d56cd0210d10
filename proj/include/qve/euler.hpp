#pragma once

#include <cstdint>

#include "qve/maass.hpp"

namespace qve {

// Parameters of the diagonal-series Euler products. The product
// H_{phi,psi}(s, s1, s2) converges absolutely when
//   Re(s1 + s2) > -1,      Re(s) > -25/64,
//   Re(s + s1) > -25/64,   Re(s + s2) > -25/64,
// (the constants come from the 7/64 coefficient-growth bound) and every
// operation below requires the point to lie strictly inside that region.
struct EulerParams {
    ComplexValue s{0.0, 0.0};
    ComplexValue s1{0.0, 0.0};
    ComplexValue s2{0.0, 0.0};
    int64_t p_max = 1000; // Euler-product truncation
    int j_max = 60;       // local power-series truncation
};

// Distance from the convergence boundary; positive strictly inside.
double convergence_margin(const EulerParams& params);

// Throws convergence_error unless strictly inside the region above.
void require_convergence(const EulerParams& params);

// sum_{j>=0} lam_phi(p^j) lam_psi(p^{j+shift}) p^{-j(1+2s)} for shift 1 or 2.
// Prime powers beyond the coefficient table follow the Hecke recursion
// lam(p^{j+1}) = lam(p) lam(p^j) - lam(p^{j-1}). Requires Re(1+2s) > 14/64;
// the series is truncated at j_max and the geometric bound on the dropped
// tail must come out below 1e-14, else convergence_error.
ComplexValue local_j_sum(const MaassForm& phi, const MaassForm& psi, int64_t p,
                         int shift, ComplexValue s, int j_max = 60);

// Local factor a_{phi,psi,which}(p). With u = p^{-(2+s1+s2)},
// w = p^{-(1+2s)}, J_i the matching local_j_sum, and
//   Q = 1 - lam_phi(p) lam_psi(p) w + (lam_phi(p^2) + lam_psi(p^2)) w^2
//         - lam_phi(p) lam_psi(p) w^3 + w^4,
//   R = (1 - w^2)^{-1},
// this returns J_1 (-2 - 2u) Q R for which = 1 and J_2 Q R for which = 2.
ComplexValue a_factor(const MaassForm& phi, const MaassForm& psi, int64_t p,
                      int which, const EulerParams& params);

// Restructured form carrying the extra factor (1 + 4u + u^2)^{-1}, so that
// a_i(p) = A_i(p) (1 + 4u + u^2). Evaluated through its own factored
// expression rather than by dividing a_factor.
ComplexValue A_factor(const MaassForm& phi, const MaassForm& psi, int64_t p,
                      int which, const EulerParams& params);

struct EulerProductResult {
    ComplexValue value{0.0, 0.0};
    // Amplitude fit of the leading p^{-(3/2+s+min(s1,s2))} decay of the
    // first-order local terms over the top octave of primes, integrated past
    // p_max against the prime density 1/log x, plus the deterministic
    // 4 p^{-(2+s1+s2)} part. Unsigned, so coefficient-sign cancellation
    // usually leaves the true remainder well below it.
    double tail_estimate = 0.0;
};

// H_{phi,psi}(s, s1, s2): product over primes p <= p_max of
//   1 + 4u + u^2 + a_{phi,psi,1} v1 + a_{phi,psi,2} v1^2
//     + a_{psi,phi,1} v2 + a_{psi,phi,2} v2^2,
// where v1 = p^{-(3/2+s+s1)} and v2 = p^{-(3/2+s+s2)}. Requires
// p_max >= 1000 and a coefficient table reaching p_max.
EulerProductResult H(const MaassForm& phi, const MaassForm& psi,
                     const EulerParams& params);

// H_phi = H_{phi,phi}(0, 0, 0) truncated at p_max.
double H_phi(const MaassForm& phi, int64_t p_max = 4000);

// C(phi) = 12 log(2) H_phi.
double C_phi(const MaassForm& phi, int64_t p_max = 4000);

struct BruteforceCutoffs {
    int64_t k_max = 200;
    int64_t l_max = 200;
    int64_t d_max = 200;
    int64_t n_max = 100000;
};

struct BruteforceResult {
    ComplexValue value{0.0, 0.0};
    // Richardson estimate: halved-cutoff differences in the k, l, d
    // directions scaled by their geometric decay factors, plus the halved
    // n-window completion residual.
    double tail_estimate = 0.0;
};

// Truncated gcd-reduced quadruple sum
//   sum_{(k,l)=1} k^{-(3/2+s+s1)} l^{-(3/2+s+s2)}
//     [ sum_d alpha(kd) alpha(ld) d^{-(2+s1+s2)} ]
//     [ sum_n lam_phi(l n) lam_psi(k n) n^{-(1+2s)} ],
// where alpha = mu * mu (Dirichlet square of the Moebius function) and the
// composite coefficients expand through
// lam(l n) = sum_{e | (l,n)} mu(e) lam(l/e) lam(n/e). The inner n-series is
// completed past n_max with the mean coefficient fitted on the top half
// window. Requires convergence margin >= 0.2 and Re(s) > 0.05 (the raw
// n-series diverges otherwise); throws tail_too_large when the tail
// estimate exceeds 1e-7. A dimension cut below 4 is treated as a deliberate
// algebraic reduction (degenerate series) and skips the tail gate.
BruteforceResult D_bruteforce(const MaassForm& phi, const MaassForm& psi,
                              const EulerParams& params,
                              const BruteforceCutoffs& cut = {});

} // namespace qve
