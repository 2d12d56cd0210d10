#ifndef QVE_SPECFUN_HPP
#define QVE_SPECFUN_HPP

#include <complex>

#include "qve/errors.hpp"

namespace qve {

// Ambient numeric type of all analytic operations (IEEE double components).
using ComplexValue = std::complex<double>;

// ---------------------------------------------------------------------------
// specfun: complex special functions underpinning every analytic formula.
// ---------------------------------------------------------------------------

// Principal-branch log Gamma.  Relative error <= 1e-13 for |z| <= 1e4.
// Throws pole_error at nonpositive integers.
ComplexValue log_gamma(ComplexValue z);

// Riemann zeta.  Euler-Maclaurin with N ~ 10 + 2|Im s| terms and 8 Bernoulli
// corrections; reflection for Re(s) < 1/2.  Relative error <= 1e-10 for
// Re(s) >= 1/2, |Im s| <= 1e4.  Throws pole_error at s = 1.
ComplexValue zeta(ComplexValue s);

// Completed zeta xi(s) = pi^{-s/2} Gamma(s/2) zeta(s).  Poles at s in {0,1}.
ComplexValue xi(ComplexValue s);

// log xi(s), assembled without under/overflow for large |Im s| (the Gamma
// factor decays like e^{-pi|Im s|/4}).
ComplexValue xi_log(ComplexValue s);

// K_{ir}(x) for real r >= 0, x > 0.  Relative error <= 1e-10 wherever
// |K_{ir}(x)| >= 1e-280; returns exactly 0 once the value drops below
// ~1e-300 (for x >= r pi/2 + 40 the value is already < 4e-18).  r <= 50.
double bessel_k_imag_order(double r, double x);

// e^{pi r/2} K_{ir}(x): the scaled variant every Fourier-expansion consumer
// uses; never overflows, same underflow rule applied to the scaled value.
double bessel_k_scaled(double r, double x);

// J^+ / K^+ kernel combinations.  nu must be purely imaginary and nonzero
// (nu = 2 i t_phi is the only case used); both are real-valued there and are
// returned with zero imaginary part.
ComplexValue bessel_jplus(ComplexValue nu, double z);
ComplexValue bessel_kplus(ComplexValue nu, double z);

// Exact ratio pi^{2it} Gamma(1/4 - i t_phi/2 - it) Gamma(1/4 + i t_phi/2 - it)
// / |Gamma(1/2 + it)|^2, and its large-t Stirling approximation
// e^{i pi/4} t^{-1/2} e^{-2 i t log(t/(e pi))} so tests can difference them.
ComplexValue stirling_ratio(double t, double t_phi);
ComplexValue stirling_ratio_approx(double t);

// |Gamma(1/4 - i t_phi/2 - it) Gamma(1/4 + i t_phi/2 - it)|^2
// / |Gamma(1/2 + it)|^4, the ratio that behaves like 1/t + O(1/t^2).
double gamma_ratio_sq(double t, double t_phi);

} // namespace qve

#endif
