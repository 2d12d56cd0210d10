#pragma once

#include "qve/maass.hpp"
#include "qve/specfun.hpp"

namespace qve {

// Point x + iy in the upper half-plane (y > 0).
struct UpperHalfPoint {
    double x = 0.0;
    double y = 1.0;
};

// Translates and inverts until |x| <= 1/2 and x^2 + y^2 >= 1 (up to a
// boundary tolerance of 1e-15).  Throws domain_error for y <= 0.
UpperHalfPoint canonicalize(UpperHalfPoint z);

enum class QuadScheme { tensor_gauss, adaptive };

// Quadrature layout for integrals over the truncated fundamental domain
// {|x| <= 1/2, x^2 + y^2 >= 1, y <= Y_max}.  nx counts Gauss nodes across
// the half-width [0, 1/2] (the mirror half is folded in analytically), ny
// counts nodes across the exp-mapped region y >= 1.2; the two thin bands
// below the split get ny/2 rows each.  Resolving the integrand of mu_direct
// needs roughly nx, ny >= 10 (t + t_phi + 2 pi M) with M the combined
// Fourier cutoff at the lowest row; coarser grids are accepted so that
// refinement studies can run, use grid_error to detect under-resolution.
struct QuadratureSpec {
    double Y_max = 8.0; // truncation height, at least 2
    int nx = 64;
    int ny = 64;
    QuadScheme scheme = QuadScheme::tensor_gauss;
};

// Y_max = 6 + (t_phi + t) / (2 pi), which keeps truncated tails below
// 1e-10, and nx = ny at the resolution bound above.
QuadratureSpec default_quadrature(const MaassForm& form, double t);

// E(z, 1/2 + it) by Fourier expansion: y^{1/2+it}
// + (xi(2it)/xi(1+2it)) y^{1/2-it}
// + (4 sqrt(y)/xi(1+2it)) sum_{m>=1} tau_it(m) K_it(2 pi m y) cos(2 pi m x),
// tau_it(m) = sum_{ab=m} (a/b)^{it}.  Requires |t| >= 0.5 and y >= 0.1;
// negative t gives the conjugate value E(z, 1/2 - i|t|).  fourier_cutoff 0
// picks M = ceil((1.2|t| + 40)/(2 pi y)), which bounds the truncated tail
// by 1e-9; a positive value overrides M for convergence studies.
ComplexValue eisenstein_value(UpperHalfPoint z, double t, int fourier_cutoff = 0);

// phi(z) = rho1 sqrt(y) sum_{n>=1} lam(n) K_{i t_phi}(2 pi n y) trig(2 pi n x)
// with cosine for even forms and sine for odd ones.  Requires y >= 0.1 and
// enough coefficients for the cutoff at this height.
double maass_value(const MaassForm& form, UpperHalfPoint z);

// mu_t(phi) = <phi, |E_{it}|^2> in closed form:
// (rho1/4) pi^{2it} |Gamma(1/4 + i t_phi/2)|^2
//   Gamma(1/4 - i t_phi/2 - it) Gamma(1/4 + i t_phi/2 - it)
//   / |Gamma(1/2 + it)|^2
//   * L(1/2, phi) L(1/2 - 2it, phi) / |zeta(1 + 2it)|^2.
// Odd forms return exactly 0 (the pairing vanishes identically).  The value
// is real for even forms up to rounding in the complex assembly.  Requires
// t >= 0.5.
ComplexValue mu_closed(const MaassForm& form, double t);

// mu_t(phi) by quadrature of phi |E_{it}|^2 y^{-2} over the truncated
// fundamental domain.  Returns a real value (imaginary part exactly 0); odd
// forms give exactly 0 because the folded x-integrand cancels.  Requires
// 0.5 <= t <= 20 (pass force = true to run above the cost guard).
// tail_estimate, when non-null, receives a bound on the discarded y > Y_max
// tail; grid_error receives the disagreement against a half-resolution grid
// (or, for the adaptive scheme, the last refinement step).
ComplexValue mu_direct(const MaassForm& form, double t, const QuadratureSpec& quad,
                       bool force = false, double* tail_estimate = nullptr,
                       double* grid_error = nullptr);

// int_F phi^2 dmu over the truncated domain with the same engine; should be
// 1 within the truncation and expansion errors for a correctly normalized
// form.
double norm_sq_direct(const MaassForm& form, const QuadratureSpec& quad);

} // namespace qve
