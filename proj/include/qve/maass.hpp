#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qve/specfun.hpp"

namespace qve {

enum class Parity { even, odd };

// Hecke-normalized cusp form on the modular surface: eigenvalue 1/4 + t^2,
// real coefficients lam(1..N) with lam(1) = 1, immutable after ingestion.
struct MaassForm {
    std::string label;
    double t = 0.0;
    Parity parity = Parity::even;
    std::vector<double> lam; // 1-based; lam[0] unused
    int64_t N = 0;
    double rho1 = 0.0; // first-coefficient normalization, set by ingest
    std::string source;
};

struct HeckeResidual {
    double rel = 0.0;
    int64_t m = 1;
    int64_t n = 1;
};

// Loads and validates a coefficient file (JSON: label, spectral_parameter,
// parity, coefficients as decimal strings, source) and populates rho1.
MaassForm ingest(const std::string& path);

// Multiplicativity and growth checks; throws hecke_violation or
// ramanujan_violation with the offending index.
void validate(const MaassForm& form);

// Worst relative Hecke residual over all pairs with mn <= N.
HeckeResidual hecke_worst_residual(const MaassForm& form);

// lam(p^j) for j = 0..jmax from lam(p), lam(p^2) by the Hecke recursion.
std::vector<double> hecke_prime_power(double lam_p, double lam_p2, int jmax);

// Smoothed series stage of the symmetric square: zeta(2) times
// sum lam_sq[n]/n weighted by exp(-(n/N0)^2), N0 = n_coeffs/log(n_coeffs).
// lam_sq is a 1-based table of the square-index coefficients lam(n^2); a
// degenerate table (all zero past n = 1) gives back zeta(2) up to the
// weight at n = 1.
double sym2_series(const std::vector<double>& lam_sq, int64_t n_coeffs,
                   double* tail_estimate = nullptr);

// L(1, Sym^2): zeta(2) times the Gaussian-smoothed series of lam(n^2)/n,
// coefficients extended multiplicatively. Optionally reports a truncation
// estimate (magnitude of the smoothed top decade of the sum).
double L_sym2(const MaassForm& form, double* tail_estimate = nullptr);

// Positive root of the first-coefficient normalization
// rho1^2 = 8 pi / (|Gamma(1/2 + it)|^2 L(1, Sym^2)).
double rho1(const MaassForm& form);

// L(1/2 + iu) assembled from both branches of the smoothed functional
// equation with exact gamma factors.
ComplexValue L_critical(const MaassForm& form, double u);

// L(1/2 - 2it, phi) L(1/2 + 2it, psi) as the paired two-branch sum over
// mn <= t^{2.1} against the kernel afe_w_kernel.
ComplexValue afe_pair(const MaassForm& phi, const MaassForm& psi, double t);

// W_t(y): contour integral of (t^2 / (pi^2 y))^s e^{s^2} / s on Re s = 0.1,
// trapezoid step 0.01, |Im s| <= 30.
ComplexValue afe_w_kernel(double t, double y);

// L(1 + 2s, phi x psi) = zeta(2 + 4s) times the smoothed coefficient series;
// requires Re(s) > 0.05.
ComplexValue rankin_selberg_L(const MaassForm& phi, const MaassForm& psi, ComplexValue s);

} // namespace qve
