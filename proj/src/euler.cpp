#include "qve/euler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

#include "qve/arith.hpp"
#include "qve/errors.hpp"

namespace qve {

namespace {

constexpr double LAMBDA_EXPONENT = 7.0 / 64.0; // coefficient growth bound

std::string fmt_g(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

ComplexValue cpow(double base, ComplexValue e) {
    return std::exp(e * std::log(base));
}

bool is_prime(int64_t p) {
    if (p < 2) return false;
    for (int64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

std::vector<int64_t> primes_upto(int64_t n) {
    std::vector<uint8_t> comp(static_cast<size_t>(n) + 1, 0);
    std::vector<int64_t> out;
    for (int64_t p = 2; p <= n; ++p) {
        if (comp[static_cast<size_t>(p)]) continue;
        out.push_back(p);
        for (int64_t m = p * p; m <= n; m += p) comp[static_cast<size_t>(m)] = 1;
    }
    return out;
}

// lam(p) and lam(p^2): read from the table while p^2 is covered, extend by
// the Hecke square lam(p)^2 - 1 past it.
void prime_pair(const MaassForm& f, int64_t p, double& lp, double& lp2) {
    if (p > f.N)
        throw insufficient_coefficients("euler: prime " + std::to_string(p) +
                                        " is beyond the coefficient table of " + f.label);
    lp = f.lam[static_cast<size_t>(p)];
    lp2 = (p * p <= f.N) ? f.lam[static_cast<size_t>(p * p)] : lp * lp - 1.0;
}

// sum_{0 <= j <= j_max} pa[j] pb[j+shift] w^j by Horner from the top, with a
// geometric bound on the dropped tail.  The product of two coefficient
// sequences grows at most like (j+1)(j+shift+1) p^{2 j 7/64}, so the
// per-step ratio past the cut is r below; reject when it fails to contract
// or when the bounded tail is not negligible.
ComplexValue j_sum_tables(const std::vector<double>& pa, const std::vector<double>& pb,
                          int64_t p, int shift, ComplexValue w, int j_max) {
    ComplexValue acc{0.0, 0.0};
    for (int j = j_max; j >= 0; --j)
        acc = acc * w + pa[static_cast<size_t>(j)] * pb[static_cast<size_t>(j + shift)];
    double aw = std::abs(w);
    double r = aw * std::pow(static_cast<double>(p), 2.0 * LAMBDA_EXPONENT) *
               (static_cast<double>(j_max + 2) / (j_max + 1)) *
               (static_cast<double>(j_max + shift + 2) / (j_max + shift + 1));
    if (r >= 0.999)
        throw convergence_error("local_j_sum: no geometric decay at p = " + std::to_string(p));
    double m = 0.0;
    double wj = std::pow(aw, j_max - 2);
    for (int j = j_max - 2; j <= j_max; ++j) {
        m = std::max(m, std::abs(pa[static_cast<size_t>(j)] * pb[static_cast<size_t>(j + shift)]) * wj);
        wj *= aw;
    }
    double tail = 3.0 * m * r / (1.0 - r);
    if (tail >= 1e-14)
        throw convergence_error("local_j_sum: truncation tail " + fmt_g(tail) +
                                " at p = " + std::to_string(p) + "; raise j_max");
    return acc;
}

// Ingredients shared by the local factors at p.
struct LocalPoint {
    double lpa = 0.0, lp2a = 0.0, lpb = 0.0, lp2b = 0.0;
    ComplexValue u, w, Q, R;
};

LocalPoint local_point(const MaassForm& phi, const MaassForm& psi, int64_t p,
                       const EulerParams& params) {
    LocalPoint lp;
    prime_pair(phi, p, lp.lpa, lp.lp2a);
    prime_pair(psi, p, lp.lpb, lp.lp2b);
    double pd = static_cast<double>(p);
    lp.u = cpow(pd, -(2.0 + params.s1 + params.s2));
    lp.w = cpow(pd, -(1.0 + 2.0 * params.s));
    ComplexValue w = lp.w;
    lp.Q = 1.0 - lp.lpa * lp.lpb * w + (lp.lp2a + lp.lp2b) * (w * w) -
           lp.lpa * lp.lpb * (w * w * w) + w * w * w * w;
    lp.R = 1.0 / (1.0 - w * w);
    return lp;
}

void check_local_inputs(int64_t p, int which, int j_max, const char* who) {
    if (which != 1 && which != 2)
        throw domain_error(std::string(who) + ": shift index must be 1 or 2");
    if (!is_prime(p))
        throw domain_error(std::string(who) + ": p = " + std::to_string(p) + " is not prime");
    if (j_max < 8)
        throw domain_error(std::string(who) + ": j_max must be at least 8");
}

} // namespace

double convergence_margin(const EulerParams& params) {
    double c = 25.0 / 64.0;
    double m = params.s1.real() + params.s2.real() + 1.0;
    m = std::min(m, params.s.real() + c);
    m = std::min(m, params.s.real() + params.s1.real() + c);
    m = std::min(m, params.s.real() + params.s2.real() + c);
    return m;
}

void require_convergence(const EulerParams& params) {
    if (!(convergence_margin(params) > 0.0))
        throw convergence_error(
            "euler: parameters outside the absolute-convergence region "
            "(need Re(s1+s2) > -1 and Re(s), Re(s+s1), Re(s+s2) > -25/64)");
}

ComplexValue local_j_sum(const MaassForm& phi, const MaassForm& psi, int64_t p,
                         int shift, ComplexValue s, int j_max) {
    check_local_inputs(p, shift, j_max, "local_j_sum");
    if (1.0 + 2.0 * s.real() <= 14.0 / 64.0)
        throw convergence_error("local_j_sum: Re(1+2s) must exceed 14/64");
    double lpa, lp2a, lpb, lp2b;
    prime_pair(phi, p, lpa, lp2a);
    prime_pair(psi, p, lpb, lp2b);
    std::vector<double> pa = hecke_prime_power(lpa, lp2a, j_max);
    std::vector<double> pb = hecke_prime_power(lpb, lp2b, j_max + shift);
    return j_sum_tables(pa, pb, p, shift, cpow(static_cast<double>(p), -(1.0 + 2.0 * s)), j_max);
}

ComplexValue a_factor(const MaassForm& phi, const MaassForm& psi, int64_t p,
                      int which, const EulerParams& params) {
    check_local_inputs(p, which, params.j_max, "a_factor");
    require_convergence(params);
    LocalPoint lp = local_point(phi, psi, p, params);
    std::vector<double> pa = hecke_prime_power(lp.lpa, lp.lp2a, params.j_max);
    std::vector<double> pb = hecke_prime_power(lp.lpb, lp.lp2b, params.j_max + which);
    ComplexValue J = j_sum_tables(pa, pb, p, which, lp.w, params.j_max);
    ComplexValue base = J * lp.Q * lp.R;
    return which == 1 ? base * (-2.0 - 2.0 * lp.u) : base;
}

ComplexValue A_factor(const MaassForm& phi, const MaassForm& psi, int64_t p,
                      int which, const EulerParams& params) {
    check_local_inputs(p, which, params.j_max, "A_factor");
    require_convergence(params);
    LocalPoint lp = local_point(phi, psi, p, params);
    std::vector<double> pa = hecke_prime_power(lp.lpa, lp.lp2a, params.j_max);
    std::vector<double> pb = hecke_prime_power(lp.lpb, lp.lp2b, params.j_max + which);
    ComplexValue J = j_sum_tables(pa, pb, p, which, lp.w, params.j_max);
    ComplexValue denom = 1.0 + 4.0 * lp.u + lp.u * lp.u;
    return which == 1 ? J * ((-2.0 - 2.0 * lp.u) / denom) * lp.Q * lp.R
                      : J * (lp.Q / denom) * lp.R;
}

EulerProductResult H(const MaassForm& phi, const MaassForm& psi,
                     const EulerParams& params) {
    require_convergence(params);
    if (params.p_max < 1000)
        throw domain_error("H: p_max must be at least 1000");
    if (params.j_max < 8)
        throw domain_error("H: j_max must be at least 8");
    if (params.p_max > phi.N || params.p_max > psi.N)
        throw insufficient_coefficients("H: p_max exceeds the coefficient tables");

    double beta = 1.5 + params.s.real() + std::min(params.s1.real(), params.s2.real());
    double beta_u = 2.0 + params.s1.real() + params.s2.real();
    ComplexValue prod{1.0, 0.0};
    double amp_sum = 0.0;
    int64_t amp_cnt = 0;
    for (int64_t p : primes_upto(params.p_max)) {
        LocalPoint lp = local_point(phi, psi, p, params);
        std::vector<double> pa = hecke_prime_power(lp.lpa, lp.lp2a, params.j_max + 2);
        std::vector<double> pb = hecke_prime_power(lp.lpb, lp.lp2b, params.j_max + 2);
        ComplexValue m2u = -2.0 - 2.0 * lp.u;
        ComplexValue QR = lp.Q * lp.R;
        ComplexValue a1 = j_sum_tables(pa, pb, p, 1, lp.w, params.j_max) * m2u * QR;
        ComplexValue a2 = j_sum_tables(pa, pb, p, 2, lp.w, params.j_max) * QR;
        ComplexValue b1 = j_sum_tables(pb, pa, p, 1, lp.w, params.j_max) * m2u * QR;
        ComplexValue b2 = j_sum_tables(pb, pa, p, 2, lp.w, params.j_max) * QR;
        double pd = static_cast<double>(p);
        ComplexValue v1 = cpow(pd, -(1.5 + params.s + params.s1));
        ComplexValue v2 = cpow(pd, -(1.5 + params.s + params.s2));
        prod *= 1.0 + 4.0 * lp.u + lp.u * lp.u +
                a1 * v1 + a2 * (v1 * v1) + b1 * v2 + b2 * (v2 * v2);
        if (2 * p > params.p_max) {
            amp_sum += std::abs(a1 * v1 + b1 * v2) * std::pow(pd, beta);
            ++amp_cnt;
        }
    }
    // Unsigned remainder fit: mean first-order amplitude over the top octave
    // integrated against the prime density 1/log x, plus the deterministic
    // 4 u part.  Sign oscillation of the coefficients usually beats this by
    // a wide factor, but the estimate never understates systematically.
    double log_p = std::log(static_cast<double>(params.p_max));
    auto log_integral = [&](double b) {
        return std::pow(static_cast<double>(params.p_max), 1.0 - b) / ((b - 1.0) * log_p);
    };
    double amp = amp_cnt > 0 ? amp_sum / static_cast<double>(amp_cnt) : 0.0;
    double tail_log = amp * log_integral(beta) + 4.0 * log_integral(beta_u);
    return {prod, std::abs(prod) * tail_log};
}

double H_phi(const MaassForm& phi, int64_t p_max) {
    EulerParams params;
    params.p_max = p_max;
    return H(phi, phi, params).value.real();
}

double C_phi(const MaassForm& phi, int64_t p_max) {
    return 12.0 * std::log(2.0) * H_phi(phi, p_max);
}

namespace {

std::vector<int64_t> divisors_of(int64_t n) {
    std::vector<int64_t> out;
    for (int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        if (d != n / d) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool cubefree(int64_t k) {
    for (int64_t p = 2; p * p * p <= k; ++p)
        if (k % (p * p * p) == 0) return false;
    return true;
}

// lam(L n) for 1 <= n <= n_max through the multiplicative expansion
// lam(L n) = sum_{e | (L, n)} mu(e) lam(L/e) lam(n/e).  0-based: slot i
// holds lam(L (i+1)).
std::vector<double> composite_lam(const MaassForm& f, int64_t L, int64_t n_max,
                                  const CoeffTable& mu) {
    std::vector<double> v(static_cast<size_t>(n_max), 0.0);
    const double* lam = f.lam.data();
    for (int64_t e : divisors_of(L)) {
        if (mu.value(e) == 0) continue;
        double c = static_cast<double>(mu.value(e)) * lam[L / e];
        for (int64_t m = 1; m * e <= n_max; ++m)
            v[static_cast<size_t>(m * e - 1)] += c * lam[m];
    }
    return v;
}

} // namespace

BruteforceResult D_bruteforce(const MaassForm& phi, const MaassForm& psi,
                              const EulerParams& params, const BruteforceCutoffs& cut) {
    double margin = convergence_margin(params);
    if (margin < 0.2)
        throw convergence_error("D_bruteforce: convergence margin " + fmt_g(margin) +
                                " is below the required 0.2");
    if (params.s.real() <= 0.05)
        throw convergence_error(
            "D_bruteforce: Re(s) must exceed 0.05 so the raw inner series converges");
    if (cut.k_max < 1 || cut.l_max < 1 || cut.d_max < 1)
        throw domain_error("D_bruteforce: cutoffs must be positive");
    if (cut.n_max < 8)
        throw domain_error("D_bruteforce: n_max must be at least 8");
    if (cut.n_max > phi.N || cut.n_max > psi.N)
        throw insufficient_coefficients("D_bruteforce: n_max exceeds the coefficient tables");
    if (cut.l_max > phi.N || cut.k_max > psi.N)
        throw insufficient_coefficients("D_bruteforce: k/l cutoffs exceed the coefficient tables");
    if (cut.k_max > 2000 || cut.l_max > 2000 || cut.d_max > 100000)
        throw capacity_error("D_bruteforce: cutoffs beyond k,l <= 2000, d <= 1e5 are not supported");

    CoeffTable alpha = alpha_sieve(std::max(cut.k_max, cut.l_max) * cut.d_max);
    CoeffTable mu = moebius_sieve(std::max(cut.k_max, cut.l_max));

    std::vector<int64_t> ks, ls;
    for (int64_t k = 1; k <= cut.k_max; ++k)
        if (cubefree(k)) ks.push_back(k);
    for (int64_t l = 1; l <= cut.l_max; ++l)
        if (cubefree(l)) ls.push_back(l);

    bool shared = (&phi == &psi) && (cut.k_max == cut.l_max);
    double bytes = static_cast<double>(ls.size() + (shared ? 0 : ks.size())) *
                   static_cast<double>(cut.n_max) * 8.0;
    if (bytes > 1.6e9)
        throw capacity_error("D_bruteforce: composite coefficient tables would need " +
                             fmt_g(bytes) + " bytes");

    std::vector<std::vector<double>> tab_phi(ls.size());
    for (size_t i = 0; i < ls.size(); ++i)
        tab_phi[i] = composite_lam(phi, ls[i], cut.n_max, mu);
    std::vector<std::vector<double>> tab_psi_own;
    const std::vector<std::vector<double>>* tab_psi = &tab_phi;
    if (!shared) {
        tab_psi_own.resize(ks.size());
        for (size_t i = 0; i < ks.size(); ++i)
            tab_psi_own[i] = composite_lam(psi, ks[i], cut.n_max, mu);
        tab_psi = &tab_psi_own;
    }

    bool real_params = params.s.imag() == 0.0 && params.s1.imag() == 0.0 &&
                       params.s2.imag() == 0.0;
    int64_t n_max = cut.n_max;
    int64_t half = n_max / 2;
    int64_t quarter = half / 2;
    double sig = 1.0 + 2.0 * params.s.real();
    double tau = 2.0 * params.s.imag();
    std::vector<double> w_re(static_cast<size_t>(n_max)), w_im;
    if (!real_params) w_im.resize(static_cast<size_t>(n_max));
    for (int64_t n = 1; n <= n_max; ++n) {
        double nd = static_cast<double>(n);
        if (real_params) {
            w_re[static_cast<size_t>(n - 1)] = std::pow(nd, -sig);
        } else {
            double mag = std::pow(nd, -sig);
            double phase = tau * std::log(nd);
            w_re[static_cast<size_t>(n - 1)] = mag * std::cos(phase);
            w_im[static_cast<size_t>(n - 1)] = -mag * std::sin(phase);
        }
    }
    std::vector<ComplexValue> dpow(static_cast<size_t>(cut.d_max) + 1);
    for (int64_t d = 1; d <= cut.d_max; ++d)
        dpow[static_cast<size_t>(d)] = cpow(static_cast<double>(d), -(2.0 + params.s1 + params.s2));
    ComplexValue two_s = 2.0 * params.s;
    ComplexValue tail_fac = cpow(static_cast<double>(n_max) + 0.5, -two_s) / two_s;
    ComplexValue tail_fac_h = cpow(static_cast<double>(half) + 0.5, -two_s) / two_s;

    ComplexValue D{0.0, 0.0}, D_kh{0.0, 0.0}, D_lh{0.0, 0.0}, D_dh{0.0, 0.0}, D_nh{0.0, 0.0};
    std::vector<double> wpsi_re(static_cast<size_t>(n_max)), wpsi_im;
    if (!real_params) wpsi_im.resize(static_cast<size_t>(n_max));
    for (size_t ik = 0; ik < ks.size(); ++ik) {
        int64_t k = ks[ik];
        const double* bp = (*tab_psi)[ik].data();
        for (int64_t i = 0; i < n_max; ++i) wpsi_re[static_cast<size_t>(i)] = bp[i] * w_re[static_cast<size_t>(i)];
        if (!real_params)
            for (int64_t i = 0; i < n_max; ++i) wpsi_im[static_cast<size_t>(i)] = bp[i] * w_im[static_cast<size_t>(i)];
        for (size_t il = 0; il < ls.size(); ++il) {
            int64_t l = ls[il];
            if (std::gcd(k, l) != 1) continue;
            ComplexValue Ad{0.0, 0.0}, Ad_h{0.0, 0.0};
            bool coupled = false;
            for (int64_t d = 1; d <= cut.d_max; ++d) {
                int prod_a = alpha.value(k * d) * alpha.value(l * d);
                if (prod_a == 0) continue;
                coupled = true;
                ComplexValue term = static_cast<double>(prod_a) * dpow[static_cast<size_t>(d)];
                Ad += term;
                if (d <= cut.d_max / 2) Ad_h += term;
            }
            if (!coupled) continue;

            const double* a = tab_phi[il].data();
            const double* bw = wpsi_re.data();
            double dA_re = 0.0, dA_im = 0.0, dB_re = 0.0, dB_im = 0.0, sQ = 0.0, sT = 0.0;
            if (real_params) {
                for (int64_t i = 0; i < quarter; ++i) dA_re += a[i] * bw[i];
                for (int64_t i = quarter; i < half; ++i) {
                    dA_re += a[i] * bw[i];
                    sQ += a[i] * bp[i];
                }
                for (int64_t i = half; i < n_max; ++i) {
                    dB_re += a[i] * bw[i];
                    sT += a[i] * bp[i];
                }
            } else {
                const double* bwi = wpsi_im.data();
                for (int64_t i = 0; i < quarter; ++i) {
                    dA_re += a[i] * bw[i];
                    dA_im += a[i] * bwi[i];
                }
                for (int64_t i = quarter; i < half; ++i) {
                    dA_re += a[i] * bw[i];
                    dA_im += a[i] * bwi[i];
                    sQ += a[i] * bp[i];
                }
                for (int64_t i = half; i < n_max; ++i) {
                    dB_re += a[i] * bw[i];
                    dB_im += a[i] * bwi[i];
                    sT += a[i] * bp[i];
                }
            }
            ComplexValue dot{dA_re + dB_re, dA_im + dB_im};
            ComplexValue dot_h{dA_re, dA_im};
            double slope = sT / static_cast<double>(n_max - half);
            double slope_h = sQ / static_cast<double>(half - quarter);
            ComplexValue s_full = dot + slope * tail_fac;
            ComplexValue s_half = dot_h + slope_h * tail_fac_h;
            ComplexValue wkl = cpow(static_cast<double>(k), -(1.5 + params.s + params.s1)) *
                               cpow(static_cast<double>(l), -(1.5 + params.s + params.s2));
            ComplexValue base = wkl * Ad;
            ComplexValue full = base * s_full;
            D += full;
            D_dh += wkl * Ad_h * s_full;
            D_nh += base * s_half;
            if (k <= cut.k_max / 2) D_kh += full;
            if (l <= cut.l_max / 2) D_lh += full;
        }
    }

    // Richardson extrapolation from the halved cutoffs: a tail decaying like
    // the boundary power b turns the halving difference into tail/(2^{b-1}-1).
    // A dimension cut below 4 is a deliberate algebraic reduction, not a
    // truncation, and is excluded.
    double bk = 1.5 + params.s.real() + params.s1.real();
    double bl = 1.5 + params.s.real() + params.s2.real();
    double bd = 2.0 + params.s1.real() + params.s2.real();
    double est = std::abs(D - D_nh);
    if (cut.k_max >= 4) est += std::abs(D - D_kh) / (std::exp2(bk - 1.0) - 1.0);
    if (cut.l_max >= 4) est += std::abs(D - D_lh) / (std::exp2(bl - 1.0) - 1.0);
    if (cut.d_max >= 4) est += std::abs(D - D_dh) / (std::exp2(bd - 1.0) - 1.0);
    if (est > 1e-7)
        throw tail_too_large("D_bruteforce: estimated truncation tail " + fmt_g(est) +
                             " exceeds 1e-7; widen the cutoffs or move deeper into the region");
    return {D, est};
}

} // namespace qve
