#include "qve/maass.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "qve/errors.hpp"

namespace qve {

namespace {

constexpr double PI = 3.14159265358979323846;

// ---------------------------------------------------------------------
// ingestion
// ---------------------------------------------------------------------

int significant_digits(const std::string& s) {
    int digits = 0;
    bool seen_nonzero = false;
    for (char c : s) {
        if (c == 'e' || c == 'E') break;
        if (c < '0' || c > '9') continue;
        if (c != '0') seen_nonzero = true;
        if (seen_nonzero) ++digits;
    }
    return digits;
}

double parse_decimal(const std::string& s, const char* what) {
    const char* begin = s.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin || end != begin + s.size())
        throw parse_error(std::string("form file: ") + what + " is not a decimal string: \"" + s + "\"");
    return v;
}

// lam(n^2) for all n <= n_top, extended multiplicatively from lam(p) and
// lam(p^2) via the Hecke recursion at prime powers.
std::vector<double> lambda_square_table(const std::vector<double>& lam, int64_t n_top) {
    int64_t N = static_cast<int64_t>(lam.size()) - 1;
    std::vector<int32_t> spf(static_cast<size_t>(n_top) + 1, 0);
    for (int64_t i = 2; i <= n_top; ++i) {
        if (spf[static_cast<size_t>(i)] != 0) continue;
        for (int64_t j = i; j <= n_top; j += i)
            if (spf[static_cast<size_t>(j)] == 0) spf[static_cast<size_t>(j)] = static_cast<int32_t>(i);
    }
    std::vector<double> lam2(static_cast<size_t>(n_top) + 1, 0.0);
    lam2[0] = 0.0;
    if (n_top >= 1) lam2[1] = 1.0;
    // lam2_pp[p^e] filled lazily per prime as we walk n
    std::vector<double> pp_cache;
    for (int64_t n = 2; n <= n_top; ++n) {
        if (n * n <= N) {
            // the table covers lam(n^2) directly; consume the data as given
            lam2[static_cast<size_t>(n)] = lam[static_cast<size_t>(n * n)];
            continue;
        }
        int64_t p = spf[static_cast<size_t>(n)];
        int64_t m = n;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        int64_t p2e = 1;
        for (int i = 0; i < 2 * e; ++i) p2e *= p;
        double head;
        if (p2e <= N) {
            head = lam[static_cast<size_t>(p2e)];
        } else {
            double lp = (p <= N) ? lam[static_cast<size_t>(p)] : 0.0;
            double lp2 = (p * p <= N) ? lam[static_cast<size_t>(p * p)] : lp * lp - 1.0;
            pp_cache.assign(2, 0.0);
            pp_cache[0] = 1.0;
            pp_cache[1] = lp;
            for (int j = 2; j <= 2 * e; ++j) {
                double next = (j == 2) ? lp2 : lp * pp_cache[static_cast<size_t>(j - 1)] - pp_cache[static_cast<size_t>(j - 2)];
                pp_cache.push_back(next);
            }
            head = pp_cache[static_cast<size_t>(2 * e)];
        }
        lam2[static_cast<size_t>(n)] = head * lam2[static_cast<size_t>(m)];
    }
    return lam2;
}

double ramanujan_bound(int64_t n) {
    return 2.0 * std::pow(static_cast<double>(n), 7.0 / 64.0 + 0.01);
}

// ---------------------------------------------------------------------
// smoothed-AFE machinery for L(1/2 + iu)
// ---------------------------------------------------------------------

struct AfeKernel {
    // V(log n) tables for the direct and reflected branches, step kStep
    std::vector<ComplexValue> v1;
    std::vector<ComplexValue> v2;
    double step = 0.01;
    int64_t n_star = 0;
};

constexpr double kContourRe = 0.75; // keeps the shifted series absolutely convergent
constexpr double kContourStep = 0.03;
constexpr double kContourMax = 6.51;

// Builds both V tables on a log-n grid until the kernels decay below the
// floor or the coefficient supply runs out.
AfeKernel build_afe_kernel(ComplexValue s, double t_phi, Parity parity, int64_t N) {
    ComplexValue mu1{parity == Parity::odd ? 1.0 : 0.0, t_phi};
    ComplexValue mu2 = std::conj(mu1);
    double eps = parity == Parity::odd ? -1.0 : 1.0;

    ComplexValue lg_den = log_gamma((s + mu1) / 2.0) + log_gamma((s + mu2) / 2.0);

    int half = static_cast<int>(std::ceil(kContourMax / kContourStep));
    std::vector<ComplexValue> k1, k2;
    k1.reserve(2 * half + 1);
    k2.reserve(2 * half + 1);
    for (int j = -half; j <= half; ++j) {
        ComplexValue w{kContourRe, j * kContourStep};
        ComplexValue base = w * w - std::log(w);
        ComplexValue g1 = log_gamma((s + w + mu1) / 2.0) + log_gamma((s + w + mu2) / 2.0) - lg_den;
        ComplexValue g2 = log_gamma((1.0 - s + w + mu1) / 2.0) + log_gamma((1.0 - s + w + mu2) / 2.0) - lg_den;
        k1.push_back(std::exp(base + g1 - w * std::log(PI)));
        k2.push_back(eps * std::exp(base + g2 - (1.0 - 2.0 * s + w) * std::log(PI)));
    }

    AfeKernel out;
    double scale = kContourStep / (2.0 * PI);
    double log_cap = std::log(static_cast<double>(N)) + out.step;
    double vmax = 0.0;
    int quiet = 0;
    for (int64_t j = 0;; ++j) {
        double L = j * out.step;
        ComplexValue s1{0.0, 0.0}, s2{0.0, 0.0};
        for (int k = -half; k <= half; ++k) {
            ComplexValue w{kContourRe, k * kContourStep};
            ComplexValue damp = std::exp(-w * L);
            s1 += k1[static_cast<size_t>(k + half)] * damp;
            s2 += k2[static_cast<size_t>(k + half)] * damp;
        }
        out.v1.push_back(scale * s1);
        out.v2.push_back(scale * s2);
        double mag = std::max(std::abs(out.v1.back()), std::abs(out.v2.back()));
        vmax = std::max(vmax, mag);
        quiet = (mag < 1e-14 * vmax) ? quiet + 1 : 0;
        if (quiet >= 4) break;
        if (L > log_cap) {
            // coefficients exhausted before the kernel died down; only fatal
            // if the remaining weight is large enough to matter
            double tail = mag * std::sqrt(static_cast<double>(N)) * 4.0;
            if (tail > 1e-3)
                throw insufficient_coefficients(
                    "L_critical: kernel weight " + std::to_string(mag) + " at n = " + std::to_string(N) +
                    " leaves an estimated tail " + std::to_string(tail));
            break;
        }
    }
    out.n_star = std::min<int64_t>(N, static_cast<int64_t>(std::exp((out.v1.size() - 1) * out.step)));
    return out;
}

ComplexValue interp4(const std::vector<ComplexValue>& table, double step, double x) {
    // 4-point Lagrange on the uniform grid, clamped at the ends
    int64_t size = static_cast<int64_t>(table.size());
    int64_t i = static_cast<int64_t>(std::floor(x / step)) - 1;
    i = std::clamp<int64_t>(i, 0, size - 4);
    double u = x / step - static_cast<double>(i);
    double c0 = -(u - 1.0) * (u - 2.0) * (u - 3.0) / 6.0;
    double c1 = u * (u - 2.0) * (u - 3.0) / 2.0;
    double c2 = -u * (u - 1.0) * (u - 3.0) / 2.0;
    double c3 = u * (u - 1.0) * (u - 2.0) / 6.0;
    return c0 * table[static_cast<size_t>(i)] + c1 * table[static_cast<size_t>(i + 1)] +
           c2 * table[static_cast<size_t>(i + 2)] + c3 * table[static_cast<size_t>(i + 3)];
}

} // namespace

// ---------------------------------------------------------------------
// ingestion and validation
// ---------------------------------------------------------------------

MaassForm ingest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open form file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error("form file " + path + ": " + e.what());
    }
    for (const char* key : {"label", "spectral_parameter", "parity", "coefficients", "source"})
        if (!j.contains(key)) throw parse_error("form file " + path + ": missing key \"" + key + "\"");

    MaassForm f;
    try {
        f.label = j["label"].get<std::string>();
        f.source = j["source"].get<std::string>();
        std::string sp = j["spectral_parameter"].get<std::string>();
        if (significant_digits(sp) < 12)
            throw parse_error("form file " + path + ": spectral_parameter needs >= 12 significant digits");
        f.t = parse_decimal(sp, "spectral_parameter");
        std::string par = j["parity"].get<std::string>();
        if (par == "even") f.parity = Parity::even;
        else if (par == "odd") f.parity = Parity::odd;
        else throw parse_error("form file " + path + ": parity must be \"even\" or \"odd\"");
        if (!j["coefficients"].is_array() || j["coefficients"].empty())
            throw parse_error("form file " + path + ": coefficients must be a non-empty array");
        f.lam.reserve(j["coefficients"].size() + 1);
        f.lam.push_back(0.0);
        for (const auto& item : j["coefficients"])
            f.lam.push_back(parse_decimal(item.get<std::string>(), "coefficient"));
    } catch (const nlohmann::json::exception& e) {
        throw parse_error("form file " + path + ": " + e.what());
    }
    f.N = static_cast<int64_t>(f.lam.size()) - 1;
    if (f.t <= 0.0) throw parse_error("form file " + path + ": spectral_parameter must be positive");

    validate(f);
    f.rho1 = rho1(f);
    return f;
}

void validate(const MaassForm& form) {
    HeckeResidual worst = hecke_worst_residual(form);
    if (worst.rel > 1e-8) {
        std::ostringstream msg;
        msg << "Hecke relation fails at (m, n) = (" << worst.m << ", " << worst.n
            << ") with relative residual " << worst.rel;
        throw hecke_violation(msg.str());
    }
    for (int64_t n = 1; n <= form.N; ++n) {
        double bound = ramanujan_bound(n);
        if (std::fabs(form.lam[static_cast<size_t>(n)]) > bound) {
            std::ostringstream msg;
            msg << "coefficient bound fails at n = " << n << ": |lam| = "
                << std::fabs(form.lam[static_cast<size_t>(n)]) << " > " << bound;
            throw ramanujan_violation(msg.str());
        }
    }
}

HeckeResidual hecke_worst_residual(const MaassForm& form) {
    const auto& lam = form.lam;
    int64_t N = form.N;
    HeckeResidual worst;
    if (N < 1 || lam[1] != 1.0) {
        worst.rel = (N < 1) ? 1.0 : std::fabs(lam[1] - 1.0);
        return worst;
    }
    for (int64_t m = 2; m * m <= N; ++m) {
        for (int64_t n = m; m * n <= N; ++n) {
            int64_t g = std::gcd(m, n);
            double rhs = 0.0;
            for (int64_t d = 1; d * d <= g; ++d) {
                if (g % d != 0) continue;
                rhs += lam[static_cast<size_t>(m * n / (d * d))];
                int64_t d2 = g / d;
                if (d2 != d) rhs += lam[static_cast<size_t>(m * n / (d2 * d2))];
            }
            double lhs = lam[static_cast<size_t>(m)] * lam[static_cast<size_t>(n)];
            double rel = std::fabs(lhs - rhs) / std::max(1.0, std::fabs(lhs));
            if (rel > worst.rel) worst = {rel, m, n};
        }
    }
    return worst;
}

std::vector<double> hecke_prime_power(double lam_p, double lam_p2, int jmax) {
    std::vector<double> out(static_cast<size_t>(jmax) + 1);
    out[0] = 1.0;
    if (jmax >= 1) out[1] = lam_p;
    if (jmax >= 2) out[2] = lam_p2;
    for (int j = 3; j <= jmax; ++j)
        out[static_cast<size_t>(j)] = lam_p * out[static_cast<size_t>(j - 1)] - out[static_cast<size_t>(j - 2)];
    return out;
}

// ---------------------------------------------------------------------
// symmetric square and the first-coefficient normalization
// ---------------------------------------------------------------------

double sym2_series(const std::vector<double>& lam_sq, int64_t n_coeffs, double* tail_estimate) {
    double N0 = static_cast<double>(n_coeffs) / std::log(static_cast<double>(n_coeffs));
    int64_t n_top = std::min<int64_t>(static_cast<int64_t>(lam_sq.size()) - 1,
                                      static_cast<int64_t>(std::ceil(4.2 * N0)));
    double sum = 0.0;
    double sum_narrow = 0.0; // same series under a 20% tighter window
    for (int64_t n = n_top; n >= 1; --n) {
        double x = static_cast<double>(n);
        double term = lam_sq[static_cast<size_t>(n)] / x;
        sum += term * std::exp(-(x / N0) * (x / N0));
        sum_narrow += term * std::exp(-(x / (0.8 * N0)) * (x / (0.8 * N0)));
    }
    if (tail_estimate) *tail_estimate = (PI * PI / 6.0) * std::fabs(sum - sum_narrow);
    return (PI * PI / 6.0) * sum;
}

double L_sym2(const MaassForm& form, double* tail_estimate) {
    if (form.N < 1000)
        throw insufficient_coefficients("L_sym2: needs at least 1000 coefficients, have " +
                                        std::to_string(form.N));
    double N0 = static_cast<double>(form.N) / std::log(static_cast<double>(form.N));
    int64_t n_top = std::min(form.N, static_cast<int64_t>(std::ceil(4.2 * N0)));
    return sym2_series(lambda_square_table(form.lam, n_top), form.N, tail_estimate);
}

double rho1(const MaassForm& form) {
    double L = L_sym2(form);
    // |Gamma(1/2 + it)|^2 through log_gamma so the special-function path and
    // this normalization stay consistent
    double log_gamma_sq = 2.0 * log_gamma(ComplexValue{0.5, form.t}).real();
    double log_rho_sq = std::log(8.0 * PI) - log_gamma_sq - std::log(L);
    return std::exp(0.5 * log_rho_sq);
}

// ---------------------------------------------------------------------
// critical-line evaluation
// ---------------------------------------------------------------------

ComplexValue L_critical(const MaassForm& form, double u) {
    if (std::fabs(u) > 1e4) throw domain_error("L_critical: |u| must be <= 1e4");
    double need = std::pow(std::fabs(u) + form.t + 10.0, 1.1);
    if (static_cast<double>(form.N) < need)
        throw insufficient_coefficients("L_critical: need N >= " + std::to_string(need) +
                                        ", have " + std::to_string(form.N));

    ComplexValue s{0.5, u};
    AfeKernel kern = build_afe_kernel(s, form.t, form.parity, form.N);

    ComplexValue direct{0.0, 0.0}, reflected{0.0, 0.0};
    for (int64_t n = 1; n <= kern.n_star; ++n) {
        double ln = std::log(static_cast<double>(n));
        double amp = form.lam[static_cast<size_t>(n)] / std::sqrt(static_cast<double>(n));
        if (amp == 0.0) continue;
        ComplexValue phase = std::exp(ComplexValue{0.0, -u * ln});
        direct += amp * phase * interp4(kern.v1, kern.step, ln);
        reflected += amp * std::conj(phase) * interp4(kern.v2, kern.step, ln);
    }
    return direct + reflected;
}

// ---------------------------------------------------------------------
// paired functional equation
// ---------------------------------------------------------------------

ComplexValue afe_w_kernel(double t, double y) {
    if (t <= 0.0 || y <= 0.0) throw domain_error("afe_w_kernel: t and y must be positive");
    double lx = 2.0 * std::log(t) - std::log(PI * PI * y);
    constexpr double re = 0.1;
    constexpr double h = 0.01;
    constexpr int half = 3000; // |Im s| <= 30
    ComplexValue sum{0.0, 0.0};
    for (int k = -half; k <= half; ++k) {
        ComplexValue sk{re, k * h};
        sum += std::exp(sk * lx + sk * sk) / sk;
    }
    return sum * (h / (2.0 * PI));
}

ComplexValue afe_pair(const MaassForm& phi, const MaassForm& psi, double t) {
    if (t < 10.0) throw domain_error("afe_pair: t must be >= 10");
    int64_t need = static_cast<int64_t>(std::pow(t, 2.1));
    int64_t N = std::min(phi.N, psi.N);
    if (need > N)
        throw insufficient_coefficients("afe_pair: needs coefficients to " + std::to_string(need) +
                                        ", have " + std::to_string(N));
    // W_t decays like exp(-(1/4) log^2(pi^2 y / t^2)); by y = 535 t^2 it is
    // below 1e-8, so the two-branch sum has converged.  Truncating right at
    // the minimum-supply point t^2.1 would leave a fringe where W_t is still
    // ~0.1, large enough to swamp the evaluator's own O(1/t) error contract.
    int64_t cut = std::min(N, static_cast<int64_t>(std::ceil(535.0 * t * t)));

    // W_t(y) tabulated over log y and interpolated; one quadrature per entry
    double step = 0.02;
    int64_t entries = static_cast<int64_t>(std::log(static_cast<double>(cut)) / step) + 4;
    std::vector<ComplexValue> table(static_cast<size_t>(entries));
    for (int64_t j = 0; j < entries; ++j)
        table[static_cast<size_t>(j)] = afe_w_kernel(t, std::exp(j * step));

    ComplexValue total{0.0, 0.0};
    for (int64_t m = 1; m <= cut; ++m) {
        double lam_m = phi.lam[static_cast<size_t>(m)];
        if (lam_m == 0.0) continue;
        for (int64_t n = 1; m * n <= cut; ++n) {
            double lam_n = psi.lam[static_cast<size_t>(n)];
            if (lam_n == 0.0) continue;
            double mn = static_cast<double>(m) * static_cast<double>(n);
            double ratio = 2.0 * t * std::log(static_cast<double>(m) / static_cast<double>(n));
            ComplexValue osc = 2.0 * std::cos(ratio); // (m/n)^{2it} + (n/m)^{2it}
            total += lam_m * lam_n / std::sqrt(mn) * osc * interp4(table, step, std::log(mn));
        }
    }
    return total;
}

// ---------------------------------------------------------------------
// Rankin-Selberg series
// ---------------------------------------------------------------------

ComplexValue rankin_selberg_L(const MaassForm& phi, const MaassForm& psi, ComplexValue s) {
    if (s.real() <= 0.05)
        throw convergence_error("rankin_selberg_L: Re(s) must exceed 0.05");
    int64_t N = std::min(phi.N, psi.N);
    if (N < 1000)
        throw insufficient_coefficients("rankin_selberg_L: needs at least 1000 coefficients");
    double N0 = static_cast<double>(N) / std::log(static_cast<double>(N));
    int64_t n_top = std::min(N, static_cast<int64_t>(std::ceil(4.2 * N0)));
    ComplexValue z = 1.0 + 2.0 * s;
    ComplexValue sum{0.0, 0.0};
    for (int64_t n = n_top; n >= 1; --n) {
        double x = static_cast<double>(n);
        double c = phi.lam[static_cast<size_t>(n)] * psi.lam[static_cast<size_t>(n)];
        if (c == 0.0) continue;
        sum += c * std::exp(-z * std::log(x) - (x / N0) * (x / N0));
    }
    return zeta(2.0 + 4.0 * s) * sum;
}

} // namespace qve
