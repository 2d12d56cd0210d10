#include "qve/arith.hpp"

#include <cmath>

#include "qve/errors.hpp"

namespace qve {

namespace {

constexpr int64_t CAPACITY = 1000000000;

void check_capacity(int64_t n, const char* who) {
    if (n < 1) throw domain_error(std::string(who) + ": N must be at least 1");
    if (n > CAPACITY)
        throw capacity_error(std::string(who) + ": N above 1e9 capacity");
}

} // namespace

CoeffTable moebius_sieve(int64_t n) {
    check_capacity(n, "moebius_sieve");
    CoeffTable tab;
    tab.n = n;
    tab.values.assign(static_cast<size_t>(n) + 1, 1);
    tab.values[0] = 0;
    std::vector<bool> composite(static_cast<size_t>(n) + 1, false);
    for (int64_t p = 2; p <= n; ++p) {
        if (composite[static_cast<size_t>(p)]) continue;
        for (int64_t k = p; k <= n; k += p) {
            if (k > p) composite[static_cast<size_t>(k)] = true;
            tab.values[static_cast<size_t>(k)] =
                static_cast<int16_t>(-tab.values[static_cast<size_t>(k)]);
        }
        if (p <= n / p) {
            int64_t p2 = p * p;
            for (int64_t k = p2; k <= n; k += p2)
                tab.values[static_cast<size_t>(k)] = 0;
        }
    }
    return tab;
}

CoeffTable alpha_sieve(int64_t n) {
    check_capacity(n, "alpha_sieve");
    CoeffTable mu = moebius_sieve(n);
    CoeffTable tab;
    tab.n = n;
    tab.values.assign(static_cast<size_t>(n) + 1, 0);
    for (int64_t d = 1; d <= n; ++d) {
        int m = mu.value(d);
        if (m == 0) continue;
        for (int64_t k = d, j = 1; k <= n; k += d, ++j)
            tab.values[static_cast<size_t>(k)] =
                static_cast<int16_t>(tab.values[static_cast<size_t>(k)] +
                                     m * mu.value(j));
    }
    return tab;
}

namespace {

ComplexValue smoothed_inv_zeta_sum(const CoeffTable& tab, double t, double x) {
    ComplexValue sum(0.0, 0.0);
    for (int64_t k = 1; k <= tab.n; ++k) {
        int c = tab.value(k);
        if (c == 0) continue;
        double kd = static_cast<double>(k);
        double w = std::exp(-kd / x) * static_cast<double>(c) / kd;
        double phase = -2.0 * t * std::log(kd);
        sum += ComplexValue(w * std::cos(phase), w * std::sin(phase));
    }
    return sum;
}

// Smoothing cutoff k <= x^{1+eps}.  eps = 0.15: with eps = 0.10 the tail that
// e^{-k/x} still carries past the cutoff (weight e^{-x^0.1} ~ 0.23 at x = 50)
// pushes the x = 50 error to 0.066; 0.15 keeps every accuracy target met while
// staying a hard reproducible cutoff.
int64_t afe_cutoff(double x) {
    return static_cast<int64_t>(std::pow(x, 1.15));
}

void check_afe_domain(double t, double x, const char* who) {
    if (t < 10.0)
        throw domain_error(std::string(who) + ": t must be at least 10");
    if (x < 2.0)
        throw domain_error(std::string(who) + ": x must be at least 2");
}

} // namespace

ComplexValue afe_inv_zeta(double t, double x) {
    check_afe_domain(t, x, "afe_inv_zeta");
    return smoothed_inv_zeta_sum(moebius_sieve(afe_cutoff(x)), t, x);
}

ComplexValue afe_inv_zeta_sq(double t, double x) {
    check_afe_domain(t, x, "afe_inv_zeta_sq");
    return smoothed_inv_zeta_sum(alpha_sieve(afe_cutoff(x)), t, x);
}

} // namespace qve
