#include "qve/eisenstein.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace qve {

namespace {

constexpr double PI = 3.141592653589793238462643383279502884;
constexpr double Y_MIN = 0.86602540378443865; // sqrt(3)/2, lowest domain point
constexpr double Y_SPLIT = 1.2;               // exp-mapped region starts here

// 8-point Gauss-Legendre rule on [-1, 1].
constexpr int GN = 8;
constexpr double GX[GN] = {
    -0.96028985649753623, -0.79666647741362674, -0.52553240991632899,
    -0.18343464249564980,  0.18343464249564980,  0.52553240991632899,
     0.79666647741362674,  0.96028985649753623};
constexpr double GW[GN] = {
    0.10122853629037626, 0.22238103445337447, 0.31370664587788729,
    0.36268378337836198, 0.36268378337836198, 0.31370664587788729,
    0.22238103445337447, 0.10122853629037626};

// Calls f(node, weight) over composite 8-point panels covering [a, b] with
// at least n_nodes nodes in total.
template <typename F>
void for_gauss_nodes(double a, double b, int n_nodes, F&& f) {
    int npanels = std::max(1, (n_nodes + GN - 1) / GN);
    double h = (b - a) / npanels;
    for (int p = 0; p < npanels; ++p) {
        double mid = a + (p + 0.5) * h;
        for (int g = 0; g < GN; ++g) f(mid + 0.5 * h * GX[g], 0.5 * h * GW[g]);
    }
}

// Fourier cutoff: the scaled Bessel factor e^{pi r/2} K_{ir}(x) decays like
// e^{-c x} past the turning point x = r, so 2 pi M y >= 1.2 r + 40 pushes
// the truncated tail below 1e-9 of the leading terms.
int cutoff_m(double r, double y) {
    return static_cast<int>(std::ceil((1.2 * r + 40.0) / (2.0 * PI * y)));
}

// tau_it(n) = sum_{ab=n} (a/b)^{it} = sum_{d|n} (d^2/n)^{it}; real because
// the divisor pair (d, n/d) and its reverse carry conjugate phases.
std::vector<double> tau_table(double t, int m_max) {
    std::vector<double> tau(static_cast<size_t>(m_max) + 1, 0.0);
    for (int n = 1; n <= m_max; ++n) {
        double acc = 0.0;
        for (int d = 1; d * d <= n; ++d) {
            if (n % d != 0) continue;
            if (d * d == n)
                acc += 1.0;
            else
                acc += 2.0 * std::cos(t * std::log(static_cast<double>(d) * d / n));
        }
        tau[static_cast<size_t>(n)] = acc;
    }
    return tau;
}

// t-dependent constants of the expansion, assembled in log space so the
// e^{-pi|t|/2} Bessel scaling and the decay of xi(1 + 2it) cancel without
// under- or overflow.
struct EisSeries {
    double t = 0.0;
    double abs_t = 0.0;
    ComplexValue scatter;     // xi(2it) / xi(1 + 2it), modulus 1
    ComplexValue coefficient; // 4 e^{-pi|t|/2} / xi(1 + 2it)
    std::vector<double> tau;  // divisor phases, 1-based
};

EisSeries make_series(double t, int m_max) {
    EisSeries s;
    s.t = t;
    s.abs_t = std::fabs(t);
    ComplexValue top = xi_log(ComplexValue(0.0, 2.0 * t));
    ComplexValue bot = xi_log(ComplexValue(1.0, 2.0 * t));
    s.scatter = std::exp(top - bot);
    s.coefficient = 4.0 * std::exp(ComplexValue(-PI * s.abs_t / 2.0, 0.0) - bot);
    s.tau = tau_table(t, m_max);
    return s;
}

// Row decomposition E(x + iy) = c_row + b_row S(x) with the real series
// S(x) = sum_m tauk[m] cos(2 pi m x).
struct EisRow {
    ComplexValue c_row;
    ComplexValue b_row;
    int m = 0;
};

EisRow eis_row(const EisSeries& s, double y, int m, std::vector<double>& tauk) {
    EisRow r;
    double sy = std::sqrt(y);
    ComplexValue osc = std::exp(ComplexValue(0.0, s.t * std::log(y)));
    r.c_row = sy * (osc + s.scatter * std::conj(osc));
    r.b_row = sy * s.coefficient;
    r.m = m;
    tauk.assign(static_cast<size_t>(m) + 1, 0.0);
    for (int k = 1; k <= m; ++k)
        tauk[static_cast<size_t>(k)] = s.tau[static_cast<size_t>(k)] *
                                       bessel_k_scaled(s.abs_t, 2.0 * PI * k * y);
    return r;
}

// sum_k a[k] cos(k theta) by the forward Chebyshev recurrence, c1 = cos theta.
double cos_series(const std::vector<double>& a, int m, double c1) {
    double ckm1 = 1.0, ck = c1, acc = 0.0;
    for (int k = 1; k <= m; ++k) {
        acc += a[static_cast<size_t>(k)] * ck;
        double next = 2.0 * c1 * ck - ckm1;
        ckm1 = ck;
        ck = next;
    }
    return acc;
}

// sum_k a[k] sin(k theta), same recurrence seeded with s1 = sin theta.
double sin_series(const std::vector<double>& a, int m, double c1, double s1) {
    double skm1 = 0.0, sk = s1, acc = 0.0;
    for (int k = 1; k <= m; ++k) {
        acc += a[static_cast<size_t>(k)] * sk;
        double next = 2.0 * c1 * sk - skm1;
        skm1 = sk;
        sk = next;
    }
    return acc;
}

enum class Integrand { mu_pair, norm_sq };

struct DomainIntegral {
    double value = 0.0;
    double top_row_abs = 0.0; // |integrand| x-integral at Y_max, incl. 1/y^2
};

// Integrates the folded integrand over {|x| <= 1/2, x^2 + y^2 >= 1,
// y <= Y_max} against dx dy / y^2.  The x-integral runs over the half strip
// [x_lo(y), 1/2] with the mirror half folded in analytically: |E|^2 and
// phi^2 are even in x, and phi(x) + phi(-x) doubles a cosine series and
// cancels a sine series, so odd forms contribute exactly zero to mu_pair.
DomainIntegral integrate_domain(const MaassForm& form, const EisSeries* eis,
                                const QuadratureSpec& q, Integrand mode) {
    const bool even = form.parity == Parity::even;
    const double coef_phi = form.rho1 * std::exp(-PI * form.t / 2.0);
    std::vector<double> lamk, tauk;

    auto row = [&](double y, double x_lo, double* abs_out) -> double {
        int mp = static_cast<int>(std::min<int64_t>(cutoff_m(form.t, y), form.N));
        double sy = std::sqrt(y);
        lamk.assign(static_cast<size_t>(mp) + 1, 0.0);
        for (int n = 1; n <= mp; ++n)
            lamk[static_cast<size_t>(n)] = coef_phi * sy * form.lam[static_cast<size_t>(n)] *
                                           bessel_k_scaled(form.t, 2.0 * PI * n * y);
        double a0 = 0.0, a1 = 0.0, a2 = 0.0;
        int me = 0;
        if (eis) {
            me = std::min(cutoff_m(eis->abs_t, y), static_cast<int>(eis->tau.size()) - 1);
            EisRow er = eis_row(*eis, y, me, tauk);
            a0 = std::norm(er.c_row);
            a1 = 2.0 * (er.c_row.real() * er.b_row.real() +
                        er.c_row.imag() * er.b_row.imag());
            a2 = std::norm(er.b_row);
        }
        double acc = 0.0, acc_abs = 0.0;
        for_gauss_nodes(x_lo, 0.5, q.nx, [&](double x, double w) {
            double th = 2.0 * PI * x;
            double c1 = std::cos(th);
            double s1 = std::sin(th);
            double sp = even ? cos_series(lamk, mp, c1) : sin_series(lamk, mp, c1, s1);
            double val;
            if (mode == Integrand::norm_sq) {
                val = 2.0 * sp * sp; // phi(-x)^2 = phi(x)^2 for both parities
            } else {
                double se = cos_series(tauk, me, c1);
                double e2 = a0 + (a1 + a2 * se) * se;
                val = (even ? 2.0 * sp : 0.0) * e2; // sine fold cancels
            }
            acc += w * val;
            acc_abs += w * std::fabs(val);
        });
        if (abs_out) *abs_out = acc_abs;
        return acc;
    };

    DomainIntegral out;
    // region above the split: y = Y_SPLIT e^v turns dy/y^2 into e^{-v}/Y_SPLIT dv
    double vmax = std::log(q.Y_max / Y_SPLIT);
    for_gauss_nodes(0.0, vmax, q.ny, [&](double v, double w) {
        out.value += w * std::exp(-v) / Y_SPLIT * row(Y_SPLIT * std::exp(v), 0.0, nullptr);
    });
    int nb = std::max(GN, q.ny / 2);
    // flat band between the unit circle's top and the split
    for_gauss_nodes(1.0, Y_SPLIT, nb, [&](double y, double w) {
        out.value += w / (y * y) * row(y, 0.0, nullptr);
    });
    // curved band: y = sin psi makes the circle boundary x_lo = cos psi a
    // smooth function of the integration variable (no sqrt kink at y = 1)
    for_gauss_nodes(std::asin(Y_MIN), PI / 2.0, nb, [&](double psi, double w) {
        double y = std::sin(psi);
        out.value += w * std::cos(psi) / (y * y) * row(y, std::cos(psi), nullptr);
    });
    double abs_top = 0.0;
    row(q.Y_max, 0.0, &abs_top);
    out.top_row_abs = abs_top / (q.Y_max * q.Y_max);
    return out;
}

void check_quadrature(const char* who, const QuadratureSpec& q) {
    if (q.Y_max < 2.0)
        throw domain_error(std::string(who) + ": Y_max must be >= 2");
    if (q.nx < 1 || q.ny < 1)
        throw domain_error(std::string(who) + ": nx and ny must be positive");
}

void check_supply(const char* who, const MaassForm& form, double y) {
    int need = cutoff_m(form.t, y);
    if (need > form.N)
        throw insufficient_coefficients(std::string(who) + ": needs coefficients to " +
                                        std::to_string(need) + ", have " +
                                        std::to_string(form.N));
}

} // namespace

UpperHalfPoint canonicalize(UpperHalfPoint z) {
    if (!(z.y > 0.0)) throw domain_error("canonicalize: y must be positive");
    for (int i = 0; i < 64; ++i) {
        z.x -= std::round(z.x);
        double r2 = z.x * z.x + z.y * z.y;
        if (r2 >= 1.0 - 1e-15) break;
        z.x = -z.x / r2;
        z.y = z.y / r2;
    }
    return z;
}

QuadratureSpec default_quadrature(const MaassForm& form, double t) {
    QuadratureSpec q;
    double at = std::fabs(t);
    q.Y_max = 6.0 + (form.t + at) / (2.0 * PI);
    int m = cutoff_m(at, Y_MIN) + cutoff_m(form.t, Y_MIN);
    int n = static_cast<int>(std::ceil(10.0 * (at + form.t + 2.0 * PI * m)));
    q.nx = n;
    q.ny = n;
    return q;
}

ComplexValue eisenstein_value(UpperHalfPoint z, double t, int fourier_cutoff) {
    if (std::fabs(t) < 0.5)
        throw domain_error("eisenstein_value: |t| must be >= 0.5");
    if (z.y < 0.1) throw domain_error("eisenstein_value: y must be >= 0.1");
    if (fourier_cutoff < 0)
        throw domain_error("eisenstein_value: fourier_cutoff must be nonnegative");
    int m = fourier_cutoff > 0 ? fourier_cutoff : cutoff_m(std::fabs(t), z.y);
    EisSeries s = make_series(t, m);
    std::vector<double> tauk;
    EisRow r = eis_row(s, z.y, m, tauk);
    return r.c_row + r.b_row * cos_series(tauk, m, std::cos(2.0 * PI * z.x));
}

double maass_value(const MaassForm& form, UpperHalfPoint z) {
    if (z.y < 0.1) throw domain_error("maass_value: y must be >= 0.1");
    check_supply("maass_value", form, z.y);
    int m = cutoff_m(form.t, z.y);
    double th = 2.0 * PI * z.x;
    double c1 = std::cos(th), s1 = std::sin(th);
    double ckm1 = 1.0, ck = c1, skm1 = 0.0, sk = s1;
    double acc = 0.0;
    bool even = form.parity == Parity::even;
    for (int n = 1; n <= m; ++n) {
        double k = bessel_k_scaled(form.t, 2.0 * PI * n * z.y);
        acc += form.lam[static_cast<size_t>(n)] * k * (even ? ck : sk);
        double cn = 2.0 * c1 * ck - ckm1;
        double sn = 2.0 * c1 * sk - skm1;
        ckm1 = ck;
        ck = cn;
        skm1 = sk;
        sk = sn;
    }
    return form.rho1 * std::exp(-PI * form.t / 2.0) * std::sqrt(z.y) * acc;
}

ComplexValue mu_closed(const MaassForm& form, double t) {
    if (t < 0.5) throw domain_error("mu_closed: t must be >= 0.5");
    if (form.parity == Parity::odd) return ComplexValue(0.0, 0.0);
    double g2 = std::exp(2.0 * std::real(log_gamma(ComplexValue(0.25, form.t / 2.0))));
    ComplexValue ratio = stirling_ratio(t, form.t);
    ComplexValue l0 = L_critical(form, 0.0);
    ComplexValue lm = L_critical(form, -2.0 * t);
    ComplexValue z1 = zeta(ComplexValue(1.0, 2.0 * t));
    return (form.rho1 / 4.0) * g2 * ratio * l0 * lm / std::norm(z1);
}

ComplexValue mu_direct(const MaassForm& form, double t, const QuadratureSpec& quad,
                       bool force, double* tail_estimate, double* grid_error) {
    if (t < 0.5) throw domain_error("mu_direct: t must be >= 0.5");
    if (t > 20.0 && !force)
        throw cost_guard("mu_direct: t = " + std::to_string(t) +
                         " exceeds the t <= 20 cost guard; pass force to override");
    check_quadrature("mu_direct", quad);
    check_supply("mu_direct", form, Y_MIN);
    EisSeries s = make_series(t, cutoff_m(std::fabs(t), Y_MIN));

    QuadratureSpec q = quad;
    DomainIntegral base = integrate_domain(form, &s, q, Integrand::mu_pair);
    if (quad.scheme == QuadScheme::adaptive) {
        double delta = 0.0;
        for (int round = 0; round < 4; ++round) {
            QuadratureSpec fine = q;
            fine.nx *= 2;
            fine.ny *= 2;
            DomainIntegral next = integrate_domain(form, &s, fine, Integrand::mu_pair);
            delta = std::fabs(next.value - base.value);
            q = fine;
            base = next;
            if (delta <= 1e-9 * std::max(1.0, std::fabs(next.value))) break;
        }
        if (grid_error) *grid_error = delta;
    } else if (grid_error) {
        QuadratureSpec half = q;
        half.nx = std::max(GN, q.nx / 2);
        half.ny = std::max(GN, q.ny / 2);
        DomainIntegral coarse = integrate_domain(form, &s, half, Integrand::mu_pair);
        *grid_error = std::fabs(base.value - coarse.value);
    }
    // the integrand decays at least like e^{-2 pi y} above the truncation
    // (slowest Fourier mode of phi), so the edge density integrates to at
    // most its value over 2 pi
    if (tail_estimate) *tail_estimate = base.top_row_abs / (2.0 * PI);
    return ComplexValue(base.value, 0.0);
}

double norm_sq_direct(const MaassForm& form, const QuadratureSpec& quad) {
    check_quadrature("norm_sq_direct", quad);
    check_supply("norm_sq_direct", form, Y_MIN);
    return integrate_domain(form, nullptr, quad, Integrand::norm_sq).value;
}

} // namespace qve
