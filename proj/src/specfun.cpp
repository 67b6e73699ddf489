#include "hstrn/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace hstrn {

double pochhammer(double a, int k) {
    if (k < 0) throw std::domain_error("pochhammer: k must be nonnegative");
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= a + i;
    return r;
}

std::uint64_t binomial(int n, int k) {
    if (n < 0 || k < 0) throw std::domain_error("binomial: negative argument");
    if (k > n) throw std::domain_error("binomial: k > n");
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    // r stays an exact integer at every step: r*(n-k+i) is divisible by i.
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;

// Scaled K0, K1 on x <= 2 from the ascending log series.
void bessel_k01_series(double x, double& k0s, double& k1s) {
    const double g = x * x * 0.25;
    const double lh = std::log(0.5 * x);
    // K0 = -(log(x/2)+gamma) I0 + sum H_k g^k/(k!)^2
    // K1 = 1/x + log(x/2) I1 - (x/4) sum (H_k + H_{k+1} - 2 gamma) g^k/(k!(k+1)!)
    double term0 = 1.0, i0 = 1.0, s0 = 0.0;
    double term1 = 1.0, i1 = 1.0, s1 = -2.0 * kEulerGamma + 1.0; // k=0: H_0 + H_1 = 1
    double hk = 0.0;
    for (int k = 1; k < 60; ++k) {
        hk += 1.0 / k;
        term0 *= g / (static_cast<double>(k) * k);
        i0 += term0;
        s0 += term0 * hk;
        term1 *= g / (static_cast<double>(k) * (k + 1));
        i1 += term1;
        s1 += term1 * (2.0 * hk - 2.0 * kEulerGamma + 1.0 / (k + 1.0));
        if (term0 < 1e-18 * i0 && term1 < 1e-18 * i1) break;
    }
    const double k0 = -(lh + kEulerGamma) * i0 + s0;
    const double k1 = 1.0 / x + lh * (0.5 * x) * i1 - 0.25 * x * s1;
    const double ex = std::exp(x);
    k0s = k0 * ex;
    k1s = k1 * ex;
}

// Scaled K0, K1 on x >= 2 by Steed's continued fraction (CF2).
void bessel_k01_cf2(double x, double& k0s, double& k1s) {
    const double a1 = 0.25;
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d, delh = d;
    double q1 = 0.0, q2 = 1.0;
    double a = -a1, c = a1, q = a1;
    double s = 1.0 + q * delh;
    for (int i = 2; i <= 10000; ++i) {
        a -= 2.0 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < 1e-16) break;
    }
    h = a1 * h;
    k0s = std::sqrt(1.5707963267948966192 / x) / s;
    k1s = k0s * (x + 0.5 - h) / x;
}

void bessel_k01_scaled(double x, double& k0s, double& k1s) {
    if (x < 2.0)
        bessel_k01_series(x, k0s, k1s);
    else
        bessel_k01_cf2(x, k0s, k1s);
}

} // namespace

void bessel_k_scaled_seq(double x, std::span<double> out) {
    if (!(x > 0.0)) throw std::domain_error("bessel_k: x must be positive");
    if (out.empty()) return;
    double k0s, k1s;
    bessel_k01_scaled(x, k0s, k1s);
    out[0] = k0s;
    if (out.size() > 1) out[1] = k1s;
    // Upward recurrence K_{n+1} = K_{n-1} + (2n/x) K_n, stable in this
    // direction and unchanged by the e^x scaling.
    for (std::size_t n = 2; n < out.size(); ++n)
        out[n] = out[n - 2] + (2.0 * static_cast<double>(n - 1) / x) * out[n - 1];
}

double bessel_k_scaled(int order, double x) {
    const int n = order < 0 ? -order : order;
    if (!(x > 0.0)) throw std::domain_error("bessel_k: x must be positive");
    double k0s, k1s;
    bessel_k01_scaled(x, k0s, k1s);
    if (n == 0) return k0s;
    if (n == 1) return k1s;
    double km = k0s, k = k1s;
    for (int j = 1; j < n; ++j) {
        const double kn = km + (2.0 * j / x) * k;
        km = k;
        k = kn;
    }
    return k;
}

double bessel_k(int order, double x) {
    return bessel_k_scaled(order, x) * std::exp(-x);
}

namespace {

// 15-point Kronrod / 7-point Gauss pair on [-1,1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    double value;
    double error;
    std::uint64_t id;
};

struct PanelWorse {
    bool operator()(const Panel& l, const Panel& r) const {
        if (l.error != r.error) return l.error < r.error;
        return l.id > r.id; // deterministic tie-break: older panel first
    }
};

Panel evaluate_panel(const std::function<double(double)>& g, double a, double b,
                     std::uint64_t id) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = g(c);
    if (!std::isfinite(fc)) throw std::domain_error("integrand returned a non-finite value");
    double resk = fc * kWgk[7];
    double resg = fc * kWg[3];
    double fv1[7], fv2[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        fv1[j] = g(c - dx);
        fv2[j] = g(c + dx);
        if (!std::isfinite(fv1[j]) || !std::isfinite(fv2[j]))
            throw std::domain_error("integrand returned a non-finite value");
        resk += kWgk[j] * (fv1[j] + fv2[j]);
        if (j % 2 == 1) resg += kWg[(j - 1) / 2] * (fv1[j] + fv2[j]);
    }
    const double reskh = resk * 0.5;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
    resasc *= std::abs(h);
    double err = std::abs((resk - resg) * h);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    return Panel{a, b, resk * h, err, id};
}

} // namespace

double integrate_semi_infinite(const std::function<double(double)>& f,
                               double lower, const QuadratureSpec& spec) {
    // Map [lower, inf) onto t in [0,1) with x = lower + t/(1-t).
    auto g = [&f, lower](double t) {
        const double om = 1.0 - t;
        return f(lower + t / om) / (om * om);
    };

    std::uint64_t next_id = 0;
    std::priority_queue<Panel, std::vector<Panel>, PanelWorse> active;
    Panel p0 = evaluate_panel(g, 0.0, 1.0, next_id++);
    double total_value = p0.value;
    double active_error = p0.error;
    double frozen_error = 0.0;
    active.push(p0);

    int splits = 0;
    auto tolerance = [&spec](double v) {
        return std::max(spec.abs_tol, spec.rel_tol * std::abs(v));
    };
    while (active_error + frozen_error > tolerance(total_value)) {
        if (splits >= spec.max_subdivisions || active.empty())
            throw AccuracyError("integrate_semi_infinite: tolerance not reached within subdivision budget",
                                total_value);
        const Panel worst = active.top();
        active.pop();
        if (worst.b - worst.a < 1e-15) {
            // Width at roundoff; keep its contribution but stop refining it.
            active_error -= worst.error;
            frozen_error += worst.error;
            continue;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        const Panel left = evaluate_panel(g, worst.a, mid, next_id++);
        const Panel right = evaluate_panel(g, mid, worst.b, next_id++);
        total_value += left.value + right.value - worst.value;
        active_error += left.error + right.error - worst.error;
        active.push(left);
        active.push(right);
        ++splits;
    }
    return total_value;
}

double bessel_tail_integral(int q, int w, double zeta, const QuadratureSpec& spec) {
    if (q < 0 || w < 0) throw std::domain_error("bessel_tail_integral: q, w must be nonnegative");
    if (!(zeta > 0.0)) throw std::domain_error("bessel_tail_integral: zeta must be positive");
    // Substituting u = sqrt(t): 2 int_1^inf u^{q+2+2w} K_{1-q}(zeta u) du.
    const double p = q + 2 + 2 * w;
    const int nu = q >= 1 ? q - 1 : 1 - q;
    auto f = [p, nu, zeta](double u) {
        const double lg = p * std::log(u) - zeta * u;
        if (lg < -700.0) return 0.0;
        return 2.0 * std::exp(lg) * bessel_k_scaled(nu, zeta * u);
    };
    return integrate_semi_infinite(f, 1.0, spec);
}

namespace {

std::complex<double> lanczos_lgamma(std::complex<double> z) {
    // Lanczos g = 7, n = 9; callers keep Re z >= 1.
    static constexpr double kC[9] = {
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7};
    z -= 1.0;
    std::complex<double> x = kC[0];
    for (int i = 1; i < 9; ++i) x += kC[i] / (z + static_cast<double>(i));
    const std::complex<double> t = z + 7.5;
    return 0.91893853320467274178 + (z + 0.5) * std::log(t) - t + std::log(x);
}

} // namespace

namespace detail {

double meijer_g_1330_custom(double z, int w, int q, double step, double t_max) {
    if (!(z > 0.0)) throw std::domain_error("meijer_g_1330: z must be positive");
    if (w < 0 || q < 0) throw std::domain_error("meijer_g_1330: w, q must be nonnegative");
    // G^{3,0}_{1,3}(z | 0; -1, 1+w, q+w)
    //   = (1/2 pi i) int Gamma(s-1) Gamma(s+1+w) Gamma(s+q+w) / Gamma(s) z^{-s} ds
    // with Gamma(s-1)/Gamma(s) = 1/(s-1). Contour Re s = 2 passes right of
    // every pole; the integrand decays like e^{-pi |Im s|}.
    const double c = 2.0;
    const double lnz = std::log(z);
    auto fval = [w, q, c, lnz](double t) {
        const std::complex<double> s(c, t);
        const std::complex<double> lg =
            lanczos_lgamma(s + static_cast<double>(1 + w)) +
            lanczos_lgamma(s + static_cast<double>(q + w)) - s * lnz;
        return (std::exp(lg) / (s - 1.0)).real();
    };
    double sum = 0.5 * fval(0.0);
    const int n = static_cast<int>(t_max / step);
    for (int k = 1; k <= n; ++k) sum += fval(k * step);
    return sum * step / 3.14159265358979323846;
}

} // namespace detail

double meijer_g_1330(double z, int w, int q) {
    return detail::meijer_g_1330_custom(z, w, q, 0.0625, 60.0);
}

} // namespace hstrn
