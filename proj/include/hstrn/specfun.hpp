#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>

namespace hstrn {

struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_subdivisions = 2000;
};

// Raised when an adaptive routine exhausts its budget before reaching the
// requested tolerance. Carries the best estimate computed so far.
class AccuracyError : public std::runtime_error {
public:
    AccuracyError(const std::string& what, double best)
        : std::runtime_error(what), best_estimate(best) {}
    double best_estimate;
};

// Rising factorial (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1.
double pochhammer(double a, int k);

// Exact binomial coefficient. Throws std::domain_error for negative inputs
// or k > n.
std::uint64_t binomial(int n, int k);

// Modified Bessel function of the second kind, integer order, x > 0.
// K_{-n} = K_n. Series for small x, Steed's continued fraction for large x,
// upward recurrence in the order.
double bessel_k(int order, double x);

// e^x K_n(x): same accuracy, usable where K_n itself underflows.
double bessel_k_scaled(int order, double x);

// Fills out[j] = e^x K_j(x) for j = 0..out.size()-1 in one recurrence pass.
void bessel_k_scaled_seq(double x, std::span<double> out);

// Adaptive Gauss-Kronrod integration of f over [lower, inf). Deterministic:
// identical inputs produce bit-identical results. Throws AccuracyError when
// max_subdivisions is exhausted, std::domain_error when f returns a
// non-finite value.
double integrate_semi_infinite(const std::function<double(double)>& f,
                               double lower,
                               const QuadratureSpec& spec = {});

// int_1^inf t^{(q+1)/2 + w} K_{1-q}(zeta sqrt(t)) dt for small nonnegative
// integers q, w and zeta > 0.
double bessel_tail_integral(int q, int w, double zeta,
                            const QuadratureSpec& spec = {});

// Meijer G^{3,0}_{1,3}(z | 0; -1, 1+w, q+w) for z > 0 by Mellin-Barnes
// contour integration. Cross-check companion to bessel_tail_integral:
//   bessel_tail_integral(q, w, zeta) = 0.5 z^{-s} G(z),
// with z = zeta^2/4 and s = (q+1)/2 + w.
double meijer_g_1330(double z, int w, int q);

namespace detail {
// Contour discretization knobs exposed for step-halving self-convergence
// tests only.
double meijer_g_1330_custom(double z, int w, int q, double step, double t_max);
} // namespace detail

} // namespace hstrn
