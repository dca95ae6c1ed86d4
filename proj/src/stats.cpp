#include "keyrule/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace keyrule {

namespace {

// Continued-fraction evaluation of the regularized incomplete beta
// function (modified Lentz). Valid for x < (a+1)/(a+b+2); the symmetry
// I_x(a,b) = 1 - I_{1-x}(b,a) covers the rest.
double beta_cf(double a, double b, double x) {
    constexpr int kMaxIter = 1000;
    constexpr double kEps = 1e-16;
    constexpr double kTiny = 1e-300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) return h;
    }
    return h;  // converged to working precision in practice long before this
}

double log_beta(double a, double b) {
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

// Regularized incomplete beta I_x(a, b).
double reg_incomplete_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double log_front =
        a * std::log(x) + b * std::log1p(-x) - log_beta(a, b);
    const double front = std::exp(log_front);
    if (x < (a + 1.0) / (a + b + 2.0))
        return front * beta_cf(a, b, x) / a;
    return 1.0 - std::exp(b * std::log1p(-x) + a * std::log(x) - log_beta(b, a)) *
                     beta_cf(b, a, 1.0 - x) / b;
}

// Solve I_x(a, b) = p for x by bisection with Newton acceleration.
double inverse_reg_incomplete_beta(double a, double b, double p) {
    if (p <= 0.0) return 0.0;
    if (p >= 1.0) return 1.0;
    double lo = 0.0, hi = 1.0;
    double x = 0.5;
    const double log_b = log_beta(a, b);
    for (int iter = 0; iter < 200; ++iter) {
        const double f = reg_incomplete_beta(a, b, x) - p;
        if (f > 0.0)
            hi = x;
        else
            lo = x;
        if (hi - lo < 1e-16 * (1.0 + x)) break;
        // dI/dx = x^(a-1) (1-x)^(b-1) / B(a, b)
        const double log_pdf =
            (a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x) - log_b;
        double next = x;
        const double pdf = std::exp(log_pdf);
        if (pdf > 0.0 && std::isfinite(pdf)) next = x - f / pdf;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::fabs(next - x) < 1e-17 * (1.0 + x)) {
            x = next;
            break;
        }
        x = next;
    }
    return x;
}

// Upper-tail quantile: c >= 0 with P(T > c) = alpha, alpha in (0, 0.5].
double t_upper_quantile(double alpha, double dof) {
    if (alpha == 0.5) return 0.0;
    // P(T > c) = 0.5 I_x(dof/2, 1/2) with x = dof / (dof + c^2)
    const double x = inverse_reg_incomplete_beta(dof / 2.0, 0.5, 2.0 * alpha);
    if (x <= 0.0) return std::numeric_limits<double>::infinity();
    return std::sqrt(dof * (1.0 - x) / x);
}

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("significance level must lie in (0, 1)");
}

}  // namespace

double student_t_cdf(double t, std::int64_t dof) {
    if (dof < 1) throw std::invalid_argument("degrees of freedom must be >= 1");
    const double nu = static_cast<double>(dof);
    const double x = nu / (nu + t * t);
    const double half_tail = 0.5 * reg_incomplete_beta(nu / 2.0, 0.5, x);
    return t >= 0.0 ? 1.0 - half_tail : half_tail;
}

double t_critical(double alpha, std::int64_t dof, bool two_sided) {
    check_alpha(alpha);
    if (dof < 1) throw std::invalid_argument("degrees of freedom must be >= 1");
    const double nu = static_cast<double>(dof);
    if (two_sided) return t_upper_quantile(alpha / 2.0, nu);
    if (alpha <= 0.5) return t_upper_quantile(alpha, nu);
    return -t_upper_quantile(1.0 - alpha, nu);
}

double one_sided_t(double p_k, double required_p, std::uint64_t n) {
    if (!(p_k >= 0.0 && p_k <= 1.0) || !(required_p >= 0.0 && required_p <= 1.0))
        throw std::invalid_argument("proportions must lie in [0, 1]");
    if (n < 1) throw std::invalid_argument("sample size must be >= 1");
    if (p_k == 0.0 || p_k == 1.0)
        throw std::domain_error("degenerate variance: observed precision is 0 or 1");
    return (p_k - required_p) /
           std::sqrt(p_k * (1.0 - p_k) / static_cast<double>(n));
}

OneSidedTest one_sided_precision_test(std::uint64_t in_count, std::uint64_t out_count,
                                      double required_p, double alpha) {
    check_alpha(alpha);
    if (!(required_p >= 0.0 && required_p <= 1.0))
        throw std::invalid_argument("required precision must lie in [0, 1]");
    const std::uint64_t n = in_count + out_count;
    if (n < 1) throw std::invalid_argument("test requires at least one observation");

    OneSidedTest test;
    test.p_k = static_cast<double>(in_count) / static_cast<double>(n);
    test.required_p = required_p;
    test.n = n;
    test.dof = static_cast<std::int64_t>(n) - 1;
    test.alpha = alpha;
    const double endpoint_margin = 2.0 / std::sqrt(static_cast<double>(n));
    test.small_sample_warning =
        n < 30 || std::min(test.p_k, 1.0 - test.p_k) < endpoint_margin;

    if (out_count == 0) {
        test.verdict = OneSidedTest::Verdict::trivially_pass;
        test.accept = true;
        return test;
    }
    if (in_count == 0) {
        test.verdict = OneSidedTest::Verdict::trivially_fail;
        test.accept = false;
        return test;
    }
    test.t = one_sided_t(test.p_k, required_p, n);
    test.t_crit = t_critical(alpha, test.dof, /*two_sided=*/false);
    test.accept = *test.t > *test.t_crit;
    test.verdict = test.accept ? OneSidedTest::Verdict::accepted
                               : OneSidedTest::Verdict::rejected;
    return test;
}

TwoSidedTest two_sided_t(std::uint64_t in_a, std::uint64_t out_a,
                         std::uint64_t in_b, std::uint64_t out_b, double alpha) {
    check_alpha(alpha);
    const std::uint64_t n = in_a + out_a;
    const std::uint64_t n_prime = in_b + out_b;
    if (n < 2 || n_prime < 2)
        throw std::invalid_argument("each sample needs at least two observations");

    TwoSidedTest test;
    test.n = n;
    test.n_prime = n_prime;
    test.p = static_cast<double>(in_a) / static_cast<double>(n);
    test.p_prime = static_cast<double>(in_b) / static_cast<double>(n_prime);
    test.p_hat = static_cast<double>(in_a + in_b) / static_cast<double>(n + n_prime);
    if (test.p_hat == 0.0 || test.p_hat == 1.0)
        throw std::domain_error("degenerate pooled proportion: 0 or 1");
    test.alpha = alpha;
    test.dof = static_cast<std::int64_t>(std::min(n, n_prime)) - 1;
    const double variance =
        test.p_hat * (1.0 - test.p_hat) *
        (1.0 / static_cast<double>(n_prime) + 1.0 / static_cast<double>(n));
    test.t = (test.p - test.p_prime) / std::sqrt(variance);
    test.t_crit = t_critical(alpha, test.dof, /*two_sided=*/true);
    test.reject = std::fabs(test.t) > test.t_crit;
    return test;
}

}  // namespace keyrule
