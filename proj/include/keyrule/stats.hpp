#pragma once

#include <cstdint>
#include <optional>

namespace keyrule {

/// One-sided test that an observed precision p_k meets a required
/// minimum p at significance alpha:
///
///   t = (p_k - p) / sqrt(p_k (1 - p_k) / n),   dof = n - 1.
///
/// The normal approximation behind the statistic needs p_k away from 0
/// and 1; at the endpoints the variance degenerates and the test
/// reports a trivial verdict instead of a statistic.
struct OneSidedTest {
    enum class Verdict { accepted, rejected, trivially_pass, trivially_fail };

    double p_k = 0.0;        ///< observed precision
    double required_p = 0.0; ///< precision the classifier must meet
    std::uint64_t n = 0;     ///< sample size (in_count + out_count)
    std::int64_t dof = 0;    ///< n - 1
    double alpha = 0.0;
    std::optional<double> t;      ///< absent at the degenerate endpoints
    std::optional<double> t_crit; ///< absent at the degenerate endpoints
    Verdict verdict = Verdict::rejected;
    bool accept = false;
    /// Set when n < 30 or p_k is within 2/sqrt(n) of an endpoint, where
    /// the normal approximation is questionable.
    bool small_sample_warning = false;
};

/// Pooled two-sample proportion test that training and testing
/// precision are equal:
///
///   t = (p - p') / sqrt(p_hat (1 - p_hat) (1/n' + 1/n)),
///   p_hat = (d' + d) / (n' + n),   dof = min(n', n) - 1.
struct TwoSidedTest {
    double p = 0.0;       ///< training proportion d/n
    double p_prime = 0.0; ///< testing proportion d'/n'
    double p_hat = 0.0;   ///< pooled proportion
    std::uint64_t n = 0;
    std::uint64_t n_prime = 0;
    double t = 0.0;
    std::int64_t dof = 0;
    double alpha = 0.0;
    double t_crit = 0.0;
    bool reject = false;  ///< |t| > t_crit: p and p' differ
};

/// The raw one-sided statistic (p_k - p) / sqrt(p_k (1 - p_k) / n).
/// Throws std::domain_error when p_k is 0 or 1 (degenerate variance)
/// and std::invalid_argument on out-of-range inputs.
double one_sided_t(double p_k, double required_p, std::uint64_t n);

/// Full one-sided verdict from partition counts. Degenerate precision
/// maps to trivially_pass (p_k = 1) or trivially_fail (p_k = 0).
OneSidedTest one_sided_precision_test(std::uint64_t in_count, std::uint64_t out_count,
                                      double required_p, double alpha = 0.05);

/// Two-sample pooled test from training counts (in_a, out_a) and
/// testing counts (in_b, out_b). Throws std::invalid_argument when a
/// sample has fewer than two observations and std::domain_error when
/// the pooled proportion is 0 or 1.
TwoSidedTest two_sided_t(std::uint64_t in_a, std::uint64_t out_a,
                         std::uint64_t in_b, std::uint64_t out_b,
                         double alpha = 0.05);

/// Critical value c with P(T > c) = alpha (one-sided) or
/// P(|T| > c) = alpha (two-sided) for Student's t with dof degrees of
/// freedom. Computed internally from the regularized incomplete beta
/// function; no statistics library involved.
double t_critical(double alpha, std::int64_t dof, bool two_sided);

/// P(T <= t) for Student's t with dof degrees of freedom.
double student_t_cdf(double t, std::int64_t dof);

}  // namespace keyrule
