#pragma once

#include <cstddef>
#include <vector>

namespace relprice::stats {

// Survival function of the chi-squared distribution.
double chisq_sf(double x, double dof);

// Two-sided p-value for a t statistic with the given degrees of freedom.
double t_two_sided_p(double t, double dof);

// Standard normal inverse CDF.
double normal_quantile(double p);

// 95% two-sided normal critical value used throughout the reports.
inline constexpr double kZ95 = 1.96;

double mean(const std::vector<double>& xs);
// Sample standard deviation (n-1 denominator); 0 for n < 2.
double sample_sd(const std::vector<double>& xs);
double correlation(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace relprice::stats
