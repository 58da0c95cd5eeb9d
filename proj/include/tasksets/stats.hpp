#pragma once

#include <vector>

namespace tasksets::stats {

double mean(const std::vector<double>& v);
// Unbiased (n-1) standard deviation; 0 for fewer than 2 samples.
double stddev(const std::vector<double>& v);
double median(std::vector<double> v);
// Linear interpolation between order statistics, q in [0,1].
double quantile(std::vector<double> v, double q);
double iqr(const std::vector<double>& v);

double pearson(const std::vector<double>& x, const std::vector<double>& y);
// Rank correlation with average ranks for ties.
double spearman(const std::vector<double>& x, const std::vector<double>& y);

struct KsResult {
    double statistic = 0.0;
    // Asymptotic two-sample significance level; a proxy, not an exact p-value.
    double p_proxy = 1.0;
};

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

std::vector<double> ranks_with_ties(const std::vector<double>& v);

} // namespace tasksets::stats
