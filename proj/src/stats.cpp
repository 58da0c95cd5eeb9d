#include "tasksets/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tasksets/errors.hpp"

namespace tasksets::stats {

double mean(const std::vector<double>& v) {
    if (v.empty()) return 0.0;
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double stddev(const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    double m = mean(v);
    double ss = 0.0;
    for (double x : v) ss += (x - m) * (x - m);
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

double quantile(std::vector<double> v, double q) {
    if (v.empty()) throw Error("quantile of empty vector");
    std::sort(v.begin(), v.end());
    double h = q * static_cast<double>(v.size() - 1);
    size_t lo = static_cast<size_t>(std::floor(h));
    size_t hi = static_cast<size_t>(std::ceil(h));
    if (lo == hi) return v[lo];
    double w = h - static_cast<double>(lo);
    return v[lo] * (1.0 - w) + v[hi] * w;
}

double median(std::vector<double> v) { return quantile(std::move(v), 0.5); }

double iqr(const std::vector<double>& v) { return quantile(v, 0.75) - quantile(v, 0.25); }

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw ShapeMismatch("pearson input lengths differ");
    if (x.size() < 2) return 0.0;
    double mx = mean(x), my = mean(y);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        double dx = x[i] - mx;
        double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx <= 0.0 || syy <= 0.0) return 0.0;
    return sxy / std::sqrt(sxx * syy);
}

std::vector<double> ranks_with_ties(const std::vector<double>& v) {
    const size_t n = v.size();
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return v[a] < v[b]; });

    std::vector<double> ranks(n, 0.0);
    size_t i = 0;
    while (i < n) {
        size_t j = i;
        while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
        double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
    return pearson(ranks_with_ties(x), ranks_with_ties(y));
}

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw Error("ks_two_sample needs non-empty samples");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());

    double d = 0.0;
    size_t ia = 0, ib = 0;
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    while (ia < a.size() && ib < b.size()) {
        double xa = a[ia], xb = b[ib];
        double x = std::min(xa, xb);
        while (ia < a.size() && a[ia] == x) ++ia;
        while (ib < b.size() && b[ib] == x) ++ib;
        double fa = static_cast<double>(ia) / na;
        double fb = static_cast<double>(ib) / nb;
        d = std::max(d, std::abs(fa - fb));
    }

    KsResult r;
    r.statistic = d;
    // Kolmogorov asymptotic tail with the usual small-sample correction. The
    // series only converges for positive lambda; when it fails to settle the
    // significance is indistinguishable from 1.
    double ne = na * nb / (na + nb);
    double lambda = (std::sqrt(ne) + 0.12 + 0.11 / std::sqrt(ne)) * d;
    double sum = 0.0;
    bool converged = false;
    double prev_term = 0.0;
    for (int k = 1; k <= 100; ++k) {
        double term = 2.0 * (k % 2 == 1 ? 1.0 : -1.0) * std::exp(-2.0 * k * k * lambda * lambda);
        sum += term;
        if (std::abs(term) < 1e-12 || std::abs(term) < 1e-8 * std::abs(prev_term)) {
            converged = true;
            break;
        }
        prev_term = term;
    }
    r.p_proxy = converged ? std::clamp(sum, 0.0, 1.0) : 1.0;
    return r;
}

} // namespace tasksets::stats
