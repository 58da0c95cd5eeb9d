#include "tasksets/embed.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tasksets/errors.hpp"
#include "tasksets/rng.hpp"

namespace tasksets {

EmbedMethod embed_method_from_string(const std::string& s) {
    if (s == "linear") return EmbedMethod::Linear;
    if (s == "neighbor") return EmbedMethod::Neighbor;
    throw InvalidConfig("method", "must be linear or neighbor");
}

std::vector<std::vector<double>> zscore_columns(const std::vector<std::vector<double>>& rows) {
    const size_t n = rows.size();
    const size_t d = n ? rows[0].size() : 0;
    for (const auto& r : rows)
        if (r.size() != d) throw ShapeMismatch("ragged feature matrix");

    std::vector<double> mu(d, 0.0), sigma(d, 0.0);
    for (size_t j = 0; j < d; ++j) {
        double s = 0.0;
        for (size_t i = 0; i < n; ++i) s += rows[i][j];
        mu[j] = s / static_cast<double>(n);
        double ss = 0.0;
        for (size_t i = 0; i < n; ++i) {
            double dx = rows[i][j] - mu[j];
            ss += dx * dx;
        }
        sigma[j] = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;
    }

    std::vector<size_t> keep;
    for (size_t j = 0; j < d; ++j) {
        double scale = std::max(1.0, std::abs(mu[j]));
        if (sigma[j] > 1e-12 * scale) keep.push_back(j);
    }
    if (keep.empty()) throw ZeroVarianceAllColumns();

    std::vector<std::vector<double>> out(n, std::vector<double>(keep.size()));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < keep.size(); ++k)
            out[i][k] = (rows[i][keep[k]] - mu[keep[k]]) / sigma[keep[k]];
    return out;
}

namespace {

// Cyclic Jacobi on a symmetric matrix; small dimensions only.
void jacobi_eigen(std::vector<std::vector<double>> a, std::vector<double>& eigvals,
                  std::vector<std::vector<double>>& eigvecs) {
    const size_t d = a.size();
    eigvecs.assign(d, std::vector<double>(d, 0.0));
    for (size_t i = 0; i < d; ++i) eigvecs[i][i] = 1.0;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (size_t p = 0; p < d; ++p)
            for (size_t q = p + 1; q < d; ++q) off += a[p][q] * a[p][q];
        if (off < 1e-24) break;

        for (size_t p = 0; p < d; ++p) {
            for (size_t q = p + 1; q < d; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (size_t k = 0; k < d; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (size_t k = 0; k < d; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (size_t k = 0; k < d; ++k) {
                    double vkp = eigvecs[k][p], vkq = eigvecs[k][q];
                    eigvecs[k][p] = c * vkp - s * vkq;
                    eigvecs[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }

    eigvals.resize(d);
    for (size_t i = 0; i < d; ++i) eigvals[i] = a[i][i];
}

std::vector<Coords2> linear_embedding(const std::vector<std::vector<double>>& z) {
    const size_t n = z.size();
    const size_t d = z[0].size();

    std::vector<std::vector<double>> cov(d, std::vector<double>(d, 0.0));
    for (size_t i = 0; i < n; ++i)
        for (size_t p = 0; p < d; ++p)
            for (size_t q = p; q < d; ++q) cov[p][q] += z[i][p] * z[i][q];
    for (size_t p = 0; p < d; ++p)
        for (size_t q = p; q < d; ++q) {
            cov[p][q] /= static_cast<double>(n - 1);
            cov[q][p] = cov[p][q];
        }

    std::vector<double> eigvals;
    std::vector<std::vector<double>> eigvecs;
    jacobi_eigen(cov, eigvals, eigvecs);

    // Top-2 eigenvalues; stable tie-break on the original column order.
    std::vector<size_t> order(d);
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return eigvals[a] > eigvals[b]; });

    std::array<std::vector<double>, 2> axes;
    for (int ax = 0; ax < 2; ++ax) {
        axes[ax].assign(d, 0.0);
        if (static_cast<size_t>(ax) < d) {
            size_t col = order[ax];
            for (size_t k = 0; k < d; ++k) axes[ax][k] = eigvecs[k][col];
            // Sign fix: largest-magnitude loading positive, lowest index on ties.
            size_t best = 0;
            for (size_t k = 1; k < d; ++k)
                if (std::abs(axes[ax][k]) > std::abs(axes[ax][best])) best = k;
            if (axes[ax][best] < 0.0)
                for (size_t k = 0; k < d; ++k) axes[ax][k] = -axes[ax][k];
        }
    }

    std::vector<Coords2> out(n);
    for (size_t i = 0; i < n; ++i) {
        for (int ax = 0; ax < 2; ++ax) {
            double s = 0.0;
            for (size_t k = 0; k < d; ++k) s += z[i][k] * axes[ax][k];
            out[i][ax] = s;
        }
    }
    return out;
}

std::vector<Coords2> neighbor_embedding(const std::vector<std::vector<double>>& z,
                                        uint64_t seed) {
    const size_t n = z.size();
    const int k = static_cast<int>(std::min<size_t>(10, n - 1));

    auto d2 = [&](size_t a, size_t b) {
        double s = 0.0;
        for (size_t j = 0; j < z[a].size(); ++j) {
            double dx = z[a][j] - z[b][j];
            s += dx * dx;
        }
        return s;
    };

    std::vector<std::vector<size_t>> knn(n);
    for (size_t i = 0; i < n; ++i) {
        std::vector<size_t> order;
        for (size_t j = 0; j < n; ++j)
            if (j != i) order.push_back(j);
        std::stable_sort(order.begin(), order.end(),
                         [&](size_t a, size_t b) { return d2(i, a) < d2(i, b); });
        order.resize(k);
        knn[i] = std::move(order);
    }

    std::vector<Coords2> pos = linear_embedding(z);
    Rng rng(seed);
    const int iters = 200;
    for (int it = 0; it < iters; ++it) {
        double lr = 0.1 * (1.0 - static_cast<double>(it) / iters);
        for (size_t i = 0; i < n; ++i) {
            double gx = 0.0, gy = 0.0;
            for (size_t j : knn[i]) {
                gx += pos[j][0] - pos[i][0];
                gy += pos[j][1] - pos[i][1];
            }
            // A few sampled repulsors keep the layout from collapsing.
            for (int r = 0; r < 4; ++r) {
                size_t j = static_cast<size_t>(rng.next() % n);
                if (j == i) continue;
                double dx = pos[i][0] - pos[j][0];
                double dy = pos[i][1] - pos[j][1];
                double dd = dx * dx + dy * dy + 1e-3;
                gx += dx / dd;
                gy += dy / dd;
            }
            pos[i][0] += lr * gx;
            pos[i][1] += lr * gy;
        }
    }
    return pos;
}

} // namespace

std::vector<Coords2> embed_2d(const std::vector<std::vector<double>>& rows, EmbedMethod method,
                              uint64_t seed) {
    if (rows.size() < 3) throw TooFewPlayers("embedding needs at least 3 rows");
    std::vector<std::vector<double>> z = zscore_columns(rows);
    if (method == EmbedMethod::Linear) return linear_embedding(z);
    return neighbor_embedding(z, seed);
}

} // namespace tasksets
