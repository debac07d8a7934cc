// SPDX-License-Identifier: Apache-2.0

#include "symmine/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <stdexcept>

#include "symmine/parallel.hpp"
#include "symmine/rng.hpp"

namespace symmine {

namespace {

using SparseRow = std::vector<std::pair<int, double>>;

double row_norm_sq(const SparseRow& row) {
    double s = 0.0;
    for (const auto& [idx, w] : row) s += w * w;
    return s;
}

// ||x - c||^2 for sparse x against dense centroid c with known ||c||^2.
double dist_sq_to_centroid(const SparseRow& row, const std::vector<double>& c,
                           double c_norm_sq) {
    double d = c_norm_sq;
    for (const auto& [idx, w] : row) d += w * w - 2.0 * w * c[idx];
    return std::max(0.0, d);
}

double dist_sq_rows(const SparseRow& a, double a_norm_sq, const SparseRow& b,
                    double b_norm_sq) {
    double dot = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) ++i;
        else if (a[i].first > b[j].first) ++j;
        else dot += a[i].second * b[j].second, ++i, ++j;
    }
    return std::max(0.0, a_norm_sq + b_norm_sq - 2.0 * dot);
}

struct LloydRun {
    std::vector<std::vector<double>> centroids;
    std::vector<int> assignments;
    double inertia = 0.0;
    std::vector<double> inertia_history;
};

LloydRun run_lloyd(const DocTermMatrix& m, const std::vector<double>& norms_sq,
                   const KMeansConfig& cfg, std::uint64_t init_seed,
                   int n_threads) {
    const std::size_t n = m.n_docs;
    const std::size_t dim = m.n_terms;
    const int k = cfg.k;
    Rng rng(init_seed);

    // k-means++ seeding: first centroid uniform, the rest proportional to
    // the squared distance to the nearest chosen centroid.
    std::vector<std::vector<double>> centroids;
    std::vector<double> centroid_norm_sq;
    std::vector<double> nearest_sq(n, std::numeric_limits<double>::infinity());
    auto densify = [&](std::size_t doc) {
        std::vector<double> c(dim, 0.0);
        for (const auto& [idx, w] : m.rows[doc]) c[idx] = w;
        return c;
    };
    const std::size_t first = rng.uniform_index(n);
    centroids.push_back(densify(first));
    centroid_norm_sq.push_back(norms_sq[first]);
    while (static_cast<int>(centroids.size()) < k) {
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double d = dist_sq_to_centroid(m.rows[i], centroids.back(),
                                                 centroid_norm_sq.back());
            nearest_sq[i] = std::min(nearest_sq[i], d);
            total += nearest_sq[i];
        }
        std::size_t chosen = 0;
        if (total > 0.0) {
            const double u = rng.uniform01() * total;
            double cum = 0.0;
            chosen = n - 1;
            for (std::size_t i = 0; i < n; ++i) {
                cum += nearest_sq[i];
                if (u < cum) {
                    chosen = i;
                    break;
                }
            }
        }
        centroids.push_back(densify(chosen));
        centroid_norm_sq.push_back(norms_sq[chosen]);
    }

    std::vector<int> assignments(n, 0);
    std::vector<double> point_dist_sq(n, 0.0);

    auto assign_step = [&]() {
        parallel_blocks(n, n_threads,
                        [&](std::size_t, std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) {
                int best = 0;
                double best_d = dist_sq_to_centroid(m.rows[i], centroids[0],
                                                    centroid_norm_sq[0]);
                for (int c = 1; c < k; ++c) {
                    const double d = dist_sq_to_centroid(m.rows[i], centroids[c],
                                                         centroid_norm_sq[c]);
                    if (d < best_d) {
                        best_d = d;
                        best = c;
                    }
                }
                assignments[i] = best;
                point_dist_sq[i] = best_d;
            }
        });
        double inertia = 0.0;
        for (std::size_t i = 0; i < n; ++i) inertia += point_dist_sq[i];
        return inertia;
    };

    auto update_step = [&]() {
        std::vector<std::size_t> sizes(k, 0);
        std::vector<std::vector<double>> sums(k, std::vector<double>(dim, 0.0));
        for (std::size_t i = 0; i < n; ++i) {
            ++sizes[assignments[i]];
            auto& s = sums[assignments[i]];
            for (const auto& [idx, w] : m.rows[i]) s[idx] += w;
        }
        // Reseed empty clusters with the worst-fit points (largest distance
        // to their assigned centroid), never draining a cluster below one
        // member.
        std::vector<bool> stolen(n, false);
        for (int c = 0; c < k; ++c) {
            if (sizes[c] > 0) continue;
            std::size_t best_point = n;
            double best_d = -1.0;
            for (std::size_t i = 0; i < n; ++i) {
                if (stolen[i] || sizes[assignments[i]] <= 1) continue;
                if (point_dist_sq[i] > best_d) {
                    best_d = point_dist_sq[i];
                    best_point = i;
                }
            }
            if (best_point == n)
                throw std::logic_error("kmeans: cannot repair empty cluster");
            stolen[best_point] = true;
            const int from = assignments[best_point];
            --sizes[from];
            for (const auto& [idx, w] : m.rows[best_point]) sums[from][idx] -= w;
            assignments[best_point] = c;
            sizes[c] = 1;
            for (const auto& [idx, w] : m.rows[best_point]) sums[c][idx] += w;
        }
        double shift_sq = 0.0;
        for (int c = 0; c < k; ++c) {
            double norm_sq = 0.0;
            for (std::size_t j = 0; j < dim; ++j) {
                const double value = sums[c][j] / static_cast<double>(sizes[c]);
                const double d = value - centroids[c][j];
                shift_sq += d * d;
                centroids[c][j] = value;
                norm_sq += value * value;
            }
            centroid_norm_sq[c] = norm_sq;
        }
        return shift_sq;
    };

    LloydRun run;
    double prev_inertia = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < cfg.max_iter; ++iter) {
        const double inertia = assign_step();
        if (inertia > prev_inertia * (1.0 + 1e-9) + 1e-12)
            throw std::logic_error("kmeans: inertia increased across iterations");
        run.inertia_history.push_back(inertia);
        prev_inertia = inertia;
        const double shift_sq = update_step();
        if (shift_sq < cfg.tol) break;
    }
    // Final assignment against the final centroids: makes the assignments a
    // fixed point of reassignment.
    const double inertia = assign_step();
    if (inertia > prev_inertia * (1.0 + 1e-9) + 1e-12)
        throw std::logic_error("kmeans: inertia increased across iterations");
    run.inertia_history.push_back(inertia);
    run.inertia = inertia;
    run.centroids = std::move(centroids);
    run.assignments = assignments;
    return run;
}

} // namespace

KMeansModel fit_kmeans(const DocTermMatrix& matrix, const KMeansConfig& cfg,
                       int n_threads) {
    const std::size_t n = matrix.n_docs;
    if (cfg.k < 2) throw std::runtime_error("fit_kmeans: k must be >= 2");
    if (static_cast<std::size_t>(cfg.k) > n)
        throw std::runtime_error("fit_kmeans: k exceeds number of documents");
    if (cfg.n_init < 1) throw std::runtime_error("fit_kmeans: n_init must be >= 1");

    {
        std::set<SparseRow> distinct(matrix.rows.begin(), matrix.rows.end());
        if (distinct.size() < static_cast<std::size_t>(cfg.k))
            throw std::runtime_error("fit_kmeans: fewer than k distinct rows");
    }

    std::vector<double> norms_sq(n);
    for (std::size_t i = 0; i < n; ++i) norms_sq[i] = row_norm_sq(matrix.rows[i]);

    LloydRun best;
    bool have_best = false;
    for (int init = 0; init < cfg.n_init; ++init) {
        const std::uint64_t init_seed =
            derive_seed(cfg.seed, "kmeans-init:" + std::to_string(init));
        LloydRun run = run_lloyd(matrix, norms_sq, cfg, init_seed, n_threads);
        if (!have_best || run.inertia < best.inertia) {
            best = std::move(run);
            have_best = true;
        }
    }

    KMeansModel model;
    model.centroids = std::move(best.centroids);
    model.assignments = std::move(best.assignments);
    model.inertia = best.inertia;
    model.inertia_history = std::move(best.inertia_history);
    return model;
}

double silhouette_score(const DocTermMatrix& matrix,
                        const std::vector<int>& assignments, int n_threads) {
    const std::size_t n = matrix.n_docs;
    if (assignments.size() != n)
        throw std::runtime_error("silhouette: assignment size mismatch");
    if (n == 0) throw std::runtime_error("silhouette: empty matrix");

    int max_cluster = 0;
    for (int a : assignments) {
        if (a < 0) throw std::runtime_error("silhouette: negative cluster index");
        max_cluster = std::max(max_cluster, a);
    }
    const int k = max_cluster + 1;
    std::vector<std::size_t> sizes(k, 0);
    for (int a : assignments) ++sizes[a];
    int non_empty = 0;
    for (std::size_t s : sizes) non_empty += s > 0;
    if (non_empty < 2)
        throw std::runtime_error("silhouette: needs at least 2 non-empty clusters");

    std::vector<double> norms_sq(n);
    for (std::size_t i = 0; i < n; ++i) norms_sq[i] = row_norm_sq(matrix.rows[i]);

    std::vector<double> dist(n * n, 0.0);
    parallel_blocks(n, n_threads, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                dist[i * n + j] = std::sqrt(
                    dist_sq_rows(matrix.rows[i], norms_sq[i], matrix.rows[j], norms_sq[j]));
            }
        }
    });

    std::vector<double> s_values(n, 0.0);
    parallel_blocks(n, n_threads, [&](std::size_t, std::size_t begin, std::size_t end) {
        std::vector<double> sum_per_cluster(k);
        for (std::size_t i = begin; i < end; ++i) {
            const int own = assignments[i];
            if (sizes[own] <= 1) {
                s_values[i] = 0.0;
                continue;
            }
            std::fill(sum_per_cluster.begin(), sum_per_cluster.end(), 0.0);
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                sum_per_cluster[assignments[j]] += dist[i * n + j];
            }
            const double a = sum_per_cluster[own] / static_cast<double>(sizes[own] - 1);
            double b = std::numeric_limits<double>::infinity();
            for (int c = 0; c < k; ++c) {
                if (c == own || sizes[c] == 0) continue;
                b = std::min(b, sum_per_cluster[c] / static_cast<double>(sizes[c]));
            }
            const double denom = std::max(a, b);
            s_values[i] = denom > 0.0 ? (b - a) / denom : 0.0;
        }
    });

    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) total += s_values[i];
    return total / static_cast<double>(n);
}

void write_centroid_triplets(const KMeansModel& model, std::size_t n_terms,
                             std::ostream& out) {
    out << model.centroids.size() << ' ' << n_terms << " centroids\n";
    char buf[64];
    for (std::size_t c = 0; c < model.centroids.size(); ++c) {
        for (std::size_t j = 0; j < model.centroids[c].size(); ++j) {
            const double w = model.centroids[c][j];
            if (w == 0.0) continue;
            std::snprintf(buf, sizeof buf, "%zu %zu %.17g\n", c, j, w);
            out << buf;
        }
    }
}

} // namespace symmine
