// SPDX-License-Identifier: Apache-2.0
//
// K-Means on tf-idf rows (k-means++ seeding, Lloyd iterations, best of
// n_init restarts) and exact O(n^2) silhouette scoring.

#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "symmine/vectorize.hpp"

namespace symmine {

struct KMeansConfig {
    int k = 5;
    int n_init = 10;
    int max_iter = 300;
    double tol = 1e-6; // stop when the summed squared centroid shift drops below
    std::uint64_t seed = 0;
};

struct KMeansModel {
    std::vector<std::vector<double>> centroids; // k dense rows of dimension V
    std::vector<int> assignments;               // per document, < k
    double inertia = 0.0;
    // Post-assignment inertia of every Lloyd iteration of the winning
    // restart; non-increasing by construction.
    std::vector<double> inertia_history;
};

// Deterministic given cfg.seed and independent of thread count. Empty
// clusters are repaired by reseeding them with the point farthest from its
// assigned centroid.
KMeansModel fit_kmeans(const DocTermMatrix& matrix, const KMeansConfig& cfg,
                       int n_threads = 1);

// Mean silhouette s(i) = (b - a) / max(a, b) with Euclidean distances;
// singleton-cluster points (and a = b = 0 ties) score 0.
double silhouette_score(const DocTermMatrix& matrix,
                        const std::vector<int>& assignments, int n_threads = 1);

// Centroids in the sparse triplet format (zero entries skipped).
void write_centroid_triplets(const KMeansModel& model, std::size_t n_terms,
                             std::ostream& out);

} // namespace symmine
