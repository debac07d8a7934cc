// SPDX-License-Identifier: Apache-2.0
//
// Latent Dirichlet Allocation by collapsed Gibbs sampling, top-word
// extraction and UMass topic coherence.

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "symmine/vectorize.hpp"

namespace symmine {

struct LdaConfig {
    int n_topics = 5;
    double alpha = 0.0; // <= 0 means the 50/K heuristic
    double beta = 0.01;
    int n_iterations = 1000;
    int burn_in = 800; // sweeps discarded before posterior-mean averaging
    std::uint64_t seed = 0;
    bool check_invariants = false; // verify count consistency after every sweep
};

// Sufficient statistics of the sampler at the last sweep.
struct GibbsState {
    std::vector<std::vector<int>> z;    // per-document token assignments
    std::vector<std::vector<int>> n_dk; // document x topic counts
    std::vector<std::vector<int>> n_kw; // topic x term counts
    std::vector<long long> n_k;         // per-topic totals
};

struct LdaModel {
    std::vector<std::vector<double>> phi;   // K x V, rows sum to 1
    std::vector<std::vector<double>> theta; // D x K, rows sum to 1
    LdaConfig config;                       // with alpha resolved
    GibbsState state;
    std::vector<std::string> doc_ids;
};

struct TopicSummary {
    int topic_index = 0;
    std::vector<std::pair<std::string, double>> top_words; // prob-descending
};

// Requires raw counts. Deterministic given config.seed; per-document RNG
// streams are keyed by (seed, dialogue id), so document order and worker
// count do not change the result.
LdaModel fit_lda(const DocTermMatrix& counts, const LdaConfig& cfg,
                 int n_threads = 1);

// n highest-probability terms of topic k; ties broken lexicographically.
TopicSummary top_words(const LdaModel& model, const Vocabulary& vocab, int k,
                       int n = 10);

// Mean over topics of the per-pair-normalized UMass score
//   sum_{m<l ranked pairs} ln((D(w_m, w_l) + 1) / D(w_higher)) / (n(n-1)/2)
// with D the co-document frequencies taken from `counts`.
double umass_coherence(const LdaModel& model, const Vocabulary& vocab,
                       const DocTermMatrix& counts, int top_n = 10);

// Same score for externally supplied ranked term-index lists.
double umass_coherence_for(const std::vector<std::vector<int>>& topic_terms,
                           const DocTermMatrix& counts);

// Plain-text export: header (K, V, alpha, beta, seed) plus dense phi and
// theta blocks.
void write_lda_model(const LdaModel& model, std::ostream& out);

} // namespace symmine
