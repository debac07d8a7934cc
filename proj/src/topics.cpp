// SPDX-License-Identifier: Apache-2.0
//
// Collapsed Gibbs sampler with the conditional
//   P(z_i = k | rest) ~ (n_dk + alpha) * (n_kw + beta) / (n_k + V*beta),
// counts excluding token i. To make the result independent of document
// order and worker count, every sweep samples each document against the
// sweep-start snapshot of the global topic-word counts plus the document's
// own running deltas; the deltas are merged once all documents finish.
// Cross-document dependencies are therefore one sweep stale (distributed
// Gibbs style), which keeps the chain valid in practice while making the
// sampler an exact pure function of (seed, dialogue ids, counts).

#include "symmine/topics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "symmine/parallel.hpp"
#include "symmine/rng.hpp"

namespace symmine {

namespace {

struct FlatCounts {
    std::vector<int> n_dk;       // D*K
    std::vector<int> n_kw;       // K*V
    std::vector<long long> n_k;  // K
};

void check_consistency(const std::vector<std::vector<int>>& tokens,
                       const std::vector<std::vector<int>>& z,
                       const FlatCounts& c, int K, int V) {
    FlatCounts rebuilt;
    rebuilt.n_dk.assign(c.n_dk.size(), 0);
    rebuilt.n_kw.assign(c.n_kw.size(), 0);
    rebuilt.n_k.assign(c.n_k.size(), 0);
    for (std::size_t d = 0; d < tokens.size(); ++d) {
        for (std::size_t j = 0; j < tokens[d].size(); ++j) {
            const int k = z[d][j];
            ++rebuilt.n_dk[d * K + k];
            ++rebuilt.n_kw[k * V + tokens[d][j]];
            ++rebuilt.n_k[k];
        }
    }
    if (rebuilt.n_dk != c.n_dk || rebuilt.n_kw != c.n_kw || rebuilt.n_k != c.n_k)
        throw std::logic_error("lda: Gibbs counts inconsistent with assignments");
}

} // namespace

LdaModel fit_lda(const DocTermMatrix& counts, const LdaConfig& cfg,
                 int n_threads) {
    if (counts.weighting != Weighting::RawCount)
        throw std::runtime_error("fit_lda: matrix weighting must be raw counts");
    if (counts.n_docs == 0 || counts.n_terms == 0)
        throw std::runtime_error("fit_lda: empty matrix");
    if (cfg.n_topics < 1) throw std::runtime_error("fit_lda: n_topics must be >= 1");
    if (cfg.burn_in < 0 || cfg.burn_in >= cfg.n_iterations)
        throw std::runtime_error("fit_lda: burn_in must be < n_iterations");
    if (cfg.beta <= 0.0) throw std::runtime_error("fit_lda: beta must be > 0");

    const int K = cfg.n_topics;
    const int V = static_cast<int>(counts.n_terms);
    const std::size_t D = counts.n_docs;
    const double alpha = cfg.alpha > 0.0 ? cfg.alpha : 50.0 / K;
    const double beta = cfg.beta;
    const double v_beta = V * beta;

    // Expand sparse rows into token streams (term ids repeated by count).
    std::vector<std::vector<int>> tokens(D);
    std::size_t total_tokens = 0;
    for (std::size_t d = 0; d < D; ++d) {
        for (const auto& [idx, weight] : counts.rows[d]) {
            const long long c = std::llround(weight);
            if (c < 1 || std::abs(weight - static_cast<double>(c)) > 1e-9)
                throw std::runtime_error("fit_lda: non-integral count entry");
            tokens[d].insert(tokens[d].end(), static_cast<std::size_t>(c), idx);
        }
        total_tokens += tokens[d].size();
    }
    if (total_tokens == 0) throw std::runtime_error("fit_lda: empty matrix");

    std::vector<Rng> doc_rng;
    doc_rng.reserve(D);
    for (std::size_t d = 0; d < D; ++d)
        doc_rng.emplace_back(derive_seed(cfg.seed, counts.doc_ids[d]));

    std::vector<std::vector<int>> z(D);
    FlatCounts c;
    c.n_dk.assign(D * K, 0);
    c.n_kw.assign(static_cast<std::size_t>(K) * V, 0);
    c.n_k.assign(K, 0);
    for (std::size_t d = 0; d < D; ++d) {
        z[d].resize(tokens[d].size());
        for (std::size_t j = 0; j < tokens[d].size(); ++j) {
            const int k = static_cast<int>(doc_rng[d].uniform_index(K));
            z[d][j] = k;
            ++c.n_dk[d * K + k];
            ++c.n_kw[static_cast<std::size_t>(k) * V + tokens[d][j]];
            ++c.n_k[k];
        }
    }

    std::vector<int> snapshot_kw(c.n_kw.size());
    std::vector<long long> snapshot_k(K);
    std::vector<std::uint64_t> acc_kw(c.n_kw.size(), 0);
    std::vector<std::uint64_t> acc_dk(c.n_dk.size(), 0);

    const int workers = std::max(1, n_threads);
    std::vector<std::vector<int>> merge_kw(workers);
    std::vector<std::vector<long long>> merge_k(workers);

    for (int sweep = 1; sweep <= cfg.n_iterations; ++sweep) {
        snapshot_kw.assign(c.n_kw.begin(), c.n_kw.end());
        snapshot_k.assign(c.n_k.begin(), c.n_k.end());
        for (int w = 0; w < workers; ++w) {
            merge_kw[w].assign(c.n_kw.size(), 0);
            merge_k[w].assign(K, 0);
        }

        parallel_blocks(D, workers, [&](std::size_t w, std::size_t begin,
                                        std::size_t end) {
            std::vector<int> delta_kw(c.n_kw.size(), 0);
            std::vector<long long> delta_k(K, 0);
            std::vector<std::size_t> touched;
            std::vector<double> cum(K);

            for (std::size_t d = begin; d < end; ++d) {
                int* ndk = &c.n_dk[d * K];
                Rng& rng = doc_rng[d];
                const auto& toks = tokens[d];
                auto& zs = z[d];
                for (std::size_t j = 0; j < toks.size(); ++j) {
                    const int word = toks[j];
                    const int old_k = zs[j];
                    --ndk[old_k];
                    const std::size_t old_slot =
                        static_cast<std::size_t>(old_k) * V + word;
                    --delta_kw[old_slot];
                    --delta_k[old_k];
                    touched.push_back(old_slot);

                    double total = 0.0;
                    for (int k = 0; k < K; ++k) {
                        const std::size_t slot = static_cast<std::size_t>(k) * V + word;
                        const double num_w =
                            snapshot_kw[slot] + delta_kw[slot] + beta;
                        const double den = snapshot_k[k] + delta_k[k] + v_beta;
                        total += (ndk[k] + alpha) * num_w / den;
                        cum[k] = total;
                    }
                    const double u = rng.uniform01() * total;
                    int new_k = K - 1;
                    for (int k = 0; k < K; ++k) {
                        if (u < cum[k]) {
                            new_k = k;
                            break;
                        }
                    }
                    zs[j] = new_k;
                    ++ndk[new_k];
                    const std::size_t new_slot =
                        static_cast<std::size_t>(new_k) * V + word;
                    ++delta_kw[new_slot];
                    ++delta_k[new_k];
                    touched.push_back(new_slot);
                }
                // Fold this document's net changes into the worker merge
                // buffer and clear the per-document delta. Duplicated slots
                // are harmless: they are zero after the first fold.
                for (const std::size_t slot : touched) {
                    merge_kw[w][slot] += delta_kw[slot];
                    delta_kw[slot] = 0;
                }
                touched.clear();
                for (int k = 0; k < K; ++k) {
                    merge_k[w][k] += delta_k[k];
                    delta_k[k] = 0;
                }
            }
        });

        for (int w = 0; w < workers; ++w) {
            for (std::size_t i = 0; i < c.n_kw.size(); ++i)
                c.n_kw[i] += merge_kw[w][i];
            for (int k = 0; k < K; ++k) c.n_k[k] += merge_k[w][k];
        }

        if (cfg.check_invariants) check_consistency(tokens, z, c, K, V);

        if (sweep > cfg.burn_in) {
            for (std::size_t i = 0; i < c.n_kw.size(); ++i) acc_kw[i] += c.n_kw[i];
            for (std::size_t i = 0; i < c.n_dk.size(); ++i) acc_dk[i] += c.n_dk[i];
        }
    }

    const double S = cfg.n_iterations - cfg.burn_in;

    LdaModel model;
    model.config = cfg;
    model.config.alpha = alpha;
    model.doc_ids = counts.doc_ids;

    model.phi.assign(K, std::vector<double>(V));
    for (int k = 0; k < K; ++k) {
        std::uint64_t row_sum = 0;
        for (int w = 0; w < V; ++w) row_sum += acc_kw[static_cast<std::size_t>(k) * V + w];
        const double den = static_cast<double>(row_sum) + S * v_beta;
        for (int w = 0; w < V; ++w)
            model.phi[k][w] =
                (static_cast<double>(acc_kw[static_cast<std::size_t>(k) * V + w]) +
                 S * beta) / den;
    }

    model.theta.assign(D, std::vector<double>(K));
    for (std::size_t d = 0; d < D; ++d) {
        std::uint64_t row_sum = 0;
        for (int k = 0; k < K; ++k) row_sum += acc_dk[d * K + k];
        const double den = static_cast<double>(row_sum) + S * K * alpha;
        for (int k = 0; k < K; ++k)
            model.theta[d][k] =
                (static_cast<double>(acc_dk[d * K + k]) + S * alpha) / den;
    }

    for (int k = 0; k < K; ++k) {
        double sum = 0.0;
        for (int w = 0; w < V; ++w) sum += model.phi[k][w];
        if (std::abs(sum - 1.0) > 1e-9)
            throw std::logic_error("lda: phi row does not sum to 1");
    }
    for (std::size_t d = 0; d < D; ++d) {
        double sum = 0.0;
        for (int k = 0; k < K; ++k) sum += model.theta[d][k];
        if (std::abs(sum - 1.0) > 1e-9)
            throw std::logic_error("lda: theta row does not sum to 1");
    }

    model.state.z = std::move(z);
    model.state.n_dk.assign(D, std::vector<int>(K));
    for (std::size_t d = 0; d < D; ++d)
        for (int k = 0; k < K; ++k) model.state.n_dk[d][k] = c.n_dk[d * K + k];
    model.state.n_kw.assign(K, std::vector<int>(V));
    for (int k = 0; k < K; ++k)
        for (int w = 0; w < V; ++w)
            model.state.n_kw[k][w] = c.n_kw[static_cast<std::size_t>(k) * V + w];
    model.state.n_k = c.n_k;
    return model;
}

namespace {

std::vector<int> ranked_terms(const LdaModel& model, const Vocabulary& vocab,
                              int k, int n) {
    const auto& row = model.phi.at(k);
    std::vector<int> order(row.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (row[a] != row[b]) return row[a] > row[b];
        return vocab.index_to_term[a] < vocab.index_to_term[b];
    });
    order.resize(std::min<std::size_t>(order.size(), static_cast<std::size_t>(n)));
    return order;
}

} // namespace

TopicSummary top_words(const LdaModel& model, const Vocabulary& vocab, int k,
                       int n) {
    if (k < 0 || k >= model.config.n_topics)
        throw std::runtime_error("top_words: topic index out of range");
    TopicSummary summary;
    summary.topic_index = k;
    for (const int idx : ranked_terms(model, vocab, k, n))
        summary.top_words.emplace_back(vocab.index_to_term[idx], model.phi[k][idx]);
    return summary;
}

double umass_coherence_for(const std::vector<std::vector<int>>& topic_terms,
                           const DocTermMatrix& counts) {
    // Postings: per term, the sorted list of documents containing it.
    std::vector<std::vector<int>> postings(counts.n_terms);
    for (std::size_t d = 0; d < counts.rows.size(); ++d)
        for (const auto& [idx, weight] : counts.rows[d])
            postings[idx].push_back(static_cast<int>(d));

    auto co_doc_count = [&](int a, int b) {
        const auto& pa = postings[a];
        const auto& pb = postings[b];
        std::size_t i = 0, j = 0, count = 0;
        while (i < pa.size() && j < pb.size()) {
            if (pa[i] < pb[j]) ++i;
            else if (pa[i] > pb[j]) ++j;
            else ++count, ++i, ++j;
        }
        return count;
    };

    double total = 0.0;
    for (const auto& terms : topic_terms) {
        const std::size_t n = terms.size();
        if (n < 2) continue;
        double score = 0.0;
        for (std::size_t m = 1; m < n; ++m) {
            for (std::size_t l = 0; l < m; ++l) {
                const double d_pair =
                    static_cast<double>(co_doc_count(terms[m], terms[l]));
                const double d_l = static_cast<double>(postings[terms[l]].size());
                score += std::log((d_pair + 1.0) / d_l);
            }
        }
        total += score / (static_cast<double>(n) * (n - 1) / 2.0);
    }
    return topic_terms.empty() ? 0.0 : total / static_cast<double>(topic_terms.size());
}

double umass_coherence(const LdaModel& model, const Vocabulary& vocab,
                       const DocTermMatrix& counts, int top_n) {
    std::vector<std::vector<int>> topic_terms;
    for (int k = 0; k < model.config.n_topics; ++k)
        topic_terms.push_back(ranked_terms(model, vocab, k, top_n));
    return umass_coherence_for(topic_terms, counts);
}

void write_lda_model(const LdaModel& model, std::ostream& out) {
    const int K = model.config.n_topics;
    const std::size_t V = model.phi.empty() ? 0 : model.phi[0].size();
    char buf[64];
    out << K << ' ' << V << ' ';
    std::snprintf(buf, sizeof buf, "%.17g %.17g", model.config.alpha,
                  model.config.beta);
    out << buf << ' ' << model.config.seed << '\n';
    out << "phi\n";
    for (const auto& row : model.phi) {
        for (std::size_t w = 0; w < row.size(); ++w) {
            std::snprintf(buf, sizeof buf, w ? " %.17g" : "%.17g", row[w]);
            out << buf;
        }
        out << '\n';
    }
    out << "theta\n";
    for (const auto& row : model.theta) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            std::snprintf(buf, sizeof buf, k ? " %.17g" : "%.17g", row[k]);
            out << buf;
        }
        out << '\n';
    }
}

} // namespace symmine
