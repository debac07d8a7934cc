// SPDX-License-Identifier: Apache-2.0

#include "symmine/vectorize.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace symmine {

Vocabulary fit_vocabulary(const std::vector<TokenizedDoc>& docs,
                          const TfidfConfig& cfg) {
    if (docs.empty()) throw std::runtime_error("fit_vocabulary: no documents");
    if (cfg.min_df < 1) throw std::runtime_error("min_df must be >= 1");
    if (cfg.max_df_ratio <= 0.0 || cfg.max_df_ratio > 1.0)
        throw std::runtime_error("max_df_ratio must be in (0,1]");

    // std::map keeps terms in lexicographic order, which fixes the indexing.
    std::map<std::string, int> df;
    for (const TokenizedDoc& doc : docs) {
        const std::set<std::string> in_doc(doc.tokens.begin(), doc.tokens.end());
        for (const std::string& term : in_doc) ++df[term];
    }

    const double max_df = cfg.max_df_ratio * static_cast<double>(docs.size());
    Vocabulary vocab;
    vocab.n_docs = docs.size();
    for (const auto& [term, count] : df) {
        if (count < cfg.min_df) continue;
        if (static_cast<double>(count) > max_df) continue;
        vocab.term_to_index.emplace(term, static_cast<int>(vocab.index_to_term.size()));
        vocab.index_to_term.push_back(term);
        vocab.doc_frequency.push_back(count);
    }
    if (vocab.index_to_term.empty())
        throw std::runtime_error("empty vocabulary: all terms filtered out");
    return vocab;
}

namespace {

std::vector<std::pair<int, double>> count_row(const TokenizedDoc& doc,
                                              const Vocabulary& vocab) {
    std::map<int, double> counts;
    for (const std::string& tok : doc.tokens) {
        const int idx = vocab.index_of(tok);
        if (idx >= 0) counts[idx] += 1.0;
    }
    return {counts.begin(), counts.end()};
}

} // namespace

DocTermMatrix count_matrix(const std::vector<TokenizedDoc>& docs,
                           const Vocabulary& vocab) {
    DocTermMatrix m;
    m.n_docs = docs.size();
    m.n_terms = vocab.size();
    m.weighting = Weighting::RawCount;
    m.rows.reserve(docs.size());
    for (const TokenizedDoc& doc : docs) {
        m.rows.push_back(count_row(doc, vocab));
        m.doc_ids.push_back(doc.dialogue_id);
    }
    return m;
}

double smoothed_idf(std::size_t n_docs, int df) {
    return std::log((1.0 + static_cast<double>(n_docs)) / (1.0 + df)) + 1.0;
}

DocTermMatrix tfidf_matrix(const std::vector<TokenizedDoc>& docs,
                           const Vocabulary& vocab, const TfidfConfig& cfg) {
    DocTermMatrix m;
    m.n_docs = docs.size();
    m.n_terms = vocab.size();
    m.weighting = Weighting::TfIdf;
    m.rows.reserve(docs.size());
    for (const TokenizedDoc& doc : docs) {
        auto row = count_row(doc, vocab);
        for (auto& [idx, weight] : row)
            weight *= smoothed_idf(vocab.n_docs, vocab.doc_frequency[idx]);
        if (cfg.l2_normalize && !row.empty()) {
            double norm_sq = 0.0;
            for (const auto& [idx, weight] : row) norm_sq += weight * weight;
            const double norm = std::sqrt(norm_sq);
            if (norm > 0.0)
                for (auto& [idx, weight] : row) weight /= norm;
        }
        m.rows.push_back(std::move(row));
        m.doc_ids.push_back(doc.dialogue_id);
    }
    return m;
}

void write_triplets(const DocTermMatrix& matrix, std::ostream& out) {
    out << matrix.n_docs << ' ' << matrix.n_terms << ' '
        << (matrix.weighting == Weighting::RawCount ? "rawcount" : "tfidf") << '\n';
    char buf[64];
    for (std::size_t d = 0; d < matrix.rows.size(); ++d) {
        for (const auto& [idx, weight] : matrix.rows[d]) {
            std::snprintf(buf, sizeof buf, "%zu %d %.17g\n", d, idx, weight);
            out << buf;
        }
    }
}

} // namespace symmine
