// SPDX-License-Identifier: Apache-2.0
//
// Vocabulary fitting and document-term matrices: raw counts for topic
// modelling, smoothed tf-idf with L2 row normalization for clustering.

#pragma once

#include <ostream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "symmine/preprocess.hpp"

namespace symmine {

struct TfidfConfig {
    int min_df = 2;
    double max_df_ratio = 0.95; // terms with df > ratio*N are dropped
    bool l2_normalize = true;
};

struct Vocabulary {
    std::vector<std::string> index_to_term; // lexicographic order
    std::unordered_map<std::string, int> term_to_index;
    std::vector<int> doc_frequency; // per retained term
    std::size_t n_docs = 0;         // corpus size the vocabulary was fitted on

    int index_of(const std::string& term) const {
        auto it = term_to_index.find(term);
        return it == term_to_index.end() ? -1 : it->second;
    }
    std::size_t size() const { return index_to_term.size(); }
};

enum class Weighting { RawCount, TfIdf };

struct DocTermMatrix {
    std::size_t n_docs = 0;
    std::size_t n_terms = 0;
    Weighting weighting = Weighting::RawCount;
    // Per document: (term index, weight) pairs sorted by term index,
    // weights > 0.
    std::vector<std::vector<std::pair<int, double>>> rows;
    std::vector<std::string> doc_ids;
};

Vocabulary fit_vocabulary(const std::vector<TokenizedDoc>& docs,
                          const TfidfConfig& cfg);

DocTermMatrix count_matrix(const std::vector<TokenizedDoc>& docs,
                           const Vocabulary& vocab);

DocTermMatrix tfidf_matrix(const std::vector<TokenizedDoc>& docs,
                           const Vocabulary& vocab, const TfidfConfig& cfg);

// idf(t) = ln((1+N)/(1+df)) + 1
double smoothed_idf(std::size_t n_docs, int df);

// Plain-text sparse triplets: header `n_docs n_terms weighting`, then one
// `doc_index term_index weight` line per entry.
void write_triplets(const DocTermMatrix& matrix, std::ostream& out);

} // namespace symmine
