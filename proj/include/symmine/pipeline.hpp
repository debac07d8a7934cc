// SPDX-License-Identifier: Apache-2.0
//
// End-to-end pipeline: corpus -> preprocess -> vectorize -> topics /
// clusters / entities / rules -> report. One global seed; every stage
// derives its stream from (seed, stage name).

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "symmine/assoc.hpp"
#include "symmine/cluster.hpp"
#include "symmine/corpus.hpp"
#include "symmine/ner.hpp"
#include "symmine/preprocess.hpp"
#include "symmine/report.hpp"
#include "symmine/topics.hpp"
#include "symmine/vectorize.hpp"

namespace symmine {

struct PipelineConfig {
    std::string input_path;
    std::string input_format = "jsonl"; // jsonl | csv
    std::string output_dir;
    std::uint64_t seed = 42;
    int threads = 1;
    PreprocessConfig preprocess = default_preprocess_config();
    TfidfConfig tfidf;
    LdaConfig lda;          // seed is overwritten from the global seed
    KMeansConfig kmeans;    // likewise
    MiningConfig mining;
    std::string lexicon_path;       // empty: bundled gazetteer
    std::string stopwords_path;     // empty: bundled list
    std::string lemma_lexicon_path; // empty: bundled table
    int top_n_words = 10;
    std::size_t entity_sample_rows = 5;

    // Throws naming the offending field and the reason.
    void validate() const;
};

// Merge a JSON config document (mirroring the field names above) into cfg.
// Unknown keys are rejected. Explicit CLI flags are applied afterwards and
// therefore override the file.
void apply_config_json(PipelineConfig& cfg, const nlohmann::json& j);

// The full effective configuration, including every convention the numbers
// depend on (idf variant, distance metric, coherence variant, estimator).
nlohmann::ordered_json config_echo_json(const PipelineConfig& cfg);

struct PipelineResult {
    std::uint64_t digest = 0;
    CorpusStats stats;
    std::vector<TokenizedDoc> docs;
    Vocabulary vocab;
    DocTermMatrix counts;
    DocTermMatrix tfidf;
    LdaModel lda;
    std::vector<TopicSummary> topics;
    double coherence = 0.0;
    KMeansModel kmeans;
    double silhouette = 0.0;
    std::vector<EntitySpan> spans; // all documents, document order
    std::vector<std::pair<std::string, std::set<std::string>>> profiles;
    TransactionSet transactions;
    std::vector<FrequentItemset> frequents;
    std::vector<AssociationRule> rules;
    AnalysisReport report;
};

Corpus load_input(const PipelineConfig& cfg);
PipelineResult run_pipeline(const Corpus& corpus, const PipelineConfig& cfg);

// run-all output tree: report.md, report.json, tables/*.csv.
void write_run_all_outputs(const PipelineResult& result, const std::string& out_dir);

} // namespace symmine
