// SPDX-License-Identifier: Apache-2.0
//
// Assembles pipeline outputs into one report rendered as markdown, JSON and
// a CSV bundle. Metric values are copied from the stages, never recomputed.

#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "symmine/assoc.hpp"
#include "symmine/corpus.hpp"
#include "symmine/topics.hpp"

namespace symmine {

struct EntityTableRow {
    std::string dialogue_id;
    std::string cleaned;                // preprocessed tokens joined by spaces
    std::vector<std::string> entities;  // canonical per span, in order
};

struct AnalysisReport {
    CorpusStats stats;
    std::vector<TopicSummary> topic_summaries;
    double coherence = 0.0;
    double silhouette = 0.0;
    std::map<int, std::size_t> cluster_sizes;
    std::vector<EntityTableRow> entity_table; // sample of the corpus
    std::vector<AssociationRule> rules;
    double max_confidence = 0.0;
    nlohmann::ordered_json config_echo;
    std::uint64_t corpus_digest = 0;
};

// Throws when the stage digests disagree (outputs from mismatched corpora).
AnalysisReport build_report(const CorpusStats& stats,
                            const std::vector<TopicSummary>& topics,
                            double coherence, double silhouette,
                            const std::vector<int>& assignments,
                            const std::vector<EntityTableRow>& entity_table,
                            const std::vector<AssociationRule>& rules,
                            const nlohmann::ordered_json& config_echo,
                            const std::vector<std::uint64_t>& stage_digests);

void render_markdown(const AnalysisReport& report, std::ostream& out);
nlohmann::ordered_json report_to_json(const AnalysisReport& report);
AnalysisReport report_from_json(const nlohmann::ordered_json& j);

// Writes report.md, report.json and tables/{stats,topics,clusters,entities,
// rules,metrics}.csv under out_dir. clusters.csv additionally needs the
// per-dialogue assignments.
void write_report_files(const AnalysisReport& report,
                        const std::vector<std::pair<std::string, int>>& assignments,
                        const std::string& out_dir);

} // namespace symmine
