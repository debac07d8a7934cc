// SPDX-License-Identifier: Apache-2.0

#include "symmine/report.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "symmine/csv.hpp"

namespace symmine {

namespace {

std::string fmt(const char* format, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, value);
    return buf;
}

std::string join(const std::vector<std::string>& items, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) s += sep;
        s += items[i];
    }
    return s;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
    return out;
}

} // namespace

AnalysisReport build_report(const CorpusStats& stats,
                            const std::vector<TopicSummary>& topics,
                            double coherence, double silhouette,
                            const std::vector<int>& assignments,
                            const std::vector<EntityTableRow>& entity_table,
                            const std::vector<AssociationRule>& rules,
                            const nlohmann::ordered_json& config_echo,
                            const std::vector<std::uint64_t>& stage_digests) {
    if (stage_digests.empty())
        throw std::runtime_error("build_report: no stage digests");
    for (const std::uint64_t d : stage_digests) {
        if (d != stage_digests.front())
            throw std::runtime_error(
                "build_report: stage outputs come from different corpora");
    }

    AnalysisReport report;
    report.stats = stats;
    report.topic_summaries = topics;
    report.coherence = coherence;
    report.silhouette = silhouette;
    for (const int a : assignments) ++report.cluster_sizes[a];
    if (assignments.size() != stats.n_dialogues)
        throw std::runtime_error("build_report: assignments do not cover the corpus");
    report.entity_table = entity_table;
    report.rules = rules;
    report.max_confidence = 0.0;
    for (const AssociationRule& r : rules)
        report.max_confidence = std::max(report.max_confidence, r.confidence);
    report.config_echo = config_echo;
    report.corpus_digest = stage_digests.front();
    return report;
}

void render_markdown(const AnalysisReport& report, std::ostream& out) {
    out << "# Symptom Mining Report\n\n";

    out << "## Corpus\n\n";
    out << "- dialogues: " << report.stats.n_dialogues << "\n";
    out << "- conditions: " << report.stats.n_conditions << "\n";
    out << "- mean turns per dialogue: " << fmt("%.2f", report.stats.mean_turns)
        << "\n\n";
    out << "| condition | dialogues |\n|---|---|\n";
    for (const auto& [condition, count] : report.stats.per_condition_counts)
        out << "| " << condition << " | " << count << " |\n";
    out << "\n";

    out << "## Topics\n\n";
    for (const TopicSummary& topic : report.topic_summaries) {
        std::vector<std::string> words;
        for (const auto& [term, prob] : topic.top_words) words.push_back(term);
        out << "Topic " << topic.topic_index + 1 << ": " << join(words, " | ")
            << "\n\n";
    }
    out << "Topic coherence (UMass, per-pair normalized): "
        << fmt("%.2f", report.coherence) << "\n\n";

    out << "## Clusters\n\n";
    out << "Silhouette score: " << fmt("%.5f", report.silhouette) << "\n\n";
    out << "| cluster | size |\n|---|---|\n";
    for (const auto& [cluster, size] : report.cluster_sizes)
        out << "| " << cluster << " | " << size << " |\n";
    out << "\n";

    out << "## Entities (sample)\n\n";
    out << "| dialogue | cleaned | entities |\n|---|---|---|\n";
    for (const EntityTableRow& row : report.entity_table) {
        std::string cleaned = row.cleaned;
        if (cleaned.size() > 72) cleaned = cleaned.substr(0, 72) + "...";
        out << "| " << row.dialogue_id << " | " << cleaned << " | "
            << join(row.entities, ", ") << " |\n";
    }
    out << "\n";

    out << "## Association Rules\n\n";
    out << "Max confidence: " << fmt("%.6f", report.max_confidence) << "\n\n";
    out << "| antecedents | consequents | support | confidence | lift |\n"
        << "|---|---|---|---|---|\n";
    const std::size_t shown = std::min<std::size_t>(report.rules.size(), 20);
    for (std::size_t i = 0; i < shown; ++i) {
        const AssociationRule& r = report.rules[i];
        out << "| " << join(r.antecedent, "; ") << " | " << join(r.consequent, "; ")
            << " | " << fmt("%.6f", r.support) << " | " << fmt("%.6f", r.confidence)
            << " | " << fmt("%.6f", r.lift) << " |\n";
    }
    if (report.rules.size() > shown)
        out << "\n(" << report.rules.size() - shown << " more rules in rules.csv)\n";
    out << "\n";

    out << "## Metrics\n\n";
    out << "| method | metric | value |\n|---|---|---|\n";
    out << "| LDA Topic Modeling | Topic Coherence | " << fmt("%.2f", report.coherence)
        << " |\n";
    out << "| K-Means Clustering | Silhouette Score | "
        << fmt("%.5f", report.silhouette) << " |\n";
    out << "| Association Rule Mining | Max Confidence | "
        << fmt("%.6f", report.max_confidence) << " |\n\n";

    out << "## Configuration\n\n```json\n" << report.config_echo.dump(2)
        << "\n```\n";
}

nlohmann::ordered_json report_to_json(const AnalysisReport& report) {
    nlohmann::ordered_json j;
    j["stats"] = {{"n_dialogues", report.stats.n_dialogues},
                  {"n_conditions", report.stats.n_conditions},
                  {"mean_turns", report.stats.mean_turns},
                  {"per_condition_counts", report.stats.per_condition_counts}};
    auto topics = nlohmann::ordered_json::array();
    for (const TopicSummary& t : report.topic_summaries) {
        auto words = nlohmann::ordered_json::array();
        for (const auto& [term, prob] : t.top_words)
            words.push_back({{"term", term}, {"probability", prob}});
        topics.push_back({{"topic", t.topic_index}, {"words", std::move(words)}});
    }
    j["topics"] = std::move(topics);
    j["coherence"] = report.coherence;
    j["silhouette"] = report.silhouette;
    nlohmann::ordered_json sizes;
    for (const auto& [cluster, size] : report.cluster_sizes)
        sizes[std::to_string(cluster)] = size;
    j["cluster_sizes"] = std::move(sizes);
    auto entities = nlohmann::ordered_json::array();
    for (const EntityTableRow& row : report.entity_table)
        entities.push_back({{"dialogue_id", row.dialogue_id},
                            {"cleaned", row.cleaned},
                            {"entities", row.entities}});
    j["entity_table"] = std::move(entities);
    auto rules = nlohmann::ordered_json::array();
    for (const AssociationRule& r : report.rules)
        rules.push_back({{"antecedents", r.antecedent},
                         {"consequents", r.consequent},
                         {"support", r.support},
                         {"confidence", r.confidence},
                         {"lift", r.lift},
                         {"count_joint", r.count_joint},
                         {"count_antecedent", r.count_antecedent},
                         {"count_consequent", r.count_consequent},
                         {"n_transactions", r.n_transactions}});
    j["rules"] = std::move(rules);
    j["max_confidence"] = report.max_confidence;
    j["corpus_digest"] = report.corpus_digest;
    j["config"] = report.config_echo;
    return j;
}

AnalysisReport report_from_json(const nlohmann::ordered_json& j) {
    AnalysisReport report;
    const auto& stats = j.at("stats");
    report.stats.n_dialogues = stats.at("n_dialogues").get<std::size_t>();
    report.stats.n_conditions = stats.at("n_conditions").get<std::size_t>();
    report.stats.mean_turns = stats.at("mean_turns").get<double>();
    for (const auto& [condition, count] : stats.at("per_condition_counts").items())
        report.stats.per_condition_counts[condition] = count.get<std::size_t>();
    for (const auto& t : j.at("topics")) {
        TopicSummary summary;
        summary.topic_index = t.at("topic").get<int>();
        for (const auto& w : t.at("words"))
            summary.top_words.emplace_back(w.at("term").get<std::string>(),
                                           w.at("probability").get<double>());
        report.topic_summaries.push_back(std::move(summary));
    }
    report.coherence = j.at("coherence").get<double>();
    report.silhouette = j.at("silhouette").get<double>();
    for (const auto& [cluster, size] : j.at("cluster_sizes").items())
        report.cluster_sizes[std::stoi(cluster)] = size.get<std::size_t>();
    for (const auto& e : j.at("entity_table")) {
        EntityTableRow row;
        row.dialogue_id = e.at("dialogue_id").get<std::string>();
        row.cleaned = e.at("cleaned").get<std::string>();
        row.entities = e.at("entities").get<std::vector<std::string>>();
        report.entity_table.push_back(std::move(row));
    }
    for (const auto& r : j.at("rules")) {
        AssociationRule rule;
        rule.antecedent = r.at("antecedents").get<std::vector<std::string>>();
        rule.consequent = r.at("consequents").get<std::vector<std::string>>();
        rule.support = r.at("support").get<double>();
        rule.confidence = r.at("confidence").get<double>();
        rule.lift = r.at("lift").get<double>();
        rule.count_joint = r.at("count_joint").get<long long>();
        rule.count_antecedent = r.at("count_antecedent").get<long long>();
        rule.count_consequent = r.at("count_consequent").get<long long>();
        rule.n_transactions = r.at("n_transactions").get<long long>();
        report.rules.push_back(std::move(rule));
    }
    report.max_confidence = j.at("max_confidence").get<double>();
    report.corpus_digest = j.at("corpus_digest").get<std::uint64_t>();
    report.config_echo = j.at("config");
    return report;
}

void write_report_files(const AnalysisReport& report,
                        const std::vector<std::pair<std::string, int>>& assignments,
                        const std::string& out_dir) {
    namespace fs = std::filesystem;
    const fs::path root(out_dir);
    fs::create_directories(root / "tables");

    {
        auto out = open_output(root / "report.md");
        render_markdown(report, out);
    }
    {
        auto out = open_output(root / "report.json");
        out << report_to_json(report).dump(2) << '\n';
    }
    {
        auto out = open_output(root / "tables" / "stats.csv");
        out << "key,value\n";
        write_csv_row(out, {"n_dialogues", std::to_string(report.stats.n_dialogues)});
        write_csv_row(out, {"n_conditions", std::to_string(report.stats.n_conditions)});
        write_csv_row(out, {"mean_turns", fmt("%.17g", report.stats.mean_turns)});
        for (const auto& [condition, count] : report.stats.per_condition_counts)
            write_csv_row(out, {"count." + condition, std::to_string(count)});
    }
    {
        auto out = open_output(root / "tables" / "topics.csv");
        out << "topic,rank,term,probability\n";
        for (const TopicSummary& t : report.topic_summaries) {
            for (std::size_t rank = 0; rank < t.top_words.size(); ++rank) {
                write_csv_row(out, {std::to_string(t.topic_index),
                                    std::to_string(rank + 1),
                                    t.top_words[rank].first,
                                    fmt("%.6f", t.top_words[rank].second)});
            }
        }
    }
    {
        auto out = open_output(root / "tables" / "clusters.csv");
        out << "dialogue_id,cluster\n";
        for (const auto& [id, cluster] : assignments)
            write_csv_row(out, {id, std::to_string(cluster)});
    }
    {
        auto out = open_output(root / "tables" / "entities.csv");
        out << "dialogue_id,cleaned,entities\n";
        for (const EntityTableRow& row : report.entity_table) {
            std::string entities;
            for (std::size_t i = 0; i < row.entities.size(); ++i) {
                if (i) entities += ';';
                entities += row.entities[i];
            }
            write_csv_row(out, {row.dialogue_id, row.cleaned, entities});
        }
    }
    {
        auto out = open_output(root / "tables" / "rules.csv");
        write_rules_csv(report.rules, out);
    }
    {
        auto out = open_output(root / "tables" / "metrics.csv");
        out << "method,metric,value\n";
        write_csv_row(out, {"LDA Topic Modeling", "Topic Coherence",
                            fmt("%.2f", report.coherence)});
        write_csv_row(out, {"K-Means Clustering", "Silhouette Score",
                            fmt("%.5f", report.silhouette)});
        write_csv_row(out, {"Association Rule Mining", "Max Confidence",
                            fmt("%.6f", report.max_confidence)});
    }
}

} // namespace symmine
