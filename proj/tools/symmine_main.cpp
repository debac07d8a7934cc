// SPDX-License-Identifier: Apache-2.0
//
// symmine: mine symptom structure out of patient/chatbot dialogue corpora.
//
//   symmine stats    <corpus>                  descriptive statistics
//   symmine synth    [--plan plan.json] -o f   synthesize a corpus
//   symmine topics   <corpus> -o dir           LDA topics + model export
//   symmine cluster  <corpus> -o dir           k-means assignments + centroids
//   symmine entities <corpus> -o dir           gazetteer entity spans
//   symmine rules    <corpus> -o dir           association rules
//   symmine run-all  <corpus> -o dir           full pipeline -> report tree
//
// All randomness derives from --seed; identical invocations produce
// byte-identical outputs regardless of --threads.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "symmine/csv.hpp"
#include "symmine/pipeline.hpp"

namespace {

using namespace symmine;

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
    return out;
}

struct CliOptions {
    PipelineConfig cfg;
    std::string config_path;
    std::string plan_path;
    bool no_marker_filter = false;
    bool seed_given = false;
};

void finalize_config(CliOptions& opts, const CLI::App& app) {
    // Config file first, explicit flags second so flags win.
    if (!opts.config_path.empty()) {
        std::ifstream in(opts.config_path);
        if (!in)
            throw std::runtime_error(opts.config_path + ": cannot open for reading");
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::parse_error& e) {
            throw std::runtime_error(opts.config_path + ": malformed JSON: " + e.what());
        }
        PipelineConfig from_file;
        apply_config_json(from_file, j);
        // Fields not set by explicit flags take the file values.
        PipelineConfig merged = from_file;
        if (app.count("--seed")) merged.seed = opts.cfg.seed;
        if (app.count("--threads")) merged.threads = opts.cfg.threads;
        if (app.count("--format")) merged.input_format = opts.cfg.input_format;
        if (app.count("--lexicon")) merged.lexicon_path = opts.cfg.lexicon_path;
        if (app.count("--stopwords")) merged.stopwords_path = opts.cfg.stopwords_path;
        if (app.count("--lemma-lexicon"))
            merged.lemma_lexicon_path = opts.cfg.lemma_lexicon_path;
        merged.input_path = opts.cfg.input_path.empty() ? merged.input_path
                                                        : opts.cfg.input_path;
        merged.output_dir = opts.cfg.output_dir.empty() ? merged.output_dir
                                                        : opts.cfg.output_dir;
        opts.cfg = merged;
    }
    if (opts.no_marker_filter) opts.cfg.mining.marker_filter.clear();
    if (!opts.cfg.stopwords_path.empty())
        opts.cfg.preprocess.stopwords = load_stopwords(opts.cfg.stopwords_path);
    opts.cfg.validate();
}

void log_stage(const std::string& message) { std::cerr << "[symmine] " << message << "\n"; }

int cmd_stats(CliOptions& opts) {
    const Corpus corpus = load_input(opts.cfg);
    const CorpusStats stats = compute_stats(corpus);
    std::cout << "dialogues: " << stats.n_dialogues << "\n";
    std::cout << "conditions: " << stats.n_conditions << "\n";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", stats.mean_turns);
    std::cout << "mean turns per dialogue: " << buf << "\n";
    for (const auto& [condition, count] : stats.per_condition_counts)
        std::cout << condition << ": " << count << "\n";
    return 0;
}

int cmd_synth(CliOptions& opts, const CLI::App& app) {
    SynthesisPlan plan = opts.plan_path.empty() ? default_synthesis_plan()
                                                : load_synthesis_plan(opts.plan_path);
    if (app.count("--seed")) plan.seed = opts.cfg.seed;
    log_stage("synthesizing corpus (" +
              std::to_string(plan.n_conditions * plan.dialogues_per_condition) +
              " dialogues)");
    const Corpus corpus = synthesize_corpus(plan);
    if (opts.cfg.input_format == "csv") write_corpus_csv(corpus, opts.cfg.output_dir);
    else write_corpus_jsonl(corpus, opts.cfg.output_dir);
    log_stage("wrote " + opts.cfg.output_dir);
    return 0;
}

PipelineResult run_stages(CliOptions& opts) {
    const Corpus corpus = load_input(opts.cfg);
    log_stage("loaded " + std::to_string(corpus.dialogues.size()) + " dialogues");
    log_stage("running pipeline (seed " + std::to_string(opts.cfg.seed) + ", " +
              std::to_string(opts.cfg.threads) + " thread(s))");
    PipelineResult result = run_pipeline(corpus, opts.cfg);
    log_stage("pipeline finished");
    return result;
}

std::filesystem::path prepare_output_dir(const CliOptions& opts) {
    if (opts.cfg.output_dir.empty())
        throw std::runtime_error("output: missing -o/--output directory");
    std::filesystem::create_directories(opts.cfg.output_dir);
    return opts.cfg.output_dir;
}

int cmd_topics(CliOptions& opts) {
    const auto dir = prepare_output_dir(opts);
    PipelineResult result = run_stages(opts);
    {
        auto out = open_output(dir / "topics.csv");
        out << "topic,rank,term,probability\n";
        char buf[32];
        for (const TopicSummary& t : result.topics) {
            for (std::size_t rank = 0; rank < t.top_words.size(); ++rank) {
                std::snprintf(buf, sizeof buf, "%.6f", t.top_words[rank].second);
                out << t.topic_index << ',' << rank + 1 << ','
                    << csv_escape(t.top_words[rank].first) << ',' << buf << '\n';
            }
        }
    }
    {
        auto out = open_output(dir / "lda_model.txt");
        write_lda_model(result.lda, out);
    }
    log_stage("wrote topics.csv and lda_model.txt");
    return 0;
}

int cmd_cluster(CliOptions& opts) {
    const auto dir = prepare_output_dir(opts);
    PipelineResult result = run_stages(opts);
    {
        auto out = open_output(dir / "clusters.csv");
        out << "dialogue_id,cluster\n";
        for (std::size_t i = 0; i < result.tfidf.doc_ids.size(); ++i)
            out << csv_escape(result.tfidf.doc_ids[i]) << ','
                << result.kmeans.assignments[i] << '\n';
    }
    {
        auto out = open_output(dir / "centroids.txt");
        write_centroid_triplets(result.kmeans, result.tfidf.n_terms, out);
    }
    log_stage("wrote clusters.csv and centroids.txt");
    return 0;
}

int cmd_entities(CliOptions& opts) {
    const auto dir = prepare_output_dir(opts);
    PipelineResult result = run_stages(opts);
    auto out = open_output(dir / "entities.csv");
    out << "dialogue_id,canonical,surface,start,end\n";
    for (const EntitySpan& span : result.spans) {
        std::string surface;
        for (std::size_t i = 0; i < span.surface.size(); ++i) {
            if (i) surface += ' ';
            surface += span.surface[i];
        }
        out << csv_escape(span.dialogue_id) << ',' << csv_escape(span.canonical)
            << ',' << csv_escape(surface) << ',' << span.token_start << ','
            << span.token_end << '\n';
    }
    log_stage("wrote entities.csv");
    return 0;
}

int cmd_rules(CliOptions& opts) {
    const auto dir = prepare_output_dir(opts);
    PipelineResult result = run_stages(opts);
    auto out = open_output(dir / "rules.csv");
    write_rules_csv(result.rules, out);
    log_stage("wrote rules.csv (" + std::to_string(result.rules.size()) + " rules)");
    return 0;
}

int cmd_run_all(CliOptions& opts) {
    prepare_output_dir(opts);
    PipelineResult result = run_stages(opts);
    write_run_all_outputs(result, opts.cfg.output_dir);
    log_stage("wrote report to " + opts.cfg.output_dir);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symptom mining over patient/chatbot dialogue corpora"};
    app.require_subcommand(1);

    CliOptions opts;
    app.add_option("--config", opts.config_path, "JSON config file");
    app.add_option("--seed", opts.cfg.seed, "global random seed");
    app.add_option("--threads", opts.cfg.threads, "worker threads (outputs identical)");
    app.add_flag("--no-marker-filter", opts.no_marker_filter,
                 "keep conversational markers (bot/user/yes/no) in transactions");
    app.add_option("--lexicon", opts.cfg.lexicon_path, "symptom lexicon file");
    app.add_option("--stopwords", opts.cfg.stopwords_path, "stop-word list file");
    app.add_option("--lemma-lexicon", opts.cfg.lemma_lexicon_path,
                   "lemma exception table file");
    app.add_option("--format", opts.cfg.input_format, "corpus format: jsonl|csv")
        ->check(CLI::IsMember({"jsonl", "csv"}));

    auto add_corpus_arg = [&](CLI::App* sub) {
        sub->add_option("corpus", opts.cfg.input_path, "corpus file")->required();
    };
    auto add_output_opt = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("-o,--output", opts.cfg.output_dir, "output path");
        if (required) opt->required();
    };

    CLI::App* stats = app.add_subcommand("stats", "print corpus statistics");
    stats->fallthrough();
    add_corpus_arg(stats);

    CLI::App* synth = app.add_subcommand("synth", "write a synthetic corpus");
    synth->fallthrough();
    synth->add_option("--plan", opts.plan_path, "synthesis plan JSON (default: bundled)");
    add_output_opt(synth, true);

    CLI::App* topics = app.add_subcommand("topics", "fit LDA and export topics");
    topics->fallthrough();
    add_corpus_arg(topics);
    add_output_opt(topics, true);

    CLI::App* cluster = app.add_subcommand("cluster", "k-means cluster the corpus");
    cluster->fallthrough();
    add_corpus_arg(cluster);
    add_output_opt(cluster, true);

    CLI::App* entities = app.add_subcommand("entities", "extract symptom entities");
    entities->fallthrough();
    add_corpus_arg(entities);
    add_output_opt(entities, true);

    CLI::App* rules = app.add_subcommand("rules", "mine association rules");
    rules->fallthrough();
    add_corpus_arg(rules);
    add_output_opt(rules, true);

    CLI::App* run_all = app.add_subcommand("run-all", "full pipeline and report");
    run_all->fallthrough();
    add_corpus_arg(run_all);
    add_output_opt(run_all, true);

    CLI11_PARSE(app, argc, argv);

    try {
        finalize_config(opts, app);
        if (stats->parsed()) return cmd_stats(opts);
        if (synth->parsed()) return cmd_synth(opts, app);
        if (topics->parsed()) return cmd_topics(opts);
        if (cluster->parsed()) return cmd_cluster(opts);
        if (entities->parsed()) return cmd_entities(opts);
        if (rules->parsed()) return cmd_rules(opts);
        if (run_all->parsed()) return cmd_run_all(opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
