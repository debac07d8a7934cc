// SPDX-License-Identifier: Apache-2.0

#include "symmine/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "symmine/rng.hpp"

namespace symmine {

void PipelineConfig::validate() const {
    if (input_format != "jsonl" && input_format != "csv")
        throw std::runtime_error("format: must be \"jsonl\" or \"csv\"");
    if (threads < 1) throw std::runtime_error("threads: must be >= 1");
    if (tfidf.min_df < 1) throw std::runtime_error("tfidf.min_df: must be >= 1");
    if (tfidf.max_df_ratio <= 0.0 || tfidf.max_df_ratio > 1.0)
        throw std::runtime_error("tfidf.max_df_ratio: must be in (0,1]");
    if (lda.n_topics < 1) throw std::runtime_error("lda.n_topics: must be >= 1");
    if (lda.beta <= 0.0) throw std::runtime_error("lda.beta: must be > 0");
    if (lda.n_iterations < 1)
        throw std::runtime_error("lda.n_iterations: must be >= 1");
    if (lda.burn_in < 0 || lda.burn_in >= lda.n_iterations)
        throw std::runtime_error("lda.burn_in: must be in [0, n_iterations)");
    if (kmeans.k < 2) throw std::runtime_error("kmeans.k: must be >= 2");
    if (kmeans.n_init < 1) throw std::runtime_error("kmeans.n_init: must be >= 1");
    if (kmeans.max_iter < 1) throw std::runtime_error("kmeans.max_iter: must be >= 1");
    if (kmeans.tol < 0.0) throw std::runtime_error("kmeans.tol: must be >= 0");
    if (mining.min_support <= 0.0 || mining.min_support > 1.0)
        throw std::runtime_error("mining.min_support: must be in (0,1]");
    if (mining.min_confidence <= 0.0 || mining.min_confidence > 1.0)
        throw std::runtime_error("mining.min_confidence: must be in (0,1]");
    if (mining.max_itemset_size < 1)
        throw std::runtime_error("mining.max_itemset_size: must be >= 1");
    if (top_n_words < 1) throw std::runtime_error("top_n_words: must be >= 1");
    for (const std::string& word : preprocess.stopwords) {
        for (unsigned char c : word) {
            if (std::isupper(c) || !(std::isalnum(c) || c >= 0x80))
                throw std::runtime_error(
                    "preprocess.stopwords: entry not lowercase/punctuation-free: \"" +
                    word + "\"");
        }
    }
}

namespace {

template <typename T>
void read_if(const nlohmann::json& j, const char* key, T& out) {
    if (j.contains(key)) out = j.at(key).get<T>();
}

void reject_unknown(const nlohmann::json& j,
                    const std::vector<std::string>& known, const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw std::runtime_error("config: unknown key \"" + where + key + "\"");
    }
}

} // namespace

void apply_config_json(PipelineConfig& cfg, const nlohmann::json& j) {
    reject_unknown(j,
                   {"input", "format", "output", "seed", "threads", "preprocess",
                    "tfidf", "lda", "kmeans", "mining", "lexicon", "stopwords",
                    "lemma_lexicon", "top_n_words", "entity_sample_rows"},
                   "");
    read_if(j, "input", cfg.input_path);
    read_if(j, "format", cfg.input_format);
    read_if(j, "output", cfg.output_dir);
    read_if(j, "seed", cfg.seed);
    read_if(j, "threads", cfg.threads);
    read_if(j, "lexicon", cfg.lexicon_path);
    read_if(j, "stopwords", cfg.stopwords_path);
    read_if(j, "lemma_lexicon", cfg.lemma_lexicon_path);
    read_if(j, "top_n_words", cfg.top_n_words);
    read_if(j, "entity_sample_rows", cfg.entity_sample_rows);
    if (j.contains("preprocess")) {
        const auto& p = j.at("preprocess");
        reject_unknown(p, {"lowercase", "strip_punctuation", "lemmatize",
                           "insert_role_markers"},
                       "preprocess.");
        read_if(p, "lowercase", cfg.preprocess.lowercase);
        read_if(p, "strip_punctuation", cfg.preprocess.strip_punctuation);
        read_if(p, "lemmatize", cfg.preprocess.lemmatize);
        read_if(p, "insert_role_markers", cfg.preprocess.insert_role_markers);
    }
    if (j.contains("tfidf")) {
        const auto& t = j.at("tfidf");
        reject_unknown(t, {"min_df", "max_df_ratio", "l2_normalize"}, "tfidf.");
        read_if(t, "min_df", cfg.tfidf.min_df);
        read_if(t, "max_df_ratio", cfg.tfidf.max_df_ratio);
        read_if(t, "l2_normalize", cfg.tfidf.l2_normalize);
    }
    if (j.contains("lda")) {
        const auto& l = j.at("lda");
        reject_unknown(l, {"n_topics", "alpha", "beta", "n_iterations", "burn_in"},
                       "lda.");
        read_if(l, "n_topics", cfg.lda.n_topics);
        read_if(l, "alpha", cfg.lda.alpha);
        read_if(l, "beta", cfg.lda.beta);
        read_if(l, "n_iterations", cfg.lda.n_iterations);
        read_if(l, "burn_in", cfg.lda.burn_in);
    }
    if (j.contains("kmeans")) {
        const auto& k = j.at("kmeans");
        reject_unknown(k, {"k", "n_init", "max_iter", "tol"}, "kmeans.");
        read_if(k, "k", cfg.kmeans.k);
        read_if(k, "n_init", cfg.kmeans.n_init);
        read_if(k, "max_iter", cfg.kmeans.max_iter);
        read_if(k, "tol", cfg.kmeans.tol);
    }
    if (j.contains("mining")) {
        const auto& m = j.at("mining");
        reject_unknown(m, {"min_support", "min_confidence", "max_itemset_size",
                           "marker_filter"},
                       "mining.");
        read_if(m, "min_support", cfg.mining.min_support);
        read_if(m, "min_confidence", cfg.mining.min_confidence);
        read_if(m, "max_itemset_size", cfg.mining.max_itemset_size);
        if (m.contains("marker_filter")) {
            cfg.mining.marker_filter.clear();
            for (const auto& item : m.at("marker_filter"))
                cfg.mining.marker_filter.insert(item.get<std::string>());
        }
    }
}

nlohmann::ordered_json config_echo_json(const PipelineConfig& cfg) {
    // threads is deliberately not echoed: worker count never changes outputs,
    // so it is not part of what a rerun needs.
    nlohmann::ordered_json j;
    j["format"] = cfg.input_format;
    j["seed"] = cfg.seed;
    j["preprocess"] = {
        {"lowercase", cfg.preprocess.lowercase},
        {"strip_punctuation", cfg.preprocess.strip_punctuation},
        {"lemmatize", cfg.preprocess.lemmatize},
        {"insert_role_markers", cfg.preprocess.insert_role_markers},
        {"stopwords", cfg.stopwords_path.empty() ? "bundled-v1" : cfg.stopwords_path},
        {"n_stopwords", cfg.preprocess.stopwords.size()},
        {"lemma_lexicon",
         cfg.lemma_lexicon_path.empty() ? "bundled-v1" : cfg.lemma_lexicon_path},
    };
    j["tfidf"] = {
        {"variant", "tf * (ln((1+N)/(1+df)) + 1)"},
        {"min_df", cfg.tfidf.min_df},
        {"max_df_ratio", cfg.tfidf.max_df_ratio},
        {"l2_normalize", cfg.tfidf.l2_normalize},
    };
    j["lda"] = {
        {"inference", "collapsed-gibbs"},
        {"estimator", "posterior-mean-over-post-burn-in-sweeps"},
        {"input", "raw-counts"},
        {"n_topics", cfg.lda.n_topics},
        {"alpha", cfg.lda.alpha > 0.0 ? cfg.lda.alpha : 50.0 / cfg.lda.n_topics},
        {"beta", cfg.lda.beta},
        {"n_iterations", cfg.lda.n_iterations},
        {"burn_in", cfg.lda.burn_in},
    };
    j["coherence"] = {{"variant", "umass"},
                      {"normalization", "per-pair"},
                      {"top_n", cfg.top_n_words}};
    j["kmeans"] = {
        {"distance", "euclidean-on-l2-normalized-tfidf"},
        {"seeding", "kmeans++"},
        {"k", cfg.kmeans.k},
        {"n_init", cfg.kmeans.n_init},
        {"max_iter", cfg.kmeans.max_iter},
        {"tol", cfg.kmeans.tol},
    };
    j["mining"] = {
        {"min_support", cfg.mining.min_support},
        {"min_confidence", cfg.mining.min_confidence},
        {"max_itemset_size", cfg.mining.max_itemset_size},
        {"marker_filter", cfg.mining.marker_filter},
    };
    j["lexicon"] = cfg.lexicon_path.empty() ? "bundled-v1" : cfg.lexicon_path;
    j["top_n_words"] = cfg.top_n_words;
    return j;
}

Corpus load_input(const PipelineConfig& cfg) {
    if (cfg.input_path.empty()) throw std::runtime_error("input: no path given");
    return cfg.input_format == "csv" ? load_corpus_csv(cfg.input_path)
                                     : load_corpus_jsonl(cfg.input_path);
}

PipelineResult run_pipeline(const Corpus& corpus, const PipelineConfig& cfg) {
    cfg.validate();
    validate(corpus);

    PipelineResult r;
    r.digest = corpus_digest(corpus);
    r.stats = compute_stats(corpus);

    const LemmaLexicon lemmas = cfg.lemma_lexicon_path.empty()
                                    ? default_lemma_lexicon()
                                    : load_lemma_lexicon(cfg.lemma_lexicon_path);
    r.docs.reserve(corpus.dialogues.size());
    for (const Dialogue& d : corpus.dialogues)
        r.docs.push_back(preprocess_dialogue(d, cfg.preprocess, lemmas));

    r.vocab = fit_vocabulary(r.docs, cfg.tfidf);
    r.counts = count_matrix(r.docs, r.vocab);
    r.tfidf = tfidf_matrix(r.docs, r.vocab, cfg.tfidf);

    LdaConfig lda_cfg = cfg.lda;
    lda_cfg.seed = derive_seed(cfg.seed, "lda");
    r.lda = fit_lda(r.counts, lda_cfg, cfg.threads);
    for (int k = 0; k < lda_cfg.n_topics; ++k)
        r.topics.push_back(top_words(r.lda, r.vocab, k, cfg.top_n_words));
    r.coherence = umass_coherence(r.lda, r.vocab, r.counts, cfg.top_n_words);

    KMeansConfig km_cfg = cfg.kmeans;
    km_cfg.seed = derive_seed(cfg.seed, "kmeans");
    r.kmeans = fit_kmeans(r.tfidf, km_cfg, cfg.threads);
    r.silhouette = silhouette_score(r.tfidf, r.kmeans.assignments, cfg.threads);

    const SymptomLexicon lexicon =
        cfg.lexicon_path.empty()
            ? make_default_lexicon(cfg.preprocess, lemmas)
            : load_lexicon(cfg.lexicon_path, cfg.preprocess, lemmas);
    for (const TokenizedDoc& doc : r.docs) {
        auto spans = extract_entities(doc, lexicon);
        r.spans.insert(r.spans.end(), spans.begin(), spans.end());
    }
    r.profiles = entity_profile(r.docs, lexicon);

    r.transactions = build_transactions(r.profiles, cfg.mining);
    r.frequents = apriori(r.transactions, cfg.mining);
    r.rules = generate_rules(r.frequents, r.transactions, cfg.mining);

    std::vector<EntityTableRow> sample;
    for (std::size_t i = 0;
         i < r.docs.size() && i < cfg.entity_sample_rows; ++i) {
        EntityTableRow row;
        row.dialogue_id = r.docs[i].dialogue_id;
        for (std::size_t t = 0; t < r.docs[i].tokens.size(); ++t) {
            if (t) row.cleaned += ' ';
            row.cleaned += r.docs[i].tokens[t];
        }
        for (const EntitySpan& span : extract_entities(r.docs[i], lexicon))
            row.entities.push_back(span.canonical);
        sample.push_back(std::move(row));
    }

    r.report = build_report(r.stats, r.topics, r.coherence, r.silhouette,
                            r.kmeans.assignments, sample, r.rules,
                            config_echo_json(cfg),
                            {r.digest, r.digest, r.digest, r.digest, r.digest});
    return r;
}

void write_run_all_outputs(const PipelineResult& result, const std::string& out_dir) {
    std::vector<std::pair<std::string, int>> assignments;
    assignments.reserve(result.tfidf.doc_ids.size());
    for (std::size_t i = 0; i < result.tfidf.doc_ids.size(); ++i)
        assignments.emplace_back(result.tfidf.doc_ids[i], result.kmeans.assignments[i]);
    write_report_files(result.report, assignments, out_dir);
}

} // namespace symmine
