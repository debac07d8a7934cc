// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite. Runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion; exits nonzero if any fail.
//
//   acceptance <path-to-symmine-cli> [workdir]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "symmine/assoc.hpp"
#include "symmine/cluster.hpp"
#include "symmine/corpus.hpp"
#include "symmine/pipeline.hpp"
#include "symmine/rng.hpp"
#include "symmine/topics.hpp"
#include "symmine/vectorize.hpp"

namespace fs = std::filesystem;
using namespace symmine;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int n, const std::string& what, bool ok, const std::string& detail) {
    std::printf("%s criterion %d: %s%s%s%s\n", ok ? "PASS" : "FAIL", n,
                what.c_str(), detail.empty() ? "" : " [", detail.c_str(),
                detail.empty() ? "" : "]");
    std::fflush(stdout);
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

// ---- shared helpers -------------------------------------------------------

TransactionSet random_transactions(Rng& rng, int max_items, std::size_t max_trans) {
    const int n_items = 2 + static_cast<int>(rng.uniform_index(max_items - 1));
    const std::size_t n_trans = 1 + rng.uniform_index(max_trans);
    std::vector<std::pair<std::string, std::set<std::string>>> profiles;
    for (std::size_t t = 0; t < n_trans; ++t) {
        std::set<std::string> s;
        for (int i = 0; i < n_items; ++i)
            if (rng.bernoulli(0.3)) s.insert(std::string(1, static_cast<char>('a' + i)));
        profiles.emplace_back("t" + std::to_string(t), std::move(s));
    }
    MiningConfig cfg;
    cfg.marker_filter.clear();
    return build_transactions(profiles, cfg);
}

bool rule_metrics_exact(const AssociationRule& r, const TransactionSet& ts) {
    auto count_of = [&](const std::vector<std::string>& items) {
        long long count = 0;
        for (const auto& [id, t] : ts.transactions) {
            bool all = true;
            for (const auto& item : items) all = all && t.count(item);
            count += all;
        }
        return count;
    };
    std::vector<std::string> joint = r.antecedent;
    joint.insert(joint.end(), r.consequent.begin(), r.consequent.end());
    return count_of(joint) == r.count_joint &&
           count_of(r.antecedent) == r.count_antecedent &&
           count_of(r.consequent) == r.count_consequent &&
           static_cast<long long>(ts.transactions.size()) == r.n_transactions &&
           r.support == static_cast<double>(r.count_joint) /
                            static_cast<double>(r.n_transactions) &&
           r.confidence == static_cast<double>(r.count_joint) /
                               static_cast<double>(r.count_antecedent) &&
           r.lift == static_cast<double>(r.count_joint * r.n_transactions) /
                         static_cast<double>(r.count_antecedent * r.count_consequent);
}

struct Planted {
    std::vector<TokenizedDoc> docs;
    std::set<std::string> vocab_a;
    std::set<std::string> vocab_b;
};

Planted planted_corpus(std::uint64_t seed) {
    Planted p;
    std::vector<std::string> va, vb;
    for (int i = 0; i < 10; ++i) {
        va.push_back("alpha" + std::to_string(i));
        vb.push_back("beta" + std::to_string(i));
    }
    p.vocab_a.insert(va.begin(), va.end());
    p.vocab_b.insert(vb.begin(), vb.end());
    Rng rng(seed);
    for (int d = 0; d < 40; ++d) {
        const bool is_a = d < 20;
        const auto& vocab = is_a ? va : vb;
        TokenizedDoc doc;
        doc.dialogue_id = (is_a ? "a-" : "b-") + std::to_string(d);
        doc.disease_label = is_a ? "a" : "b";
        const std::size_t len = 25 + rng.uniform_index(10);
        for (std::size_t t = 0; t < len; ++t)
            doc.tokens.push_back(vocab[rng.uniform_index(vocab.size())]);
        p.docs.push_back(std::move(doc));
    }
    return p;
}

DocTermMatrix counts_for(const std::vector<TokenizedDoc>& docs, Vocabulary& vocab) {
    TfidfConfig cfg;
    cfg.min_df = 1;
    cfg.max_df_ratio = 1.0;
    vocab = fit_vocabulary(docs, cfg);
    return count_matrix(docs, vocab);
}

LdaConfig planted_lda_config(std::uint64_t seed) {
    LdaConfig cfg;
    cfg.n_topics = 2;
    cfg.alpha = 0.1;
    cfg.beta = 0.01;
    cfg.n_iterations = 300;
    cfg.burn_in = 200;
    cfg.seed = seed;
    return cfg;
}

// Dense, cache-free silhouette evaluation used as the independent reference.
double silhouette_reference(const std::vector<std::vector<double>>& points,
                            const std::vector<int>& assignments) {
    const std::size_t n = points.size();
    int k = 0;
    for (const int a : assignments) k = std::max(k, a + 1);
    std::vector<std::size_t> sizes(k, 0);
    for (const int a : assignments) ++sizes[a];
    auto dist = [&](std::size_t i, std::size_t j) {
        double s = 0.0;
        for (std::size_t d = 0; d < points[i].size(); ++d) {
            const double diff = points[i][d] - points[j][d];
            s += diff * diff;
        }
        return std::sqrt(s);
    };
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (sizes[assignments[i]] <= 1) continue;
        double a_sum = 0.0;
        std::vector<double> other(k, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (assignments[j] == assignments[i]) a_sum += dist(i, j);
            else other[assignments[j]] += dist(i, j);
        }
        const double a = a_sum / (sizes[assignments[i]] - 1);
        double b = std::numeric_limits<double>::infinity();
        for (int c = 0; c < k; ++c) {
            if (c == assignments[i] || sizes[c] == 0) continue;
            b = std::min(b, other[c] / sizes[c]);
        }
        if (std::max(a, b) > 0.0) total += (b - a) / std::max(a, b);
    }
    return total / static_cast<double>(n);
}

DocTermMatrix matrix_of(const std::vector<std::vector<double>>& points) {
    DocTermMatrix m;
    m.n_docs = points.size();
    m.n_terms = points.empty() ? 0 : points[0].size();
    m.weighting = Weighting::TfIdf;
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::vector<std::pair<int, double>> row;
        for (std::size_t j = 0; j < points[i].size(); ++j)
            if (points[i][j] != 0.0) row.emplace_back(static_cast<int>(j), points[i][j]);
        m.rows.push_back(std::move(row));
        m.doc_ids.push_back("p" + std::to_string(i));
    }
    return m;
}

std::string g_cli;
fs::path g_work;

int run_cli(const std::string& args) {
    const std::string cmd = "\"" + g_cli + "\" " + args + " 2>> \"" +
                            (g_work / "cli.log").string() + "\"";
    return std::system(cmd.c_str());
}

std::map<std::string, std::string> read_tree(const fs::path& root) {
    std::map<std::string, std::string> files;
    for (const auto& entry : fs::recursive_directory_iterator(root)) {
        if (!entry.is_regular_file()) continue;
        std::ifstream in(entry.path(), std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        files[fs::relative(entry.path(), root).string()] = ss.str();
    }
    return files;
}

// ---- criteria -------------------------------------------------------------

void criterion_1_and_2() {
    const auto start = Clock::now();
    Rng rng(20260809);
    bool equal_all = true;
    bool identities_all = true;
    std::size_t n_rules = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const TransactionSet ts = random_transactions(rng, 12, 64);
        MiningConfig cfg;
        cfg.min_support = 0.05 + 0.45 * rng.uniform01();
        cfg.min_confidence = 0.3;
        const auto fast = apriori(ts, cfg);
        const auto slow = brute_force_frequent(ts, cfg);
        if (fast.size() != slow.size()) {
            equal_all = false;
            break;
        }
        for (std::size_t i = 0; i < fast.size(); ++i) {
            if (fast[i].items != slow[i].items || fast[i].count != slow[i].count ||
                fast[i].support != slow[i].support) {
                equal_all = false;
            }
        }
        for (const auto& rule : generate_rules(fast, ts, cfg)) {
            ++n_rules;
            identities_all = identities_all && rule_metrics_exact(rule, ts);
        }
    }
    const double elapsed = seconds_since(start);
    report(1, "apriori equals the enumeration oracle on 500 random sets",
           equal_all && elapsed < 10.0,
           fmt("%.2f", elapsed) + "s, " + std::to_string(n_rules) + " rules");

    // Printed-metrics fixture: A=(chy), C=(bot), support 0.070833,
    // confidence 1.000000, lift 1.054945 implies supp(bot) = 910/960.
    std::vector<std::pair<std::string, std::set<std::string>>> profiles;
    for (int i = 0; i < 68; ++i)
        profiles.emplace_back("j" + std::to_string(i),
                              std::set<std::string>{"chy", "bot"});
    for (int i = 0; i < 842; ++i)
        profiles.emplace_back("b" + std::to_string(i), std::set<std::string>{"bot"});
    for (int i = 0; i < 50; ++i)
        profiles.emplace_back("e" + std::to_string(i), std::set<std::string>{});
    MiningConfig fixture_cfg;
    fixture_cfg.marker_filter.clear();
    const TransactionSet fixture = build_transactions(profiles, fixture_cfg);
    fixture_cfg.min_support = 0.05;
    fixture_cfg.min_confidence = 0.5;
    bool fixture_ok = false;
    for (const auto& rule :
         generate_rules(apriori(fixture, fixture_cfg), fixture, fixture_cfg)) {
        if (rule.antecedent == std::vector<std::string>{"chy"} &&
            rule.consequent == std::vector<std::string>{"bot"}) {
            fixture_ok = rule_metrics_exact(rule, fixture) &&
                         fmt("%.6f", rule.support) == "0.070833" &&
                         fmt("%.6f", rule.confidence) == "1.000000" &&
                         fmt("%.6f", rule.lift) == "1.054945" &&
                         rule.count_consequent == 910 && rule.n_transactions == 960;
        }
    }
    report(2, "rule metric identities are exact, incl. the printed-metrics fixture",
           identities_all && fixture_ok,
           std::to_string(n_rules) + " rules checked");
}

void criterion_3() {
    Rng rng(33);
    bool ok = true;
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 20 + rng.uniform_index(181); // <= 200
        const int k = 2 + static_cast<int>(rng.uniform_index(4));
        const std::size_t dim = 2 + rng.uniform_index(7);
        std::vector<std::vector<double>> points;
        std::vector<int> assignments;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<double> p(dim);
            for (auto& x : p) x = rng.uniform01() * 6.0 - 3.0;
            points.push_back(std::move(p));
            assignments.push_back(static_cast<int>(rng.uniform_index(k)));
        }
        assignments[0] = 0;
        assignments[n - 1] = 1;
        const double impl = silhouette_score(matrix_of(points), assignments);
        const double ref = silhouette_reference(points, assignments);
        worst = std::max(worst, std::abs(impl - ref));
        ok = ok && std::abs(impl - ref) <= 1e-9 && impl >= -1.0 && impl <= 1.0;
    }
    report(3, "silhouette matches the direct O(n^2) evaluation within 1e-9", ok,
           "max |diff| " + fmt("%.2e", worst));
}

void criterion_4() {
    const std::vector<std::vector<double>> corners = {
        {0.0, 0.0}, {2.0, 0.0}, {0.0, 2.0}, {2.0, 2.0}};
    // Exhaustive-partition oracle over all 2-partitions of the 4 points.
    double oracle = std::numeric_limits<double>::infinity();
    for (std::uint32_t mask = 1; mask + 1 < 16; ++mask) {
        std::vector<std::vector<double>> sums(2, std::vector<double>(2, 0.0));
        std::vector<std::size_t> counts(2, 0);
        for (std::size_t i = 0; i < 4; ++i) {
            const int g = (mask >> i) & 1;
            ++counts[g];
            for (int j = 0; j < 2; ++j) sums[g][j] += corners[i][j];
        }
        if (!counts[0] || !counts[1]) continue;
        double inertia = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
            const int g = (mask >> i) & 1;
            for (int j = 0; j < 2; ++j) {
                const double d = corners[i][j] - sums[g][j] / counts[g];
                inertia += d * d;
            }
        }
        oracle = std::min(oracle, inertia);
    }

    KMeansConfig cfg;
    cfg.k = 2;
    cfg.n_init = 10;
    cfg.seed = 4;
    bool ok = true;
    std::string detail;
    try {
        const KMeansModel model = fit_kmeans(matrix_of(corners), cfg);
        ok = model.inertia == oracle; // exact: all arithmetic is dyadic
        detail = "inertia " + fmt("%.1f", model.inertia) + " == optimum " +
                 fmt("%.1f", oracle);
        // Monotonicity is asserted inside every Lloyd run; exercise more
        // fits so a violation would throw here.
        Rng rng(12);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<std::vector<double>> points;
            const std::size_t n = 10 + rng.uniform_index(80);
            for (std::size_t i = 0; i < n; ++i)
                points.push_back({rng.uniform01() * 3, rng.uniform01() * 3,
                                  rng.uniform01() * 3});
            KMeansConfig rcfg;
            rcfg.k = 2 + static_cast<int>(rng.uniform_index(3));
            rcfg.seed = rng.next();
            const KMeansModel m = fit_kmeans(matrix_of(points), rcfg);
            for (std::size_t i = 1; i < m.inertia_history.size(); ++i)
                ok = ok && m.inertia_history[i] <=
                               m.inertia_history[i - 1] * (1.0 + 1e-9) + 1e-12;
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(4, "k-means inertia is monotone and hits the 4-corner optimum", ok,
           detail);
}

void criterion_5() {
    const auto start = Clock::now();
    bool ok = true;
    std::string detail;
    try {
        int recovered = 0;
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            const Planted planted = planted_corpus(100 + seed);
            Vocabulary vocab;
            const DocTermMatrix counts = counts_for(planted.docs, vocab);
            LdaConfig cfg = planted_lda_config(seed);
            cfg.check_invariants = true; // count consistency after every sweep
            const LdaModel model = fit_lda(counts, cfg);

            for (const auto& row : model.phi) {
                double sum = 0.0;
                for (const double v : row) sum += v;
                ok = ok && std::abs(sum - 1.0) <= 1e-9;
            }
            for (const auto& row : model.theta) {
                double sum = 0.0;
                for (const double v : row) sum += v;
                ok = ok && std::abs(sum - 1.0) <= 1e-9;
            }

            int sides_seen = 0;
            bool pure = true;
            for (int k = 0; k < 2; ++k) {
                const TopicSummary summary = top_words(model, vocab, k, 10);
                int in_a = 0, in_b = 0;
                for (const auto& [term, prob] : summary.top_words) {
                    in_a += planted.vocab_a.count(term);
                    in_b += planted.vocab_b.count(term);
                }
                pure = pure && std::max(in_a, in_b) >= 9;
                sides_seen += in_a > in_b ? 1 : 2;
            }
            recovered += pure && sides_seen == 3; // one topic per side
        }
        ok = ok && recovered == 10;
        detail = std::to_string(recovered) + "/10 seeds recovered, " +
                 fmt("%.2f", seconds_since(start)) + "s";
        ok = ok && seconds_since(start) < 30.0;
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(5, "LDA rows normalize, counts stay consistent, topics recover", ok,
           detail);
}

void criterion_6() {
    // Hand fixture: docs {ab, ab, b}, topic ranked (b, a):
    // score = ln((D(a,b)+1)/D(b)) = ln(3/3) = 0.
    const std::vector<TokenizedDoc> docs = {
        {"d1", {"a", "b"}, "x"}, {"d2", {"a", "b"}, "x"}, {"d3", {"b"}, "x"}};
    Vocabulary vocab;
    const DocTermMatrix counts = counts_for(docs, vocab);
    const std::vector<std::vector<int>> ranked = {
        {vocab.index_of("b"), vocab.index_of("a")}};
    const double fixture = umass_coherence_for(ranked, counts);
    bool ok = std::abs(fixture) <= 1e-9;

    // Fitted topics must beat randomly re-dealt top-word lists, paired
    // over 10 seeds.
    int wins = 0;
    double mean_diff = 0.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Planted planted = planted_corpus(300 + seed);
        Vocabulary pv;
        const DocTermMatrix pcounts = counts_for(planted.docs, pv);
        const LdaModel model = fit_lda(pcounts, planted_lda_config(seed));
        std::vector<std::vector<int>> fitted;
        std::vector<int> pool;
        for (int k = 0; k < 2; ++k) {
            std::vector<int> terms;
            for (const auto& [term, prob] : top_words(model, pv, k, 10).top_words)
                terms.push_back(pv.index_of(term));
            pool.insert(pool.end(), terms.begin(), terms.end());
            fitted.push_back(std::move(terms));
        }
        Rng rng(derive_seed(seed, "permute"));
        for (std::size_t i = pool.size(); i > 1; --i)
            std::swap(pool[i - 1], pool[rng.uniform_index(i)]);
        const std::vector<std::vector<int>> permuted = {
            {pool.begin(), pool.begin() + 10}, {pool.begin() + 10, pool.end()}};
        const double c_fit = umass_coherence_for(fitted, pcounts);
        const double c_perm = umass_coherence_for(permuted, pcounts);
        wins += c_fit > c_perm;
        mean_diff += (c_fit - c_perm) / 10.0;
    }
    ok = ok && wins >= 8 && mean_diff > 0.0;
    report(6, "UMass coherence: zero fixture and fitted > permuted", ok,
           "fixture " + fmt("%.2e", fixture) + ", wins " + std::to_string(wins) +
               "/10, mean diff " + fmt("%.2f", mean_diff));
}

void criterion_7_and_8() {
    const fs::path corpus = g_work / "corpus.jsonl";
    const fs::path out1 = g_work / "run1";
    if (run_cli("synth -o \"" + corpus.string() + "\"") != 0) {
        report(7, "end-to-end band replication", false, "synth failed");
        report(8, "thread-count determinism", false, "synth failed");
        return;
    }

    const auto start = Clock::now();
    const int rc = run_cli("run-all \"" + corpus.string() + "\" -o \"" +
                           out1.string() + "\" --seed 42 --threads 1");
    const double elapsed = seconds_since(start);
    if (rc != 0) {
        report(7, "end-to-end band replication", false, "run-all failed");
        report(8, "thread-count determinism", false, "run-all failed");
        return;
    }

    bool ok = elapsed < 60.0;
    std::string detail = fmt("%.2f", elapsed) + "s";
    double silhouette = 0.0, coherence = 0.0, best_pair_confidence = 0.0;
    try {
        std::ifstream in(out1 / "report.json");
        nlohmann::json j;
        in >> j;
        silhouette = j.at("silhouette").get<double>();
        coherence = j.at("coherence").get<double>();
        ok = ok && silhouette >= 0.2 && silhouette <= 0.6;
        for (const auto& rule : j.at("rules")) {
            const auto a = rule.at("antecedents").get<std::vector<std::string>>();
            const auto c = rule.at("consequents").get<std::vector<std::string>>();
            const bool planted_pair =
                (a == std::vector<std::string>{"fever"} &&
                 c == std::vector<std::string>{"headache"}) ||
                (a == std::vector<std::string>{"headache"} &&
                 c == std::vector<std::string>{"fever"});
            if (planted_pair)
                best_pair_confidence =
                    std::max(best_pair_confidence, rule.at("confidence").get<double>());
        }
        ok = ok && best_pair_confidence >= 0.85;
        detail += ", silhouette " + fmt("%.5f", silhouette) +
                  ", fever/headache confidence " + fmt("%.6f", best_pair_confidence);
        // Informative only: the reference coherence band.
        const bool in_band = coherence >= 0.25 && coherence <= 0.40;
        std::printf("INFO criterion 7: coherence %.2f %s the reference 0.25-0.40 "
                    "band (informative check, not a gate)\n",
                    coherence, in_band ? "inside" : "outside");

        // The bundled corpus must report 960 dialogues over 24 conditions,
        // and unfiltered mining must surface marker rules.
        const nlohmann::json& stats = j.at("stats");
        ok = ok && stats.at("n_dialogues").get<std::size_t>() == 960 &&
             stats.at("n_conditions").get<std::size_t>() == 24;
        const fs::path raw_rules = g_work / "rules-raw";
        bool marker_rule_seen = false;
        if (run_cli("rules \"" + corpus.string() + "\" -o \"" + raw_rules.string() +
                    "\" --no-marker-filter") == 0) {
            std::ifstream rin(raw_rules / "rules.csv");
            std::string line;
            while (std::getline(rin, line))
                marker_rule_seen = marker_rule_seen ||
                                   line.find("bot") != std::string::npos;
        }
        ok = ok && marker_rule_seen;
    } catch (const std::exception& e) {
        ok = false;
        detail += std::string(", ") + e.what();
    }
    report(7, "end-to-end band replication on the bundled corpus", ok, detail);

    // Criterion 8: byte-identical trees at 1 and 4 threads.
    const fs::path t1 = g_work / "det1";
    const fs::path t4 = g_work / "det4";
    bool det_ok =
        run_cli("run-all \"" + corpus.string() + "\" -o \"" + t1.string() +
                "\" --seed 42 --threads 1") == 0 &&
        run_cli("run-all \"" + corpus.string() + "\" -o \"" + t4.string() +
                "\" --seed 42 --threads 4") == 0;
    std::string det_detail;
    if (det_ok) {
        const auto tree1 = read_tree(t1);
        const auto tree4 = read_tree(t4);
        det_ok = tree1 == tree4 && !tree1.empty();
        det_detail = std::to_string(tree1.size()) + " files compared";
        // And the single-thread rerun must match the criterion-7 run too.
        det_ok = det_ok && read_tree(out1) == tree1;
    } else {
        det_detail = "run-all failed";
    }
    report(8, "identical output trees at 1 and 4 threads", det_ok, det_detail);
}

void criterion_9() {
    const std::vector<TokenizedDoc> docs = {
        {"d1", {"a"}, "x"}, {"d2", {"a"}, "x"}, {"d3", {"b"}, "x"}};
    TfidfConfig cfg;
    cfg.min_df = 1;
    cfg.max_df_ratio = 1.0;
    const Vocabulary vocab = fit_vocabulary(docs, cfg);
    const double idf_a = smoothed_idf(vocab.n_docs,
                                      vocab.doc_frequency[vocab.index_of("a")]);
    const double idf_b = smoothed_idf(vocab.n_docs,
                                      vocab.doc_frequency[vocab.index_of("b")]);
    const bool ok = std::abs(idf_a - (std::log(4.0 / 3.0) + 1.0)) <= 1e-12 &&
                    std::abs(idf_b - (std::log(2.0) + 1.0)) <= 1e-12;
    report(9, "tf-idf three-document idf fixture within 1e-12", ok,
           "idf(a) " + fmt("%.12f", idf_a) + ", idf(b) " + fmt("%.12f", idf_b));
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance <path-to-symmine-cli> [workdir]\n");
        return 2;
    }
    g_cli = argv[1];
    g_work = argc > 2 ? fs::path(argv[2]) : fs::path("acceptance-work");
    fs::remove_all(g_work);
    fs::create_directories(g_work);

    criterion_1_and_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7_and_8();
    criterion_9();

    if (failures) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
