// SPDX-License-Identifier: Apache-2.0

#include "symmine/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "json.hpp"

#include "symmine/csv.hpp"
#include "symmine/rng.hpp"

namespace symmine {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open for reading");
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    return out;
}

const char* speaker_name(Speaker s) { return s == Speaker::User ? "user" : "bot"; }

void validate_dialogue(const Dialogue& d, const std::string& where) {
    if (d.id.empty()) throw std::runtime_error(where + ": empty dialogue id");
    if (d.disease_label.empty())
        throw std::runtime_error(where + ": empty disease label");
    if (d.turns.empty()) throw std::runtime_error(where + ": dialogue has no turns");
    if (d.turns.front().speaker != Speaker::User)
        throw std::runtime_error(where + ": first turn speaker must be user");
    for (const Turn& t : d.turns) {
        if (trim(t.text).empty())
            throw std::runtime_error(where + ": turn text is empty");
    }
}

} // namespace

void validate(const Corpus& corpus) {
    std::unordered_set<std::string> ids;
    for (const Dialogue& d : corpus.dialogues) {
        validate_dialogue(d, "dialogue \"" + d.id + "\"");
        if (!ids.insert(d.id).second)
            throw std::runtime_error("duplicate dialogue id \"" + d.id + "\"");
        if (!corpus.condition_names.count(d.disease_label))
            throw std::runtime_error("dialogue \"" + d.id + "\": disease \"" +
                                     d.disease_label + "\" not in condition set");
    }
    if (corpus.condition_names.empty())
        throw std::runtime_error("corpus has no conditions");
}

// ---------------------------------------------------------------------------
// JSONL
// ---------------------------------------------------------------------------

Corpus load_corpus_jsonl(std::istream& in, const std::string& source_name) {
    Corpus corpus;
    std::unordered_set<std::string> ids;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const std::string where = source_name + ":" + std::to_string(line_no);

        ordered_json j;
        try {
            j = ordered_json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw std::runtime_error(where + ": malformed JSON: " + e.what());
        }
        if (!j.is_object()) throw std::runtime_error(where + ": expected a JSON object");
        for (const char* key : {"id", "disease", "turns"}) {
            if (!j.contains(key))
                throw std::runtime_error(where + ": missing \"" + key + "\"");
        }

        Dialogue d;
        if (!j["id"].is_string() || !j["disease"].is_string() || !j["turns"].is_array())
            throw std::runtime_error(where + ": wrong field type");
        d.id = j["id"].get<std::string>();
        d.disease_label = j["disease"].get<std::string>();
        for (const auto& jt : j["turns"]) {
            if (!jt.is_object() || !jt.contains("speaker") || !jt.contains("text"))
                throw std::runtime_error(where + ": malformed turn");
            const std::string sp = jt["speaker"].get<std::string>();
            Turn t;
            if (sp == "user") t.speaker = Speaker::User;
            else if (sp == "bot") t.speaker = Speaker::Bot;
            else throw std::runtime_error(where + ": unknown speaker \"" + sp + "\"");
            t.text = jt["text"].get<std::string>();
            d.turns.push_back(std::move(t));
        }
        validate_dialogue(d, where);
        if (!ids.insert(d.id).second)
            throw std::runtime_error(where + ": duplicate dialogue id \"" + d.id + "\"");
        corpus.condition_names.insert(d.disease_label);
        corpus.dialogues.push_back(std::move(d));
    }
    if (corpus.dialogues.empty())
        throw std::runtime_error(source_name + ": empty corpus");
    return corpus;
}

Corpus load_corpus_jsonl(const std::string& path) {
    auto in = open_input(path);
    return load_corpus_jsonl(in, path);
}

void write_corpus_jsonl(const Corpus& corpus, std::ostream& out) {
    for (const Dialogue& d : corpus.dialogues) {
        ordered_json j;
        j["id"] = d.id;
        j["disease"] = d.disease_label;
        ordered_json turns = ordered_json::array();
        for (const Turn& t : d.turns)
            turns.push_back({{"speaker", speaker_name(t.speaker)}, {"text", t.text}});
        j["turns"] = std::move(turns);
        out << j.dump() << '\n';
    }
}

void write_corpus_jsonl(const Corpus& corpus, const std::string& path) {
    auto out = open_output(path);
    write_corpus_jsonl(corpus, out);
}

// ---------------------------------------------------------------------------
// Flat CSV (id,disease,text with `user:` / `bot:` prefixes inside text)
// ---------------------------------------------------------------------------

namespace {

struct PrefixHit {
    std::size_t pos = 0;
    std::size_t len = 0;
    Speaker speaker = Speaker::User;
};

bool matches_ci(std::string_view text, std::size_t pos, std::string_view word) {
    if (pos + word.size() > text.size()) return false;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(text[pos + i])) != word[i])
            return false;
    }
    return true;
}

std::vector<PrefixHit> find_speaker_prefixes(std::string_view text) {
    std::vector<PrefixHit> hits;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const bool at_boundary =
            i == 0 || std::isspace(static_cast<unsigned char>(text[i - 1]));
        if (!at_boundary) continue;
        if (matches_ci(text, i, "user:"))
            hits.push_back({i, 5, Speaker::User});
        else if (matches_ci(text, i, "bot:"))
            hits.push_back({i, 4, Speaker::Bot});
    }
    return hits;
}

} // namespace

Corpus load_corpus_csv(std::istream& in, const std::string& source_name) {
    CsvReader reader(in);
    std::vector<std::string> fields;
    if (!reader.next_record(fields))
        throw std::runtime_error(source_name + ": empty corpus");
    if (fields != std::vector<std::string>{"id", "disease", "text"})
        throw std::runtime_error(source_name + ": expected header \"id,disease,text\"");

    Corpus corpus;
    std::unordered_set<std::string> ids;
    while (reader.next_record(fields)) {
        const std::string where =
            source_name + ":" + std::to_string(reader.record_line());
        if (fields.size() != 3)
            throw std::runtime_error(where + ": expected 3 columns, got " +
                                     std::to_string(fields.size()));
        Dialogue d;
        d.id = fields[0];
        d.disease_label = fields[1];
        const std::string& text = fields[2];

        const auto hits = find_speaker_prefixes(text);
        if (hits.empty())
            throw std::runtime_error(where + ": text contains no user:/bot: prefix");
        if (!trim(text.substr(0, hits.front().pos)).empty())
            throw std::runtime_error(where + ": text before first speaker prefix");
        for (std::size_t h = 0; h < hits.size(); ++h) {
            const std::size_t begin = hits[h].pos + hits[h].len;
            const std::size_t end = h + 1 < hits.size() ? hits[h + 1].pos : text.size();
            Turn t;
            t.speaker = hits[h].speaker;
            t.text = trim(std::string_view(text).substr(begin, end - begin));
            d.turns.push_back(std::move(t));
        }
        validate_dialogue(d, where);
        if (!ids.insert(d.id).second)
            throw std::runtime_error(where + ": duplicate dialogue id \"" + d.id + "\"");
        corpus.condition_names.insert(d.disease_label);
        corpus.dialogues.push_back(std::move(d));
    }
    if (corpus.dialogues.empty())
        throw std::runtime_error(source_name + ": empty corpus");
    return corpus;
}

Corpus load_corpus_csv(const std::string& path) {
    auto in = open_input(path);
    return load_corpus_csv(in, path);
}

void write_corpus_csv(const Corpus& corpus, std::ostream& out) {
    out << "id,disease,text\n";
    for (const Dialogue& d : corpus.dialogues) {
        std::string text;
        for (std::size_t i = 0; i < d.turns.size(); ++i) {
            if (i) text += ' ';
            text += speaker_name(d.turns[i].speaker);
            text += ": ";
            text += d.turns[i].text;
        }
        write_csv_row(out, {d.id, d.disease_label, text});
    }
}

void write_corpus_csv(const Corpus& corpus, const std::string& path) {
    auto out = open_output(path);
    write_corpus_csv(corpus, out);
}

// ---------------------------------------------------------------------------
// Statistics
// ---------------------------------------------------------------------------

CorpusStats compute_stats(const Corpus& corpus) {
    if (corpus.dialogues.empty()) throw std::runtime_error("empty corpus");
    CorpusStats stats;
    stats.n_dialogues = corpus.dialogues.size();
    std::size_t total_turns = 0;
    for (const Dialogue& d : corpus.dialogues) {
        total_turns += d.turns.size();
        ++stats.per_condition_counts[d.disease_label];
    }
    stats.n_conditions = stats.per_condition_counts.size();
    stats.mean_turns = static_cast<double>(total_turns) /
                       static_cast<double>(stats.n_dialogues);
    return stats;
}

// ---------------------------------------------------------------------------
// Synthesis
// ---------------------------------------------------------------------------

namespace {

void validate_plan(const SynthesisPlan& plan) {
    if (plan.n_conditions == 0) throw std::runtime_error("plan: n_conditions must be > 0");
    if (plan.n_conditions != plan.condition_vocabularies.size())
        throw std::runtime_error("plan: n_conditions does not match vocabulary count");
    if (plan.dialogues_per_condition == 0)
        throw std::runtime_error("plan: dialogues_per_condition must be > 0");
    if (plan.turns_per_dialogue == 0)
        throw std::runtime_error("plan: turns_per_dialogue must be > 0");
    for (const auto& [cond, vocab] : plan.condition_vocabularies) {
        if (vocab.empty())
            throw std::runtime_error("plan: empty vocabulary for condition \"" + cond + "\"");
    }
    for (const auto& p : plan.co_occurrence_pairs) {
        if (p.joint_probability < 0.0 || p.joint_probability > 1.0)
            throw std::runtime_error("plan: joint_probability out of [0,1] for pair " +
                                     p.symptom_a + "/" + p.symptom_b);
    }
}

// Bot turns rotate through every template so that with enough turns each
// template's wording occurs in every dialogue; the tf-idf max_df cutoff then
// removes the filler words automatically.
const char* kBotTemplates[] = {
    "I see. How long has this been going on?",
    "Thank you for telling me. When did it start?",
    "Understood. Does anything make it better or worse?",
    "That sounds uncomfortable. Have you noticed anything else?",
    "Noted. How severe would you say it is right now?",
};

std::string make_user_turn(std::size_t ordinal, const std::vector<std::string>& vocab,
                           Rng& rng, std::set<std::string>& sampled) {
    const std::size_t n = vocab.size();
    auto pick = [&](std::size_t avoid, bool has_avoid) {
        std::size_t idx = rng.uniform_index(n);
        if (has_avoid && idx == avoid && n > 1) idx = (idx + 1) % n;
        sampled.insert(vocab[idx]);
        return idx;
    };
    switch (ordinal % 6) {
        case 0: return "I have " + vocab[pick(0, false)] + ".";
        case 1: {
            const std::size_t a = pick(0, false);
            const std::size_t b = pick(a, true);
            return "I have been dealing with " + vocab[a] + " and " + vocab[b] +
                   " lately.";
        }
        case 2: return "Yes, the " + vocab[pick(0, false)] + " is still there.";
        case 3: return "It feels like the " + vocab[pick(0, false)] + " again today.";
        case 4: {
            const std::size_t a = pick(0, false);
            const std::size_t b = pick(a, true);
            return "No, but I have noticed " + vocab[a] + " and " + vocab[b] +
                   " as well.";
        }
        default: return "The " + vocab[pick(0, false)] + " seems to be getting worse.";
    }
}

} // namespace

Corpus synthesize_corpus(const SynthesisPlan& plan) {
    validate_plan(plan);
    Corpus corpus;
    for (const auto& [cond, vocab] : plan.condition_vocabularies) {
        corpus.condition_names.insert(cond);
        for (std::size_t i = 0; i < plan.dialogues_per_condition; ++i) {
            char suffix[16];
            std::snprintf(suffix, sizeof suffix, "-%04zu", i + 1);
            Dialogue d;
            d.id = cond + suffix;
            d.disease_label = cond;

            Rng rng(derive_seed(plan.seed, d.id));
            std::set<std::string> sampled;
            std::vector<std::size_t> user_turn_indices;
            std::size_t user_ordinal = 0, bot_ordinal = 0;
            for (std::size_t t = 0; t < plan.turns_per_dialogue; ++t) {
                Turn turn;
                if (t % 2 == 0) {
                    turn.speaker = Speaker::User;
                    turn.text = make_user_turn(user_ordinal++, vocab, rng, sampled);
                    user_turn_indices.push_back(d.turns.size());
                } else {
                    turn.speaker = Speaker::Bot;
                    turn.text = kBotTemplates[bot_ordinal++ % std::size(kBotTemplates)];
                }
                d.turns.push_back(std::move(turn));
            }
            for (const auto& pair : plan.co_occurrence_pairs) {
                if (!sampled.count(pair.symptom_a)) continue;
                if (!rng.bernoulli(pair.joint_probability)) continue;
                const std::size_t slot =
                    user_turn_indices[rng.uniform_index(user_turn_indices.size())];
                d.turns[slot].text += " Also, I have " + pair.symptom_b + " now.";
                sampled.insert(pair.symptom_b);
            }
            corpus.dialogues.push_back(std::move(d));
        }
    }
    return corpus;
}

SynthesisPlan default_synthesis_plan() {
    SynthesisPlan plan;
    plan.n_conditions = 24;
    plan.dialogues_per_condition = 40;
    plan.turns_per_dialogue = 15;
    plan.seed = 42;
    // Five symptom families with disjoint word sets. Conditions inside a
    // family share the family core plus one or two specific symptoms, so
    // clusters and topics both line up with the families. fever-conditions
    // never list headache (and vice versa); the planted pair below is the
    // only cross-family co-occurrence.
    plan.condition_vocabularies = {
        // respiratory (core: cough, sore throat, runny nose, congestion, sneezing)
        {"allergy", {"cough", "sore throat", "runny nose", "congestion", "sneezing", "itchy eyes", "watery eyes"}},
        {"asthma", {"cough", "sore throat", "runny nose", "congestion", "sneezing", "wheezing", "shortness of breath"}},
        {"flu", {"cough", "sore throat", "runny nose", "congestion", "sneezing", "hoarseness"}},
        {"common_cold", {"cough", "sore throat", "runny nose", "congestion", "sneezing"}},
        {"sinusitis", {"cough", "sore throat", "runny nose", "congestion", "sneezing", "sinus pressure", "facial pain"}},
        {"bronchitis", {"cough", "sore throat", "runny nose", "congestion", "sneezing", "wheezing", "chest tightness"}},
        // febrile (core: fever, chills, weakness, sweating)
        {"malaria", {"fever", "chills", "weakness", "sweating", "shivering"}},
        {"typhoid", {"fever", "chills", "weakness", "sweating", "high temperature"}},
        {"dengue", {"fever", "chills", "weakness", "sweating", "muscle pain", "body aches"}},
        {"chickenpox", {"fever", "chills", "weakness", "sweating", "blisters"}},
        {"pneumonia", {"fever", "chills", "weakness", "sweating", "chest pain"}},
        // gastrointestinal (core: nausea, vomiting, stomach pain)
        {"gastroenteritis", {"nausea", "vomiting", "stomach pain", "diarrhea", "cramps"}},
        {"food_poisoning", {"nausea", "vomiting", "stomach pain", "diarrhea", "cramps"}},
        {"gastritis", {"nausea", "vomiting", "stomach pain", "heartburn", "bloating"}},
        {"jaundice", {"nausea", "vomiting", "stomach pain", "yellow skin", "yellow urine"}},
        // skin (core: itching, rash, dry skin)
        {"psoriasis", {"itching", "rash", "dry skin", "scaly patches", "patches"}},
        {"eczema", {"itching", "rash", "dry skin", "red patches"}},
        {"acne", {"itching", "rash", "dry skin", "pimples", "oily skin", "blackheads"}},
        {"fungal_infection", {"itching", "rash", "dry skin", "white patches"}},
        // chronic / systemic (core: fatigue, dizziness)
        {"diabetes", {"fatigue", "dizziness", "increased thirst", "frequent urination", "blurred vision"}},
        {"hypertension", {"fatigue", "dizziness", "palpitations", "nosebleeds", "headache"}},
        {"migraine", {"fatigue", "dizziness", "headache", "sensitivity to light", "blurred vision"}},
        {"arthritis", {"fatigue", "dizziness", "joint pain", "stiffness", "swelling"}},
        {"anemia", {"fatigue", "dizziness", "pale skin", "cold hands"}},
    };
    plan.co_occurrence_pairs = {{"fever", "headache", 0.9}};
    return plan;
}

SynthesisPlan load_synthesis_plan(const std::string& path) {
    auto in = open_input(path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(path + ": malformed JSON: " + e.what());
    }
    SynthesisPlan plan;
    plan.n_conditions = j.at("n_conditions").get<std::size_t>();
    plan.dialogues_per_condition = j.at("dialogues_per_condition").get<std::size_t>();
    plan.turns_per_dialogue = j.at("turns_per_dialogue").get<std::size_t>();
    if (j.contains("seed")) plan.seed = j["seed"].get<std::uint64_t>();
    for (const auto& [cond, words] : j.at("condition_vocabularies").items())
        plan.condition_vocabularies[cond] = words.get<std::vector<std::string>>();
    if (j.contains("co_occurrence_pairs")) {
        for (const auto& p : j["co_occurrence_pairs"]) {
            plan.co_occurrence_pairs.push_back(
                {p.at(0).get<std::string>(), p.at(1).get<std::string>(),
                 p.at(2).get<double>()});
        }
    }
    validate_plan(plan);
    return plan;
}

std::uint64_t corpus_digest(const Corpus& corpus) {
    std::uint64_t h = 1469598103934665603ull;
    auto feed = [&h](std::string_view s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= 0x1f; // field separator
        h *= 1099511628211ull;
    };
    for (const Dialogue& d : corpus.dialogues) {
        feed(d.id);
        feed(d.disease_label);
        for (const Turn& t : d.turns) {
            feed(speaker_name(t.speaker));
            feed(t.text);
        }
    }
    return h;
}

} // namespace symmine
