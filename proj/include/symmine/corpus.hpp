// SPDX-License-Identifier: Apache-2.0
//
// Dialogue corpus data model: multi-turn patient/bot exchanges labelled with
// a disease, plus loaders (JSONL, flat CSV), descriptive statistics and a
// deterministic synthetic-corpus generator used as ground truth in tests.

#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace symmine {

enum class Speaker { User, Bot };

struct Turn {
    Speaker speaker = Speaker::User;
    std::string text; // raw, unnormalized; non-empty after trimming

    bool operator==(const Turn&) const = default;
};

struct Dialogue {
    std::string id;
    std::string disease_label;
    std::vector<Turn> turns; // non-empty, first turn is the user

    bool operator==(const Dialogue&) const = default;
};

struct Corpus {
    std::vector<Dialogue> dialogues;
    std::set<std::string> condition_names;

    bool operator==(const Corpus&) const = default;
};

struct CorpusStats {
    std::size_t n_dialogues = 0;
    std::size_t n_conditions = 0;
    double mean_turns = 0.0;
    std::map<std::string, std::size_t> per_condition_counts;

    bool operator==(const CorpusStats&) const = default;
};

struct CoOccurrencePair {
    std::string symptom_a;
    std::string symptom_b;
    // Probability that symptom_b is planted into a dialogue that already
    // mentions symptom_a.
    double joint_probability = 0.0;
};

// Recipe for a synthetic corpus with planted structure. Generation is a pure
// function of the plan: same plan (including seed) yields a byte-identical
// corpus.
struct SynthesisPlan {
    std::size_t n_conditions = 0;
    std::size_t dialogues_per_condition = 0;
    std::size_t turns_per_dialogue = 0;
    std::map<std::string, std::vector<std::string>> condition_vocabularies;
    std::vector<CoOccurrencePair> co_occurrence_pairs;
    std::uint64_t seed = 0;
};

// Throws std::runtime_error describing the first violated invariant.
void validate(const Corpus& corpus);

// JSONL: one dialogue object per line,
//   {"id": "...", "disease": "...", "turns": [{"speaker": "user", "text": "..."}, ...]}
Corpus load_corpus_jsonl(std::istream& in, const std::string& source_name = "<stream>");
Corpus load_corpus_jsonl(const std::string& path);
void write_corpus_jsonl(const Corpus& corpus, std::ostream& out);
void write_corpus_jsonl(const Corpus& corpus, const std::string& path);

// Flat CSV with header `id,disease,text`; the text column carries the whole
// dialogue with case-insensitive `user:` / `bot:` speaker prefixes.
Corpus load_corpus_csv(std::istream& in, const std::string& source_name = "<stream>");
Corpus load_corpus_csv(const std::string& path);
void write_corpus_csv(const Corpus& corpus, std::ostream& out);
void write_corpus_csv(const Corpus& corpus, const std::string& path);

CorpusStats compute_stats(const Corpus& corpus);

Corpus synthesize_corpus(const SynthesisPlan& plan);

// The bundled plan: 24 conditions x 40 dialogues x 15 turns, five symptom
// families, fever->headache planted at joint rate 0.9, seed 42.
SynthesisPlan default_synthesis_plan();

// Plan file: JSON mirroring the SynthesisPlan fields.
SynthesisPlan load_synthesis_plan(const std::string& path);

// Order-sensitive content hash used to detect stage outputs that were
// produced from different corpora.
std::uint64_t corpus_digest(const Corpus& corpus);

} // namespace symmine
