// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"

#include <algorithm>

#include "symmine/corpus.hpp"
#include "symmine/ner.hpp"
#include "test_util.hpp"

using namespace symmine;
using test_util::expect_error;

namespace {

SymptomLexicon lexicon_of(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
    SymptomLexicon lex;
    const PreprocessConfig cfg = default_preprocess_config();
    for (const auto& [canonical, surface] : pairs)
        lex.add(canonical, surface, cfg, default_lemma_lexicon());
    return lex;
}

TokenizedDoc doc_of(std::vector<std::string> tokens) {
    TokenizedDoc d;
    d.dialogue_id = "d1";
    d.disease_label = "x";
    d.tokens = std::move(tokens);
    return d;
}

} // namespace

TEST_CASE("lexicon files: one canonical, several surfaces") {
    const auto path = test_util::write_file(
        "lexicon.tsv",
        "nasal congestion\tcongested nose\nnasal congestion\tstuffy nose\n");
    const SymptomLexicon lex = load_lexicon(path.string());
    REQUIRE(lex.entries().size() == 1);
    CHECK(lex.entries().at("nasal congestion").size() == 2);
}

TEST_CASE("lexicon files: conflicting canonicals are rejected by phrase") {
    const auto path = test_util::write_file("lexicon_conflict.tsv",
                                            "chill\tchills\nfever\tchills\n");
    expect_error([&] { load_lexicon(path.string()); }, "chill");
}

TEST_CASE("lexicon files: empty file is an error") {
    const auto path = test_util::write_file("lexicon_empty.tsv", "");
    expect_error([&] { load_lexicon(path.string()); }, "empty lexicon");
}

TEST_CASE("bundled lexicon loads cleanly and covers the catalogue") {
    const SymptomLexicon& lex = default_symptom_lexicon();
    // 70+ symptoms plus the four conversational markers.
    CHECK(lex.entries().size() >= 64);
    for (const char* canonical :
         {"fever", "headache", "rash", "itching", "sneezing", "cough",
          "sore throat", "chills", "joint pain", "nosebleed", "diarrhea",
          "swelling", "varicose veins", "yellow urine", "blisters",
          "chest pain", "user", "bot", "yes", "no"})
        CHECK_MESSAGE(lex.entries().count(canonical), canonical);
}

TEST_CASE("extraction walks left to right over lemmatized tokens") {
    const SymptomLexicon lex = lexicon_of(
        {{"sneezing", "sneeze"}, {"nasal congestion", "nose congest"}});
    const TokenizedDoc doc =
        doc_of({"user", "ive", "sneeze", "lot", "today", "nose", "congest"});
    const auto spans = extract_entities(doc, lex);
    REQUIRE(spans.size() == 2);
    CHECK(spans[0].canonical == "sneezing");
    CHECK(spans[0].token_start == 2);
    CHECK(spans[0].token_end == 3);
    CHECK(spans[1].canonical == "nasal congestion");
    CHECK(spans[1].token_start == 5);
    CHECK(spans[1].token_end == 7);
    CHECK(spans[1].surface == std::vector<std::string>{"nose", "congest"});
}

TEST_CASE("empty documents yield no spans") {
    const SymptomLexicon lex = lexicon_of({{"fever", "fever"}});
    CHECK(extract_entities(doc_of({}), lex).empty());
}

TEST_CASE("longest match wins over a nested phrase") {
    const SymptomLexicon lex =
        lexicon_of({{"throat", "throat"}, {"sore throat", "sore throat"}});
    const auto spans = extract_entities(doc_of({"sore", "throat"}), lex);
    REQUIRE(spans.size() == 1);
    CHECK(spans[0].canonical == "sore throat");
    CHECK(spans[0].token_start == 0);
    CHECK(spans[0].token_end == 2);
}

TEST_CASE("profiles deduplicate canonicals per dialogue") {
    const SymptomLexicon lex =
        lexicon_of({{"fever", "fever"}, {"headache", "headache"}});
    const std::vector<TokenizedDoc> docs = {
        doc_of({"fever", "bad", "fever", "headache"})};
    const auto profiles = entity_profile(docs, lex);
    REQUIRE(profiles.size() == 1);
    CHECK(profiles[0].second == std::set<std::string>{"fever", "headache"});
}

TEST_CASE("dialogues without hits keep an empty entry") {
    const SymptomLexicon lex = lexicon_of({{"fever", "fever"}});
    const auto profiles = entity_profile({doc_of({"hello", "there"})}, lex);
    REQUIRE(profiles.size() == 1);
    CHECK(profiles[0].second.empty());
}

TEST_CASE("planted co-occurrence survives the whole extraction path") {
    SynthesisPlan plan;
    plan.n_conditions = 2;
    plan.dialogues_per_condition = 100;
    plan.turns_per_dialogue = 15;
    plan.seed = 19;
    plan.condition_vocabularies = {
        {"febrile", {"fever", "chills", "sweating"}},
        {"neuro", {"headache", "dizziness"}},
    };
    plan.co_occurrence_pairs = {{"fever", "headache", 0.9}};
    const Corpus corpus = synthesize_corpus(plan);

    const PreprocessConfig cfg = default_preprocess_config();
    std::vector<TokenizedDoc> docs;
    for (const Dialogue& d : corpus.dialogues)
        docs.push_back(preprocess_dialogue(d, cfg));
    const auto profiles = entity_profile(docs, default_symptom_lexicon());

    std::size_t with_fever = 0, with_both = 0;
    for (const auto& [id, symptoms] : profiles) {
        if (!symptoms.count("fever")) continue;
        ++with_fever;
        with_both += symptoms.count("headache");
    }
    REQUIRE(with_fever > 0);
    const double joint =
        static_cast<double>(with_both) / static_cast<double>(with_fever);
    CHECK(joint >= 0.84);
    CHECK(joint <= 0.96);
}

TEST_CASE("spans are sorted, non-overlapping and re-match their canonicals") {
    SynthesisPlan plan = default_synthesis_plan();
    plan.dialogues_per_condition = 4;
    const Corpus corpus = synthesize_corpus(plan);
    const PreprocessConfig cfg = default_preprocess_config();
    const SymptomLexicon& lex = default_symptom_lexicon();
    for (const Dialogue& d : corpus.dialogues) {
        const TokenizedDoc doc = preprocess_dialogue(d, cfg);
        const auto spans = extract_entities(doc, lex);
        std::size_t prev_end = 0;
        for (const EntitySpan& span : spans) {
            CHECK(span.token_start >= prev_end);
            CHECK(span.token_start < span.token_end);
            CHECK(span.token_end <= doc.tokens.size());
            prev_end = span.token_end;
            CHECK(std::equal(span.surface.begin(), span.surface.end(),
                             doc.tokens.begin() + span.token_start));
            CHECK(lex.entries().at(span.canonical).count(span.surface));
        }
    }
}

TEST_CASE("bot-turn templating does not change entity profiles") {
    SynthesisPlan plan = default_synthesis_plan();
    plan.dialogues_per_condition = 5;
    Corpus corpus = synthesize_corpus(plan);

    const PreprocessConfig cfg = default_preprocess_config();
    const SymptomLexicon& lex = default_symptom_lexicon();
    std::vector<TokenizedDoc> docs;
    for (const Dialogue& d : corpus.dialogues)
        docs.push_back(preprocess_dialogue(d, cfg));
    const auto before = entity_profile(docs, lex);

    // Replace every bot turn with different non-lexicon wording.
    for (Dialogue& d : corpus.dialogues)
        for (Turn& t : d.turns)
            if (t.speaker == Speaker::Bot) t.text = "Please continue, go on.";
    docs.clear();
    for (const Dialogue& d : corpus.dialogues)
        docs.push_back(preprocess_dialogue(d, cfg));
    const auto after = entity_profile(docs, lex);
    CHECK(before == after);
}

TEST_CASE("marker tokens are extracted as entities") {
    const SymptomLexicon& lex = default_symptom_lexicon();
    const auto spans = extract_entities(doc_of({"user", "fever", "bot", "yes"}), lex);
    REQUIRE(spans.size() == 4);
    CHECK(spans[0].canonical == "user");
    CHECK(spans[1].canonical == "fever");
    CHECK(spans[2].canonical == "bot");
    CHECK(spans[3].canonical == "yes");
}
