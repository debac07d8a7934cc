// SPDX-License-Identifier: Apache-2.0
//
// Dialogue normalization: speaker-marker insertion, lowercasing, punctuation
// stripping, stop-word removal and rule+lexicon lemmatization.

#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "symmine/corpus.hpp"

namespace symmine {

struct PreprocessConfig {
    bool lowercase = true;
    bool strip_punctuation = true;
    std::set<std::string> stopwords; // entries lowercase and punctuation-free
    bool lemmatize = true;
    bool insert_role_markers = true;
};

// Config with the bundled stop-word list filled in.
PreprocessConfig default_preprocess_config();

struct TokenizedDoc {
    std::string dialogue_id;
    std::vector<std::string> tokens;
    std::string disease_label;

    bool operator==(const TokenizedDoc&) const = default;
};

// Exception lookup used before the suffix rules, plus silent-e restoration
// for -ing forms: dropping "ing" yields a stem that is looked up in the same
// table ("sneez" -> "sneeze").
struct LemmaLexicon {
    std::map<std::string, std::string> map;
};

const LemmaLexicon& default_lemma_lexicon();

// File of lines `surface<TAB>lemma`.
LemmaLexicon load_lemma_lexicon(const std::string& path);

// Bundled list of ~150 common English function words. Deliberately keeps
// `user`, `bot`, `yes`, `no` and `ill` out: the first four are conversational
// markers filtered later during rule mining, `ill` collides with the
// sickness adjective.
const std::set<std::string>& default_stopwords();

// File of one entry per line; entries must be lowercase and punctuation-free.
std::set<std::string> load_stopwords(const std::string& path);

std::string lemmatize_token(const std::string& token, const LemmaLexicon& lexicon);
std::string lemmatize_token(const std::string& token);

// Normalizes free text into tokens: apostrophes deleted, lowercased,
// punctuation stripped to spaces, split on whitespace, stop words dropped,
// lemmatized. No role markers (those belong to whole-dialogue processing).
std::vector<std::string> tokenize_text(const std::string& text,
                                       const PreprocessConfig& cfg,
                                       const LemmaLexicon& lexicon);

TokenizedDoc preprocess_dialogue(const Dialogue& dialogue,
                                 const PreprocessConfig& cfg,
                                 const LemmaLexicon& lexicon);
TokenizedDoc preprocess_dialogue(const Dialogue& dialogue,
                                 const PreprocessConfig& cfg);

} // namespace symmine
