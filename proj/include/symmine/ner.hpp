// SPDX-License-Identifier: Apache-2.0
//
// Symptom entity extraction with a gazetteer: canonical symptoms mapped to
// lemmatized surface phrases, matched left-to-right longest-first over
// preprocessed tokens.

#pragma once

#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "symmine/preprocess.hpp"

namespace symmine {

class SymptomLexicon {
public:
    // Adds one canonical/surface pair. The surface is normalized through the
    // token pipeline (lowercase, punctuation stripped, stop words removed,
    // lemmatized). Throws if the normalized surface is empty or already maps
    // to a different canonical.
    void add(const std::string& canonical, const std::string& surface,
             const PreprocessConfig& cfg, const LemmaLexicon& lemmas);

    const std::map<std::string, std::set<std::vector<std::string>>>& entries() const {
        return entries_;
    }
    bool empty() const { return entries_.empty(); }

    // Longest phrase starting at tokens[pos]; returns (length, canonical) or
    // length 0 when nothing matches.
    std::pair<std::size_t, const std::string*> longest_match(
        const std::vector<std::string>& tokens, std::size_t pos) const;

private:
    std::map<std::string, std::set<std::vector<std::string>>> entries_;
    // first token -> phrases sorted longest-first (ties lexicographic)
    std::unordered_map<std::string, std::vector<std::pair<std::vector<std::string>,
                                                          std::string>>> index_;
};

// File of lines `canonical<TAB>surface phrase`. Surfaces are normalized with
// the given config so they live in the same token space as the documents.
SymptomLexicon load_lexicon(const std::string& path, const PreprocessConfig& cfg,
                            const LemmaLexicon& lemmas);
SymptomLexicon load_lexicon(const std::string& path);

// Bundled gazetteer: 70+ symptoms spanning the usual chatbot conditions,
// plus the conversational markers (user, bot, yes, no) so that unfiltered
// rule mining can reproduce marker rules.
SymptomLexicon make_default_lexicon(const PreprocessConfig& cfg,
                                    const LemmaLexicon& lemmas);
const SymptomLexicon& default_symptom_lexicon();

struct EntitySpan {
    std::string canonical;
    std::vector<std::string> surface; // matched token subsequence
    std::string dialogue_id;
    std::size_t token_start = 0;
    std::size_t token_end = 0; // exclusive

    bool operator==(const EntitySpan&) const = default;
};

// Non-overlapping spans ordered by token_start.
std::vector<EntitySpan> extract_entities(const TokenizedDoc& doc,
                                         const SymptomLexicon& lexicon);

// Per-dialogue deduplicated canonical sets, in document order. Dialogues
// without any hit keep an empty entry.
std::vector<std::pair<std::string, std::set<std::string>>> entity_profile(
    const std::vector<TokenizedDoc>& docs, const SymptomLexicon& lexicon);

} // namespace symmine
