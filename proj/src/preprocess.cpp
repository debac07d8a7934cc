// SPDX-License-Identifier: Apache-2.0

#include "symmine/preprocess.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>

namespace symmine {

namespace {

// Fixed stop-word list, version 1. Contraction collapses ("ive", "dont")
// appear because apostrophes are deleted before tokenization.
const char* kStopwords[] = {
    "a", "about", "above", "after", "again", "against", "all", "am", "an",
    "and", "any", "are", "arent", "as", "at", "be", "because", "been",
    "before", "being", "below", "between", "both", "but", "by", "cannot",
    "cant", "could", "couldnt", "did", "didnt", "do", "does", "doesnt",
    "doing", "dont", "down", "during", "each", "few", "for", "from",
    "further", "had", "hadnt", "has", "hasnt", "have", "havent", "having",
    "he", "her", "here", "heres", "hers", "herself", "him", "himself",
    "his", "how", "i", "id", "if", "im", "in", "into", "is", "isnt",
    "it", "its", "itself", "ive", "me", "more", "most",
    "my", "myself", "nor", "not", "of", "off", "on", "once", "only", "or",
    "other", "our", "ours", "ourselves", "out", "over", "own",
    "same", "she", "shed", "shes", "should", "shouldnt", "so",
    "some", "such", "than", "that", "thats", "the", "their", "theirs",
    "them", "themselves", "then", "there", "theres", "these", "they",
    "theyd", "theyll", "theyre", "theyve", "this", "those", "through", "to",
    "too", "under", "until", "up", "very", "was", "wasnt", "we",
    "were", "werent", "weve", "what", "whats", "when", "where",
    "wheres", "which", "while", "who", "whom", "whos", "why", "with",
    "wont", "would", "wouldnt", "you", "youd", "youll", "your", "youre",
    "yours", "yourself", "yourselves", "youve",
};

// Irregular forms and -es plurals the suffix rules would mangle, plus
// silent-e stems reached by the -ing rule (aching -> "ach" -> "ache").
// Every value must be a fixed point of lemmatize_token.
const char* kLemmaPairs[][2] = {
    // irregular inflection
    {"feet", "foot"}, {"teeth", "tooth"}, {"children", "child"},
    {"men", "man"}, {"women", "woman"}, {"mice", "mouse"},
    {"worse", "bad"}, {"worst", "bad"}, {"better", "good"}, {"best", "good"},
    {"felt", "feel"}, {"ran", "run"}, {"ate", "eat"}, {"lost", "lose"},
    {"swollen", "swell"}, {"getting", "get"}, {"got", "get"},
    {"went", "go"}, {"came", "come"}, {"threw", "throw"},
    // -es plurals of silent-e nouns (the -ses/-zes rule would drop the e)
    {"diseases", "disease"}, {"noses", "nose"}, {"sneezes", "sneeze"},
    {"wheezes", "wheeze"}, {"causes", "cause"}, {"doses", "dose"},
    {"pulses", "pulse"}, {"nurses", "nurse"}, {"bruises", "bruise"},
    {"senses", "sense"}, {"houses", "house"},
    // s-final nouns the -s rule would clip
    {"series", "series"}, {"virus", "virus"}, {"viruses", "virus"},
    {"sinus", "sinus"}, {"sinuses", "sinus"}, {"mucus", "mucus"},
    {"diabetes", "diabetes"}, {"rabies", "rabies"}, {"measles", "measles"},
    {"lens", "lens"}, {"lenses", "lens"},
    // common clinical -ed forms (there is no general -ed rule)
    {"vomited", "vomit"}, {"fainted", "faint"}, {"swelled", "swell"},
    {"coughed", "cough"}, {"sneezed", "sneeze"}, {"wheezed", "wheeze"},
    {"ached", "ache"}, {"itched", "itch"}, {"cramped", "cramp"},
    {"bloated", "bloat"}, {"started", "start"}, {"noticed", "notice"},
    // silent-e stems for the -ing rule
    {"sneez", "sneeze"}, {"wheez", "wheeze"}, {"ach", "ache"},
    {"tingl", "tingle"}, {"urinat", "urinate"}, {"rac", "race"},
    {"los", "lose"}, {"bulg", "bulge"}, {"caus", "cause"},
    {"puls", "pulse"}, {"snor", "snore"}, {"com", "come"},
};

bool is_clean_entry(const std::string& s) {
    if (s.empty()) return false;
    for (unsigned char c : s) {
        if (std::isupper(c)) return false;
        if (std::isalnum(c) || c >= 0x80) continue;
        return false;
    }
    return true;
}

bool ends_with(const std::string& s, std::string_view suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

} // namespace

const std::set<std::string>& default_stopwords() {
    static const std::set<std::string> words(std::begin(kStopwords),
                                             std::end(kStopwords));
    return words;
}

std::set<std::string> load_stopwords(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open for reading");
    std::set<std::string> words;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
            line.pop_back();
        std::size_t b = 0;
        while (b < line.size() && std::isspace(static_cast<unsigned char>(line[b]))) ++b;
        line = line.substr(b);
        if (line.empty()) continue;
        if (!is_clean_entry(line))
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": stop word must be lowercase and "
                                     "punctuation-free: \"" + line + "\"");
        words.insert(line);
    }
    return words;
}

const LemmaLexicon& default_lemma_lexicon() {
    static const LemmaLexicon lexicon = [] {
        LemmaLexicon lex;
        for (const auto& pair : kLemmaPairs) lex.map[pair[0]] = pair[1];
        return lex;
    }();
    return lexicon;
}

LemmaLexicon load_lemma_lexicon(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open for reading");
    LemmaLexicon lex;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": expected `surface<TAB>lemma`");
        const std::string surface = line.substr(0, tab);
        const std::string lemma = line.substr(tab + 1);
        if (!is_clean_entry(surface) || !is_clean_entry(lemma))
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": entries must be lowercase and "
                                     "punctuation-free");
        lex.map[surface] = lemma;
    }
    return lex;
}

PreprocessConfig default_preprocess_config() {
    PreprocessConfig cfg;
    cfg.stopwords = default_stopwords();
    return cfg;
}

namespace {

std::string lemmatize_once(const std::string& token, const LemmaLexicon& lexicon) {
    const auto hit = lexicon.map.find(token);
    if (hit != lexicon.map.end()) return hit->second;

    const std::size_t n = token.size();
    if (ends_with(token, "ies") && n > 4)
        return token.substr(0, n - 3) + "y";
    // -aches words ("headaches") pluralize with a bare -s; skip the -es
    // family for them so the silent e survives.
    if (!ends_with(token, "aches")) {
        for (std::string_view suffix : {"ches", "shes", "xes", "ses", "zes"}) {
            if (ends_with(token, suffix)) return token.substr(0, n - 2);
        }
    }
    if (ends_with(token, "s") && n > 3 && !ends_with(token, "ss"))
        return token.substr(0, n - 1);
    if (ends_with(token, "ing") && n >= 6) {
        const std::string stem = token.substr(0, n - 3);
        const auto restore = lexicon.map.find(stem);
        return restore != lexicon.map.end() ? restore->second : stem;
    }
    return token;
}

} // namespace

std::string lemmatize_token(const std::string& token, const LemmaLexicon& lexicon) {
    // Iterate to a fixed point: every returned lemma is itself stable, which
    // makes lemmatization idempotent on arbitrary strings. Suffix passes
    // strictly shrink the token; the iteration cap only guards against
    // pathological user lexicons with mapping cycles.
    std::string current = token;
    for (int pass = 0; pass < 16; ++pass) {
        std::string next = lemmatize_once(current, lexicon);
        if (next == current) break;
        current = std::move(next);
    }
    return current;
}

std::string lemmatize_token(const std::string& token) {
    return lemmatize_token(token, default_lemma_lexicon());
}

std::vector<std::string> tokenize_text(const std::string& text,
                                       const PreprocessConfig& cfg,
                                       const LemmaLexicon& lexicon) {
    // Pass 1: delete apostrophes ("I've" -> "Ive"), lowercase.
    std::string norm;
    norm.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (c == '\'') continue;
        if (c == 0xE2 && i + 2 < text.size() &&
            static_cast<unsigned char>(text[i + 1]) == 0x80 &&
            static_cast<unsigned char>(text[i + 2]) == 0x99) {
            i += 2; // U+2019 right single quotation mark
            continue;
        }
        norm.push_back(cfg.lowercase ? static_cast<char>(std::tolower(c))
                                     : static_cast<char>(c));
    }

    // Pass 2: split. With strip_punctuation, anything that is not
    // alphanumeric (or a UTF-8 continuation byte) separates tokens;
    // otherwise only whitespace does.
    std::vector<std::string> tokens;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        if (!cfg.stopwords.count(cur)) {
            tokens.push_back(cfg.lemmatize ? lemmatize_token(cur, lexicon) : cur);
        }
        cur.clear();
    };
    for (unsigned char c : norm) {
        const bool word_char = std::isalnum(c) || c >= 0x80;
        const bool separator =
            cfg.strip_punctuation ? !word_char : std::isspace(c) != 0;
        if (separator) flush();
        else cur.push_back(static_cast<char>(c));
    }
    flush();
    return tokens;
}

TokenizedDoc preprocess_dialogue(const Dialogue& dialogue,
                                 const PreprocessConfig& cfg,
                                 const LemmaLexicon& lexicon) {
    TokenizedDoc doc;
    doc.dialogue_id = dialogue.id;
    doc.disease_label = dialogue.disease_label;
    for (const Turn& turn : dialogue.turns) {
        if (cfg.insert_role_markers)
            doc.tokens.push_back(turn.speaker == Speaker::User ? "user" : "bot");
        auto words = tokenize_text(turn.text, cfg, lexicon);
        doc.tokens.insert(doc.tokens.end(), words.begin(), words.end());
    }
    return doc;
}

TokenizedDoc preprocess_dialogue(const Dialogue& dialogue,
                                 const PreprocessConfig& cfg) {
    return preprocess_dialogue(dialogue, cfg, default_lemma_lexicon());
}

} // namespace symmine
