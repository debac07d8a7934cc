// SPDX-License-Identifier: Apache-2.0

#include "symmine/ner.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace symmine {

namespace {

std::string join_tokens(const std::vector<std::string>& tokens) {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) out += ' ';
        out += tokens[i];
    }
    return out;
}

// canonical, surface. Surfaces are written in natural form and normalized
// through the token pipeline when the lexicon is built, so inflected
// variants collapse onto the same phrase. The four conversational markers
// at the end mirror what a naive NER extracts from chatbot text; rule
// mining filters them by default.
const char* kDefaultLexicon[][2] = {
    {"fever", "fever"}, {"fever", "high temperature"}, {"fever", "feverish"},
    {"chills", "chills"}, {"chills", "shivering"}, {"chills", "shivers"},
    {"headache", "headache"}, {"headache", "headaches"}, {"headache", "head pain"},
    {"sneezing", "sneezing"}, {"sneezing", "sneeze"}, {"sneezing", "sneezes"},
    {"nasal congestion", "congestion"}, {"nasal congestion", "congested"},
    {"nasal congestion", "stuffy nose"}, {"nasal congestion", "blocked nose"},
    {"runny nose", "runny nose"},
    {"cough", "cough"}, {"cough", "coughing"}, {"cough", "dry cough"},
    {"sore throat", "sore throat"}, {"sore throat", "throat pain"},
    {"sore throat", "scratchy throat"},
    {"itching", "itching"}, {"itching", "itchy"}, {"itching", "itchiness"},
    {"itching", "itches"},
    {"rash", "rash"}, {"rash", "rashes"}, {"rash", "skin rash"},
    {"swelling", "swelling"}, {"swelling", "swollen"},
    {"joint pain", "joint pain"}, {"joint pain", "painful joints"},
    {"joint pain", "joints ache"},
    {"muscle pain", "muscle pain"}, {"muscle pain", "sore muscles"},
    {"muscle pain", "muscle aches"},
    {"chest pain", "chest pain"}, {"chest pain", "chest tightness"},
    {"chest pain", "tight chest"},
    {"shortness of breath", "shortness of breath"},
    {"shortness of breath", "breathless"},
    {"shortness of breath", "breathlessness"},
    {"wheezing", "wheezing"}, {"wheezing", "wheeze"}, {"wheezing", "wheezes"},
    {"fatigue", "fatigue"}, {"fatigue", "tired"}, {"fatigue", "tiredness"},
    {"fatigue", "exhausted"}, {"fatigue", "exhaustion"},
    {"dizziness", "dizziness"}, {"dizziness", "dizzy"}, {"dizziness", "lightheaded"},
    {"nausea", "nausea"}, {"nausea", "nauseous"}, {"nausea", "queasy"},
    {"vomiting", "vomiting"}, {"vomiting", "vomit"},
    {"diarrhea", "diarrhea"}, {"diarrhea", "loose stools"},
    {"diarrhea", "loose motions"},
    {"stomach pain", "stomach pain"}, {"stomach pain", "stomach ache"},
    {"stomach pain", "tummy ache"}, {"stomach pain", "abdominal pain"},
    {"loss of appetite", "loss of appetite"}, {"loss of appetite", "no appetite"},
    {"loss of appetite", "poor appetite"},
    {"weight loss", "weight loss"}, {"weight loss", "losing weight"},
    {"weight loss", "lost weight"},
    {"night sweats", "night sweats"},
    {"sweating", "sweating"}, {"sweating", "sweats"},
    {"sweating", "excessive sweating"},
    {"itchy eyes", "itchy eyes"},
    {"watery eyes", "watery eyes"},
    {"swollen eyes", "swollen eyes"}, {"swollen eyes", "puffy eyes"},
    {"red eyes", "red eyes"}, {"red eyes", "eye redness"},
    {"blurred vision", "blurred vision"}, {"blurred vision", "blurry vision"},
    {"sensitivity to light", "sensitivity to light"},
    {"sensitivity to light", "light sensitivity"},
    {"nosebleed", "nosebleed"}, {"nosebleed", "nosebleeds"},
    {"nosebleed", "nose bleeding"}, {"nosebleed", "bleeding nose"},
    {"sinus pressure", "sinus pressure"}, {"sinus pressure", "sinus pain"},
    {"facial pain", "facial pain"}, {"facial pain", "face pain"},
    {"ear pain", "ear pain"}, {"ear pain", "earache"},
    {"tooth pain", "tooth pain"}, {"tooth pain", "toothache"},
    {"yellow skin", "yellow skin"}, {"yellow skin", "yellowish skin"},
    {"yellow skin", "skin yellowing"},
    {"yellow urine", "yellow urine"}, {"yellow urine", "dark urine"},
    {"frequent urination", "frequent urination"},
    {"painful urination", "painful urination"},
    {"painful urination", "burning urination"},
    {"increased thirst", "increased thirst"},
    {"increased thirst", "excessive thirst"}, {"increased thirst", "thirsty"},
    {"increased hunger", "increased hunger"},
    {"increased hunger", "excessive hunger"}, {"increased hunger", "hungry"},
    {"numbness", "numbness"}, {"numbness", "numb"},
    {"tingling", "tingling"}, {"tingling", "pins and needles"},
    {"blisters", "blisters"}, {"blisters", "blister"},
    {"skin patches", "patches"}, {"skin patches", "scaly patches"},
    {"skin patches", "red patches"}, {"skin patches", "silver patches"},
    {"dry skin", "dry skin"}, {"dry skin", "flaky skin"},
    {"pimples", "pimples"}, {"pimples", "acne"}, {"pimples", "zits"},
    {"pimples", "breakouts"},
    {"blackheads", "blackheads"},
    {"oily skin", "oily skin"},
    {"back pain", "back pain"}, {"back pain", "backache"},
    {"neck pain", "neck pain"}, {"neck pain", "stiff neck"},
    {"stiffness", "stiffness"}, {"stiffness", "stiff joints"},
    {"cramps", "cramps"}, {"cramps", "cramping"}, {"cramps", "muscle cramps"},
    {"cramps", "stomach cramps"},
    {"constipation", "constipation"}, {"constipation", "constipated"},
    {"bloating", "bloating"}, {"bloating", "bloated"},
    {"heartburn", "heartburn"}, {"heartburn", "acid reflux"},
    {"palpitations", "palpitations"}, {"palpitations", "racing heart"},
    {"palpitations", "heart racing"},
    {"pale skin", "pale skin"}, {"pale skin", "paleness"},
    {"weakness", "weakness"}, {"weakness", "weak"}, {"weakness", "feeble"},
    {"cold hands", "cold hands"}, {"cold hands", "cold feet"},
    {"body ache", "body ache"}, {"body ache", "body aches"},
    {"body ache", "aching body"},
    {"swollen glands", "swollen glands"}, {"swollen glands", "swollen lymph nodes"},
    {"swollen legs", "swollen legs"}, {"swollen legs", "leg swelling"},
    {"varicose veins", "varicose veins"}, {"varicose veins", "bulging veins"},
    {"varicose veins", "twisted veins"},
    {"leg pain", "leg pain"}, {"leg pain", "painful legs"},
    {"hair loss", "hair loss"}, {"hair loss", "losing hair"},
    {"difficulty swallowing", "difficulty swallowing"},
    {"difficulty swallowing", "trouble swallowing"},
    {"difficulty swallowing", "painful swallowing"},
    {"hoarseness", "hoarseness"}, {"hoarseness", "hoarse voice"},
    {"white patches", "white patches"}, {"white patches", "white spots"},
    {"bad breath", "bad breath"},
    {"insomnia", "insomnia"}, {"insomnia", "trouble sleeping"},
    {"confusion", "confusion"}, {"confusion", "confused"},
    {"confusion", "disoriented"},
    {"fainting", "fainting"}, {"fainting", "feeling faint"},
    {"eye discharge", "eye discharge"},
    // conversational markers
    {"user", "user"}, {"bot", "bot"}, {"yes", "yes"}, {"no", "no"},
};

} // namespace

void SymptomLexicon::add(const std::string& canonical, const std::string& surface,
                         const PreprocessConfig& cfg, const LemmaLexicon& lemmas) {
    const std::vector<std::string> tokens = tokenize_text(surface, cfg, lemmas);
    if (tokens.empty())
        throw std::runtime_error("lexicon: surface \"" + surface +
                                 "\" is empty after normalization");
    // One surface phrase may not map to two canonicals.
    for (const auto& [other_canonical, surfaces] : entries_) {
        if (other_canonical != canonical && surfaces.count(tokens))
            throw std::runtime_error("lexicon: surface \"" + join_tokens(tokens) +
                                     "\" maps to both \"" + other_canonical +
                                     "\" and \"" + canonical + "\"");
    }
    if (!entries_[canonical].insert(tokens).second) return; // duplicate

    auto& bucket = index_[tokens.front()];
    bucket.emplace_back(tokens, canonical);
    std::sort(bucket.begin(), bucket.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
        return a.first < b.first;
    });
}

std::pair<std::size_t, const std::string*> SymptomLexicon::longest_match(
    const std::vector<std::string>& tokens, std::size_t pos) const {
    const auto bucket = index_.find(tokens[pos]);
    if (bucket == index_.end()) return {0, nullptr};
    for (const auto& [phrase, canonical] : bucket->second) {
        if (pos + phrase.size() > tokens.size()) continue;
        if (std::equal(phrase.begin(), phrase.end(), tokens.begin() + pos))
            return {phrase.size(), &canonical};
    }
    return {0, nullptr};
}

SymptomLexicon load_lexicon(const std::string& path, const PreprocessConfig& cfg,
                            const LemmaLexicon& lemmas) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open for reading");
    SymptomLexicon lexicon;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": expected `canonical<TAB>surface`");
        try {
            lexicon.add(line.substr(0, tab), line.substr(tab + 1), cfg, lemmas);
        } catch (const std::runtime_error& e) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " +
                                     e.what());
        }
    }
    if (lexicon.empty()) throw std::runtime_error(path + ": empty lexicon");
    return lexicon;
}

SymptomLexicon load_lexicon(const std::string& path) {
    return load_lexicon(path, default_preprocess_config(), default_lemma_lexicon());
}

SymptomLexicon make_default_lexicon(const PreprocessConfig& cfg,
                                    const LemmaLexicon& lemmas) {
    SymptomLexicon lex;
    for (const auto& pair : kDefaultLexicon) lex.add(pair[0], pair[1], cfg, lemmas);
    return lex;
}

const SymptomLexicon& default_symptom_lexicon() {
    static const SymptomLexicon lexicon =
        make_default_lexicon(default_preprocess_config(), default_lemma_lexicon());
    return lexicon;
}

std::vector<EntitySpan> extract_entities(const TokenizedDoc& doc,
                                         const SymptomLexicon& lexicon) {
    std::vector<EntitySpan> spans;
    std::size_t pos = 0;
    while (pos < doc.tokens.size()) {
        const auto [len, canonical] = lexicon.longest_match(doc.tokens, pos);
        if (len == 0) {
            ++pos;
            continue;
        }
        EntitySpan span;
        span.canonical = *canonical;
        span.surface.assign(doc.tokens.begin() + pos, doc.tokens.begin() + pos + len);
        span.dialogue_id = doc.dialogue_id;
        span.token_start = pos;
        span.token_end = pos + len;
        spans.push_back(std::move(span));
        pos += len;
    }
    return spans;
}

std::vector<std::pair<std::string, std::set<std::string>>> entity_profile(
    const std::vector<TokenizedDoc>& docs, const SymptomLexicon& lexicon) {
    std::vector<std::pair<std::string, std::set<std::string>>> profiles;
    profiles.reserve(docs.size());
    for (const TokenizedDoc& doc : docs) {
        std::set<std::string> canonicals;
        for (const EntitySpan& span : extract_entities(doc, lexicon))
            canonicals.insert(span.canonical);
        profiles.emplace_back(doc.dialogue_id, std::move(canonicals));
    }
    return profiles;
}

} // namespace symmine
