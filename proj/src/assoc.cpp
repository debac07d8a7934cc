// SPDX-License-Identifier: Apache-2.0

#include "symmine/assoc.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "symmine/csv.hpp"

namespace symmine {

namespace {

// Internal representation: items as dense ids in lexicographic order,
// itemsets as sorted id vectors.
struct ItemIndex {
    std::vector<std::string> id_to_item;
    std::map<std::string, int> item_to_id;

    explicit ItemIndex(const std::set<std::string>& universe) {
        for (const std::string& item : universe) {
            item_to_id.emplace(item, static_cast<int>(id_to_item.size()));
            id_to_item.push_back(item);
        }
    }
};

std::vector<std::vector<int>> encode_transactions(const TransactionSet& ts,
                                                  const ItemIndex& index) {
    std::vector<std::vector<int>> encoded;
    encoded.reserve(ts.transactions.size());
    for (const auto& [id, items] : ts.transactions) {
        std::vector<int> t;
        t.reserve(items.size());
        for (const std::string& item : items) t.push_back(index.item_to_id.at(item));
        std::sort(t.begin(), t.end());
        encoded.push_back(std::move(t));
    }
    return encoded;
}

bool contains_all(const std::vector<int>& transaction, const std::vector<int>& items) {
    return std::includes(transaction.begin(), transaction.end(), items.begin(),
                         items.end());
}

long long count_support(const std::vector<std::vector<int>>& transactions,
                        const std::vector<int>& items) {
    long long count = 0;
    for (const auto& t : transactions) count += contains_all(t, items);
    return count;
}

bool is_frequent(long long count, std::size_t n, double min_support) {
    return static_cast<double>(count) / static_cast<double>(n) >= min_support;
}

std::vector<FrequentItemset> decode_frequent(
    const std::vector<std::pair<std::vector<int>, long long>>& sets,
    const ItemIndex& index, std::size_t n) {
    std::vector<FrequentItemset> out;
    out.reserve(sets.size());
    for (const auto& [ids, count] : sets) {
        FrequentItemset f;
        for (const int id : ids) f.items.push_back(index.id_to_item[id]);
        f.count = count;
        f.support = static_cast<double>(count) / static_cast<double>(n);
        out.push_back(std::move(f));
    }
    // (size, lexicographic items); item ids are lexicographic already.
    std::sort(out.begin(), out.end(), [](const FrequentItemset& a,
                                         const FrequentItemset& b) {
        if (a.items.size() != b.items.size()) return a.items.size() < b.items.size();
        return a.items < b.items;
    });
    return out;
}

} // namespace

TransactionSet build_transactions(
    const std::vector<std::pair<std::string, std::set<std::string>>>& profiles,
    const MiningConfig& cfg) {
    TransactionSet ts;
    ts.transactions.reserve(profiles.size());
    for (const auto& [id, items] : profiles) {
        std::set<std::string> kept;
        for (const std::string& item : items) {
            if (!cfg.marker_filter.count(item)) kept.insert(item);
        }
        for (const std::string& item : kept) ts.item_universe.insert(item);
        ts.transactions.emplace_back(id, std::move(kept));
    }
    return ts;
}

std::vector<FrequentItemset> apriori(const TransactionSet& ts,
                                     const MiningConfig& cfg) {
    if (ts.transactions.empty()) throw std::runtime_error("apriori: no transactions");
    if (cfg.min_support <= 0.0 || cfg.min_support > 1.0)
        throw std::runtime_error("apriori: min_support must be in (0,1]");
    if (cfg.max_itemset_size < 1)
        throw std::runtime_error("apriori: max_itemset_size must be >= 1");

    const ItemIndex index(ts.item_universe);
    const auto transactions = encode_transactions(ts, index);
    const std::size_t n = transactions.size();

    std::vector<std::pair<std::vector<int>, long long>> all_frequent;

    // Level 1: frequent singletons in one counting pass.
    std::vector<long long> single_counts(index.id_to_item.size(), 0);
    for (const auto& t : transactions)
        for (const int id : t) ++single_counts[id];
    std::vector<std::vector<int>> level;
    for (std::size_t id = 0; id < single_counts.size(); ++id) {
        if (is_frequent(single_counts[id], n, cfg.min_support)) {
            level.push_back({static_cast<int>(id)});
            all_frequent.push_back({{static_cast<int>(id)}, single_counts[id]});
        }
    }

    // Level k: join frequent (k-1)-itemsets sharing their first k-2 items,
    // prune candidates with an infrequent subset, count in one pass.
    for (int size = 2; size <= cfg.max_itemset_size && !level.empty(); ++size) {
        std::set<std::vector<int>> previous(level.begin(), level.end());
        std::vector<std::vector<int>> candidates;
        for (std::size_t i = 0; i < level.size(); ++i) {
            for (std::size_t j = i + 1; j < level.size(); ++j) {
                const auto& a = level[i];
                const auto& b = level[j];
                if (!std::equal(a.begin(), a.end() - 1, b.begin())) continue;
                std::vector<int> candidate(a);
                candidate.push_back(b.back()); // b.back() > a.back(): sorted level
                bool all_subsets_frequent = true;
                for (std::size_t drop = 0; drop < candidate.size(); ++drop) {
                    std::vector<int> sub;
                    sub.reserve(candidate.size() - 1);
                    for (std::size_t m = 0; m < candidate.size(); ++m)
                        if (m != drop) sub.push_back(candidate[m]);
                    if (!previous.count(sub)) {
                        all_subsets_frequent = false;
                        break;
                    }
                }
                if (all_subsets_frequent) candidates.push_back(std::move(candidate));
            }
        }
        std::vector<long long> counts(candidates.size(), 0);
        for (const auto& t : transactions) {
            if (t.size() < static_cast<std::size_t>(size)) continue;
            for (std::size_t c = 0; c < candidates.size(); ++c)
                counts[c] += contains_all(t, candidates[c]);
        }
        level.clear();
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            if (is_frequent(counts[c], n, cfg.min_support)) {
                level.push_back(candidates[c]);
                all_frequent.push_back({std::move(candidates[c]), counts[c]});
            }
        }
    }
    return decode_frequent(all_frequent, index, n);
}

std::vector<FrequentItemset> brute_force_frequent(const TransactionSet& ts,
                                                  const MiningConfig& cfg) {
    if (ts.transactions.empty())
        throw std::runtime_error("brute_force_frequent: no transactions");
    if (ts.item_universe.size() > 20)
        throw std::runtime_error("brute_force_frequent: item universe too large");

    const ItemIndex index(ts.item_universe);
    const auto transactions = encode_transactions(ts, index);
    const std::size_t n = transactions.size();
    const int n_items = static_cast<int>(index.id_to_item.size());

    std::vector<std::pair<std::vector<int>, long long>> all_frequent;
    const std::uint32_t limit = 1u << n_items;
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
        const int size = __builtin_popcount(mask);
        if (size > cfg.max_itemset_size) continue;
        std::vector<int> items;
        for (int id = 0; id < n_items; ++id)
            if (mask & (1u << id)) items.push_back(id);
        const long long count = count_support(transactions, items);
        if (is_frequent(count, n, cfg.min_support))
            all_frequent.push_back({std::move(items), count});
    }
    return decode_frequent(all_frequent, index, n);
}

std::vector<AssociationRule> generate_rules(
    const std::vector<FrequentItemset>& frequents, const TransactionSet& ts,
    const MiningConfig& cfg) {
    const std::size_t n = ts.transactions.size();
    std::map<std::vector<std::string>, long long> count_of;
    for (const FrequentItemset& f : frequents) count_of[f.items] = f.count;

    std::vector<AssociationRule> rules;
    for (const FrequentItemset& f : frequents) {
        const std::size_t size = f.items.size();
        if (size < 2) continue;
        const std::uint32_t full = (1u << size) - 1;
        for (std::uint32_t mask = 1; mask < full; ++mask) {
            std::vector<std::string> antecedent, consequent;
            for (std::size_t i = 0; i < size; ++i) {
                if (mask & (1u << i)) antecedent.push_back(f.items[i]);
                else consequent.push_back(f.items[i]);
            }
            // Antecedent and consequent are subsets of a frequent itemset, so
            // they are frequent themselves by downward closure and their
            // counts are available.
            const long long count_a = count_of.at(antecedent);
            const long long count_c = count_of.at(consequent);
            const double confidence =
                static_cast<double>(f.count) / static_cast<double>(count_a);
            if (confidence < cfg.min_confidence) continue;

            AssociationRule rule;
            rule.antecedent = antecedent;
            rule.consequent = consequent;
            rule.count_joint = f.count;
            rule.count_antecedent = count_a;
            rule.count_consequent = count_c;
            rule.n_transactions = static_cast<long long>(n);
            rule.support = static_cast<double>(f.count) / static_cast<double>(n);
            rule.confidence = confidence;
            rule.lift = static_cast<double>(f.count * static_cast<long long>(n)) /
                        static_cast<double>(count_a * count_c);
            rules.push_back(std::move(rule));
        }
    }
    std::sort(rules.begin(), rules.end(),
              [](const AssociationRule& a, const AssociationRule& b) {
                  if (a.confidence != b.confidence) return a.confidence > b.confidence;
                  if (a.support != b.support) return a.support > b.support;
                  if (a.antecedent != b.antecedent) return a.antecedent < b.antecedent;
                  return a.consequent < b.consequent;
              });
    return rules;
}

void write_rules_csv(const std::vector<AssociationRule>& rules, std::ostream& out) {
    out << "antecedents,consequents,support,confidence,lift\n";
    auto join = [](const std::vector<std::string>& items) {
        std::string s;
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (i) s += ';';
            s += items[i];
        }
        return s;
    };
    char buf[32];
    for (const AssociationRule& r : rules) {
        std::vector<std::string> fields;
        fields.push_back(join(r.antecedent));
        fields.push_back(join(r.consequent));
        std::snprintf(buf, sizeof buf, "%.6f", r.support);
        fields.emplace_back(buf);
        std::snprintf(buf, sizeof buf, "%.6f", r.confidence);
        fields.emplace_back(buf);
        std::snprintf(buf, sizeof buf, "%.6f", r.lift);
        fields.emplace_back(buf);
        write_csv_row(out, fields);
    }
}

} // namespace symmine
