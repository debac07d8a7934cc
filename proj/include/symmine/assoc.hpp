// SPDX-License-Identifier: Apache-2.0
//
// Frequent symptom itemsets (Apriori with downward-closure pruning) and
// association rules with support, confidence and lift. Counts are kept as
// exact integers; each metric is a single final division, so the rule
// identities lift*supp(C) == confidence and confidence*supp(A) == support
// hold exactly in rational arithmetic.

#pragma once

#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace symmine {

struct TransactionSet {
    // (dialogue id, item set) in corpus order; empty sets are retained and
    // count in every support denominator.
    std::vector<std::pair<std::string, std::set<std::string>>> transactions;
    std::set<std::string> item_universe;
};

struct FrequentItemset {
    std::vector<std::string> items; // sorted
    double support = 0.0;
    long long count = 0; // transactions containing all items
};

struct AssociationRule {
    std::vector<std::string> antecedent; // sorted, non-empty
    std::vector<std::string> consequent; // sorted, non-empty, disjoint
    double support = 0.0;    // count_joint / n
    double confidence = 0.0; // count_joint / count_antecedent
    double lift = 0.0;       // confidence / (count_consequent / n)
    long long count_joint = 0;
    long long count_antecedent = 0;
    long long count_consequent = 0;
    long long n_transactions = 0;
};

struct MiningConfig {
    double min_support = 0.05;
    double min_confidence = 0.5;
    int max_itemset_size = 4;
    std::set<std::string> marker_filter = {"bot", "user", "yes", "no"};
};

// Removes marker_filter items from every transaction; empty transactions
// are kept so the denominator is unchanged.
TransactionSet build_transactions(
    const std::vector<std::pair<std::string, std::set<std::string>>>& profiles,
    const MiningConfig& cfg);

// All itemsets with support >= min_support and size <= max_itemset_size,
// sorted by (size, lexicographic items).
std::vector<FrequentItemset> apriori(const TransactionSet& ts,
                                     const MiningConfig& cfg);

// Oracle with the same contract: enumerates every subset of the item
// universe up to max_itemset_size and counts directly. Requires at most 20
// distinct items.
std::vector<FrequentItemset> brute_force_frequent(const TransactionSet& ts,
                                                  const MiningConfig& cfg);

// All antecedent/consequent splits of frequent itemsets of size >= 2 with
// confidence >= min_confidence, sorted by confidence descending (ties:
// support descending, then lexicographic).
std::vector<AssociationRule> generate_rules(
    const std::vector<FrequentItemset>& frequents, const TransactionSet& ts,
    const MiningConfig& cfg);

// CSV `antecedents,consequents,support,confidence,lift`; items ;-joined,
// metrics with six decimals.
void write_rules_csv(const std::vector<AssociationRule>& rules, std::ostream& out);

} // namespace symmine
