#pragma once

// Eclat frequent-itemset mining over post transactions: vertical tid-set
// representation, DFS over equivalence classes with sorted-intersection
// support counting.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mlspread/error.hpp"
#include "mlspread/ingest.hpp"

namespace mlspread {

// Transactions are posts; items are the users that interacted with the post
// (any action). Users below the activity threshold are excluded.
struct TransactionSet {
    std::vector<std::string> users;             // item index -> user id, sorted
    std::vector<std::vector<std::uint32_t>> tids; // item index -> sorted transaction ids
    std::size_t transaction_count = 0;
};

// Distinct posts each user touched, counting comments and likes alike.
inline std::map<std::string, std::uint32_t> user_activity(
    const std::vector<InteractionRecord>& records) {
    std::map<std::string, std::set<std::string>> posts_of;
    for (const auto& record : records) {
        posts_of[record.user_id].insert(record.post_id);
    }
    std::map<std::string, std::uint32_t> activity;
    for (const auto& [user, posts] : posts_of) {
        activity[user] = static_cast<std::uint32_t>(posts.size());
    }
    return activity;
}

inline TransactionSet build_transactions(const std::vector<InteractionRecord>& records,
                                         std::uint32_t min_activity) {
    auto activity = user_activity(records);

    std::map<std::string, std::set<std::string>> users_of_post;
    for (const auto& record : records) {
        if (activity.at(record.user_id) >= min_activity) {
            users_of_post[record.post_id].insert(record.user_id);
        }
    }

    TransactionSet set;
    std::map<std::string, std::size_t> item_index;
    for (const auto& [user, count] : activity) {
        if (count >= min_activity) {
            item_index.emplace(user, set.users.size());
            set.users.push_back(user);
        }
    }
    set.tids.resize(set.users.size());

    std::uint32_t tid = 0;
    for (const auto& [post, users] : users_of_post) {
        for (const auto& user : users) {
            set.tids[item_index.at(user)].push_back(tid);
        }
        ++tid;
    }
    set.transaction_count = tid;
    return set;
}

struct MiningLimits {
    std::uint64_t max_itemsets = 1'000'000; // frequent itemsets enumerated per run
    std::uint64_t max_millis = 0;           // 0 disables the wall-clock cap
};

struct MiningOutcome {
    bool completed = false; // false when a limit was exceeded
    std::uint64_t itemsets_enumerated = 0;
    // Per item: number of frequent itemsets of size >= 2 containing it.
    std::vector<std::uint64_t> member_counts;
};

namespace detail {

struct EclatState {
    const std::uint32_t min_support;
    const MiningLimits& limits;
    const std::chrono::steady_clock::time_point started;
    MiningOutcome& outcome;

    bool over_budget() {
        if (outcome.itemsets_enumerated > limits.max_itemsets) {
            return true;
        }
        if (limits.max_millis != 0 && (outcome.itemsets_enumerated & 1023) == 0) {
            auto elapsed = std::chrono::steady_clock::now() - started;
            if (std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() >
                static_cast<std::int64_t>(limits.max_millis)) {
                return true;
            }
        }
        return false;
    }
};

struct ItemTids {
    std::size_t item;
    std::vector<std::uint32_t> tids;
};

// Returns false when a limit was hit and the search must unwind.
inline bool eclat_dfs(EclatState& state, const std::vector<ItemTids>& klass,
                      std::vector<std::size_t>& prefix) {
    for (std::size_t i = 0; i < klass.size(); ++i) {
        prefix.push_back(klass[i].item);
        ++state.outcome.itemsets_enumerated;
        if (prefix.size() >= 2) {
            for (std::size_t member : prefix) {
                ++state.outcome.member_counts[member];
            }
        }
        if (state.over_budget()) {
            return false;
        }

        std::vector<ItemTids> extensions;
        for (std::size_t j = i + 1; j < klass.size(); ++j) {
            std::vector<std::uint32_t> shared;
            std::set_intersection(klass[i].tids.begin(), klass[i].tids.end(),
                                  klass[j].tids.begin(), klass[j].tids.end(),
                                  std::back_inserter(shared));
            if (shared.size() >= state.min_support) {
                extensions.push_back(ItemTids{klass[j].item, std::move(shared)});
            }
        }
        if (!extensions.empty() && !eclat_dfs(state, extensions, prefix)) {
            return false;
        }
        prefix.pop_back();
    }
    return true;
}

} // namespace detail

// Enumerates every frequent itemset (support >= min_support) and tallies,
// per item, how many frequent itemsets of size >= 2 contain it. Aborts with
// completed=false once a resource limit is exceeded.
inline MiningOutcome eclat_mine(const TransactionSet& transactions, std::uint32_t min_support,
                                const MiningLimits& limits = {}) {
    require(min_support >= 1, "min_support must be positive");
    MiningOutcome outcome;
    outcome.member_counts.assign(transactions.users.size(), 0);

    std::vector<detail::ItemTids> roots;
    for (std::size_t item = 0; item < transactions.users.size(); ++item) {
        if (transactions.tids[item].size() >= min_support) {
            roots.push_back(detail::ItemTids{item, transactions.tids[item]});
        }
    }
    // Ascending support keeps equivalence classes small early; ties resolve
    // by item (user id) order. The enumerated set is order-independent.
    std::stable_sort(roots.begin(), roots.end(),
                     [](const detail::ItemTids& a, const detail::ItemTids& b) {
                         return a.tids.size() < b.tids.size();
                     });

    detail::EclatState state{min_support, limits, std::chrono::steady_clock::now(), outcome};
    std::vector<std::size_t> prefix;
    outcome.completed = detail::eclat_dfs(state, roots, prefix);
    if (!outcome.completed) {
        outcome.member_counts.assign(transactions.users.size(), 0);
    }
    return outcome;
}

} // namespace mlspread
