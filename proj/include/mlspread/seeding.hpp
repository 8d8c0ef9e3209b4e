#pragma once

// Seed-selection strategies. All rankers return (actor id, score) lists with
// non-increasing scores; ties always break by external id ascending so every
// ranking is deterministic.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "mlspread/eclat.hpp"
#include "mlspread/error.hpp"
#include "mlspread/graph.hpp"
#include "mlspread/ingest.hpp"
#include "mlspread/kcore.hpp"
#include "mlspread/rng.hpp"

namespace mlspread {

enum class Method { Degree, KShell, VoteRank, Arl, Random };

inline constexpr Method kAllMethods[] = {Method::Degree, Method::KShell, Method::VoteRank,
                                         Method::Arl, Method::Random};

inline const char* method_name(Method method) {
    switch (method) {
    case Method::Degree:
        return "degree";
    case Method::KShell:
        return "kshell";
    case Method::VoteRank:
        return "voterank";
    case Method::Arl:
        return "arl";
    case Method::Random:
        return "random";
    }
    return "?";
}

inline Method parse_method(const std::string& text) {
    std::string lowered = to_lower(text);
    for (Method method : kAllMethods) {
        if (lowered == method_name(method)) {
            return method;
        }
    }
    fail("unknown method '", text, "' (valid: degree, kshell, voterank, arl, random)");
}

struct SeedRanking {
    std::string layer; // layer name, or "global" for ARL
    Method method = Method::Degree;
    std::vector<std::pair<std::string, double>> ranked; // scores non-increasing
};

struct SeedSet {
    Method method = Method::Degree;
    double budget_fraction = 0.0;
    std::vector<std::string> seeds; // external ids, selection order, no duplicates
};

// ceil(fraction * actor_count), clamped to [1, actor_count].
inline std::size_t budget_size(double fraction, std::size_t actor_count) {
    require(fraction > 0.0 && fraction <= 1.0, "budget fraction must be in (0, 1], got ",
            fraction);
    require(actor_count > 0, "cannot size a seed budget for an empty network");
    auto size = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(actor_count)));
    return std::min(std::max<std::size_t>(size, 1), actor_count);
}

namespace detail {

// Sorts indices by score descending, external id ascending on ties.
inline SeedRanking make_ranking(const MultilayerNetwork& net, std::string layer, Method method,
                                std::vector<std::pair<ActorIndex, double>> scored) {
    std::sort(scored.begin(), scored.end(),
              [&](const auto& a, const auto& b) {
                  if (a.second != b.second) {
                      return a.second > b.second;
                  }
                  return net.actors().id(a.first) < net.actors().id(b.first);
              });
    SeedRanking ranking{std::move(layer), method, {}};
    ranking.ranked.reserve(scored.size());
    for (const auto& [index, score] : scored) {
        ranking.ranked.emplace_back(net.actors().id(index), score);
    }
    return ranking;
}

} // namespace detail

inline SeedRanking rank_degree(const MultilayerNetwork& net, std::string_view layer_name) {
    const Layer& layer = net.layer(layer_name);
    std::vector<std::pair<ActorIndex, double>> scored;
    scored.reserve(net.actor_count());
    for (ActorIndex u = 0; u < net.actor_count(); ++u) {
        scored.emplace_back(u, static_cast<double>(layer.degree(u)));
    }
    return detail::make_ranking(net, std::string(layer_name), Method::Degree, std::move(scored));
}

// K-Shell/degree hybrid: order by (shell, degree) lexicographically. The
// score packs the pair so the order is recoverable from scores alone.
inline SeedRanking rank_kshell(const MultilayerNetwork& net, std::string_view layer_name) {
    const Layer& layer = net.layer(layer_name);
    ShellAssignment shells = k_core_decompose(net, layer_name);
    const double scale = static_cast<double>(net.actor_count());
    std::vector<std::pair<ActorIndex, double>> scored;
    scored.reserve(net.actor_count());
    for (ActorIndex u = 0; u < net.actor_count(); ++u) {
        scored.emplace_back(u, static_cast<double>(shells.shell[u]) * scale +
                                   static_cast<double>(layer.degree(u)));
    }
    return detail::make_ranking(net, std::string(layer_name), Method::KShell, std::move(scored));
}

// VoteRank: neighbors vote with decaying ability. Each round selects the
// actor with the highest vote sum, removes its voting power and weakens its
// neighbors by 1/<k>. Isolated actors never take part.
inline SeedRanking rank_voterank(const MultilayerNetwork& net, std::string_view layer_name,
                                 std::size_t count) {
    require(count >= 1, "voterank count must be at least 1");
    const Layer& layer = net.layer(layer_name);
    const std::size_t n = net.actor_count();

    std::vector<ActorIndex> candidates;
    for (ActorIndex u = 0; u < n; ++u) {
        if (layer.degree(u) > 0) {
            candidates.push_back(u);
        }
    }

    SeedRanking ranking{std::string(layer_name), Method::VoteRank, {}};
    if (candidates.empty()) {
        return ranking;
    }

    const double mean_degree = layer.mean_degree();
    const double delta = mean_degree > 0.0 ? 1.0 / mean_degree : 0.0;

    std::vector<double> ability(n, 1.0);
    std::vector<char> selected(n, 0);
    std::size_t remaining = candidates.size();

    for (std::size_t round = 0; round < count && remaining > 0; ++round) {
        ActorIndex best = 0;
        double best_score = -1.0;
        bool found = false;
        for (ActorIndex u : candidates) {
            if (selected[u]) {
                continue;
            }
            double score = 0.0;
            for (ActorIndex v : layer.neighbors(u)) {
                score += ability[v];
            }
            bool wins = !found || score > best_score ||
                        (score == best_score && net.actors().id(u) < net.actors().id(best));
            if (wins) {
                best = u;
                best_score = score;
                found = true;
            }
        }
        ranking.ranked.emplace_back(net.actors().id(best), best_score);
        selected[best] = 1;
        --remaining;
        ability[best] = 0.0;
        for (ActorIndex v : layer.neighbors(best)) {
            ability[v] = std::max(0.0, ability[v] - delta);
        }
    }
    return ranking;
}

// Uniform random permutation of the layer's non-isolated actors. The score
// is the remaining-position count, so scores stay strictly decreasing.
inline SeedRanking rank_random(const MultilayerNetwork& net, std::string_view layer_name,
                               rng::SplitMix64& gen) {
    const Layer& layer = net.layer(layer_name);
    std::vector<ActorIndex> pool;
    for (ActorIndex u = 0; u < net.actor_count(); ++u) {
        if (layer.degree(u) > 0) {
            pool.push_back(u);
        }
    }
    rng::shuffle(pool, gen);
    SeedRanking ranking{std::string(layer_name), Method::Random, {}};
    ranking.ranked.reserve(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i) {
        ranking.ranked.emplace_back(net.actors().id(pool[i]),
                                    static_cast<double>(pool.size() - i));
    }
    return ranking;
}

struct ArlConfig {
    std::uint32_t min_activity_start = 10; // initial per-user post-count threshold
    std::uint32_t threshold_step = 1;
    std::uint32_t min_support = 2;        // absolute transaction count
    std::uint64_t max_itemsets = 1'000'000; // resource cap per mining run
    std::uint64_t max_millis = 0;           // optional wall-clock cap, 0 = off
};

struct ArlSelection {
    SeedRanking ranking;               // layer = "global"
    std::uint32_t final_threshold = 0; // lowest activity threshold that completed
    bool any_success = false;
    std::uint32_t runs_attempted = 0;
    std::uint64_t itemsets_enumerated = 0; // in the final successful run
};

// ARL seed selection: mine frequent user itemsets over post transactions,
// descending the activity threshold until a mining run blows the resource
// cap, then score users by how many size>=2 frequent itemsets contain them.
// Only users with positive score are ranked.
inline ArlSelection arl_select(const std::vector<InteractionRecord>& records,
                               const ArlConfig& cfg) {
    require(!records.empty(), "arl needs interaction records");
    require(cfg.min_activity_start >= 1, "min_activity_start must be at least 1");
    require(cfg.threshold_step >= 1, "threshold_step must be at least 1");
    require(cfg.max_itemsets > 0, "max_itemsets must be positive");

    ArlSelection selection;
    selection.ranking.layer = "global";
    selection.ranking.method = Method::Arl;

    auto activity = user_activity(records);

    std::uint32_t threshold = cfg.min_activity_start;
    TransactionSet best_transactions;
    MiningOutcome best_outcome;
    while (true) {
        TransactionSet transactions = build_transactions(records, threshold);
        MiningOutcome outcome =
            eclat_mine(transactions, cfg.min_support, {cfg.max_itemsets, cfg.max_millis});
        ++selection.runs_attempted;
        if (!outcome.completed) {
            break; // keep the last successful threshold
        }
        selection.any_success = true;
        selection.final_threshold = threshold;
        selection.itemsets_enumerated = outcome.itemsets_enumerated;
        best_transactions = std::move(transactions);
        best_outcome = std::move(outcome);
        if (threshold == 1) {
            break;
        }
        threshold = threshold > cfg.threshold_step ? threshold - cfg.threshold_step : 1;
    }

    if (!selection.any_success) {
        return selection;
    }

    struct Entry {
        std::uint64_t score;
        std::uint32_t activity;
        const std::string* user;
    };
    std::vector<Entry> entries;
    for (std::size_t item = 0; item < best_transactions.users.size(); ++item) {
        if (best_outcome.member_counts[item] > 0) {
            entries.push_back(Entry{best_outcome.member_counts[item],
                                    activity.at(best_transactions.users[item]),
                                    &best_transactions.users[item]});
        }
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.score != b.score) {
            return a.score > b.score;
        }
        if (a.activity != b.activity) {
            return a.activity > b.activity;
        }
        return *a.user < *b.user;
    });
    for (const Entry& entry : entries) {
        selection.ranking.ranked.emplace_back(*entry.user, static_cast<double>(entry.score));
    }
    return selection;
}

inline SeedRanking rank_arl(const std::vector<InteractionRecord>& records, const ArlConfig& cfg) {
    return arl_select(records, cfg).ranking;
}

// Round-robin over the rankings in the given order, skipping actors that are
// already selected and rankings that are exhausted. Stops at the budget or
// when every ranking is exhausted, so the output may be short.
inline SeedSet interleave(const std::vector<SeedRanking>& rankings, std::size_t budget,
                          double budget_fraction = 0.0) {
    require(!rankings.empty(), "interleave needs at least one ranking");
    require(budget >= 1, "budget must be at least 1");

    SeedSet set;
    set.method = rankings.front().method;
    set.budget_fraction = budget_fraction;

    std::vector<std::size_t> cursor(rankings.size(), 0);
    std::unordered_set<std::string> chosen;
    bool any_left = true;
    while (set.seeds.size() < budget && any_left) {
        any_left = false;
        for (std::size_t r = 0; r < rankings.size() && set.seeds.size() < budget; ++r) {
            const auto& ranked = rankings[r].ranked;
            std::size_t& pos = cursor[r];
            while (pos < ranked.size() && chosen.count(ranked[pos].first) != 0) {
                ++pos;
            }
            if (pos >= ranked.size()) {
                continue;
            }
            any_left = true;
            chosen.insert(ranked[pos].first);
            set.seeds.push_back(ranked[pos].first);
            ++pos;
        }
    }
    return set;
}

} // namespace mlspread
