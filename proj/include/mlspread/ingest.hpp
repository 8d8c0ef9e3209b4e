#pragma once

// Interaction-record and multiplex edge-list parsing, bipartite layer
// construction and user-user projection.

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mlspread/error.hpp"
#include "mlspread/graph.hpp"

namespace mlspread {

enum class Action { Comment, Like };

inline const char* action_name(Action action) {
    return action == Action::Comment ? "comment" : "like";
}

inline std::string to_lower(std::string text) {
    std::transform(text.begin(), text.end(), text.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    return text;
}

inline Action parse_action(const std::string& text) {
    std::string lowered = to_lower(text);
    if (lowered == "comment") {
        return Action::Comment;
    }
    if (lowered == "like") {
        return Action::Like;
    }
    fail("unknown action '", text, "'");
}

// One user action on one post; the atomic ingest unit.
struct InteractionRecord {
    std::string post_id;
    std::string user_id;
    Action action;
};

namespace detail {

inline std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    return line;
}

inline std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::string current;
    for (char ch : line) {
        if (ch == sep) {
            fields.push_back(current);
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    fields.push_back(current);
    return fields;
}

} // namespace detail

// Parses the canonical interaction CSV: header `post_id,user_id,action`,
// action in {comment, like} (case-insensitive), LF or CRLF line endings.
// Duplicate rows are kept; deduplication happens at the bipartite build.
inline std::vector<InteractionRecord> parse_interactions(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;

    require(static_cast<bool>(std::getline(in, line)), "empty input: missing CSV header");
    ++line_no;
    auto header = detail::split(detail::strip_cr(line), ',');
    bool header_ok = header.size() == 3 && to_lower(header[0]) == "post_id" &&
                     to_lower(header[1]) == "user_id" && to_lower(header[2]) == "action";
    require(header_ok, "line 1: expected header 'post_id,user_id,action', got '",
            detail::strip_cr(line), "'");

    std::vector<InteractionRecord> records;
    while (std::getline(in, line)) {
        ++line_no;
        line = detail::strip_cr(line);
        if (line.empty()) {
            continue;
        }
        auto fields = detail::split(line, ',');
        require(fields.size() == 3, "line ", line_no, ": expected 3 fields, got ",
                fields.size());
        require(!fields[0].empty(), "line ", line_no, ": empty post_id");
        require(!fields[1].empty(), "line ", line_no, ": empty user_id");
        require(!fields[2].empty(), "line ", line_no, ": empty action");
        Action action;
        try {
            action = parse_action(fields[2]);
        } catch (const Error&) {
            fail("unknown action '", fields[2], "' at line ", line_no);
        }
        records.push_back(InteractionRecord{fields[0], fields[1], action});
    }
    return records;
}

// Post-user incidence for one action, deduplicated and grouped by post.
struct BipartiteLayer {
    Action action;
    std::vector<std::string> posts;                   // sorted unique post ids
    std::vector<std::vector<std::string>> post_users; // per post, sorted unique user ids
    std::size_t incidence_count = 0;
};

inline BipartiteLayer build_bipartite(const std::vector<InteractionRecord>& records,
                                      Action action) {
    std::map<std::string, std::set<std::string>> by_post;
    for (const auto& record : records) {
        if (record.action == action) {
            by_post[record.post_id].insert(record.user_id);
        }
    }
    BipartiteLayer layer;
    layer.action = action;
    layer.posts.reserve(by_post.size());
    layer.post_users.reserve(by_post.size());
    for (auto& [post, users] : by_post) {
        layer.posts.push_back(post);
        layer.post_users.emplace_back(users.begin(), users.end());
        layer.incidence_count += users.size();
    }
    return layer;
}

struct ProjectionOptions {
    // Posts with more users than this are skipped instead of expanded into a
    // clique; 0 means unlimited. Guards against quadratic blowup on very
    // popular posts.
    std::size_t max_users_per_post = 0;
};

struct ProjectionResult {
    EdgeListLayer layer;
    std::size_t skipped_posts = 0;
};

// User-user projection: an edge joins two users that acted on the same post.
// Cliques are streamed per post into the deduplicating edge set; the full
// pair list of a post is never materialized.
inline ProjectionResult project(const BipartiteLayer& bipartite,
                                const ProjectionOptions& options = {}) {
    ProjectionResult result;
    result.layer.name = action_name(bipartite.action);
    for (const auto& users : bipartite.post_users) {
        for (const auto& user : users) {
            result.layer.add_vertex(user);
        }
        if (options.max_users_per_post != 0 && users.size() > options.max_users_per_post) {
            ++result.skipped_posts;
            continue;
        }
        for (std::size_t i = 0; i < users.size(); ++i) {
            for (std::size_t j = i + 1; j < users.size(); ++j) {
                result.layer.add_edge(users[i], users[j]);
            }
        }
    }
    return result;
}

struct ParseReport {
    std::size_t self_loops_dropped = 0;
    std::vector<std::string> warnings;
};

// Parses the public-repository multiplex format: whitespace-separated rows
// `layerID nodeID nodeID [weight]`, '#' comment lines skipped, weight
// ignored. Only the requested layer ids are kept; a requested id with no
// rows yields a warning and an empty layer.
inline MultilayerNetwork parse_multiplex_edges(std::istream& in, const std::set<int>& keep_layers,
                                               ParseReport* report = nullptr,
                                               std::vector<std::string> provenance = {}) {
    require(!keep_layers.empty(), "no layer ids requested");
    std::map<int, EdgeListLayer> layers;
    for (int id : keep_layers) {
        layers[id].name = std::to_string(id);
    }

    ParseReport local;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = detail::strip_cr(line);
        std::istringstream row(line);
        std::string first;
        if (!(row >> first) || first[0] == '#') {
            continue;
        }
        std::string node_a, node_b, weight, extra;
        require(static_cast<bool>(row >> node_a >> node_b), "line ", line_no,
                ": expected 'layerID nodeID nodeID [weight]'");
        bool has_weight = static_cast<bool>(row >> weight);
        require(!has_weight || !(row >> extra), "line ", line_no, ": too many columns");

        auto parse_int = [&](const std::string& token, const char* what) {
            std::size_t used = 0;
            int value = 0;
            bool ok = true;
            try {
                value = std::stoi(token, &used);
            } catch (const std::exception&) {
                ok = false;
            }
            if (!ok || used != token.size()) {
                fail("line ", line_no, ": non-integer ", what, " '", token, "'");
            }
            return value;
        };
        int layer_id = parse_int(first, "layer id");
        parse_int(node_a, "node id");
        parse_int(node_b, "node id");

        auto it = layers.find(layer_id);
        if (it == layers.end()) {
            continue; // layer not requested
        }
        it->second.add_vertex(node_a);
        it->second.add_vertex(node_b);
        if (node_a == node_b) {
            ++local.self_loops_dropped;
            continue;
        }
        it->second.add_edge(node_a, node_b);
    }

    std::vector<EdgeListLayer> ordered;
    ordered.reserve(layers.size());
    for (auto& [id, layer] : layers) {
        if (layer.vertices.empty()) {
            local.warnings.push_back("layer " + std::to_string(id) +
                                     " has no rows in the input; created empty");
        }
        ordered.push_back(std::move(layer));
    }
    if (report != nullptr) {
        *report = std::move(local);
    }
    return assemble_multilayer(ordered, std::move(provenance));
}

} // namespace mlspread
