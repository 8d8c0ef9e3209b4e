#pragma once

// Multilayer graph data model: a fixed actor set replicated across named
// layers, each layer an undirected simple graph over dense actor indices.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mlspread/error.hpp"

namespace mlspread {

using ActorIndex = std::uint32_t;

// Bijection between external string ids and dense indices. The table is
// sorted by external id, so index order and id order coincide.
class ActorTable {
public:
    ActorTable() = default;

    static ActorTable from_ids(const std::set<std::string>& ids) {
        ActorTable table;
        table.ids_.assign(ids.begin(), ids.end());
        table.index_.reserve(table.ids_.size());
        for (std::size_t i = 0; i < table.ids_.size(); ++i) {
            table.index_.emplace(table.ids_[i], static_cast<ActorIndex>(i));
        }
        return table;
    }

    std::size_t size() const { return ids_.size(); }

    const std::string& id(ActorIndex index) const {
        require(index < ids_.size(), "actor index ", index, " out of range (",
                ids_.size(), " actors)");
        return ids_[index];
    }

    bool contains(const std::string& id) const { return index_.count(id) != 0; }

    ActorIndex require_id(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) {
            fail("unknown actor '", id, "'");
        }
        return it->second;
    }

    const std::vector<std::string>& ids() const { return ids_; }

private:
    std::vector<std::string> ids_;
    std::unordered_map<std::string, ActorIndex> index_;
};

// One relation type as an undirected simple graph; neighbor lists are
// sorted and deduplicated at construction.
class Layer {
public:
    Layer(std::string name, std::size_t actor_count,
          const std::vector<std::pair<ActorIndex, ActorIndex>>& edges)
        : name_(std::move(name)), adjacency_(actor_count) {
        for (const auto& [u, v] : edges) {
            require(u < actor_count && v < actor_count, "edge endpoint out of range in layer '",
                    name_, "'");
            require(u != v, "self-loop on actor index ", u, " in layer '", name_, "'");
            adjacency_[u].push_back(v);
            adjacency_[v].push_back(u);
        }
        edge_count_ = 0;
        for (auto& neighbors : adjacency_) {
            std::sort(neighbors.begin(), neighbors.end());
            neighbors.erase(std::unique(neighbors.begin(), neighbors.end()), neighbors.end());
            edge_count_ += neighbors.size();
        }
        edge_count_ /= 2;
    }

    const std::string& name() const { return name_; }
    std::size_t actor_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    std::size_t degree(ActorIndex u) const {
        require(u < adjacency_.size(), "actor index ", u, " out of range in layer '", name_, "'");
        return adjacency_[u].size();
    }

    const std::vector<ActorIndex>& neighbors(ActorIndex u) const {
        require(u < adjacency_.size(), "actor index ", u, " out of range in layer '", name_, "'");
        return adjacency_[u];
    }

    double mean_degree() const {
        if (adjacency_.empty()) {
            return 0.0;
        }
        return 2.0 * static_cast<double>(edge_count_) / static_cast<double>(adjacency_.size());
    }

private:
    std::string name_;
    std::vector<std::vector<ActorIndex>> adjacency_;
    std::size_t edge_count_ = 0;
};

// Edge list over external ids, the exchange format between ingestion and
// network assembly. Tracks the vertex universe explicitly so actors that end
// up isolated on a layer survive into the actor table.
struct EdgeListLayer {
    std::string name;
    std::set<std::string> vertices;
    std::set<std::pair<std::string, std::string>> edges; // normalized a < b

    void add_vertex(const std::string& id) { vertices.insert(id); }

    void add_edge(const std::string& a, const std::string& b) {
        require(a != b, "self-loop on actor '", a, "' in layer '", name, "'");
        vertices.insert(a);
        vertices.insert(b);
        edges.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
    }
};

class MultilayerNetwork {
public:
    MultilayerNetwork(ActorTable actors, std::vector<Layer> layers,
                      std::vector<std::string> provenance = {})
        : actors_(std::move(actors)), layers_(std::move(layers)),
          provenance_(std::move(provenance)) {
        require(!layers_.empty(), "a multilayer network needs at least one layer");
        std::set<std::string> names;
        for (const auto& layer : layers_) {
            require(layer.actor_count() == actors_.size(),
                    "layer '", layer.name(), "' does not span the actor table");
            require(names.insert(layer.name()).second, "duplicate layer name '", layer.name(),
                    "'");
        }
    }

    const ActorTable& actors() const { return actors_; }
    std::size_t actor_count() const { return actors_.size(); }
    std::size_t layer_count() const { return layers_.size(); }
    const std::vector<Layer>& layers() const { return layers_; }
    const std::vector<std::string>& provenance() const { return provenance_; }

    std::vector<std::string> layer_names() const {
        std::vector<std::string> names;
        names.reserve(layers_.size());
        for (const auto& layer : layers_) {
            names.push_back(layer.name());
        }
        return names;
    }

    std::size_t layer_index(std::string_view name) const {
        for (std::size_t i = 0; i < layers_.size(); ++i) {
            if (layers_[i].name() == name) {
                return i;
            }
        }
        fail("unknown layer '", std::string(name), "'");
    }

    const Layer& layer(std::string_view name) const { return layers_[layer_index(name)]; }

    std::size_t degree(std::string_view layer_name, const std::string& actor_id) const {
        return layer(layer_name).degree(actors_.require_id(actor_id));
    }

    std::size_t edge_count() const {
        std::size_t total = 0;
        for (const auto& layer : layers_) {
            total += layer.edge_count();
        }
        return total;
    }

    std::size_t edge_count(std::string_view layer_name) const {
        return layer(layer_name).edge_count();
    }

    // Actors with at least one edge on at least one layer.
    std::size_t non_isolated_count() const {
        std::size_t count = 0;
        for (ActorIndex u = 0; u < actors_.size(); ++u) {
            for (const auto& layer : layers_) {
                if (layer.degree(u) > 0) {
                    ++count;
                    break;
                }
            }
        }
        return count;
    }

private:
    ActorTable actors_;
    std::vector<Layer> layers_;
    std::vector<std::string> provenance_;
};

// Canonical network constructor: the actor table is the sorted union of all
// layer universes, so identical edge lists in any order build identical
// networks.
inline MultilayerNetwork assemble_multilayer(const std::vector<EdgeListLayer>& layers,
                                             std::vector<std::string> provenance = {}) {
    require(!layers.empty(), "need at least one layer to assemble a network");
    std::set<std::string> names;
    for (const auto& layer : layers) {
        require(names.insert(layer.name).second, "duplicate layer name '", layer.name, "'");
    }

    std::set<std::string> universe;
    for (const auto& layer : layers) {
        universe.insert(layer.vertices.begin(), layer.vertices.end());
        for (const auto& [a, b] : layer.edges) {
            universe.insert(a);
            universe.insert(b);
        }
    }
    ActorTable actors = ActorTable::from_ids(universe);

    std::vector<Layer> built;
    built.reserve(layers.size());
    for (const auto& layer : layers) {
        std::vector<std::pair<ActorIndex, ActorIndex>> edges;
        edges.reserve(layer.edges.size());
        for (const auto& [a, b] : layer.edges) {
            edges.emplace_back(actors.require_id(a), actors.require_id(b));
        }
        built.emplace_back(layer.name, actors.size(), edges);
    }
    return MultilayerNetwork(std::move(actors), std::move(built), std::move(provenance));
}

} // namespace mlspread
