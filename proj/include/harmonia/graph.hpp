#pragma once

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "harmonia/matrix.hpp"

namespace harmonia {

// Undirected simple graph on vertices 0..n-1. Edges are stored as ordered
// pairs (i < j); self-loops and duplicates are rejected on insertion.
class FiniteGraph {
public:
    FiniteGraph() = default;
    explicit FiniteGraph(std::size_t n) : n_(n) {}

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }

    void add_edge(std::size_t i, std::size_t j) {
        if (i >= n_ || j >= n_) throw std::invalid_argument("vertex index out of range");
        if (i == j) throw std::invalid_argument("self-loop not allowed");
        auto e = std::minmax(i, j);
        if (!edges_.insert({e.first, e.second}).second)
            throw std::invalid_argument("duplicate edge");
    }

    bool has_edge(std::size_t i, std::size_t j) const {
        auto e = std::minmax(i, j);
        return edges_.count({e.first, e.second}) > 0;
    }

    std::size_t degree(std::size_t v) const {
        if (v >= n_) throw std::invalid_argument("vertex index out of range");
        std::size_t d = 0;
        for (const auto& e : edges_) d += (e.first == v) + (e.second == v);
        return d;
    }

    std::vector<std::size_t> neighbors(std::size_t v) const {
        std::vector<std::size_t> out;
        for (const auto& e : edges_) {
            if (e.first == v) out.push_back(e.second);
            else if (e.second == v) out.push_back(e.first);
        }
        return out;
    }

    const std::set<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

    // Connected components as sorted vertex lists, ordered by smallest member.
    std::vector<std::vector<std::size_t>> components() const {
        std::vector<int> comp(n_, -1);
        std::vector<std::vector<std::size_t>> out;
        for (std::size_t s = 0; s < n_; ++s) {
            if (comp[s] >= 0) continue;
            const int id = static_cast<int>(out.size());
            out.emplace_back();
            std::vector<std::size_t> stack{s};
            comp[s] = id;
            while (!stack.empty()) {
                std::size_t v = stack.back();
                stack.pop_back();
                out[id].push_back(v);
                for (std::size_t w : neighbors(v))
                    if (comp[w] < 0) {
                        comp[w] = id;
                        stack.push_back(w);
                    }
            }
            std::sort(out[id].begin(), out[id].end());
        }
        return out;
    }

private:
    std::size_t n_ = 0;
    std::set<std::pair<std::size_t, std::size_t>> edges_;
};

// L[i][i] = deg(v_i), L[i][j] = -1 iff i~j, 0 otherwise. Symmetric, zero row
// sums; exact integers.
inline IntMatrix laplacian(const FiniteGraph& g) {
    const std::size_t n = g.vertex_count();
    IntMatrix l(n, n);
    for (const auto& e : g.edges()) {
        l(e.first, e.second) = -1;
        l(e.second, e.first) = -1;
        l(e.first, e.first) += 1;
        l(e.second, e.second) += 1;
    }
    return l;
}

// Graph JSON: {"n": int, "edges": [[i,j], ...]}.
inline nlohmann::ordered_json graph_to_json(const FiniteGraph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.vertex_count();
    auto& edges = j["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : g.edges()) edges.push_back({e.first, e.second});
    return j;
}

inline FiniteGraph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_unsigned())
        throw std::invalid_argument("graph JSON must be {\"n\": int, \"edges\": [...]}");
    FiniteGraph g(j["n"].get<std::size_t>());
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw std::invalid_argument("\"edges\" must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
                !e[1].is_number_unsigned())
                throw std::invalid_argument("edge must be a pair [i,j] of vertex indices");
            g.add_edge(e[0].get<std::size_t>(), e[1].get<std::size_t>());
        }
    }
    return g;
}

inline FiniteGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    nlohmann::json j;
    in >> j;
    return graph_from_json(j);
}

}  // namespace harmonia
