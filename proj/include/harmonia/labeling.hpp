#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "harmonia/label.hpp"
#include "harmonia/parallel.hpp"

namespace harmonia {

struct unlabeled_neighbor : std::runtime_error {
    explicit unlabeled_neighbor(const std::string& what) : std::runtime_error(what) {}
};

// Bidirectional vertex <-> label map. The two maps are kept mutually inverse
// at all times, which makes injectivity a structural invariant rather than a
// property to re-check: inserting an already-used label is rejected and the
// existing holder is reported as the collision witness.
template <typename V>
class PartialLabeling {
public:
    struct InsertResult {
        bool ok = false;
        std::optional<V> colliding_vertex;  // holder of the label when !ok
    };

    InsertResult insert(const V& vertex, const Label& value) {
        if (forward_.count(vertex)) throw std::logic_error("vertex already labeled");
        auto [it, fresh] = reverse_.try_emplace(value, vertex);
        if (!fresh) return {false, it->second};
        forward_.emplace(vertex, value);
        return {true, std::nullopt};
    }

    void erase(const V& vertex) {
        auto it = forward_.find(vertex);
        if (it == forward_.end()) return;
        reverse_.erase(it->second);
        forward_.erase(it);
    }

    bool has(const V& vertex) const { return forward_.count(vertex) > 0; }

    const Label* find(const V& vertex) const {
        auto it = forward_.find(vertex);
        return it == forward_.end() ? nullptr : &it->second;
    }

    const Label& at(const V& vertex) const {
        auto it = forward_.find(vertex);
        if (it == forward_.end()) throw unlabeled_neighbor("vertex has no label");
        return it->second;
    }

    const V* vertex_of(const Label& value) const {
        auto it = reverse_.find(value);
        return it == reverse_.end() ? nullptr : &it->second;
    }

    bool uses(const Label& value) const { return reverse_.count(value) > 0; }

    std::size_t size() const { return forward_.size(); }
    bool empty() const { return forward_.empty(); }

    const std::map<V, Label>& forward() const { return forward_; }
    const std::map<Label, V>& reverse() const { return reverse_; }

private:
    std::map<V, Label> forward_;
    std::map<Label, V> reverse_;
};

template <typename V>
struct HarmonicViolation {
    V vertex;
    Label scaled_value;  // deg(x) * phi(x)
    Label neighbor_sum;  // sum over y ~ x of phi(y)
};

// Exact harmonicity test on an interior set: x passes iff
// deg(x)*phi(x) == sum of neighbor labels, as integers (no division).
// Every vertex in `interior` must have all its neighbors labeled.
template <typename V, typename NeighborFn>
std::vector<HarmonicViolation<V>> check_harmonic(const PartialLabeling<V>& labeling,
                                                 const std::vector<V>& interior,
                                                 NeighborFn&& neighbors_of) {
    std::vector<std::vector<HarmonicViolation<V>>> found;
    std::vector<std::string> errors;
    std::mutex merge;
    parallel_chunks(interior.size(), [&](std::size_t lo, std::size_t hi) {
        std::vector<HarmonicViolation<V>> local;
        std::string error;
        try {
            for (std::size_t i = lo; i < hi; ++i) {
                const V& x = interior[i];
                const Label& phi = labeling.at(x);
                const auto nbrs = neighbors_of(x);
                Label sum = 0;
                for (const V& y : nbrs) {
                    const Label* ly = labeling.find(y);
                    if (!ly) throw unlabeled_neighbor("neighbor of an interior vertex has no label");
                    sum += *ly;
                }
                Label scaled = phi * static_cast<std::int64_t>(nbrs.size());
                if (scaled != sum)
                    local.push_back({x, std::move(scaled), std::move(sum)});
            }
        } catch (const std::exception& e) {
            error = e.what();
        }
        std::lock_guard<std::mutex> lock(merge);
        if (!error.empty()) errors.push_back(error);
        if (!local.empty()) found.push_back(std::move(local));
    });
    if (!errors.empty()) throw unlabeled_neighbor(errors.front());
    std::vector<HarmonicViolation<V>> out;
    for (auto& chunk : found)
        for (auto& v : chunk) out.push_back(std::move(v));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.vertex < b.vertex; });
    return out;
}

// Windowed surjectivity proxy: which integers of [-M, M] are attained.
struct CoverageReport {
    std::int64_t window = 0;     // M
    std::int64_t attained = 0;   // |image ∩ [-M, M]|
    std::vector<std::int64_t> gaps;  // sorted integers of [-M, M] not attained
    double density = 0.0;        // attained / (2M + 1)

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["window"] = window;
        j["attained"] = attained;
        j["gaps"] = gaps;
        j["density"] = density;
        return j;
    }
};

template <typename V>
CoverageReport coverage(const PartialLabeling<V>& labeling, std::int64_t window) {
    if (window < 0) throw std::invalid_argument("coverage window must be >= 0");
    CoverageReport r;
    r.window = window;
    for (std::int64_t z = -window; z <= window; ++z) {
        if (labeling.uses(Label(z)))
            ++r.attained;
        else
            r.gaps.push_back(z);
    }
    r.density = static_cast<double>(r.attained) / static_cast<double>(2 * window + 1);
    return r;
}

// Labeling JSON: a list of {"v": key, "label": "<decimal>"}; labels go through
// decimal strings because they exceed every native integer range. Entries are
// emitted in key order of the forward map, so serialization is deterministic
// and write -> read -> write is byte-stable.
template <typename V, typename KeyFn>
nlohmann::ordered_json labeling_to_json(const PartialLabeling<V>& labeling, KeyFn&& key_of) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [v, label] : labeling.forward()) {
        nlohmann::ordered_json entry;
        entry["v"] = key_of(v);
        entry["label"] = to_decimal(label);
        arr.push_back(std::move(entry));
    }
    return arr;
}

template <typename V>
struct LabelingReadResult {
    PartialLabeling<V> labeling;
    // (new vertex, existing vertex, shared value) triples found while reading
    std::vector<std::tuple<V, V, Label>> collisions;
};

template <typename V, typename ParseKeyFn>
LabelingReadResult<V> labeling_from_json(const nlohmann::json& j, ParseKeyFn&& parse_key) {
    if (!j.is_array()) throw std::invalid_argument("labeling JSON must be an array");
    LabelingReadResult<V> out;
    for (const auto& entry : j) {
        if (!entry.is_object() || !entry.contains("v") || !entry.contains("label") ||
            !entry["v"].is_string() || !entry["label"].is_string())
            throw std::invalid_argument("labeling entry must be {\"v\": key, \"label\": decimal}");
        V vertex = parse_key(entry["v"].template get<std::string>());
        Label value = parse_label(entry["label"].template get<std::string>());
        auto res = out.labeling.insert(vertex, value);
        if (!res.ok) out.collisions.emplace_back(vertex, *res.colliding_vertex, value);
    }
    return out;
}

template <typename V, typename KeyFn>
void save_labeling(const PartialLabeling<V>& labeling, const std::string& path, KeyFn&& key_of) {
    std::ofstream outf(path);
    if (!outf) throw std::runtime_error("cannot open output file: " + path);
    outf << labeling_to_json(labeling, key_of).dump(1) << "\n";
}

}  // namespace harmonia
