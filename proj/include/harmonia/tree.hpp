#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace harmonia {

// Address of a tree vertex: the child-index path from the root. The root is
// the empty path; "0/2" is child 2 of child 0.
struct TreeAddress {
    std::vector<std::uint32_t> path;

    std::size_t depth() const { return path.size(); }
    bool is_root() const { return path.empty(); }

    TreeAddress child(std::uint32_t index) const {
        TreeAddress c(*this);
        c.path.push_back(index);
        return c;
    }

    TreeAddress parent() const {
        if (path.empty()) throw std::logic_error("root has no parent");
        TreeAddress p(*this);
        p.path.pop_back();
        return p;
    }

    friend auto operator<=>(const TreeAddress&, const TreeAddress&) = default;
};

inline std::string to_key(const TreeAddress& a) {
    std::string s;
    for (std::size_t i = 0; i < a.path.size(); ++i) {
        if (i) s += '/';
        s += std::to_string(a.path[i]);
    }
    return s;
}

inline TreeAddress tree_address_from_key(const std::string& key) {
    TreeAddress a;
    if (key.empty()) return a;
    std::size_t pos = 0;
    while (pos <= key.size()) {
        const std::size_t next = key.find('/', pos);
        const std::string part = key.substr(pos, next == std::string::npos ? next : next - pos);
        if (part.empty()) throw std::invalid_argument("bad tree address key: " + key);
        std::size_t used = 0;
        const unsigned long v = std::stoul(part, &used);
        if (used != part.size()) throw std::invalid_argument("bad tree address key: " + key);
        a.path.push_back(static_cast<std::uint32_t>(v));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return a;
}

// Degree profile of an infinite rooted tree, all degrees >= 3. Either one
// uniform degree or per-level degrees (the last entry repeats for deeper
// levels).
class TreeSpec {
public:
    static TreeSpec uniform(unsigned degree) {
        if (degree < 3) throw std::invalid_argument("tree degree must be >= 3");
        TreeSpec s;
        s.levels_ = {degree};
        return s;
    }

    static TreeSpec by_level(std::vector<unsigned> degrees) {
        if (degrees.empty()) throw std::invalid_argument("degree list must be nonempty");
        for (unsigned d : degrees)
            if (d < 3) throw std::invalid_argument("all tree degrees must be >= 3");
        TreeSpec s;
        s.levels_ = std::move(degrees);
        return s;
    }

    unsigned degree_at(const TreeAddress& v) const {
        const std::size_t level = v.depth();
        return levels_[level < levels_.size() ? level : levels_.size() - 1];
    }

    // Number of children below v: degree for the root, degree-1 otherwise.
    unsigned child_count(const TreeAddress& v) const {
        const unsigned d = degree_at(v);
        return v.is_root() ? d : d - 1;
    }

    std::vector<TreeAddress> children(const TreeAddress& v) const {
        std::vector<TreeAddress> out;
        const unsigned c = child_count(v);
        out.reserve(c);
        for (unsigned i = 0; i < c; ++i) out.push_back(v.child(i));
        return out;
    }

    // Parent plus children; the root has no parent.
    std::vector<TreeAddress> neighbors(const TreeAddress& v) const {
        std::vector<TreeAddress> out;
        if (!v.is_root()) out.push_back(v.parent());
        for (auto& c : children(v)) out.push_back(std::move(c));
        return out;
    }

private:
    std::vector<unsigned> levels_;
};

}  // namespace harmonia
