#pragma once

#include <cstdint>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "harmonia/label.hpp"
#include "harmonia/labeling.hpp"
#include "harmonia/tree.hpp"

namespace harmonia {

// Greedy recursive labeling of trees with all degrees >= 3.
//
// Two kinds of values drive the construction:
//   fill values   - the unused integer of minimal absolute value, injected to
//                   sweep the image over all of Z;
//   escape values - huge values injected so that the harmonically forced
//                   sibling also lands outside every previously used label.
//
// A parent with c unlabeled children takes c-2 fills, one escape, and one
// forced value (possible for c >= 3). A non-root vertex of degree 3 has only
// c = 2 children, so the step descends two levels: one child gets
// b1 = (a1 + f + m1)/deg with the fill m1 and the escape a1 placed below it
// (a1 chosen in the residue class making b1 an integer), the sibling gets the
// value b2 forced at the parent, and b2's own children absorb a second fill
// plus the value forced at b2.
//
// Escape schedule: |a| starts at 2*(sum of |labels so far|) + step index,
// sign alternating, and doubles until both dominance inequalities hold
// (|a| > 2*max prior |label| and every forced value exceeds max prior
// |label| in absolute value) and all new values are fresh and distinct.

struct FrontierState {
    TreeSpec spec;
    PartialLabeling<TreeAddress> labeling;
    Label abs_sum = 0;       // sum of |labels|
    Label max_abs = 0;       // max |label|
    long step_index = 0;     // parents processed so far (root bootstrap = 1)
    long fill_count = 0;
    long retry_count = 0;    // escape doublings beyond the first attempt
    int escape_sign = 1;

    explicit FrontierState(TreeSpec s) : spec(std::move(s)) {
        record(TreeAddress{}, take_fill());  // root gets the first fill, 0
        pending_.push({0, 0, TreeAddress{}});
    }

    bool has_pending() const { return !pending_.empty(); }
    const TreeAddress& next_parent() const { return pending_.top().vertex; }

    // Minimal-|z| integer not yet used; nonnegative preferred, and -m when
    // +m is taken.
    Label peek_fill() const {
        Label z = 0;
        while (true) {
            if (!labeling.uses(z)) return z;
            if (z > 0 && !labeling.uses(-z)) return -z;
            ++z;
        }
    }

    // One construction step: process the next pending parent in
    // breadth-first order.
    void step() {
        if (pending_.empty()) throw std::logic_error("no pending parent");
        const TreeAddress p = pending_.top().vertex;
        pending_.pop();
        ++step_index;
        if (spec.child_count(p) >= 3)
            extend_one_level(p);
        else
            extend_two_level(p);
    }

private:
    struct PendingParent {
        std::size_t depth;
        std::uint64_t seq;
        TreeAddress vertex;
        bool operator>(const PendingParent& o) const {
            return depth != o.depth ? depth > o.depth : seq > o.seq;
        }
    };

    std::priority_queue<PendingParent, std::vector<PendingParent>, std::greater<>> pending_;
    std::uint64_t seq_ = 0;

    Label take_fill() {
        Label m = peek_fill();
        ++fill_count;
        return m;
    }

    void record(const TreeAddress& v, const Label& value) {
        auto res = labeling.insert(v, value);
        if (!res.ok) throw std::logic_error("fresh value collided; schedule broken");
        abs_sum += abs(value);
        if (abs(value) > max_abs) max_abs = abs(value);
    }

    void enqueue(const TreeAddress& v) { pending_.push({v.depth(), seq_++, v}); }

    Label escape_seed() {
        Label a = escape_sign * (2 * abs_sum + step_index);
        escape_sign = -escape_sign;
        if (a == 0) a = 1;
        return a;
    }

    static Label mod_adjust(Label a, const Label& target_sum, unsigned modulus) {
        // smallest delta >= 0 with (target_sum + a + delta) % modulus == 0
        Label delta = (-(target_sum + a)) % modulus;
        if (delta < 0) delta += modulus;
        return a + delta;
    }

    // c >= 3 children: c-2 fills, one escape, one value forced by
    // harmonicity at the parent (sum of children = deg*f - f').
    void extend_one_level(const TreeAddress& p) {
        const Label f = labeling.at(p);
        const Label fp = p.is_root() ? Label(0) : labeling.at(p.parent());
        const unsigned d = spec.degree_at(p);
        const auto children = spec.children(p);
        const std::size_t c = children.size();

        Label fills_sum = 0;
        for (std::size_t j = 0; j + 2 < c; ++j) {
            Label m = take_fill();
            fills_sum += m;
            record(children[j], m);
        }

        const Label prior_max = max_abs;
        Label a = escape_seed();
        for (int attempt = 0;; ++attempt) {
            if (attempt > 0) {
                a *= 2;
                ++retry_count;
            }
            if (attempt > 64) throw std::logic_error("escape schedule failed to separate");
            const Label b = d * f - fp - fills_sum - a;
            if (abs(a) <= 2 * prior_max) continue;
            if (abs(b) <= prior_max) continue;
            if (a == b || labeling.uses(a) || labeling.uses(b)) continue;
            record(children[c - 2], a);
            record(children[c - 1], b);
            break;
        }
        for (const auto& ch : children) enqueue(ch);
    }

    // Degree-3 parent, two unlabeled children: the two-level step. Labels
    // both children and all four grandchildren; the grandchildren become the
    // new frontier (the children are already harmonic and fully surrounded).
    void extend_two_level(const TreeAddress& p) {
        if (p.is_root()) throw std::logic_error("root must have >= 3 children");
        const Label f = labeling.at(p);
        const Label fp = labeling.at(p.parent());
        const auto children = spec.children(p);
        if (children.size() != 2) throw std::logic_error("two-level step needs exactly 2 children");
        const TreeAddress u = children[0];
        const TreeAddress w = children[1];
        const unsigned du = spec.degree_at(u);
        const unsigned dw = spec.degree_at(w);
        const auto gu = spec.children(u);
        const auto gw = spec.children(w);

        Label mu_sum = 0;  // fills under u
        std::vector<Label> u_fills;
        for (std::size_t j = 0; j + 1 < gu.size(); ++j) {
            Label m = take_fill();
            mu_sum += m;
            u_fills.push_back(m);
            record(gu[j], m);
        }
        Label mw_sum = 0;  // fills under w
        std::vector<Label> w_fills;
        for (std::size_t j = 0; j + 1 < gw.size(); ++j) {
            Label m = take_fill();
            mw_sum += m;
            w_fills.push_back(m);
            record(gw[j], m);
        }

        const Label prior_max = max_abs;
        Label a1 = escape_seed();
        for (int attempt = 0;; ++attempt) {
            if (attempt > 0) {
                a1 *= 2;
                ++retry_count;
            }
            if (attempt > 64) throw std::logic_error("escape schedule failed to separate");
            const Label a = mod_adjust(a1, f + mu_sum, du);
            const Label b1 = (f + mu_sum + a) / du;
            const Label b2 = 3 * f - fp - b1;                // forced at p
            const Label a2 = dw * b2 - f - mw_sum;           // forced at w
            if (abs(a) <= 2 * prior_max) continue;
            if (abs(b1) <= prior_max || abs(b2) <= prior_max || abs(a2) <= prior_max) continue;
            const Label vals[4] = {a, b1, b2, a2};
            bool clean = true;
            for (int i = 0; i < 4 && clean; ++i) {
                if (labeling.uses(vals[i])) clean = false;
                for (int j = i + 1; j < 4; ++j)
                    if (vals[i] == vals[j]) clean = false;
            }
            if (!clean) continue;
            record(u, b1);
            record(w, b2);
            record(gu.back(), a);
            record(gw.back(), a2);
            break;
        }
        for (const auto& g : gu) enqueue(g);
        for (const auto& g : gw) enqueue(g);
    }
};

// Spec'd single-step entry points. Both act on the next pending parent.
inline Label next_fill_value(const FrontierState& state) { return state.peek_fill(); }

inline void extend_regular(FrontierState& state) {
    if (state.spec.child_count(state.next_parent()) < 3)
        throw std::logic_error("next parent has too few children for a one-level step");
    state.step();
}

inline void extend_threeregular(FrontierState& state) {
    if (state.spec.child_count(state.next_parent()) != 2)
        throw std::logic_error("next parent is not a degree-3 two-level case");
    state.step();
}

// Forced-value helpers, exposed for direct checking.
inline Label forced_sibling_value(unsigned degree, const Label& parent, const Label& grandparent,
                                  const Label& fill, const Label& escape) {
    return degree * parent - grandparent - fill - escape;
}

inline Label three_regular_leaf_value(const Label& parent, const Label& fill, const Label& escape) {
    const Label sum = escape + parent + fill;
    if (sum % 3 != 0) throw std::invalid_argument("escape not in the divisibility class");
    return sum / 3;
}

struct TreeLabeling {
    PartialLabeling<TreeAddress> labeling;
    long fill_count = 0;
    long retry_count = 0;
    std::vector<TreeAddress> interior;  // labeled vertices with all neighbors labeled
};

inline TreeLabeling label_tree(const TreeSpec& spec, long steps) {
    FrontierState state(spec);
    for (long s = 0; s < steps && state.has_pending(); ++s) state.step();
    TreeLabeling out;
    out.fill_count = state.fill_count;
    out.retry_count = state.retry_count;
    for (const auto& [v, value] : state.labeling.forward()) {
        bool surrounded = v.is_root() || state.labeling.has(v.parent());
        for (const auto& c : spec.children(v))
            if (!state.labeling.has(c)) {
                surrounded = false;
                break;
            }
        if (surrounded) out.interior.push_back(v);
    }
    out.labeling = std::move(state.labeling);
    return out;
}

}  // namespace harmonia
