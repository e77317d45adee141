#pragma once

#include <stdexcept>
#include <string>

#include "harmonia/label.hpp"

namespace harmonia {

struct non_positive : std::invalid_argument {
    explicit non_positive(const std::string& what) : std::invalid_argument(what) {}
};

// The infinite cross: one degree-4 center (value 0) and four arms of
// degree-2 vertices. Harmonicity at a degree-2 arm vertex forces each arm to
// be an arithmetic progression, so arm values are k * (first arm value); the
// center forces the fourth arm start to d = -a-b-c. Two positive arm starts
// a and b collide: position b on arm a and position a on arm b both carry
// a*b, so no injective harmonic labeling of the cross exists.
struct CrossWitness {
    Label arm_a_position;  // = b
    Label arm_b_position;  // = a
    Label collision_value; // = a * b
    Label forced_d;        // fourth arm start, -a-b-c
};

inline Label cross_arm_value(const Label& first, const Label& position) {
    return first * position;
}

inline CrossWitness cross_collision_witness(const Label& a, const Label& b, const Label& c) {
    if (a <= 0) throw non_positive("arm value a must be positive");
    if (b <= 0) throw non_positive("arm value b must be positive");
    CrossWitness w;
    w.arm_a_position = b;
    w.arm_b_position = a;
    w.collision_value = a * b;
    w.forced_d = -a - b - c;
    return w;
}

}  // namespace harmonia
