#pragma once

#include "fermat/int.hpp"

namespace fermat {

/// Ordered integer triple, the common currency of the quadratic-equation
/// modules. Components are nonnegative; most producers guarantee more
/// (see each operation).
struct Triple {
    Int x;
    Int y;
    Int z;

    friend bool operator==(const Triple& lhs, const Triple& rhs)
    {
        return lhs.x == rhs.x && lhs.y == rhs.y && lhs.z == rhs.z;
    }

    // lexicographic
    friend bool operator<(const Triple& lhs, const Triple& rhs)
    {
        if (lhs.x != rhs.x) return lhs.x < rhs.x;
        if (lhs.y != rhs.y) return lhs.y < rhs.y;
        return lhs.z < rhs.z;
    }
};

} // namespace fermat
