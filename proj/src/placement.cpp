#include "rhombus/placement.hpp"

#include <stdexcept>

namespace rhombus {

const char* to_string(Orientation o) {
    switch (o) {
        case Orientation::down: return "down";
        case Orientation::up: return "up";
        case Orientation::right: return "right";
        case Orientation::left: return "left";
    }
    throw std::invalid_argument("unknown orientation");
}

OrientationMap OrientationMap::of(Orientation o) {
    switch (o) {
        case Orientation::down: return {1, 0, 0, 1};
        case Orientation::up: return {-1, 0, 0, 1};
        case Orientation::right: return {0, 1, 1, 0};
        case Orientation::left: return {0, 1, -1, 0};
    }
    throw std::invalid_argument("unknown orientation");
}

OrientationMap OrientationMap::compose(const OrientationMap& inner) const {
    return {static_cast<std::int8_t>(nn * inner.nn + nk * inner.kn),
            static_cast<std::int8_t>(nn * inner.nk + nk * inner.kk),
            static_cast<std::int8_t>(kn * inner.nn + kk * inner.kn),
            static_cast<std::int8_t>(kn * inner.nk + kk * inner.kk)};
}

OrientationMap OrientationMap::inverse() const {
    // Signed permutation: the inverse is the transpose.
    return {nn, kn, nk, kk};
}

Cell Placement::invert(Cell global) const {
    return map.inverse().apply(global - anchor);
}

Placement Placement::compose(const Placement& child) const {
    return {apply(child.anchor), map.compose(child.map)};
}

}  // namespace rhombus
