#pragma once

#include <cstdint>

#include "rhombus/cell.hpp"

namespace rhombus {

// Growth direction of a placed stealth configuration's rows.
enum class Orientation { down, up, right, left };

const char* to_string(Orientation o);

// Signed axis permutation of displacements (an element of the square's
// symmetry group). The four named orientations map to:
//   down : (dn,dk) -> ( dn,  dk)      identity, standard position
//   up   : (dn,dk) -> (-dn,  dk)
//   right: (dn,dk) -> ( dk,  dn)
//   left : (dn,dk) -> ( dk, -dn)
// Composition can produce any of the eight group elements; on the
// bilaterally symmetric stealth patterns the extra elements place the
// same cell sets as the named four.
struct OrientationMap {
    std::int8_t nn = 1, nk = 0, kn = 0, kk = 1;

    static OrientationMap of(Orientation o);

    constexpr Cell apply(Cell d) const {
        return {nn * d.n + nk * d.k, kn * d.n + kk * d.k};
    }
    OrientationMap compose(const OrientationMap& inner) const;  // this after inner
    OrientationMap inverse() const;

    friend constexpr bool operator==(const OrientationMap&, const OrientationMap&) = default;
};

// Rigid placement: the anchor is the image of the standard-position
// virtual origin (0,0), not of the nose cell (1,0).
struct Placement {
    Cell anchor{};
    OrientationMap map{};

    Placement() = default;
    Placement(Cell a, Orientation o) : anchor(a), map(OrientationMap::of(o)) {}
    Placement(Cell a, OrientationMap m) : anchor(a), map(m) {}

    static Placement standard() { return {}; }

    constexpr Cell apply(Cell local) const { return anchor + map.apply(local); }
    Cell invert(Cell global) const;

    // this o child: apply child in this placement's frame.
    Placement compose(const Placement& child) const;

    friend bool operator==(const Placement&, const Placement&) = default;
};

// Applies the orientation map, then translates by the anchor.
inline Cell transform_cell(Cell local, const Placement& p) { return p.apply(local); }

}  // namespace rhombus
