#include "rhombus/stealth.hpp"

#include <algorithm>
#include <stdexcept>

namespace rhombus {

namespace {

std::int64_t checked_pow2(int order) {
    if (order < 0 || order > 60) throw std::domain_error("stealth order out of range");
    return std::int64_t{1} << order;
}

}  // namespace

const char* to_string(ChildRole r) {
    switch (r) {
        case ChildRole::nose: return "nose";
        case ChildRole::left_wing: return "left_wing";
        case ChildRole::right_wing: return "right_wing";
        case ChildRole::body: return "body";
        case ChildRole::tail: return "tail";
    }
    throw std::invalid_argument("unknown child role");
}

std::int64_t stealth_row_extent(int order) {
    if (order == 0) return 1;
    return 3 * checked_pow2(order - 1);  // 2^n + 2^(n-1)
}

std::array<Cell, 8> octagon_vertices(int order) {
    if (order < 2) throw std::domain_error("octagon is defined for order >= 2");
    const std::int64_t p = checked_pow2(order);
    const std::int64_t h = p / 2, q = p / 4;
    return {Cell{0, 0},        Cell{p, -p},       Cell{p + h, -h}, Cell{p + q, -q},
            Cell{p + h, 0},    Cell{p + q, q},    Cell{p + h, h},  Cell{p, p}};
}

bool region_contains(int order, Cell local) {
    if (order < 0) throw std::domain_error("stealth order must be >= 0");
    if (order == 0) return local == Cell{1, 0};
    if (order == 1) {
        return local == Cell{1, 0} || local == Cell{2, -1} || local == Cell{2, 0} ||
               local == Cell{2, 1};
    }
    // Diagonal coordinates: the octagon becomes a staircase polygon
    //   0 < u < 2P, 0 < v < 2P  minus the two corner steps
    //   {u >= P, v >= P + P/2} and {u >= P + P/2, v >= P}.
    const std::int64_t p = checked_pow2(order);
    const std::int64_t u = local.n + local.k;
    const std::int64_t v = local.n - local.k;
    if (u <= 0 || v <= 0 || u >= 2 * p || v >= 2 * p) return false;
    if (u >= p && v >= p + p / 2) return false;
    if (u >= p + p / 2 && v >= p) return false;
    return true;
}

bool contains(int order, const Placement& placement, Cell c) {
    return region_contains(order, placement.invert(c));
}

BitPattern::Box region_window(int order) {
    if (order < 0) throw std::domain_error("stealth order must be >= 0");
    if (order == 0) return {1, 0, 1, 1};
    if (order == 1) return {1, -1, 2, 3};
    const std::int64_t p = checked_pow2(order);
    return {1, -(p - 1), p + p / 2 - 1, 2 * p - 1};
}

StealthRegion region_cells(int order, const Placement& placement) {
    StealthRegion region{order, placement, {}};
    const auto box = region_window(order);
    for (std::int64_t n = box.n0; n < box.n0 + box.rows; ++n) {
        for (std::int64_t k = box.k0; k < box.k0 + box.cols; ++k) {
            if (region_contains(order, {n, k})) region.cells.push_back(placement.apply({n, k}));
        }
    }
    return region;
}

std::array<ChildPlacement, 5> decompose(int order, const Placement& placement) {
    if (order < 2) throw std::domain_error("decomposition is defined for order >= 2");
    const std::int64_t p = checked_pow2(order);
    const std::int64_t h = p / 2, q = p / 4;
    const auto child = [&](ChildRole role, int o, Cell anchor, Orientation dir) {
        return ChildPlacement{role, o, placement.compose(Placement(anchor, dir))};
    };
    return {
        child(ChildRole::nose, order - 1, {0, 0}, Orientation::down),
        child(ChildRole::left_wing, order - 1, {p, -p}, Orientation::right),
        child(ChildRole::right_wing, order - 1, {p, p}, Orientation::left),
        child(ChildRole::body, order - 2, {p - q, 0}, Orientation::down),
        child(ChildRole::tail, order - 2, {p + h, 0}, Orientation::up),
    };
}

std::array<Cell, 6> corner_cells(int order) {
    if (order < 1) throw std::domain_error("corner cells are defined for order >= 1");
    const std::int64_t p = checked_pow2(order);
    const std::int64_t h = p / 2;
    return {Cell{0, 0},     Cell{p, -p},    Cell{p + h, -h},
            Cell{p + h, 0}, Cell{p + h, h}, Cell{p, p}};
}

std::vector<Cell> exceptional_cells(const BitPattern& p) {
    std::vector<Cell> out;
    const auto& w = p.window();
    if (w.empty()) return out;
    for (std::int64_t n = w.n0 - 1; n <= w.n0 + w.rows; ++n) {
        for (std::int64_t k = w.k0 - 1; k <= w.k0 + w.cols; ++k) {
            const bool odd = p.value({n - 1, k}) ^ p.value({n, k - 1}) ^ p.value({n, k}) ^
                             p.value({n, k + 1}) ^ p.value({n + 1, k});
            if (odd) out.push_back({n, k});
        }
    }
    return out;  // already sorted: row-major scan
}

BitPattern build_stealth(const RowGrid& grid, int order) {
    const auto box = region_window(order);
    if (grid.row_count() < box.n0 + box.rows - 1) {
        throw std::out_of_range("grid too short for the requested stealth order");
    }
    BitPattern p(box);
    for (std::int64_t n = box.n0; n < box.n0 + box.rows; ++n) {
        for (std::int64_t k = box.k0; k < box.k0 + box.cols; ++k) {
            if (region_contains(order, {n, k}) && grid.value({n, k})) p.set({n, k}, true);
        }
    }
    return p;
}

BitPattern build_stealth(int order) {
    return build_stealth(generate(stealth_row_extent(order)), order);
}

BitPattern build_pseudo_stealth(int order) {
    if (order < 0) throw std::domain_error("stealth order must be >= 0");
    std::vector<BitPattern> by_order;
    by_order.reserve(static_cast<std::size_t>(order) + 1);
    {
        BitPattern s0(region_window(0));
        s0.set({1, 0}, true);
        by_order.push_back(std::move(s0));
    }
    if (order >= 1) {
        BitPattern s1(region_window(1));
        for (Cell c : {Cell{1, 0}, Cell{2, -1}, Cell{2, 0}, Cell{2, 1}}) s1.set(c, true);
        by_order.push_back(std::move(s1));
    }
    for (int o = 2; o <= order; ++o) {
        BitPattern assembled(region_window(o));
        for (const auto& ch : decompose(o, Placement::standard())) {
            for (Cell local : by_order[static_cast<std::size_t>(ch.order)].one_cells()) {
                assembled.set(ch.placement.apply(local), true);
            }
        }
        by_order.push_back(std::move(assembled));
    }
    return by_order[static_cast<std::size_t>(order)];
}

BitPattern haystack(const RowGrid& grid, int n) {
    if (n < 0) throw std::domain_error("haystack order must be >= 0");
    const std::int64_t half = checked_pow2(n);  // rows above and including the mirror row
    if (grid.row_count() < half) throw std::out_of_range("grid too short for the haystack");
    BitPattern p({1, -(half - 1), 2 * half - 1, 2 * half - 1});
    for (std::int64_t r = 1; r < 2 * half; ++r) {
        const std::int64_t source = r <= half ? r : 2 * half - r;
        const auto& row = grid.row(source);
        for (std::int64_t k = -(source - 1); k <= source - 1; ++k) {
            if (row.bit(k)) p.set({r, k}, true);
        }
    }
    return p;
}

BitPattern haystack(int n) {
    if (n < 0) throw std::domain_error("haystack order must be >= 0");
    return haystack(generate(checked_pow2(n)), n);
}

HaystackDecomposition haystack_decomposition(int n) {
    if (n < 2) throw std::domain_error("haystack decomposition is defined for n >= 2");
    const std::int64_t p = checked_pow2(n);
    return HaystackDecomposition{
        n - 1,
        {Placement({0, 0}, Orientation::down), Placement({p, -p}, Orientation::right),
         Placement({p, p}, Orientation::left), Placement({2 * p, 0}, Orientation::up)},
        n - 2,
        Cell{p - p / 4, 0},
    };
}

}  // namespace rhombus
