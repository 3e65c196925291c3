#include "rhombus/render.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rhombus/stealth.hpp"

namespace rhombus {

namespace {

BitPattern rows_pattern(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("row source needs m >= 1");
    const auto grid = generate(m);
    BitPattern p({1, -(m - 1), m, 2 * m - 1});
    for (std::int64_t n = 1; n <= m; ++n) {
        for (std::int64_t k = -(n - 1); k <= n - 1; ++k) {
            if (grid.row(n).bit(k)) p.set({n, k}, true);
        }
    }
    return p;
}

void check_width(const RenderSpec& spec, std::int64_t width) {
    if (width > spec.max_width) {
        throw std::length_error("render width exceeds the configured cap");
    }
}

// Minimal decimal formatting: integers print without a trailing ".0".
std::string num(double v) {
    if (v == std::floor(v) && std::abs(v) < 1e15) {
        return std::to_string(static_cast<long long>(v));
    }
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace

BitPattern render_source(const RenderSpec& spec) {
    switch (spec.source) {
        case RenderSpec::Source::rows: return rows_pattern(spec.param);
        case RenderSpec::Source::stealth: return build_stealth(static_cast<int>(spec.param));
        case RenderSpec::Source::haystack: return haystack(static_cast<int>(spec.param));
    }
    throw std::invalid_argument("unknown render source");
}

std::string render_pbm(const RenderSpec& spec) {
    const BitPattern p = render_source(spec);
    const auto& w = p.window();
    check_width(spec, w.cols);
    std::ostringstream os;
    if (spec.format == RenderSpec::Format::pbm_packed) {
        os << "P4\n" << w.cols << ' ' << w.rows << '\n';
        for (std::int64_t n = w.n0; n < w.n0 + w.rows; ++n) {
            std::uint8_t byte = 0;
            int filled = 0;
            for (std::int64_t k = w.k0; k < w.k0 + w.cols; ++k) {
                byte = static_cast<std::uint8_t>((byte << 1) | (p.value({n, k}) ? 1 : 0));
                if (++filled == 8) {
                    os.put(static_cast<char>(byte));
                    byte = 0;
                    filled = 0;
                }
            }
            if (filled > 0) os.put(static_cast<char>(byte << (8 - filled)));
        }
        return os.str();
    }
    os << "P1\n" << w.cols << ' ' << w.rows << '\n';
    for (std::int64_t n = w.n0; n < w.n0 + w.rows; ++n) {
        for (std::int64_t k = w.k0; k < w.k0 + w.cols; ++k) {
            if (k != w.k0) os << ' ';
            os << (p.value({n, k}) ? '1' : '0');
        }
        os << '\n';
    }
    return os.str();
}

std::string render_svg(const RenderSpec& spec) {
    const BitPattern p = render_source(spec);
    const auto& w = p.window();
    check_width(spec, w.cols);
    const double cs = spec.cell_size;
    // One cell of margin so overlay geometry on the window border fits.
    const auto px = [&](std::int64_t k) { return (static_cast<double>(k - w.k0) + 1) * cs; };
    const auto py = [&](std::int64_t n) { return (static_cast<double>(n - w.n0) + 1) * cs; };
    const double width = (static_cast<double>(w.cols) + 2) * cs;
    const double height = (static_cast<double>(w.rows) + 2) * cs;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
       << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
    os << "<rect id=\"background\" x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\""
       << num(height) << "\" fill=\"white\"/>\n";

    os << "<g id=\"cells\" fill=\"black\">\n";
    for (std::int64_t n = w.n0; n < w.n0 + w.rows; ++n) {
        for (std::int64_t k = w.k0; k < w.k0 + w.cols; ++k) {
            if (!p.value({n, k})) continue;
            os << "<rect x=\"" << num(px(k)) << "\" y=\"" << num(py(n)) << "\" width=\""
               << num(cs) << "\" height=\"" << num(cs) << "\"/>\n";
        }
    }
    os << "</g>\n";

    const auto cell_center = [&](Cell c) {
        return std::pair<double, double>{px(c.k) + cs / 2, py(c.n) + cs / 2};
    };
    const auto polygon = [&](std::ostream& dst, const auto& cells, const char* extra) {
        dst << "<polygon points=\"";
        bool first = true;
        std::ostringstream data;
        for (Cell c : cells) {
            const auto [x, y] = cell_center(c);
            if (!first) {
                dst << ' ';
                data << ' ';
            }
            dst << num(x) << ',' << num(y);
            data << c.n << ',' << c.k;
            first = false;
        }
        dst << "\" data-cells=\"" << data.str() << "\"" << extra << "/>\n";
    };

    const bool is_stealth = spec.source == RenderSpec::Source::stealth;
    const int order = static_cast<int>(spec.param);

    if (spec.overlay_octagon) {
        if (!is_stealth) throw std::domain_error("octagon overlay applies to stealth sources");
        os << "<g id=\"octagon\" fill=\"none\" stroke=\"#d22\" stroke-width=\""
           << spec.stroke_width << "\">\n";
        polygon(os, octagon_vertices(order), "");
        os << "</g>\n";
    }

    if (spec.overlay_decomposition) {
        os << "<g id=\"decomposition\" fill=\"none\" stroke=\"#282\" stroke-width=\""
           << spec.stroke_width << "\">\n";
        const auto outline_box = [&](BitPattern::Box box, const Placement& placement,
                                     const std::string& extra) {
            const Cell a = placement.apply({box.n0, box.k0});
            const Cell b = placement.apply({box.n0 + box.rows - 1, box.k0 + box.cols - 1});
            const double x0 = px(std::min(a.k, b.k)), x1 = px(std::max(a.k, b.k)) + cs;
            const double y0 = py(std::min(a.n, b.n)), y1 = py(std::max(a.n, b.n)) + cs;
            os << "<rect x=\"" << num(x0) << "\" y=\"" << num(y0) << "\" width=\""
               << num(x1 - x0) << "\" height=\"" << num(y1 - y0) << "\"" << extra << "/>\n";
        };
        const auto outline_child = [&](int child_order, const Placement& placement,
                                       const char* role) {
            std::string extra = std::string(" data-role=\"") + role + "\"";
            if (child_order >= 2) {
                std::array<Cell, 8> verts = octagon_vertices(child_order);
                for (Cell& v : verts) v = placement.apply(v);
                polygon(os, verts, extra.c_str());
            } else {
                // Orders 0 and 1 have no octagon; outline the cell block.
                outline_box(region_window(child_order), placement, extra);
            }
        };
        if (is_stealth) {
            if (order < 2) throw std::domain_error("decomposition overlay needs order >= 2");
            for (const auto& ch : decompose(order, Placement::standard())) {
                outline_child(ch.order, ch.placement, to_string(ch.role));
            }
        } else if (spec.source == RenderSpec::Source::haystack) {
            if (order < 2) throw std::domain_error("decomposition overlay needs order >= 2");
            const auto hd = haystack_decomposition(order);
            const char* roles[] = {"top", "left", "right", "bottom"};
            for (int i = 0; i < 4; ++i) outline_child(hd.corner_order, hd.corners[i], roles[i]);
            const std::int64_t half = std::int64_t{1} << hd.center_order;
            outline_box({1, -(half - 1), 2 * half - 1, 2 * half - 1},
                        Placement(hd.center_offset, Orientation::down),
                        " data-role=\"center\"");
        } else {
            throw std::domain_error("decomposition overlay applies to region sources");
        }
        os << "</g>\n";
    }

    if (spec.overlay_exceptional) {
        os << "<g id=\"exceptional\" fill=\"none\" stroke=\"#22d\" stroke-width=\""
           << spec.stroke_width << "\">\n";
        for (Cell c : exceptional_cells(p)) {
            const auto [x, y] = cell_center(c);
            os << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"" << num(cs / 2)
               << "\" data-cell=\"" << c.n << ',' << c.k << "\"/>\n";
        }
        os << "</g>\n";
    }

    os << "</svg>\n";
    return os.str();
}

PbmImage parse_pbm(const std::string& bytes) {
    std::size_t pos = 0;
    const auto skip_space = [&](bool comments) {
        while (pos < bytes.size()) {
            if (std::isspace(static_cast<unsigned char>(bytes[pos]))) {
                ++pos;
            } else if (comments && bytes[pos] == '#') {
                while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
            } else {
                break;
            }
        }
    };
    const auto read_int = [&]() {
        skip_space(true);
        std::size_t start = pos;
        while (pos < bytes.size() && std::isdigit(static_cast<unsigned char>(bytes[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("malformed PBM header");
        return std::stoll(bytes.substr(start, pos - start));
    };

    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '1' && bytes[1] != '4')) {
        throw std::invalid_argument("not a PBM document");
    }
    const bool packed = bytes[1] == '4';
    pos = 2;
    PbmImage img;
    img.width = read_int();
    img.height = read_int();
    if (img.width < 0 || img.height < 0) throw std::invalid_argument("negative PBM size");
    img.pixels.assign(static_cast<std::size_t>(img.width * img.height), 0);

    if (packed) {
        ++pos;  // single whitespace byte after the header
        const std::size_t stride = static_cast<std::size_t>((img.width + 7) / 8);
        if (bytes.size() - pos < stride * static_cast<std::size_t>(img.height)) {
            throw std::invalid_argument("truncated P4 raster");
        }
        for (std::int64_t y = 0; y < img.height; ++y) {
            for (std::int64_t x = 0; x < img.width; ++x) {
                const auto byte = static_cast<std::uint8_t>(
                    bytes[pos + static_cast<std::size_t>(y) * stride +
                          static_cast<std::size_t>(x / 8)]);
                img.pixels[static_cast<std::size_t>(y * img.width + x)] =
                    (byte >> (7 - x % 8)) & 1;
            }
        }
        return img;
    }
    for (std::int64_t i = 0; i < img.width * img.height; ++i) {
        skip_space(true);
        if (pos >= bytes.size() || (bytes[pos] != '0' && bytes[pos] != '1')) {
            throw std::invalid_argument("malformed P1 raster");
        }
        img.pixels[static_cast<std::size_t>(i)] = bytes[pos] == '1';
        ++pos;
    }
    return img;
}

}  // namespace rhombus
