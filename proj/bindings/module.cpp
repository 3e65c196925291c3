#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rhombus/analysis.hpp"
#include "rhombus/diagonal.hpp"
#include "rhombus/grid.hpp"
#include "rhombus/oeis.hpp"
#include "rhombus/render.hpp"
#include "rhombus/sequences.hpp"
#include "rhombus/stealth.hpp"

namespace py = pybind11;
using namespace rhombus;

namespace {

py::object to_pyint(const BigInt& v) {
    return py::module_::import("builtins").attr("int")(v.str());
}

py::object report_dict(const VerificationReport& r) {
    return py::module_::import("json").attr("loads")(r.to_json().dump());
}

Cell as_cell(std::pair<std::int64_t, std::int64_t> p) { return {p.first, p.second}; }

std::pair<std::int64_t, std::int64_t> as_pair(Cell c) { return {c.n, c.k}; }

RenderSpec make_spec(const std::string& source, std::int64_t param, bool packed,
                     const std::vector<std::string>& overlays, int cell_size) {
    RenderSpec spec;
    if (source == "rows") {
        spec.source = RenderSpec::Source::rows;
    } else if (source == "stealth") {
        spec.source = RenderSpec::Source::stealth;
    } else if (source == "haystack") {
        spec.source = RenderSpec::Source::haystack;
    } else {
        throw std::invalid_argument("unknown render source: " + source);
    }
    spec.param = param;
    spec.format = packed ? RenderSpec::Format::pbm_packed : RenderSpec::Format::pbm;
    spec.cell_size = cell_size;
    for (const auto& o : overlays) {
        if (o == "decomposition") spec.overlay_decomposition = true;
        else if (o == "exceptional") spec.overlay_exceptional = true;
        else if (o == "octagon") spec.overlay_octagon = true;
        else throw std::invalid_argument("unknown overlay: " + o);
    }
    return spec;
}

std::string bits_string(const BitRow& row) {
    std::string s;
    for (std::int64_t k = -(row.index() - 1); k <= row.index() - 1; ++k) {
        s.push_back(row.bit(k) ? '1' : '0');
    }
    return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Pascal rhombus (mod 2): bit-parallel generation, stealth-configuration "
              "geometry and machine verification of the classical conjectures";

    py::class_<RowGrid>(m, "RowGrid")
        .def_property_readonly("row_count", &RowGrid::row_count)
        .def("value",
             [](const RowGrid& g, std::pair<std::int64_t, std::int64_t> c) {
                 return g.value(as_cell(c));
             },
             py::arg("cell"))
        .def("row_bits",
             [](const RowGrid& g, std::int64_t n) { return bits_string(g.row(n)); },
             py::arg("n"))
        .def("row_ones", &RowGrid::row_ones, py::arg("m"))
        .def("cumulative_ones",
             [](const RowGrid& g, std::int64_t m) {
                 const auto c = g.cumulative_ones(m);
                 return std::pair<std::uint64_t, std::uint64_t>{c.ones, c.zeros};
             },
             py::arg("m"));

    m.def("generate", &generate, py::arg("rows"));

    py::class_<IntRowGrid>(m, "IntRowGrid")
        .def_property_readonly("row_count", &IntRowGrid::row_count)
        .def("value",
             [](const IntRowGrid& g, std::pair<std::int64_t, std::int64_t> c) {
                 return to_pyint(g.value(as_cell(c)));
             },
             py::arg("cell"))
        .def("row",
             [](const IntRowGrid& g, std::int64_t n) {
                 py::list out;
                 for (const auto& v : g.row(n)) out.append(to_pyint(v));
                 return out;
             },
             py::arg("n"));

    m.def("generate_integer", &generate_integer, py::arg("rows"));

    py::enum_<Orientation>(m, "Orientation")
        .value("DOWN", Orientation::down)
        .value("UP", Orientation::up)
        .value("RIGHT", Orientation::right)
        .value("LEFT", Orientation::left);

    py::class_<Placement>(m, "Placement")
        .def(py::init([](std::pair<std::int64_t, std::int64_t> anchor, Orientation o) {
                 return Placement(as_cell(anchor), o);
             }),
             py::arg("anchor"), py::arg("orientation"))
        .def_static("standard", &Placement::standard)
        .def("apply",
             [](const Placement& p, std::pair<std::int64_t, std::int64_t> local) {
                 return as_pair(p.apply(as_cell(local)));
             },
             py::arg("local"));

    py::class_<BitPattern>(m, "BitPattern")
        .def("value",
             [](const BitPattern& p, std::pair<std::int64_t, std::int64_t> c) {
                 return p.value(as_cell(c));
             },
             py::arg("cell"))
        .def_property_readonly("ones", &BitPattern::ones)
        .def_property_readonly("window",
                               [](const BitPattern& p) {
                                   const auto& w = p.window();
                                   return std::tuple<std::int64_t, std::int64_t, std::int64_t,
                                                     std::int64_t>{w.n0, w.k0, w.rows, w.cols};
                               })
        .def("one_cells",
             [](const BitPattern& p) {
                 std::vector<std::pair<std::int64_t, std::int64_t>> out;
                 for (Cell c : p.one_cells()) out.push_back(as_pair(c));
                 return out;
             })
        .def("__eq__", [](const BitPattern& a, const BitPattern& b) { return a == b; },
             py::is_operator());

    m.def("octagon_vertices",
          [](int order) {
              std::vector<std::pair<std::int64_t, std::int64_t>> out;
              for (Cell c : octagon_vertices(order)) out.push_back(as_pair(c));
              return out;
          },
          py::arg("order"));
    m.def("contains",
          [](int order, const Placement& placement, std::pair<std::int64_t, std::int64_t> c) {
              return contains(order, placement, as_cell(c));
          },
          py::arg("order"), py::arg("placement"), py::arg("cell"));
    m.def("region_cell_count",
          [](int order) { return region_cells(order, Placement::standard()).cells.size(); },
          py::arg("order"));
    m.def("decompose",
          [](int order) {
              py::list out;
              for (const auto& ch : decompose(order, Placement::standard())) {
                  py::dict d;
                  d["role"] = to_string(ch.role);
                  d["order"] = ch.order;
                  d["placement"] = py::cast(ch.placement);
                  out.append(d);
              }
              return out;
          },
          py::arg("order"));
    m.def("corner_cells",
          [](int order) {
              std::vector<std::pair<std::int64_t, std::int64_t>> out;
              for (Cell c : corner_cells(order)) out.push_back(as_pair(c));
              return out;
          },
          py::arg("order"));
    m.def("exceptional_cells",
          [](const BitPattern& p) {
              std::vector<std::pair<std::int64_t, std::int64_t>> out;
              for (Cell c : exceptional_cells(p)) out.push_back(as_pair(c));
              return out;
          },
          py::arg("pattern"));
    m.def("build_stealth", py::overload_cast<int>(&build_stealth), py::arg("order"));
    m.def("build_pseudo_stealth", &build_pseudo_stealth, py::arg("order"));
    m.def("haystack", py::overload_cast<int>(&haystack), py::arg("n"));

    m.def("sequence",
          [](const std::string& name, int max_n) {
              const auto sn = seq_from_string(name);
              if (!sn) throw std::invalid_argument("unknown sequence name: " + name);
              const auto table = sequence(*sn, max_n);
              py::list values;
              for (const auto& v : table.values) values.append(to_pyint(v));
              return py::make_tuple(table.first_index, values);
          },
          py::arg("name"), py::arg("max_n"));

    m.def("spine_ones", &spine_ones, py::arg("grid"), py::arg("n"));
    m.def("verify_conjecture1",
          [](const RowGrid& g, int n) { return report_dict(verify_conjecture1(g, n)); },
          py::arg("grid"), py::arg("n"));
    m.def("verify_conjecture2",
          [](const RowGrid& g, int n) { return report_dict(verify_conjecture2(g, n)); },
          py::arg("grid"), py::arg("n"));
    m.def("verify_conjecture3",
          [](const RowGrid& g, std::int64_t k, std::int64_t horizon) {
              return report_dict(verify_conjecture3(g, k, horizon));
          },
          py::arg("grid"), py::arg("k"), py::arg("horizon"));
    m.def("verify_conjecture4",
          [](const RowGrid& g, std::int64_t rows) {
              return report_dict(verify_conjecture4(g, rows));
          },
          py::arg("grid"), py::arg("max_rows"));
    m.def("verify_mirror",
          [](const RowGrid& g, int n) { return report_dict(verify_mirror(g, n)); },
          py::arg("grid"), py::arg("n"));
    m.def("verify_theorem1", [](int order) { return report_dict(verify_theorem1(order)); },
          py::arg("order"));
    m.def("verify_lemma1", [](int order) { return report_dict(verify_lemma1(order)); },
          py::arg("order"));
    m.def("rows_needed_conjecture1", &rows_needed_conjecture1, py::arg("n"));
    m.def("rows_needed_conjecture2", &rows_needed_conjecture2, py::arg("n"));
    m.def("rows_needed_conjecture3", &rows_needed_conjecture3, py::arg("k"), py::arg("horizon"));
    m.def("rows_needed_mirror", &rows_needed_mirror, py::arg("n"));
    m.def("stealth_row_extent", &stealth_row_extent, py::arg("order"));

    m.def("density_report",
          [](int max_n) {
              py::list out;
              for (const auto& row : density_report(max_n)) {
                  py::dict d;
                  d["n"] = row.n;
                  d["region_ones"] = to_pyint(row.region_ones);
                  d["region_cells"] = to_pyint(row.region_cells);
                  d["prefix_ones"] = to_pyint(row.prefix_ones);
                  d["prefix_cells"] = to_pyint(row.prefix_cells);
                  d["region_density"] = row.region_density;
                  d["prefix_density"] = row.prefix_density;
                  d["growth_ratio"] = row.growth_ratio;
                  out.append(d);
              }
              return out;
          },
          py::arg("max_n"));
    m.def("growth_root", &growth_root);

    m.def("diagonal_bits",
          [](const RowGrid& g, std::int64_t k, std::int64_t length) {
              const auto d = diagonal_bits(g, k, length);
              std::string bits;
              for (std::uint8_t b : d.bits) bits.push_back(b ? '1' : '0');
              return py::make_tuple(d.start_row, bits);
          },
          py::arg("grid"), py::arg("k"), py::arg("length"));
    m.def("minimal_period",
          [](const std::string& bits) {
              std::vector<std::uint8_t> v;
              v.reserve(bits.size());
              for (char c : bits) {
                  if (c != '0' && c != '1') throw std::invalid_argument("bits must be 0/1");
                  v.push_back(c == '1' ? 1 : 0);
              }
              return minimal_period(v);
          },
          py::arg("bits"));

    m.def("render_pbm",
          [](const std::string& source, std::int64_t param, bool packed, int cell_size) {
              return py::bytes(render_pbm(make_spec(source, param, packed, {}, cell_size)));
          },
          py::arg("source"), py::arg("param"), py::arg("packed") = false,
          py::arg("cell_size") = 4);
    m.def("render_svg",
          [](const std::string& source, std::int64_t param,
             const std::vector<std::string>& overlays, int cell_size) {
              return render_svg(make_spec(source, param, false, overlays, cell_size));
          },
          py::arg("source"), py::arg("param"),
          py::arg("overlays") = std::vector<std::string>{}, py::arg("cell_size") = 4);

    m.def("oeis_compare",
          [](const std::string& id, int terms) {
              std::vector<BigInt> computed;
              if (id == "A059319") {
                  const auto grid = generate(terms);
                  for (int j = 1; j <= terms; ++j) computed.emplace_back(grid.row_ones(j));
              } else {
                  const auto name = id == "A000079"   ? SeqName::A
                                    : id == "A001045" ? SeqName::B
                                    : id == "A055099" ? SeqName::C
                                    : id == "A256959" ? SeqName::D
                                    : id == "A256960" ? SeqName::E
                                    : id == "A000302" ? SeqName::F
                                                      : throw std::domain_error(
                                                            "unrecognized OEIS id: " + id);
                  computed = sequence(name, terms - 1).values;
              }
              const oeis::Client client;
              const auto bfile = client.fetch_bfile(id, oeis::FetchMode::offline);
              return report_dict(oeis::compare(bfile, computed, oeis::declared_offset(id)));
          },
          py::arg("id"), py::arg("terms") = 20);
}
