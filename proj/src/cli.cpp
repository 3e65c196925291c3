#include "rhombus/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rhombus/analysis.hpp"
#include "rhombus/diagonal.hpp"
#include "rhombus/grid.hpp"
#include "rhombus/oeis.hpp"
#include "rhombus/render.hpp"
#include "rhombus/sequences.hpp"
#include "rhombus/stealth.hpp"

namespace rhombus::cli {

namespace {

using nlohmann::json;

int report_exit_code(const VerificationReport& r) {
    switch (r.status) {
        case VerificationReport::Status::pass: return kExitPass;
        case VerificationReport::Status::fail: return kExitFail;
        case VerificationReport::Status::inconclusive: return kExitInconclusive;
    }
    return kExitUsage;
}

int emit_report(const VerificationReport& r, bool json_mode, std::ostream& out) {
    if (json_mode) {
        out << r.to_json().dump() << '\n';
    } else {
        out << r.summary() << '\n';
    }
    return report_exit_code(r);
}

void check_row_cap(std::int64_t rows, std::int64_t cap) {
    if (rows > cap) {
        throw std::invalid_argument("needs " + std::to_string(rows) +
                                    " rows, above the row cap of " + std::to_string(cap) +
                                    " (raise with --row-cap)");
    }
}

std::string row_bits(const BitRow& row) {
    std::string s;
    s.reserve(static_cast<std::size_t>(row.width()));
    for (std::int64_t k = -(row.index() - 1); k <= row.index() - 1; ++k) {
        s.push_back(row.bit(k) ? '1' : '0');
    }
    return s;
}

struct GenOptions {
    std::int64_t rows = 1;
    bool integer = false;
    std::string out_path;
    std::int64_t row_cap = kDefaultRowCap;
    bool json = false;
};

int run_gen(const GenOptions& opt, std::ostream& out) {
    check_row_cap(opt.rows, opt.row_cap);
    std::ostringstream body;
    json data = json::array();
    if (opt.integer) {
        const auto grid = generate_integer(opt.rows);
        for (std::int64_t n = 1; n <= opt.rows; ++n) {
            json jrow = json::array();
            bool first = true;
            for (const auto& v : grid.row(n)) {
                if (!first) body << ' ';
                body << v.str();
                jrow.push_back(v.str());
                first = false;
            }
            body << '\n';
            data.push_back(std::move(jrow));
        }
    } else {
        const auto grid = generate(opt.rows);
        for (std::int64_t n = 1; n <= opt.rows; ++n) {
            const std::string bits = row_bits(grid.row(n));
            body << bits << '\n';
            data.push_back(bits);
        }
    }
    std::string text;
    if (opt.json) {
        text = json{{"command", "gen"},
                    {"rows", opt.rows},
                    {"integer", opt.integer},
                    {"data", data}}
                   .dump() +
               "\n";
    } else {
        text = body.str();
    }
    if (!opt.out_path.empty()) {
        std::ofstream file(opt.out_path, std::ios::binary | std::ios::trunc);
        if (!file) throw std::invalid_argument("cannot open output file " + opt.out_path);
        file << text;
        out << "wrote " << opt.out_path << '\n';
    } else {
        out << text;
    }
    return kExitPass;
}

RenderSpec parse_render_source(const std::string& source) {
    const auto colon = source.find(':');
    if (colon == std::string::npos) {
        throw std::invalid_argument("--source must look like rows:M, stealth:N or haystack:N");
    }
    const std::string kind = source.substr(0, colon);
    RenderSpec spec;
    spec.param = std::stoll(source.substr(colon + 1));
    if (kind == "rows") {
        spec.source = RenderSpec::Source::rows;
    } else if (kind == "stealth") {
        spec.source = RenderSpec::Source::stealth;
    } else if (kind == "haystack") {
        spec.source = RenderSpec::Source::haystack;
    } else {
        throw std::invalid_argument("unknown render source: " + kind);
    }
    return spec;
}

struct RenderOptions {
    std::string source;
    std::string format = "pbm";
    std::string out_path;
    std::vector<std::string> overlays;
    bool packed = false;
    int cell_size = 4;
    int stroke_width = 1;
    std::int64_t row_cap = kDefaultRowCap;
    bool json = false;
};

int run_render(const RenderOptions& opt, std::ostream& out) {
    RenderSpec spec = parse_render_source(opt.source);
    if (spec.source == RenderSpec::Source::rows) {
        check_row_cap(spec.param, opt.row_cap);
    } else if (spec.source == RenderSpec::Source::stealth) {
        check_row_cap(stealth_row_extent(static_cast<int>(spec.param)), opt.row_cap);
    } else {
        check_row_cap(std::int64_t{1} << spec.param, opt.row_cap);
    }
    spec.cell_size = opt.cell_size;
    spec.stroke_width = opt.stroke_width;
    for (const auto& overlay : opt.overlays) {
        if (overlay == "decomposition") {
            spec.overlay_decomposition = true;
        } else if (overlay == "exceptional") {
            spec.overlay_exceptional = true;
        } else if (overlay == "octagon") {
            spec.overlay_octagon = true;
        } else {
            throw std::invalid_argument("unknown overlay: " + overlay);
        }
    }
    std::string bytes;
    if (opt.format == "pbm") {
        spec.format = opt.packed ? RenderSpec::Format::pbm_packed : RenderSpec::Format::pbm;
        bytes = render_pbm(spec);
    } else if (opt.format == "svg") {
        spec.format = RenderSpec::Format::svg;
        bytes = render_svg(spec);
    } else {
        throw std::invalid_argument("unknown format: " + opt.format);
    }
    if (opt.out_path.empty()) throw std::invalid_argument("render requires --out PATH");
    std::ofstream file(opt.out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw std::invalid_argument("cannot open output file " + opt.out_path);
    file << bytes;

    const BitPattern cells = render_source(spec);
    if (opt.json) {
        out << json{{"command", "render"},
                    {"format", opt.format},
                    {"out", opt.out_path},
                    {"width", cells.window().cols},
                    {"height", cells.window().rows},
                    {"black", cells.ones()}}
                   .dump()
            << '\n';
    } else {
        out << "wrote " << opt.out_path << " (" << cells.window().cols << 'x'
            << cells.window().rows << ", " << cells.ones() << " black cells)\n";
    }
    return kExitPass;
}

struct SeqOptions {
    std::string name;
    int max_n = 0;
    std::int64_t row_cap = kDefaultRowCap;
    bool json = false;
};

int run_seq(const SeqOptions& opt, std::ostream& out) {
    const auto name = seq_from_string(opt.name);
    if (!name) throw std::invalid_argument("unknown sequence name: " + opt.name);
    if (*name == SeqName::G || *name == SeqName::H) check_row_cap(opt.max_n, opt.row_cap);
    const auto table = sequence(*name, opt.max_n);
    if (opt.json) {
        json values = json::array();
        for (const auto& v : table.values) values.push_back(v.str());
        out << json{{"command", "seq"},
                    {"name", opt.name},
                    {"first_index", table.first_index},
                    {"values", values}}
                   .dump()
            << '\n';
    } else {
        bool first = true;
        for (const auto& v : table.values) {
            if (!first) out << ", ";
            out << v.str();
            first = false;
        }
        out << '\n';
    }
    return kExitPass;
}

struct VerifyOptions {
    std::string check;
    std::optional<int> n;
    std::optional<std::int64_t> k;
    std::int64_t horizon = 4096;
    std::int64_t row_cap = kDefaultRowCap;
    bool json = false;
};

int run_verify(const VerifyOptions& opt, std::ostream& out) {
    const auto need_n = [&]() {
        if (!opt.n) throw std::invalid_argument("this check requires --n");
        return *opt.n;
    };
    VerificationReport report;
    if (opt.check == "conj1") {
        const int n = need_n();
        check_row_cap(rows_needed_conjecture1(n), opt.row_cap);
        report = verify_conjecture1(generate(rows_needed_conjecture1(n)), n);
    } else if (opt.check == "conj2") {
        const int n = need_n();
        check_row_cap(rows_needed_conjecture2(n), opt.row_cap);
        report = verify_conjecture2(generate(rows_needed_conjecture2(n)), n);
    } else if (opt.check == "conj3") {
        if (!opt.k) throw std::invalid_argument("conj3 requires --k");
        const auto rows = rows_needed_conjecture3(*opt.k, opt.horizon);
        check_row_cap(rows, opt.row_cap);
        report = verify_conjecture3(generate(rows), *opt.k, opt.horizon);
    } else if (opt.check == "conj4") {
        const int n = need_n();
        check_row_cap(n, opt.row_cap);
        report = verify_conjecture4(generate(n), n);
    } else if (opt.check == "mirror") {
        const int n = need_n();
        check_row_cap(rows_needed_mirror(n), opt.row_cap);
        report = verify_mirror(generate(rows_needed_mirror(n)), n);
    } else if (opt.check == "theorem1") {
        const int n = need_n();
        check_row_cap(stealth_row_extent(n), opt.row_cap);
        report = verify_theorem1(n);
    } else if (opt.check == "lemma1") {
        const int n = need_n();
        check_row_cap(stealth_row_extent(n), opt.row_cap);
        report = verify_lemma1(n);
    } else {
        throw std::invalid_argument("unknown check: " + opt.check);
    }
    return emit_report(report, opt.json, out);
}

struct DiagOptions {
    std::int64_t k = 0;
    std::int64_t len = 64;
    std::int64_t row_cap = kDefaultRowCap;
    bool json = false;
};

int run_diag(const DiagOptions& opt, std::ostream& out) {
    const std::int64_t rows = diagonal_start_row(opt.k) + opt.len - 1;
    check_row_cap(rows, opt.row_cap);
    const auto d = diagonal_bits(generate(rows), opt.k, opt.len);
    std::string bits;
    for (std::uint8_t b : d.bits) bits.push_back(b ? '1' : '0');
    const auto period = minimal_period(d.bits);
    if (opt.json) {
        out << json{{"command", "diag"},
                    {"k", opt.k},
                    {"start_row", d.start_row},
                    {"bits", bits},
                    {"minimal_period", period}}
                   .dump()
            << '\n';
    } else {
        out << bits << '\n';
        out << "minimal period over window: " << period << '\n';
    }
    return kExitPass;
}

struct OeisOptions {
    std::string id;
    int terms = 20;
    bool online = false;
    std::int64_t row_cap = kDefaultRowCap;
    bool json = false;
};

std::vector<BigInt> computed_terms(const std::string& id, int terms) {
    const auto from_table = [&](SeqName name) {
        const auto table = sequence(name, terms - 1);
        return table.values;
    };
    if (id == "A000079") return from_table(SeqName::A);
    if (id == "A001045") return from_table(SeqName::B);
    if (id == "A055099") return from_table(SeqName::C);
    if (id == "A256959") return from_table(SeqName::D);
    if (id == "A256960") return from_table(SeqName::E);
    if (id == "A000302") return from_table(SeqName::F);
    if (id == "A059319") {
        const auto grid = generate(terms);
        std::vector<BigInt> v;
        for (int m = 1; m <= terms; ++m) v.emplace_back(grid.row_ones(m));
        return v;
    }
    throw std::domain_error("unrecognized OEIS id: " + id);
}

int run_oeis(const OeisOptions& opt, std::ostream& out) {
    if (opt.terms < 1) throw std::invalid_argument("--terms must be >= 1");
    if (opt.id == "A059319") check_row_cap(opt.terms, opt.row_cap);
    const auto computed = computed_terms(opt.id, opt.terms);
    const oeis::Client client;
    const auto bfile = client.fetch_bfile(
        opt.id, opt.online ? oeis::FetchMode::online : oeis::FetchMode::offline);
    const auto report = oeis::compare(bfile, computed, oeis::declared_offset(opt.id));
    return emit_report(report, opt.json, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pascal rhombus (mod 2) generator, verifier and renderer"};
    app.require_subcommand(1);

    GenOptions gen_opt;
    auto* gen_cmd = app.add_subcommand("gen", "Generate rhombus rows");
    gen_cmd->add_option("--rows", gen_opt.rows, "Number of rows")->required();
    gen_cmd->add_flag("--integer", gen_opt.integer, "Exact integer entries instead of mod 2");
    gen_cmd->add_option("--out", gen_opt.out_path, "Write to a file instead of stdout");
    gen_cmd->add_option("--row-cap", gen_opt.row_cap, "Row budget cap");
    gen_cmd->add_flag("--json", gen_opt.json, "Machine-readable output");

    RenderOptions render_opt;
    auto* render_cmd = app.add_subcommand("render", "Render a source to PBM or SVG");
    render_cmd->add_option("--source", render_opt.source, "rows:M | stealth:N | haystack:N")
        ->required();
    render_cmd->add_option("--format", render_opt.format, "pbm | svg");
    render_cmd->add_option("--out", render_opt.out_path, "Output path")->required();
    render_cmd
        ->add_option("--overlay", render_opt.overlays,
                     "Comma-separated: decomposition,exceptional,octagon")
        ->delimiter(',');
    render_cmd->add_flag("--packed", render_opt.packed, "Binary P4 instead of plain P1");
    render_cmd->add_option("--cell-size", render_opt.cell_size, "SVG units per cell");
    render_cmd->add_option("--stroke-width", render_opt.stroke_width, "SVG overlay stroke");
    render_cmd->add_option("--row-cap", render_opt.row_cap, "Row budget cap");
    render_cmd->add_flag("--json", render_opt.json, "Machine-readable output");

    SeqOptions seq_opt;
    auto* seq_cmd = app.add_subcommand("seq", "Print a sequence table");
    seq_cmd->add_option("name", seq_opt.name, "A|B|C|D|E|F|I|G|H")->required();
    seq_cmd->add_option("--max", seq_opt.max_n, "Last index")->required();
    seq_cmd->add_option("--row-cap", seq_opt.row_cap, "Row budget cap");
    seq_cmd->add_flag("--json", seq_opt.json, "Machine-readable output");

    VerifyOptions verify_opt;
    auto* verify_cmd = app.add_subcommand("verify", "Run a machine check");
    verify_cmd
        ->add_option("check", verify_opt.check,
                     "conj1|conj2|conj3|conj4|mirror|theorem1|lemma1")
        ->required();
    verify_cmd->add_option("--n", verify_opt.n, "Order / row budget parameter");
    verify_cmd->add_option("--k", verify_opt.k, "Diagonal index (conj3)");
    verify_cmd->add_option("--horizon", verify_opt.horizon, "Observed bits (conj3)");
    verify_cmd->add_option("--row-cap", verify_opt.row_cap, "Row budget cap");
    verify_cmd->add_flag("--json", verify_opt.json, "Machine-readable output");

    DiagOptions diag_opt;
    auto* diag_cmd = app.add_subcommand("diag", "Print diagonal bits and observed period");
    diag_cmd->add_option("--k", diag_opt.k, "Diagonal index")->required();
    diag_cmd->add_option("--len", diag_opt.len, "Number of bits")->required();
    diag_cmd->add_option("--row-cap", diag_opt.row_cap, "Row budget cap");
    diag_cmd->add_flag("--json", diag_opt.json, "Machine-readable output");

    OeisOptions oeis_opt;
    auto* oeis_cmd = app.add_subcommand("oeis", "OEIS cross-checks");
    auto* compare_cmd = oeis_cmd->add_subcommand("compare", "Compare against a b-file");
    compare_cmd->add_option("id", oeis_opt.id, "OEIS id, e.g. A055099")->required();
    compare_cmd->add_option("--terms", oeis_opt.terms, "Terms to compare");
    compare_cmd->add_flag("--online", oeis_opt.online, "Allow network fetch (cached)");
    compare_cmd->add_option("--row-cap", oeis_opt.row_cap, "Row budget cap");
    compare_cmd->add_flag("--json", oeis_opt.json, "Machine-readable output");
    oeis_cmd->require_subcommand(1);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("rhombus");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kExitUsage;
    }

    try {
        if (gen_cmd->parsed()) return run_gen(gen_opt, out);
        if (render_cmd->parsed()) return run_render(render_opt, out);
        if (seq_cmd->parsed()) return run_seq(seq_opt, out);
        if (verify_cmd->parsed()) return run_verify(verify_opt, out);
        if (diag_cmd->parsed()) return run_diag(diag_opt, out);
        if (oeis_cmd->parsed()) return run_oeis(oeis_opt, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    err << "error: no command given\n" << app.help();
    return kExitUsage;
}

}  // namespace rhombus::cli
