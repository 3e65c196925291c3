#include "rhombus/oeis.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

namespace rhombus::oeis {

namespace {

using nlohmann::json;

std::string bfile_name(const std::string& id) {
    return "b" + id.substr(1) + ".txt";  // A000079 -> b000079.txt
}

std::string bfile_url(const std::string& id) {
    return "https://oeis.org/" + id + "/" + bfile_name(id);
}

std::optional<std::string> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

bool recognized(const std::string& id) {
    return std::find_if(std::begin(kRecognizedIds), std::end(kRecognizedIds),
                        [&](const char* s) { return id == s; }) != std::end(kRecognizedIds);
}

std::int64_t declared_offset(const std::string& id) {
    // Captured from the b-files: where our index 0 (or row 1 for the
    // row-ones sequence) sits in the OEIS indexing.
    if (id == "A001045") return 2;  // B_n is the Jacobsthal number a(n+2)
    if (id == "A059319") return 1;  // indexed by row number from 1
    if (!recognized(id)) throw std::domain_error("unrecognized OEIS id: " + id);
    return 0;
}

std::optional<BigInt> BFile::at(std::int64_t index) const {
    const auto it = std::lower_bound(
        entries.begin(), entries.end(), index,
        [](const auto& entry, std::int64_t i) { return entry.first < i; });
    if (it == entries.end() || it->first != index) return std::nullopt;
    return it->second;
}

ParseError::ParseError(const std::string& msg, int line)
    : std::runtime_error(msg + " at line " + std::to_string(line)), line_number(line) {}

BFile parse_bfile(const std::string& id, const std::string& text) {
    BFile b;
    b.id = id;
    std::istringstream in(text);
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        std::int64_t index = 0;
        std::string value;
        if (!(fields >> index >> value)) throw ParseError("malformed b-file line", line_number);
        std::string rest;
        if (fields >> rest) throw ParseError("trailing data on b-file line", line_number);
        if (value.empty() ||
            !std::all_of(value.begin() + (value[0] == '-' ? 1 : 0), value.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            throw ParseError("malformed b-file value", line_number);
        }
        if (!b.entries.empty() && index <= b.entries.back().first) {
            throw ParseError("b-file indices must be strictly increasing", line_number);
        }
        b.entries.emplace_back(index, BigInt(value));
    }
    return b;
}

Transport default_transport() {
    return [](const std::string& url) -> std::optional<std::string> {
        const auto scheme_end = url.find("://");
        if (scheme_end == std::string::npos) return std::nullopt;
        const std::string scheme = url.substr(0, scheme_end);
        const auto path_start = url.find('/', scheme_end + 3);
        const std::string host = url.substr(scheme_end + 3, path_start - scheme_end - 3);
        const std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);
        httplib::Result res;
        if (scheme == "https") {
            httplib::SSLClient client(host);
            client.set_connection_timeout(10);
            client.set_read_timeout(30);
            res = client.Get(path);
        } else if (scheme == "http") {
            httplib::Client client(host);
            client.set_connection_timeout(10);
            client.set_read_timeout(30);
            res = client.Get(path);
        } else {
            return std::nullopt;
        }
        if (!res || res->status != 200) return std::nullopt;
        return res->body;
    };
}

std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("RHOMBUS_OEIS_CACHE")) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME")) {
        return std::filesystem::path(xdg) / "pascal-rhombus" / "oeis";
    }
    if (const char* home = std::getenv("HOME")) {
        return std::filesystem::path(home) / ".cache" / "pascal-rhombus" / "oeis";
    }
    return std::filesystem::path(".cache") / "pascal-rhombus" / "oeis";
}

Client::Client() : Client(default_transport(), default_cache_dir()) {}

Client::Client(Transport transport, std::filesystem::path cache_dir)
    : transport_(std::move(transport)), cache_dir_(std::move(cache_dir)) {}

BFile Client::fetch_bfile(const std::string& id, FetchMode mode) const {
    if (!recognized(id)) throw std::domain_error("unrecognized OEIS id: " + id);
    const auto cache_path = cache_dir_ / bfile_name(id);

    const auto from_cache = [&]() -> std::optional<BFile> {
        const auto text = read_file(cache_path);
        if (!text) return std::nullopt;
        BFile b = parse_bfile(id, *text);
        b.source = BFile::Source::cache;
        return b;
    };
    const auto from_fixture = [&](bool warn) {
        BFile b = parse_bfile(id, fixture_text(id));
        b.source = BFile::Source::fixture;
        b.fallback_warning = warn;
        return b;
    };

    if (mode == FetchMode::offline) {
        if (auto cached = from_cache()) return *cached;
        return from_fixture(false);
    }

    if (const auto body = transport_(bfile_url(id))) {
        BFile b = parse_bfile(id, *body);  // validate before caching
        b.source = BFile::Source::network;
        std::filesystem::create_directories(cache_dir_);
        const auto tmp = cache_path.string() + ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            out << *body;
        }
        std::filesystem::rename(tmp, cache_path);  // atomic publish
        return b;
    }
    if (auto cached = from_cache()) return *cached;
    return from_fixture(true);
}

VerificationReport compare(const BFile& bfile, std::span<const BigInt> computed,
                           std::int64_t offset) {
    VerificationReport r;
    r.check = "oeis_compare";
    r.params = json{{"id", bfile.id},
                    {"offset", offset},
                    {"terms", computed.size()},
                    {"source", bfile.source == BFile::Source::network   ? "network"
                               : bfile.source == BFile::Source::cache ? "cache"
                                                                      : "fixture"}};
    if (bfile.fallback_warning) r.params["fallback_warning"] = true;
    r.expected = "computed terms equal b-file entries";

    std::size_t checked = 0;
    bool out_of_range = false;
    for (std::size_t i = 0; i < computed.size(); ++i) {
        const std::int64_t index = offset + static_cast<std::int64_t>(i);
        const auto entry = bfile.at(index);
        if (!entry) {
            out_of_range = true;
            continue;
        }
        ++checked;
        if (*entry != computed[i]) {
            r.status = VerificationReport::Status::fail;
            r.witness = json{{"index", index},
                             {"bfile_value", entry->str()},
                             {"computed_value", computed[i].str()}};
            r.actual = json{{"terms_checked", checked}, {"first_mismatch_index", index}};
            return r;
        }
    }
    if (out_of_range) {
        r.status = VerificationReport::Status::inconclusive;
        r.actual = json{{"terms_checked", checked},
                        {"reason", "some computed terms fall outside the b-file range"}};
        return r;
    }
    r.status = VerificationReport::Status::pass;
    r.actual = json{{"terms_checked", checked}};
    return r;
}

}  // namespace rhombus::oeis
