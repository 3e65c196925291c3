#include <doctest.h>

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <fstream>

#include "rhombus/grid.hpp"
#include "rhombus/oeis.hpp"
#include "rhombus/sequences.hpp"

using namespace rhombus;
using oeis::BFile;
using oeis::Client;
using oeis::FetchMode;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("rhombus-oeis-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter()++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    static std::atomic<int>& counter() {
        static std::atomic<int> c{0};
        return c;
    }
};

oeis::Transport failing_transport(std::atomic<int>& calls) {
    return [&calls](const std::string&) -> std::optional<std::string> {
        ++calls;
        return std::nullopt;
    };
}

}  // namespace

TEST_CASE("fixtures parse and start as expected") {
    const auto b79 = oeis::parse_bfile("A000079", oeis::fixture_text("A000079"));
    REQUIRE(b79.entries.size() == 50);
    CHECK(b79.entries[0] == std::pair<std::int64_t, BigInt>{0, 1});
    CHECK(b79.entries[3].second == 8);

    const auto b1045 = oeis::parse_bfile("A001045", oeis::fixture_text("A001045"));
    CHECK(b1045.entries[0].second == 0);  // Jacobsthal starts 0, 1, 1, 3, 5, 11
    CHECK(b1045.entries[5].second == 11);
}

TEST_CASE("b-file parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(oeis::parse_bfile("A000079", "0 1\n1 2\n3 x\n"),
                         "malformed b-file value at line 3", oeis::ParseError);
    CHECK_THROWS_AS(oeis::parse_bfile("A000079", "0 1\n0 2\n"), oeis::ParseError);
    CHECK_THROWS_AS(oeis::parse_bfile("A000079", "zzz\n"), oeis::ParseError);
    CHECK_NOTHROW(oeis::parse_bfile("A000079", "# comment\n\n0 1\n"));
}

TEST_CASE("offline comparisons pass for all recognized sequences") {
    TempDir tmp;
    std::atomic<int> calls{0};
    const Client client(failing_transport(calls), tmp.path);

    const struct { const char* id; SeqName name; } table[] = {
        {"A000079", SeqName::A}, {"A001045", SeqName::B}, {"A055099", SeqName::C},
        {"A256959", SeqName::D}, {"A256960", SeqName::E}, {"A000302", SeqName::F},
    };
    for (const auto& row : table) {
        CAPTURE(row.id);
        const auto bfile = client.fetch_bfile(row.id, FetchMode::offline);
        REQUIRE(bfile.source == BFile::Source::fixture);
        const auto computed = sequence(row.name, 19).values;
        const auto report = oeis::compare(bfile, computed, oeis::declared_offset(row.id));
        REQUIRE(report.passed());
    }
    const auto grid = generate(20);
    std::vector<BigInt> row_ones;
    for (int m = 1; m <= 20; ++m) row_ones.emplace_back(grid.row_ones(m));
    const auto report = oeis::compare(client.fetch_bfile("A059319", FetchMode::offline),
                                      row_ones, oeis::declared_offset("A059319"));
    REQUIRE(report.passed());

    CHECK(calls.load() == 0);  // offline mode never touches the transport
}

TEST_CASE("the Jacobsthal offset lines up with B") {
    TempDir tmp;
    const Client client(oeis::Transport{}, tmp.path);
    const auto bfile = client.fetch_bfile("A001045", FetchMode::offline);
    const auto b = sequence(SeqName::B, 7).values;  // 1, 3, 5, 11, ...
    CHECK(oeis::declared_offset("A001045") == 2);
    CHECK(oeis::compare(bfile, b, 2).passed());
    CHECK(oeis::compare(bfile, b, 0).status == VerificationReport::Status::fail);
}

TEST_CASE("comparison detects a mismatch with a witness") {
    const auto bfile = oeis::parse_bfile("A000079", "0 1\n1 2\n2 5\n");
    const std::vector<BigInt> computed{1, 2, 4};
    const auto report = oeis::compare(bfile, computed, 0);
    CHECK(report.status == VerificationReport::Status::fail);
    REQUIRE_FALSE(report.witness.is_null());
    CHECK(report.witness["index"] == 2);
    CHECK(report.witness["bfile_value"] == "5");
    CHECK(report.witness["computed_value"] == "4");
}

TEST_CASE("values outside the b-file range are inconclusive") {
    const auto bfile = oeis::parse_bfile("A000079", "0 1\n1 2\n");
    const std::vector<BigInt> computed{1, 2, 4};
    const auto report = oeis::compare(bfile, computed, 0);
    CHECK(report.status == VerificationReport::Status::inconclusive);
}

TEST_CASE("unrecognized ids are rejected") {
    TempDir tmp;
    const Client client(oeis::Transport{}, tmp.path);
    CHECK_THROWS_AS(client.fetch_bfile("A123456", FetchMode::offline), std::domain_error);
    CHECK(oeis::recognized("A055099"));
    CHECK_FALSE(oeis::recognized("A123456"));
}

TEST_CASE("online mode fetches, caches atomically, then reuses the cache") {
    TempDir tmp;
    std::atomic<int> calls{0};
    const std::string body = "0 1\n1 2\n2 4\n";
    const oeis::Transport serving = [&](const std::string& url) {
        ++calls;
        CHECK(url == "https://oeis.org/A000079/b000079.txt");
        return body;
    };
    const Client client(serving, tmp.path);

    const auto fetched = client.fetch_bfile("A000079", FetchMode::online);
    CHECK(fetched.source == BFile::Source::network);
    CHECK(calls.load() == 1);
    CHECK(std::filesystem::exists(tmp.path / "b000079.txt"));
    CHECK_FALSE(std::filesystem::exists(tmp.path / "b000079.txt.tmp"));

    // warm cache now serves offline reads
    std::atomic<int> offline_calls{0};
    const Client offline_client(failing_transport(offline_calls), tmp.path);
    const auto cached = offline_client.fetch_bfile("A000079", FetchMode::offline);
    CHECK(cached.source == BFile::Source::cache);
    CHECK(cached.entries.size() == 3);
    CHECK(offline_calls.load() == 0);
}

TEST_CASE("network failure with a cold cache falls back to the fixture") {
    TempDir tmp;
    std::atomic<int> calls{0};
    const Client client(failing_transport(calls), tmp.path);
    const auto bfile = client.fetch_bfile("A000079", FetchMode::online);
    CHECK(calls.load() == 1);
    CHECK(bfile.source == BFile::Source::fixture);
    CHECK(bfile.fallback_warning);
}

TEST_CASE("network failure with a warm cache serves the cache") {
    TempDir tmp;
    {
        std::ofstream out(tmp.path / "b000079.txt");
        out << "0 1\n1 2\n";
    }
    std::atomic<int> calls{0};
    const Client client(failing_transport(calls), tmp.path);
    const auto bfile = client.fetch_bfile("A000079", FetchMode::online);
    CHECK(bfile.source == BFile::Source::cache);
    CHECK_FALSE(bfile.fallback_warning);
}

TEST_CASE("fixture, cache and network paths agree") {
    TempDir tmp;
    const oeis::Transport serving = [](const std::string&) {
        return oeis::fixture_text("A055099");
    };
    const Client client(serving, tmp.path);
    const auto computed = sequence(SeqName::C, 19).values;

    const auto from_network = client.fetch_bfile("A055099", FetchMode::online);
    const auto from_cache = client.fetch_bfile("A055099", FetchMode::offline);
    const Client cold(oeis::Transport{}, tmp.path / "empty");
    const auto from_fixture = cold.fetch_bfile("A055099", FetchMode::offline);

    CHECK(from_network.source == BFile::Source::network);
    CHECK(from_cache.source == BFile::Source::cache);
    CHECK(from_fixture.source == BFile::Source::fixture);
    for (const auto& bfile : {from_network, from_cache, from_fixture}) {
        REQUIRE(oeis::compare(bfile, computed, 0).passed());
    }
}

TEST_CASE("cache directory resolves from the environment") {
    ::setenv("RHOMBUS_OEIS_CACHE", "/tmp/rhombus-env-cache", 1);
    CHECK(oeis::default_cache_dir() == std::filesystem::path("/tmp/rhombus-env-cache"));
    ::unsetenv("RHOMBUS_OEIS_CACHE");
    CHECK(oeis::default_cache_dir().string().find("pascal-rhombus") != std::string::npos);
}
