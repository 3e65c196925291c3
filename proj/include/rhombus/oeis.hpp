#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rhombus/bigint.hpp"
#include "rhombus/report.hpp"

namespace rhombus::oeis {

// The seven OEIS sequences this project cross-checks.
inline constexpr const char* kRecognizedIds[] = {
    "A000079",  // A_n = 2^n
    "A001045",  // Jacobsthal; B_n = a(n+2)
    "A055099",  // C_n
    "A256959",  // D_n
    "A256960",  // E_n
    "A059319",  // ones in row m (from 1)
    "A000302",  // F_n = 4^n
};

bool recognized(const std::string& id);

// Index shift reconciling our indexing with the b-file's: our value at
// position i corresponds to b-file index offset + i.
std::int64_t declared_offset(const std::string& id);

struct BFile {
    enum class Source { network, cache, fixture };

    std::string id;
    std::vector<std::pair<std::int64_t, BigInt>> entries;  // strictly increasing indices
    Source source = Source::fixture;
    bool fallback_warning = false;  // network failed, served from fixture

    std::optional<BigInt> at(std::int64_t index) const;
};

enum class FetchMode { online, offline };

// Parses b-file text: '#' comment lines plus "index value" data lines.
// Throws ParseError (with the 1-based line number) on malformed lines
// or non-increasing indices.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line);
    int line_number;
};
BFile parse_bfile(const std::string& id, const std::string& text);

// Bundled fixture text (first 50 terms), compiled into the library.
const std::string& fixture_text(const std::string& id);

// GET the given URL; nullopt on any failure.
using Transport = std::function<std::optional<std::string>(const std::string& url)>;
Transport default_transport();

// Cache root: $RHOMBUS_OEIS_CACHE, else a per-user cache directory.
std::filesystem::path default_cache_dir();

class Client {
public:
    Client();  // default transport and cache dir
    Client(Transport transport, std::filesystem::path cache_dir);

    // online: fetch the b-file endpoint and cache it (atomic
    // write-then-rename); network failure falls back to a warm cache,
    // else to the fixture with a warning flag. offline: cache if warm,
    // else fixture; never touches the transport.
    BFile fetch_bfile(const std::string& id, FetchMode mode) const;

    const std::filesystem::path& cache_dir() const { return cache_dir_; }

private:
    Transport transport_;
    std::filesystem::path cache_dir_;
};

// Element-wise comparison of computed values against b-file entries
// after the offset shift; first mismatch is the witness. Computed
// values outside the b-file's index range make the result inconclusive.
VerificationReport compare(const BFile& bfile, std::span<const BigInt> computed,
                           std::int64_t offset);

}  // namespace rhombus::oeis
