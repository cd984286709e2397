// io.hpp -- text formats for codes and block families, JSON serialization
// of reports, and persistence of the exact-value cache.
//
// Code files: header line "n <int>", one codeword per line as an n-character
// bitstring, leftmost character = coordinate 1; lines starting with '#' are
// ignored.  Block files: header line "n <int>", one block per line as
// space-separated ascending 1-based coordinates.  Writer output is canonical
// (sorted words / family order), so write -> read -> write is byte-identical.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "wit/analysis.hpp"
#include "wit/bounds.hpp"
#include "wit/constructions.hpp"
#include "wit/solver.hpp"
#include "wit/types.hpp"

namespace wit {

inline constexpr std::string_view kToolVersion = "0.1.0";

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CodeFileContents {
    int n = 0;
    std::vector<Codeword> words;  // in file order, duplicates rejected
    Code code() const { return Code(n, words); }
};

CodeFileContents read_code_file(std::istream& in);
CodeFileContents read_code_file(const std::filesystem::path& path);
void write_code_file(std::ostream& out, const Code& code);
void write_code_file(const std::filesystem::path& path, const Code& code);

SetFamily read_block_file(std::istream& in);
SetFamily read_block_file(const std::filesystem::path& path);
void write_block_file(std::ostream& out, const SetFamily& family);
void write_block_file(const std::filesystem::path& path, const SetFamily& family);

// Rationals serialize as {"num": "...", "den": "..."} string pairs; big
// integers as decimal strings.
nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const MeanStats& stats);
nlohmann::json to_json(const SolverResult& result);
nlohmann::json to_json(const ProbeReport& report);
nlohmann::json to_json(const WitnessProfile& profile);

nlohmann::json cache_to_json(const ExactValueCache& cache);
ExactValueCache cache_from_json(const nlohmann::json& j);

/// Missing file loads as an empty cache.
ExactValueCache load_cache(const std::filesystem::path& path);
/// Write-to-temp-then-rename.
void save_cache(const std::filesystem::path& path, const ExactValueCache& cache);

std::string iso8601_now();

}  // namespace wit
