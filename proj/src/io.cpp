#include "wit/io.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace wit {

namespace {

using nlohmann::json;

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    return in;
}

int parse_header(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string tag;
        int n = 0;
        if (!(ss >> tag >> n) || tag != "n") throw ParseError("expected header line \"n <int>\"");
        std::string rest;
        if (ss >> rest) throw ParseError("trailing tokens after header");
        if (n < 1 || n > kMaxLength) throw ParseError("n out of range [1,64]");
        return n;
    }
    throw ParseError("missing header line \"n <int>\"");
}

std::string big_to_string(const BigInt& v) { return v.str(); }

json provenanced_list(const std::vector<BoundEntry>& entries) {
    json arr = json::array();
    for (const auto& e : entries) arr.push_back({{"value", big_to_string(e.value)}, {"by", e.provenance}});
    return arr;
}

}  // namespace

CodeFileContents read_code_file(std::istream& in) {
    CodeFileContents contents;
    std::string line;
    contents.n = parse_header(in, line);
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (static_cast<int>(line.size()) != contents.n)
            throw ParseError("codeword line length differs from n: \"" + line + "\"");
        Codeword c = [&] {
            try {
                return Codeword::parse(line);
            } catch (const std::invalid_argument& e) {
                throw ParseError(std::string(e.what()) + ": \"" + line + "\"");
            }
        }();
        for (const Codeword& prev : contents.words)
            if (prev == c) throw ParseError("duplicate codeword line: \"" + line + "\"");
        contents.words.push_back(c);
    }
    return contents;
}

CodeFileContents read_code_file(const std::filesystem::path& path) {
    auto in = open_in(path);
    return read_code_file(in);
}

void write_code_file(std::ostream& out, const Code& code) {
    out << "n " << code.length() << "\n";
    for (std::size_t i = 0; i < code.size(); ++i) out << code.word(i).str() << "\n";
}

void write_code_file(const std::filesystem::path& path, const Code& code) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    write_code_file(out, code);
}

SetFamily read_block_file(std::istream& in) {
    std::string line;
    const int n = parse_header(in, line);
    std::vector<CoordSet> blocks;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::vector<int> members;
        int coord;
        while (ss >> coord) {
            if (coord < 1 || coord > n) throw ParseError("block coordinate out of [1,n]: " + line);
            if (!members.empty() && coord <= members.back())
                throw ParseError("block coordinates must be strictly ascending: " + line);
            members.push_back(coord);
        }
        if (!ss.eof()) throw ParseError("malformed block line: " + line);
        CoordSet block = CoordSet::from_members(n, members);
        for (const CoordSet& prev : blocks)
            if (prev == block) throw ParseError("duplicate block line: " + line);
        blocks.push_back(block);
    }
    return SetFamily(n, std::move(blocks));
}

SetFamily read_block_file(const std::filesystem::path& path) {
    auto in = open_in(path);
    return read_block_file(in);
}

void write_block_file(std::ostream& out, const SetFamily& family) {
    out << "n " << family.length() << "\n";
    for (const CoordSet& block : family.blocks()) {
        bool first = true;
        for (int j : block.members()) {
            if (!first) out << ' ';
            out << j;
            first = false;
        }
        out << "\n";
    }
}

void write_block_file(const std::filesystem::path& path, const SetFamily& family) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    write_block_file(out, family);
}

json to_json(const Rational& r) {
    return {{"num", big_to_string(boost::multiprecision::numerator(r))},
            {"den", big_to_string(boost::multiprecision::denominator(r))}};
}

json to_json(const BoundReport& report) {
    json j{{"n", report.n},
           {"w", report.w},
           {"lower", provenanced_list(report.lower)},
           {"upper", provenanced_list(report.upper)},
           {"best_lower", big_to_string(report.best_lower)},
           {"best_upper", big_to_string(report.best_upper)}};
    if (report.exact) j["exact"] = big_to_string(*report.exact);
    return j;
}

json to_json(const MeanStats& stats) {
    json witness_counts = json::object();
    for (const auto& [word, count] : stats.witness_counts) witness_counts[word.str()] = count;
    json window_counts = json::object();
    for (const auto& [window, count] : stats.window_counts) window_counts[window.str()] = count;
    return {{"n", stats.n},
            {"w", stats.w},
            {"witness_counts", witness_counts},
            {"window_counts", window_counts},
            {"mean_witness_count", to_json(stats.mean_witness_count)},
            {"gamma", to_json(stats.gamma)},
            {"total", big_to_string(stats.total)}};
}

json to_json(const SolverResult& result) {
    json j{{"n", result.n},
           {"w", result.w},
           {"value", big_to_string(result.value)},
           {"status", result.status == SolveStatus::Exact ? "exact" : "lower-bound"},
           {"strategy",
            result.strategy == SolveStrategy::Enumeration ? "enumeration" : "branch-and-bound"},
           {"nodes", result.nodes},
           {"elapsed_seconds", result.elapsed_seconds},
           {"deterministic", result.deterministic}};
    if (result.k) j["k"] = *result.k;
    json cert = json::array();
    for (std::size_t i = 0; i < result.certificate.size(); ++i)
        cert.push_back(result.certificate.word(i).str());
    j["certificate"] = cert;
    return j;
}

json to_json(const ProbeReport& report) {
    json rows = json::array();
    for (const auto& row : report.rows)
        rows.push_back({{"n", row.n},
                        {"lower", big_to_string(row.lower)},
                        {"upper", big_to_string(row.upper)},
                        {"pinned", row.pinned}});
    return {{"w", report.w},
            {"f_base", to_json(report.base)},
            {"central_binomial", big_to_string(report.central)},
            {"matches_sphere", report.matches_sphere},
            {"implied", rows}};
}

json to_json(const WitnessProfile& profile) {
    json sizes = json::object();
    for (const auto& [word, size] : profile.sizes) sizes[word.str()] = size;
    return {{"min_witness_sizes", sizes}, {"parameter", profile.parameter}};
}

namespace {

std::string cache_key_string(const CacheKey& key) {
    std::string s = std::to_string(key.n) + "," + std::to_string(key.w);
    if (key.k) s += "," + std::to_string(*key.k);
    return s;
}

CacheKey cache_key_parse(const std::string& s) {
    CacheKey key;
    int parts[3];
    int count = 0;
    std::istringstream ss(s);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (count == 3) throw ParseError("bad cache key: " + s);
        parts[count++] = std::stoi(token);
    }
    if (count < 2) throw ParseError("bad cache key: " + s);
    key.n = parts[0];
    key.w = parts[1];
    if (count == 3) key.k = parts[2];
    return key;
}

}  // namespace

json cache_to_json(const ExactValueCache& cache) {
    json entries = json::object();
    for (const auto& [key, entry] : cache.entries()) {
        entries[cache_key_string(key)] = {{"value", big_to_string(entry.value)},
                                          {"status", to_string(entry.status)},
                                          {"provenance", entry.provenance},
                                          {"tool_version", entry.tool_version},
                                          {"timestamp", entry.timestamp}};
    }
    return {{"entries", entries}};
}

ExactValueCache cache_from_json(const json& j) {
    ExactValueCache cache;
    for (const auto& [key_str, e] : j.at("entries").items()) {
        CacheEntry entry;
        entry.value = BigInt(e.at("value").get<std::string>());
        entry.status = cache_status_from_string(e.at("status").get<std::string>());
        entry.provenance = e.value("provenance", "");
        entry.tool_version = e.value("tool_version", "");
        entry.timestamp = e.value("timestamp", "");
        cache.insert(cache_key_parse(key_str), std::move(entry));
    }
    return cache;
}

ExactValueCache load_cache(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path)) return {};
    auto in = open_in(path);
    json j;
    try {
        in >> j;
        return cache_from_json(j);
    } catch (const json::exception& e) {
        throw ParseError("bad cache file " + path.string() + ": " + e.what());
    }
}

void save_cache(const std::filesystem::path& path, const ExactValueCache& cache) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << cache_to_json(cache).dump(2) << "\n";
    }
    std::filesystem::rename(tmp, path);
}

std::string iso8601_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace wit
