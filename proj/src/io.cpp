#include "cams/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_set>

#include "cams/errors.hpp"

namespace cams {

namespace {

constexpr double kProtonMass = 1.00728;  // Da

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& token, double& out) {
    if (token.empty()) return false;
    char* end = nullptr;
    out = std::strtod(token.c_str(), &end);
    return end == token.c_str() + token.size();
}

// "2+", "+2", "2" -> 2
bool parse_charge(const std::string& token, int& out) {
    std::string t = token;
    bool negative = false;
    if (!t.empty() && (t.back() == '+' || t.back() == '-')) {
        negative = t.back() == '-';
        t.pop_back();
    }
    if (!t.empty() && (t.front() == '+' || t.front() == '-')) {
        negative = t.front() == '-';
        t.erase(t.begin());
    }
    if (t.empty() || t.size() > 4 ||
        !std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); }))
        return false;
    out = std::stoi(t);
    if (negative) out = -out;
    return out != 0;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

[[noreturn]] void parse_fail(const std::filesystem::path& path, std::size_t line_no,
                             const std::string& what) {
    throw ParseError(path.string() + ":" + std::to_string(line_no) + ": " + what);
}

}  // namespace

ParsedSpectra parse_mgf(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");

    ParsedSpectra result;
    std::unordered_set<std::string> seen_ids;
    const std::string stem = path.filename().string();

    std::string line;
    std::size_t line_no = 0;
    bool in_block = false;
    std::size_t block_start_line = 0;
    std::size_t block_ordinal = 0;
    std::string title;
    double pepmass = 0.0;
    bool have_pepmass = false;
    std::optional<int> charge;
    std::vector<Peak> peaks;

    auto finish_block = [&]() {
        if (peaks.empty()) {
            ++result.skipped;
            return;
        }
        if (!have_pepmass)
            parse_fail(path, block_start_line, "block has no PEPMASS");
        std::string id = title.empty() ? stem + "#" + std::to_string(block_ordinal) : title;
        if (!seen_ids.insert(id).second)
            parse_fail(path, block_start_line, "duplicate spectrum id '" + id + "'");
        try {
            result.spectra.push_back(make_spectrum(std::move(id), pepmass, charge, std::move(peaks)));
        } catch (const DataError& e) {
            parse_fail(path, block_start_line, e.what());
        }
    };

    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;

        if (!in_block) {
            if (t == "BEGIN IONS") {
                in_block = true;
                block_start_line = line_no;
                title.clear();
                pepmass = 0.0;
                have_pepmass = false;
                charge.reset();
                peaks.clear();
            }
            // Content outside blocks (global headers) is ignored.
            continue;
        }

        if (t == "END IONS") {
            finish_block();
            in_block = false;
            ++block_ordinal;
            continue;
        }

        const std::size_t eq = t.find('=');
        if (eq != std::string::npos && t.find_first_of(" \t") > eq) {
            const std::string key = t.substr(0, eq);
            const std::string value = trim(t.substr(eq + 1));
            if (key == "TITLE") {
                title = value;
            } else if (key == "PEPMASS") {
                const auto tokens = split_ws(value);
                if (tokens.empty() || !parse_double(tokens[0], pepmass))
                    parse_fail(path, line_no, "bad PEPMASS value '" + value + "'");
                have_pepmass = true;
            } else if (key == "CHARGE") {
                const auto tokens = split_ws(value);
                int c = 0;
                if (tokens.empty() || !parse_charge(tokens[0], c))
                    parse_fail(path, line_no, "bad CHARGE value '" + value + "'");
                charge = std::abs(c);
            }
            // Other KEY=VALUE headers (RTINSECONDS, SCANS, ...) are ignored.
            continue;
        }

        const auto tokens = split_ws(t);
        if (tokens.size() < 2) parse_fail(path, line_no, "peak line needs m/z and intensity");
        double mz = 0.0, intensity = 0.0;
        if (!parse_double(tokens[0], mz) || !parse_double(tokens[1], intensity))
            parse_fail(path, line_no, "non-numeric peak line '" + t + "'");
        peaks.push_back(Peak{mz, intensity});
    }
    if (in_block) parse_fail(path, block_start_line, "BEGIN IONS without END IONS");
    return result;
}

ParsedSpectra parse_dta_dir(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir))
        throw ParseError("'" + dir.string() + "' is not a directory");

    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".dta")
            files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());

    ParsedSpectra result;
    for (const auto& file : files) {
        std::ifstream in(file);
        if (!in) {
            ++result.skipped;
            continue;
        }
        std::string line;
        double mh = 0.0;
        int charge = 0;
        bool ok = false;
        if (std::getline(in, line)) {
            const auto tokens = split_ws(trim(line));
            std::string charge_tok = tokens.size() >= 2 ? tokens[1] : "";
            ok = tokens.size() >= 2 && parse_double(tokens[0], mh) &&
                 parse_charge(charge_tok, charge) && charge > 0 && mh > 0.0;
        }
        std::vector<Peak> peaks;
        while (ok && std::getline(in, line)) {
            const std::string t = trim(line);
            if (t.empty()) continue;
            const auto tokens = split_ws(t);
            double mz = 0.0, intensity = 0.0;
            if (tokens.size() < 2 || !parse_double(tokens[0], mz) ||
                !parse_double(tokens[1], intensity)) {
                ok = false;
                break;
            }
            peaks.push_back(Peak{mz, intensity});
        }
        if (!ok || peaks.empty()) {
            ++result.skipped;
            continue;
        }
        const double precursor = (mh + (charge - 1) * kProtonMass) / charge;
        result.spectra.push_back(
            make_spectrum(file.filename().string(), precursor, charge, std::move(peaks)));
    }
    return result;
}

GroundTruth parse_ground_truth(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");

    GroundTruth truth;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos)
            parse_fail(path, line_no, "expected two tab-separated columns");
        const std::string id = trim(line.substr(0, tab));
        const std::string peptide = trim(line.substr(tab + 1));
        if (id.empty() || peptide.empty())
            parse_fail(path, line_no, "empty spectrum id or peptide");
        if (!truth.emplace(id, peptide).second)
            parse_fail(path, line_no, "duplicate spectrum id '" + id + "'");
    }
    return truth;
}

void write_clusters(const Clustering& clustering, const std::filesystem::path& path) {
    const Clustering normalized = normalize_clustering(clustering);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << "cluster_id\tspectrum_id\n";
    for (std::size_t c = 0; c < normalized.size(); ++c)
        for (const std::string& id : normalized[c]) out << c << '\t' << id << '\n';
    out.flush();
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

Clustering read_clusters(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");

    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line) || trim(line) != "cluster_id\tspectrum_id")
        parse_fail(path, 1, "missing cluster_id\tspectrum_id header");
    ++line_no;

    std::map<long, std::vector<std::string>> by_id;
    std::unordered_set<std::string> seen;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos)
            parse_fail(path, line_no, "expected two tab-separated columns");
        double cluster_id = 0.0;
        if (!parse_double(trim(line.substr(0, tab)), cluster_id))
            parse_fail(path, line_no, "non-numeric cluster id");
        const std::string spectrum_id = trim(line.substr(tab + 1));
        if (spectrum_id.empty()) parse_fail(path, line_no, "empty spectrum id");
        if (!seen.insert(spectrum_id).second)
            parse_fail(path, line_no, "spectrum id '" + spectrum_id + "' assigned twice");
        by_id[static_cast<long>(cluster_id)].push_back(spectrum_id);
    }
    Clustering clusters;
    clusters.reserve(by_id.size());
    for (auto& [cid, members] : by_id) clusters.push_back(std::move(members));
    return normalize_clustering(std::move(clusters));
}

void write_mgf(const std::vector<Spectrum>& spectra, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    char buf[64];
    for (const Spectrum& s : spectra) {
        out << "BEGIN IONS\n";
        out << "TITLE=" << s.id << '\n';
        std::snprintf(buf, sizeof(buf), "%.5f", s.precursor_mz);
        out << "PEPMASS=" << buf << '\n';
        if (s.charge) out << "CHARGE=" << *s.charge << "+\n";
        for (const Peak& p : s.peaks) {
            std::snprintf(buf, sizeof(buf), "%.5f %.4f", p.mz, p.intensity);
            out << buf << '\n';
        }
        out << "END IONS\n";
    }
    out.flush();
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

void write_ground_truth(const GroundTruth& truth, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    for (const auto& [id, peptide] : truth) out << id << '\t' << peptide << '\n';
    out.flush();
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

}  // namespace cams
