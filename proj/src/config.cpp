#include "qcorr/config.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace qcorr {

namespace {

constexpr std::array kKnownKeys{"scenario", "family", "c_in",   "eta",          "bell",
                                "channel",  "grid",   "grid_b", "bipartitions", "output"};

std::string trim(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = text.find_last_not_of(" \t\r");
    return text.substr(first, last - first + 1);
}

std::string upper(std::string text) {
    std::transform(text.begin(), text.end(), text.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return text;
}

double parse_number(const std::string& text) {
    const auto t = trim(text);
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(t, &used);
    } catch (const std::exception&) {
        throw ConfigError("not a number: '" + t + "'");
    }
    if (used != t.size() || !std::isfinite(value)) throw ConfigError("not a number: '" + t + "'");
    return value;
}

std::vector<std::string> split(const std::string& text, char separator) {
    std::vector<std::string> parts;
    std::stringstream stream(text);
    std::string part;
    while (std::getline(stream, part, separator)) parts.push_back(trim(part));
    return parts;
}

}  // namespace

ConfigValues parse_config(std::istream& in) {
    ConfigValues values;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(line_number) + ": expected key=value");
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end()) {
            throw ConfigError("line " + std::to_string(line_number) + ": unknown key '" + key + "'");
        }
        if (values.contains(key)) {
            throw ConfigError("line " + std::to_string(line_number) + ": duplicate key '" + key + "'");
        }
        values[key] = value;
    }
    return values;
}

ConfigValues load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path);
    return parse_config(in);
}

std::vector<double> parse_grid(const std::string& text) {
    const auto t = trim(text);
    if (t.empty()) throw ConfigError("empty grid");
    if (t.find(':') != std::string::npos) {
        const auto parts = split(t, ':');
        if (parts.size() != 3) throw ConfigError("grid '" + t + "' is not start:step:end");
        const double start = parse_number(parts[0]);
        const double step = parse_number(parts[1]);
        const double end = parse_number(parts[2]);
        if (!(step > 0.0) || end < start) throw ConfigError("grid '" + t + "' has no points");
        const double span = (end - start) / step;
        const auto intervals = std::llround(span);
        if (std::abs(span - static_cast<double>(intervals)) > 1e-9 * std::max(1.0, span)) {
            throw ConfigError("grid '" + t + "': step does not divide the range");
        }
        std::vector<double> grid;
        for (long long i = 0; i <= intervals; ++i) {
            grid.push_back(intervals == 0 ? start
                                          : start + (end - start) * static_cast<double>(i) /
                                                        static_cast<double>(intervals));
        }
        return grid;
    }
    std::vector<double> grid;
    for (const auto& part : split(t, ',')) grid.push_back(parse_number(part));
    return grid;
}

Scenario parse_scenario(const std::string& text) {
    const auto t = upper(trim(text));
    for (auto s : {Scenario::PhaseBoth, Scenario::PhaseOne, Scenario::AmpOne, Scenario::AmpBoth,
                   Scenario::WernerPhase, Scenario::WernerAmp})
        if (to_string(s) == t) return s;
    throw ConfigError("unknown scenario '" + text + "'");
}

FamilyKind parse_family(const std::string& text) {
    const auto t = upper(trim(text));
    if (t == "PHI") return FamilyKind::Phi;
    if (t == "PSI") return FamilyKind::Psi;
    throw ConfigError("unknown family '" + text + "' (PHI or PSI)");
}

ChannelKind parse_channel(const std::string& text) {
    const auto t = upper(trim(text));
    if (t == "PHASE") return ChannelKind::Phase;
    if (t == "AMPLITUDE" || t == "AMP") return ChannelKind::Amplitude;
    throw ConfigError("unknown channel '" + text + "' (PHASE or AMPLITUDE)");
}

BellKind parse_bell(const std::string& text) {
    const auto t = upper(trim(text));
    for (auto b : {BellKind::PhiPlus, BellKind::PhiMinus, BellKind::PsiPlus, BellKind::PsiMinus})
        if (to_string(b) == t) return b;
    if (t == "SINGLET") return BellKind::PsiMinus;
    throw ConfigError("unknown Bell state '" + text + "'");
}

std::vector<Bipartition> parse_bipartitions(const std::string& text) {
    std::vector<Bipartition> out;
    for (const auto& part : split(text, ',')) {
        const auto t = upper(part);
        bool found = false;
        for (auto b : {Bipartition::AB, Bipartition::AE, Bipartition::BE, Bipartition::AE_A,
                       Bipartition::AE_B, Bipartition::BE_A, Bipartition::BE_B, Bipartition::E_AE_B}) {
            if (to_string(b) == t) {
                out.push_back(b);
                found = true;
            }
        }
        if (!found) throw ConfigError("unknown bipartition '" + part + "'");
    }
    return out;
}

}  // namespace qcorr
