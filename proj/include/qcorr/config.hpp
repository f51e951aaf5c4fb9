#pragma once

// Plain-text key=value configuration shared by every CLI subcommand.

#include <istream>
#include <map>
#include <string>
#include <vector>

#include "qcorr/channels.hpp"
#include "qcorr/experiments.hpp"

namespace qcorr {

/// Recognized keys: scenario, family, c_in, eta, bell, channel, grid, grid_b,
/// bipartitions, output. Blank lines and '#' comments are skipped.
using ConfigValues = std::map<std::string, std::string>;

ConfigValues parse_config(std::istream& in);
ConfigValues load_config(const std::string& path);

/// "start:step:end" (inclusive), "v1,v2,...", or a single value.
std::vector<double> parse_grid(const std::string& text);

Scenario parse_scenario(const std::string& text);
FamilyKind parse_family(const std::string& text);
ChannelKind parse_channel(const std::string& text);
BellKind parse_bell(const std::string& text);
std::vector<Bipartition> parse_bipartitions(const std::string& text);

}  // namespace qcorr
