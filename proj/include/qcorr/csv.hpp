#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qcorr/experiments.hpp"

namespace qcorr {

/// Output file could not be written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// 12 significant digits, "%.12g". Negative zero prints as 0.
std::string format_number(double value);

CsvTable sweep_table(const std::vector<SweepRow>& rows);
CsvTable conservation_table(const ConservationAudit& audit);
CsvTable dominance_table(const std::vector<DominanceCheck>& checks);
CsvTable werner_table(const std::vector<WernerRow>& rows);
CsvTable geometric_table(const std::vector<GeometricRow>& rows);

/// Header line plus one line per row, '\n' terminated.
std::string to_csv_text(const CsvTable& table);

/// Writes the table to `path`; throws IoError when the file cannot be written.
void emit_csv(const CsvTable& table, const std::string& path);

}  // namespace qcorr
