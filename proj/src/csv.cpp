#include "qcorr/csv.hpp"

#include <cstdio>
#include <fstream>

namespace qcorr {

std::string format_number(double value) {
    if (value == 0.0) value = 0.0;  // drops the sign of -0
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

namespace {

std::string flag(bool value) { return value ? "1" : "0"; }

}  // namespace

CsvTable sweep_table(const std::vector<SweepRow>& rows) {
    CsvTable table{{"scenario", "family", "c_in_or_eta", "strength_a", "strength_b", "bipartition",
                    "concurrence", "eof", "discord_mA", "discord_mB", "discord_sym", "mutual_info",
                    "negativity", "geo_discord", "geo_discord_raw"},
                   {}};
    for (const auto& row : rows) {
        const auto& r = row.report;
        table.rows.push_back({to_string(row.scenario), row.family, format_number(row.c_in_or_eta),
                              format_number(row.strength_a), format_number(row.strength_b),
                              r.bipartition, format_number(r.concurrence), format_number(r.eof),
                              format_number(r.discord_measured_a), format_number(r.discord_measured_b),
                              format_number(r.symmetrized_discord),
                              format_number(r.mutual_information), format_number(r.negativity),
                              format_number(r.geometric_discord),
                              format_number(r.geometric_discord_raw)});
    }
    return table;
}

CsvTable conservation_table(const ConservationAudit& audit) {
    CsvTable table{{"c_in", "strength", "eof_AB", "eof_AE", "discord_AB", "discord_AE", "violation",
                    "discord_AB_mA", "discord_AE_mA", "violation_mA"},
                   {}};
    for (const auto& p : audit.points) {
        table.rows.push_back({format_number(p.c_in), format_number(p.strength),
                              format_number(p.eof_ab), format_number(p.eof_ae),
                              format_number(p.discord_ab), format_number(p.discord_ae),
                              format_number(p.violation), format_number(p.discord_ab_on_a),
                              format_number(p.discord_ae_on_a), format_number(p.violation_on_a)});
    }
    return table;
}

CsvTable dominance_table(const std::vector<DominanceCheck>& checks) {
    CsvTable table{{"c_in", "strength", "relation", "lhs", "rhs", "holds"}, {}};
    for (const auto& c : checks) {
        table.rows.push_back({format_number(c.c_in), format_number(c.strength), c.relation,
                              format_number(c.lhs), format_number(c.rhs), flag(c.holds)});
    }
    return table;
}

CsvTable werner_table(const std::vector<WernerRow>& rows) {
    CsvTable table{{"eta", "strength", "eof", "discord", "eof_ratio", "discord_ratio"}, {}};
    for (const auto& r : rows) {
        table.rows.push_back({format_number(r.eta), format_number(r.strength), format_number(r.eof),
                              format_number(r.discord),
                              r.eof_ratio ? format_number(*r.eof_ratio) : "undefined",
                              format_number(r.discord_ratio)});
    }
    return table;
}

CsvTable geometric_table(const std::vector<GeometricRow>& rows) {
    CsvTable table{{"c_in", "strength", "bipartition", "negativity", "negativity_sq", "geo_discord",
                    "inequality_holds", "saturated"},
                   {}};
    for (const auto& r : rows) {
        table.rows.push_back({format_number(r.c_in), format_number(r.strength), r.bipartition,
                              format_number(r.negativity), format_number(r.negativity_sq),
                              format_number(r.geometric_discord), flag(r.inequality_holds),
                              flag(r.saturated)});
    }
    return table;
}

std::string to_csv_text(const CsvTable& table) {
    std::string text;
    auto append_line = [&](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i > 0) text += ',';
            text += fields[i];
        }
        text += '\n';
    };
    append_line(table.header);
    for (const auto& row : table.rows) append_line(row);
    return text;
}

void emit_csv(const CsvTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    const auto text = to_csv_text(table);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.close();
    if (!out) throw IoError("failed writing " + path);
}

}  // namespace qcorr
