#pragma once

#include <array>
#include <string>
#include <vector>

#include "jcpurity/scan.hpp"

namespace jcpurity {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { Csv, Json };

/// Column schema shared by CSV, JSON and the SVG series selector.
inline constexpr std::array<const char*, 19> kColumnNames = {
    "tau",          "r0",           "r1",
    "r2",           "r3",           "r_norm",
    "mixed_measure", "purity",       "concurrence",
    "tangle",       "tan_phi",      "phi",
    "eps_minus",    "eps_plus",     "lambda_minus",
    "lambda_plus",  "entropy_vn",   "entropy_binary",
    "excitation",
};

extern const std::string kCsvHeader;

/// Value of the schema column at `index` for one record.
double record_field(const ScanRecord& record, std::size_t index);

/// Index into kColumnNames, or -1 when the name is not in the schema.
int column_index(const std::string& name);

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double value);

std::string records_to_csv(const std::vector<ScanRecord>& records);
std::string records_to_json(const std::vector<ScanRecord>& records);

/// Writes records to path. Throws IoError for empty input (no file is
/// created) or when the file cannot be written.
void write_records(const std::vector<ScanRecord>& records, OutputFormat format,
                   const std::string& path);

}  // namespace jcpurity
