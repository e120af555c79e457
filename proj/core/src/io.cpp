#include "jcpurity/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include <json.hpp>

namespace jcpurity {

namespace {

std::string join_header() {
    std::string h;
    for (std::size_t i = 0; i < kColumnNames.size(); ++i) {
        if (i) h += ',';
        h += kColumnNames[i];
    }
    return h;
}

}  // namespace

const std::string kCsvHeader = join_header();

double record_field(const ScanRecord& rec, std::size_t index) {
    switch (index) {
        case 0: return rec.tau;
        case 1: return rec.bloch.r0;
        case 2: return rec.bloch.r1;
        case 3: return rec.bloch.r2;
        case 4: return rec.bloch.r3;
        case 5: return rec.bloch.vec_norm();
        case 6: return rec.report.mixed_measure;
        case 7: return rec.report.purity;
        case 8: return rec.report.concurrence;
        case 9: return rec.report.tangle;
        case 10: return rec.report.tan_phi;
        case 11: return rec.report.phi;
        case 12: return rec.report.eps_minus;
        case 13: return rec.report.eps_plus;
        case 14: return rec.report.lambda_minus;
        case 15: return rec.report.lambda_plus;
        case 16: return rec.report.entropy_vn;
        case 17: return rec.report.entropy_binary;
        case 18: return rec.report.excitation;
        default: throw std::out_of_range("record field index out of range");
    }
}

int column_index(const std::string& name) {
    for (std::size_t i = 0; i < kColumnNames.size(); ++i) {
        if (name == kColumnNames[i]) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

std::string format_double(double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string records_to_csv(const std::vector<ScanRecord>& records) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const auto& rec : records) {
        for (std::size_t i = 0; i < kColumnNames.size(); ++i) {
            if (i) out += ',';
            out += format_double(record_field(rec, i));
        }
        out += '\n';
    }
    return out;
}

std::string records_to_json(const std::vector<ScanRecord>& records) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& rec : records) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < kColumnNames.size(); ++i) {
            obj[kColumnNames[i]] = record_field(rec, i);
        }
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

void write_records(const std::vector<ScanRecord>& records, OutputFormat format,
                   const std::string& path) {
    if (records.empty()) {
        throw IoError("refusing to write empty record set");
    }
    const std::string body = format == OutputFormat::Csv
                                 ? records_to_csv(records)
                                 : records_to_json(records);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open output file: " + path);
    }
    out << body;
    if (!out) {
        throw IoError("write failed: " + path);
    }
}

}  // namespace jcpurity
