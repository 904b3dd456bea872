#include "dmgrad/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace dmgrad {

namespace {

std::string escape(const std::string& f) {
    if (f.find_first_of(",\"\n") == std::string::npos) return f;
    std::string out = "\"";
    for (char c : f) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
    for (size_t i = 0; i < header.size(); ++i) {
        if (i) body_ += ',';
        body_ += escape(header[i]);
    }
    body_ += "\r\n";
}

void CsvWriter::add_row(const std::vector<std::string>& fields) {
    if (fields.size() != columns_)
        throw std::invalid_argument("CsvWriter: row width mismatch");
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i) body_ += ',';
        body_ += escape(fields[i]);
    }
    body_ += "\r\n";
}

void CsvWriter::write_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << body_;
}

std::string CsvWriter::num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

}  // namespace dmgrad
