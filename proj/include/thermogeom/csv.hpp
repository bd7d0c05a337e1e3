#pragma once

/// Deterministic CSV emission: fixed field order, 17 significant digits via
/// std::to_chars (locale-free, round-trip exact for doubles), '\n' line
/// endings.  Byte-identical output for identical inputs.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "thermogeom/errors.hpp"

namespace thermogeom {

inline std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    if (res.ec != std::errc()) throw ValidationError("format_double: conversion failed");
    return std::string(buf, res.ptr);
}

class CsvWriter {
  public:
    explicit CsvWriter(const std::vector<std::string>& header) : columns_(header.size()) {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (i) out_ += ',';
            out_ += header[i];
        }
        out_ += '\n';
    }

    CsvWriter& cell(double v) { return raw_cell(format_double(v)); }
    CsvWriter& cell(int v) { return raw_cell(std::to_string(v)); }
    CsvWriter& cell(std::string_view v) { return raw_cell(std::string(v)); }

    void end_row() {
        if (in_row_ != columns_)
            throw ValidationError("CsvWriter: row has " + std::to_string(in_row_) +
                                  " cells, expected " + std::to_string(columns_));
        out_ += '\n';
        in_row_ = 0;
        ++rows_;
    }

    const std::string& str() const {
        if (in_row_ != 0) throw ValidationError("CsvWriter: unfinished row");
        return out_;
    }

    std::size_t rows() const { return rows_; }

    void write_file(const std::string& path) const {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw ValidationError("CsvWriter: cannot open '" + path + "' for writing");
        f << str();
    }

  private:
    CsvWriter& raw_cell(std::string s) {
        if (in_row_ == columns_) throw ValidationError("CsvWriter: too many cells in row");
        if (in_row_) out_ += ',';
        out_ += s;
        ++in_row_;
        return *this;
    }

    std::size_t columns_;
    std::size_t in_row_ = 0;
    std::size_t rows_ = 0;
    std::string out_;
};

}  // namespace thermogeom
