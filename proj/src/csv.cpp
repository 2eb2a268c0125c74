#include "fmgl/csv.hpp"

#include <charconv>
#include <stdexcept>

namespace fmgl {

std::string format_double(double v) {
    char buf[40];
    const auto result = std::to_chars(buf, buf + sizeof(buf), v);
    if (result.ec != std::errc()) {
        throw std::runtime_error("format_double: conversion failed");
    }
    return std::string(buf, result.ptr);
}

void CsvWriter::header(const std::vector<std::string>& columns) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) {
            os_ << ',';
        }
        os_ << columns[i];
    }
    os_ << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) {
            os_ << ',';
        }
        os_ << format_double(values[i]);
    }
    os_ << '\n';
}

} // namespace fmgl
