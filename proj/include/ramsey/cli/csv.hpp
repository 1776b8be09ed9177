// Byte-stable CSV output.
#pragma once

#include "ramsey/core/distribution.hpp"
#include "ramsey/fourier/alpha_series.hpp"
#include "ramsey/fourier/delta_comb.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace ramsey::cli {

/// 17 significant digits; "inf", "-inf" and "nan" for non-finite values.
std::string format_number(double v);
std::string format_integer(std::int64_t v);

class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);

    void add_row(std::vector<std::string> cells);
    std::size_t rows() const noexcept { return rows_.size(); }
    std::string str() const;
    /// Writes with '\n' line endings; throws std::runtime_error on I/O failure.
    void write(const std::filesystem::path& path) const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

CsvTable distribution_table(const FieldDistribution& d);   // b, density
CsvTable alpha_table(const fourier::AlphaSeries& a);       // j, value, method
CsvTable comb_table(const fourier::DeltaComb& c);          // xi, re, im

} // namespace ramsey::cli
