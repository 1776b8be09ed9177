#include "ramsey/cli/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ramsey::cli {

std::string format_number(double v) {
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_integer(std::int64_t v) { return std::to_string(v); }

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {
    if (header_.empty())
        throw std::invalid_argument("csv header is empty");
}

void CsvTable::add_row(std::vector<std::string> cells) {
    if (cells.size() != header_.size())
        throw std::invalid_argument("csv row width does not match the header");
    rows_.push_back(std::move(cells));
}

std::string CsvTable::str() const {
    std::ostringstream out;
    auto line = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i)
                out << ',';
            out << cells[i];
        }
        out << '\n';
    };
    line(header_);
    for (const auto& r : rows_)
        line(r);
    return out.str();
}

void CsvTable::write(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << str();
    if (!out)
        throw std::runtime_error("failed writing " + path.string());
}

CsvTable distribution_table(const FieldDistribution& d) {
    CsvTable t({"b", "density"});
    for (std::size_t i = 0; i < d.size(); ++i)
        t.add_row({format_number(d.grid()[i]), format_number(d[i])});
    return t;
}

CsvTable alpha_table(const fourier::AlphaSeries& a) {
    CsvTable t({"j", "value", "method"});
    for (std::size_t j = 0; j < a.coefficients.size(); ++j)
        t.add_row({format_integer(static_cast<std::int64_t>(j)), format_number(a[j]),
                   std::string(fourier::to_string(a.method))});
    return t;
}

CsvTable comb_table(const fourier::DeltaComb& c) {
    CsvTable t({"xi", "re", "im"});
    for (const auto& p : c.peaks())
        t.add_row({format_number(p.xi), format_number(p.amplitude.real()),
                   format_number(p.amplitude.imag())});
    return t;
}

} // namespace ramsey::cli
