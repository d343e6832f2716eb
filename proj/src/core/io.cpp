#include "io.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cw {

void write_text_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
        out << content;
        if (!out.good()) throw std::runtime_error("write failed: " + tmp.string());
    }
    fs::rename(tmp, target);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string paths_to_csv(std::span<const PathSample> paths) {
    std::ostringstream out;
    out << "sample_id,t,re,im\n";
    for (std::size_t s = 0; s < paths.size(); ++s)
        for (std::size_t k = 0; k < paths[s].times.size(); ++k)
            out << s << ',' << format_double(paths[s].times[k]) << ','
                << format_double(paths[s].values[k].real()) << ','
                << format_double(paths[s].values[k].imag()) << '\n';
    return out.str();
}

std::string fields_to_csv(std::span<const FieldSample> fields) {
    std::ostringstream out;
    out << "sample_id,n,re,im\n";
    for (std::size_t s = 0; s < fields.size(); ++s)
        for (std::size_t n = 0; n < fields[s].coeffs.size(); ++n)
            out << s << ',' << n << ',' << format_double(fields[s].coeffs[n].real())
                << ',' << format_double(fields[s].coeffs[n].imag()) << '\n';
    return out.str();
}

std::string grid_to_csv(const GridFunction2D& grid) {
    std::ostringstream out;
    out << "i,j,re,im\n";
    for (int i = 0; i < grid.points_per_axis; ++i)
        for (int j = 0; j < grid.points_per_axis; ++j)
            out << i << ',' << j << ',' << format_double(grid.at(i, j).real()) << ','
                << format_double(grid.at(i, j).imag()) << '\n';
    return out.str();
}

std::string grid_to_json_header(const GridFunction2D& grid) {
    nlohmann::json j{{"L", grid.half_extent}, {"M", grid.points_per_axis}};
    return j.dump();
}

GridFunction2D grid_from_csv(const std::string& csv, double half_extent,
                             int points_per_axis) {
    GridFunction2D grid;
    grid.half_extent = half_extent;
    grid.points_per_axis = points_per_axis;
    grid.validate();
    grid.values.assign(static_cast<std::size_t>(points_per_axis) * points_per_axis, 0.0);

    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("grid_from_csv: empty input");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        int i = 0, j = 0;
        double re = 0.0, im = 0.0;
        if (std::sscanf(line.c_str(), "%d,%d,%lf,%lf", &i, &j, &re, &im) != 4)
            throw std::runtime_error("grid_from_csv: malformed row: " + line);
        if (i < 0 || i >= points_per_axis || j < 0 || j >= points_per_axis)
            throw std::runtime_error("grid_from_csv: index out of range");
        grid.at(i, j) = {re, im};
    }
    return grid;
}

} // namespace cw
