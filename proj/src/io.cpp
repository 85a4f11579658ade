#include "plap/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace plap {

std::string double_to_string(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) throw std::runtime_error("double formatting failed");
    return std::string(buf, ptr);
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    namespace fs = std::filesystem;
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << content;
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, path);
}

std::string grid_to_csv(const GridFunction& u) {
    const Domain& d = u.domain();
    std::ostringstream os;
    for (int i = 0; i < d.dim(); ++i) os << "x" << i << ",";
    os << "value\n";
    for (std::int64_t v = 0; v < u.size(); ++v) {
        auto c = d.coords_of(v);
        for (int i = 0; i < d.dim(); ++i) os << c[i] << ",";
        os << double_to_string(u[v]) << "\n";
    }
    return os.str();
}

void write_grid_csv(const std::filesystem::path& path, const GridFunction& u) {
    atomic_write(path, grid_to_csv(u));
}

GridFunction read_grid_csv(const std::filesystem::path& path, DomainPtr domain) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    GridFunction u(domain);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(path.string() + ": empty file");
    std::int64_t rows = 0;
    std::vector<int> coords(domain->dim());
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string cell;
        for (int i = 0; i < domain->dim(); ++i) {
            if (!std::getline(ls, cell, ','))
                throw std::runtime_error(path.string() + ": short row " + line);
            coords[i] = std::stoi(cell);
        }
        if (!std::getline(ls, cell, ','))
            throw std::runtime_error(path.string() + ": missing value in row " + line);
        u[domain->index_of(coords)] = std::stod(cell);
        ++rows;
    }
    if (rows != domain->vertex_count())
        throw std::runtime_error(path.string() + ": expected " +
                                 std::to_string(domain->vertex_count()) + " rows, got " +
                                 std::to_string(rows));
    return u;
}

}  // namespace plap
