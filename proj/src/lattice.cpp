#include "turnwalk/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace turnwalk {

namespace {

std::string join(const std::vector<std::int64_t>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ')';
    return os.str();
}

}  // namespace

Configuration::Configuration(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
        throw std::invalid_argument("Configuration: need at least one walker");
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i - 1] <= parts_[i])
            throw std::invalid_argument("Configuration: parts must be strictly decreasing, got " +
                                        join(parts_));
}

std::string Configuration::str() const { return join(parts_); }

std::int64_t rank_of(const Configuration& c) {
    std::int64_t sum = 0;
    for (auto p : c.parts()) sum += p;
    const std::int64_t d = c.dim();
    return sum - d * (d + 1) / 2;
}

Configuration ground_state(int d) { return shifted_ground_state(d, 0); }

Configuration shifted_ground_state(int d, std::int64_t q) {
    if (d < 1) throw std::invalid_argument("ground state: d must be >= 1");
    if (q < 0) throw std::invalid_argument("ground state: separation must be >= 0");
    std::vector<std::int64_t> parts(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) parts[static_cast<std::size_t>(i)] = d - i + q;
    return Configuration(std::move(parts));
}

std::vector<Configuration> up_neighbors(const Configuration& c) {
    std::vector<Configuration> out;
    for (int i = 0; i < c.dim(); ++i) {
        if (i > 0 && c.part(i) + 1 >= c.part(i - 1)) continue;
        auto parts = c.parts();
        ++parts[static_cast<std::size_t>(i)];
        out.emplace_back(std::move(parts));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Configuration> down_neighbors(const Configuration& c) {
    std::vector<Configuration> out;
    for (int i = 0; i < c.dim(); ++i) {
        if (i + 1 < c.dim() && c.part(i) - 1 <= c.part(i + 1)) continue;
        auto parts = c.parts();
        --parts[static_cast<std::size_t>(i)];
        out.emplace_back(std::move(parts));
    }
    std::sort(out.begin(), out.end());
    return out;
}

YoungDiagram::YoungDiagram(std::vector<std::int64_t> rows) : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] < 0)
            throw std::invalid_argument("YoungDiagram: negative row length");
        if (i > 0 && rows_[i - 1] < rows_[i])
            throw std::invalid_argument("YoungDiagram: rows must be weakly decreasing, got " +
                                        join(rows_));
    }
}

YoungDiagram YoungDiagram::rectangle(int d, std::int64_t q) {
    if (d < 1 || q < 0) throw std::invalid_argument("rectangle: need d >= 1, q >= 0");
    return YoungDiagram(std::vector<std::int64_t>(static_cast<std::size_t>(d), q));
}

std::string YoungDiagram::str() const { return rows_.empty() ? "()" : join(rows_); }

std::int64_t cell_count(const YoungDiagram& y) {
    std::int64_t n = 0;
    for (auto r : y.rows()) n += r;
    return n;
}

std::vector<YoungDiagram> young_up_neighbors(const YoungDiagram& y, int d) {
    if (y.row_count() > d)
        throw std::invalid_argument("young_up_neighbors: diagram has more than d rows");
    std::vector<YoungDiagram> out;
    const int r = y.row_count();
    for (int i = 0; i <= std::min(r, d - 1); ++i) {
        if (i == r) {
            auto rows = y.rows();
            rows.push_back(1);
            out.emplace_back(std::move(rows));
            break;  // only one new row can be started
        }
        if (i > 0 && y.row(i) + 1 > y.row(i - 1)) continue;
        auto rows = y.rows();
        ++rows[static_cast<std::size_t>(i)];
        out.emplace_back(std::move(rows));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<YoungDiagram> young_down_neighbors(const YoungDiagram& y) {
    std::vector<YoungDiagram> out;
    for (int i = 0; i < y.row_count(); ++i) {
        if (i + 1 < y.row_count() && y.row(i) - 1 < y.row(i + 1)) continue;
        auto rows = y.rows();
        --rows[static_cast<std::size_t>(i)];
        out.emplace_back(std::move(rows));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Configuration young_embed(const YoungDiagram& y, int d) {
    if (y.row_count() > d)
        throw std::invalid_argument("young_embed: diagram has more than d rows");
    std::vector<std::int64_t> parts(static_cast<std::size_t>(d), 0);
    for (int i = 0; i < y.row_count(); ++i) parts[static_cast<std::size_t>(i)] = y.row(i);
    for (int i = 0; i < d; ++i) parts[static_cast<std::size_t>(i)] += d - i;
    return Configuration(std::move(parts));
}

}  // namespace turnwalk
