#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace turnwalk {

/// A point of the Weyl lattice W_d: strictly decreasing integer coordinates,
/// one per walker, rightmost walker listed first.  Immutable after
/// construction; invalid inputs throw std::invalid_argument.
class Configuration {
public:
    explicit Configuration(std::vector<std::int64_t> parts);

    int dim() const { return static_cast<int>(parts_.size()); }
    std::int64_t part(int i) const { return parts_[static_cast<std::size_t>(i)]; }
    const std::vector<std::int64_t>& parts() const { return parts_; }

    auto operator<=>(const Configuration&) const = default;

    std::string str() const;

private:
    std::vector<std::int64_t> parts_;
};

/// Rank normalized so the packed ground state (d, d-1, ..., 1) has rank 0.
std::int64_t rank_of(const Configuration& c);

/// The packed ground state rho = (d, d-1, ..., 1).
Configuration ground_state(int d);

/// rho shifted q sites to the right: (d+q, d-1+q, ..., 1+q).
Configuration shifted_ground_state(int d, std::int64_t q);

/// Vertices one rank above/below c, ascending lexicographic order.
std::vector<Configuration> up_neighbors(const Configuration& c);
std::vector<Configuration> down_neighbors(const Configuration& c);

/// A Young diagram as its weakly decreasing row vector.  Trailing zero rows
/// are stripped, so (2,1,0) and (2,1) are the same diagram.  The row bound d
/// is not stored; operations that need one take it as a parameter.
class YoungDiagram {
public:
    YoungDiagram() = default;
    explicit YoungDiagram(std::vector<std::int64_t> rows);

    static YoungDiagram rectangle(int d, std::int64_t q);

    int row_count() const { return static_cast<int>(rows_.size()); }
    std::int64_t row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
    const std::vector<std::int64_t>& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }

    auto operator<=>(const YoungDiagram&) const = default;

    std::string str() const;

private:
    std::vector<std::int64_t> rows_;
};

/// Number of cells |y|; the rank function on the Young graph.
std::int64_t cell_count(const YoungDiagram& y);

/// Diagrams reached by adding/removing a single cell, within the d-row bound
/// for additions.  Ascending lexicographic order.
std::vector<YoungDiagram> young_up_neighbors(const YoungDiagram& y, int d);
std::vector<YoungDiagram> young_down_neighbors(const YoungDiagram& y);

/// Row vector padded to length d plus rho; lands in W_d.  Sends the empty
/// diagram to the ground state and single-cell additions to up-edges.
Configuration young_embed(const YoungDiagram& y, int d);

}  // namespace turnwalk
