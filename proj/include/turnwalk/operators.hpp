#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "turnwalk/lattice.hpp"

namespace turnwalk {

enum class Step : unsigned char { L, R };

/// A word in the raising/lowering alphabet.  Letters are stored left to
/// right as written; the rightmost letter acts first, so "LR" means: raise,
/// then lower.
class StepWord {
public:
    StepWord() = default;
    explicit StepWord(std::vector<Step> letters) : letters_(std::move(letters)) {}

    /// Parse a string over {L,R}; anything else throws.
    static StepWord parse(std::string_view text);

    /// n copies of one letter, e.g. block(Step::R, 3) == "RRR".
    static StepWord block(Step s, std::int64_t n);

    int size() const { return static_cast<int>(letters_.size()); }
    const std::vector<Step>& letters() const { return letters_; }
    int raise_degree() const;
    int lower_degree() const;

    std::string str() const;

    /// Concatenation; the right operand acts first, as in operator notation.
    StepWord operator+(const StepWord& rhs) const;

    bool operator==(const StepWord&) const = default;

private:
    std::vector<Step> letters_;
};

/// An element of the free Z-module over a graph's vertices.  Zero
/// coefficients are never stored.
template <class Vertex>
using StateVector = std::map<Vertex, mpz_class>;

template <class Vertex>
StateVector<Vertex> unit_vector(const Vertex& v) {
    return StateVector<Vertex>{{v, mpz_class(1)}};
}

/// The Weyl lattice W_d as a graded graph.
struct WeylGraph {
    using vertex_type = Configuration;
    int d;

    std::vector<Configuration> up(const Configuration& c) const { return up_neighbors(c); }
    std::vector<Configuration> down(const Configuration& c) const { return down_neighbors(c); }
    std::int64_t rank(const Configuration& c) const { return rank_of(c); }
};

/// Young diagrams with at most max_rows rows, graded by cell count.
struct BoundedYoungGraph {
    using vertex_type = YoungDiagram;
    int max_rows;

    std::vector<YoungDiagram> up(const YoungDiagram& y) const {
        return young_up_neighbors(y, max_rows);
    }
    std::vector<YoungDiagram> down(const YoungDiagram& y) const {
        return young_down_neighbors(y);
    }
    std::int64_t rank(const YoungDiagram& y) const { return cell_count(y); }
};

namespace detail {

template <class V>
void add_scaled(StateVector<V>& dest, const V& key, const mpz_class& coeff) {
    auto [it, inserted] = dest.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) dest.erase(it);
    }
}

}  // namespace detail

template <class Graph, class V = typename Graph::vertex_type>
StateVector<V> apply_raise(const Graph& g, const StateVector<V>& v) {
    StateVector<V> out;
    for (const auto& [key, coeff] : v)
        for (const auto& w : g.up(key)) detail::add_scaled(out, w, coeff);
    return out;
}

template <class Graph, class V = typename Graph::vertex_type>
StateVector<V> apply_lower(const Graph& g, const StateVector<V>& v) {
    StateVector<V> out;
    for (const auto& [key, coeff] : v)
        for (const auto& w : g.down(key)) detail::add_scaled(out, w, coeff);
    return out;
}

/// One transfer step of R + L; the building block of unrefined counts.
template <class Graph, class V = typename Graph::vertex_type>
StateVector<V> apply_raise_plus_lower(const Graph& g, const StateVector<V>& v) {
    StateVector<V> out;
    for (const auto& [key, coeff] : v) {
        for (const auto& w : g.up(key)) detail::add_scaled(out, w, coeff);
        for (const auto& w : g.down(key)) detail::add_scaled(out, w, coeff);
    }
    return out;
}

/// Apply a word right to left: the last letter of the string acts first.
template <class Graph, class V = typename Graph::vertex_type>
StateVector<V> apply_word(const Graph& g, const StepWord& w, StateVector<V> v) {
    const auto& letters = w.letters();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        v = (*it == Step::R) ? apply_raise(g, v) : apply_lower(g, v);
    return v;
}

/// Number of walks from `from` to `to` with the up/down signature of `w`.
template <class Graph, class V = typename Graph::vertex_type>
mpz_class refined_count(const Graph& g, const StepWord& w, const V& from, const V& to) {
    auto image = apply_word(g, w, unit_vector(from));
    auto it = image.find(to);
    return it == image.end() ? mpz_class(0) : it->second;
}

template <class V>
StateVector<V> state_difference(const StateVector<V>& a, const StateVector<V>& b) {
    StateVector<V> out = a;
    for (const auto& [key, coeff] : b) detail::add_scaled(out, key, mpz_class(-coeff));
    return out;
}

/// LR(v) - RL(v) on the Weyl lattice; identically zero because the operators
/// commute there.
StateVector<Configuration> commutator_residual(const WeylGraph& g,
                                               const StateVector<Configuration>& v);

struct CommuteReport {
    int max_d = 0;
    int trials = 0;
    int zero_residuals = 0;  // configurations with LR(v) == RL(v)
    int reorder_trials = 0;
    int equal_reorderings = 0;  // word reorderings with identical images
    std::uint64_t seed = 0;
    bool pass = false;
};

/// Randomized commutation check: per trial a random configuration with
/// dimension up to max_d and entries in [-10, 10] must have vanishing
/// commutator residual.  A second pass shuffles random words and compares
/// the full image state vectors, which must be reorder-invariant.
CommuteReport commute_check(int max_d, int trials, int reorder_trials, std::uint64_t seed);

}  // namespace turnwalk
