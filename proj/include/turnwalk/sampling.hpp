#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "turnwalk/lattice.hpp"
#include "turnwalk/operators.hpp"
#include "turnwalk/rng.hpp"

namespace turnwalk {

/// Uniform integer in [0, n); modulo bias is irrelevant at test ranges.
inline std::uint64_t uniform_index(RngStream& rng, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("uniform_index: empty range");
    return rng.next_u64() % n;
}

/// A random lattice point: dim distinct values drawn from [lo, hi], sorted
/// into the strictly decreasing order the lattice requires.
inline Configuration random_configuration(int dim, std::int64_t lo, std::int64_t hi,
                                          RngStream& rng) {
    if (dim < 1 || hi - lo + 1 < dim)
        throw std::invalid_argument("random_configuration: range too small for dim");
    std::set<std::int64_t> chosen;
    while (static_cast<int>(chosen.size()) < dim)
        chosen.insert(lo + static_cast<std::int64_t>(
                               uniform_index(rng, static_cast<std::uint64_t>(hi - lo + 1))));
    std::vector<std::int64_t> parts(chosen.rbegin(), chosen.rend());
    return Configuration(parts);
}

/// A word with the given letter multiset in random order (Fisher-Yates).
inline StepWord random_word(int raises, int lowers, RngStream& rng) {
    std::vector<Step> letters(static_cast<std::size_t>(raises), Step::R);
    letters.insert(letters.end(), static_cast<std::size_t>(lowers), Step::L);
    for (std::size_t i = letters.size(); i > 1; --i)
        std::swap(letters[i - 1], letters[uniform_index(rng, i)]);
    return StepWord(letters);
}

/// Random reordering of an existing word (same letter multiset).
inline StepWord shuffle_word(const StepWord& w, RngStream& rng) {
    std::vector<Step> letters = w.letters();
    for (std::size_t i = letters.size(); i > 1; --i)
        std::swap(letters[i - 1], letters[uniform_index(rng, i)]);
    return StepWord(letters);
}

/// Endpoint of a uniformly random rising path of the given length; the
/// result is reachable from `start` by construction.
inline Configuration random_raise_path(const Configuration& start, int length, RngStream& rng) {
    Configuration current = start;
    for (int k = 0; k < length; ++k) {
        const auto ups = up_neighbors(current);
        current = ups[uniform_index(rng, ups.size())];
    }
    return current;
}

}  // namespace turnwalk
