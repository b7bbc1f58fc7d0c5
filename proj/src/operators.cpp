#include "turnwalk/operators.hpp"

#include <stdexcept>

#include "turnwalk/sampling.hpp"

namespace turnwalk {

StepWord StepWord::parse(std::string_view text) {
    std::vector<Step> letters;
    letters.reserve(text.size());
    for (char c : text) {
        if (c == 'L')
            letters.push_back(Step::L);
        else if (c == 'R')
            letters.push_back(Step::R);
        else
            throw std::invalid_argument(std::string("StepWord: bad letter '") + c +
                                        "', expected L or R");
    }
    return StepWord(std::move(letters));
}

StepWord StepWord::block(Step s, std::int64_t n) {
    if (n < 0) throw std::invalid_argument("StepWord: negative block length");
    return StepWord(std::vector<Step>(static_cast<std::size_t>(n), s));
}

int StepWord::raise_degree() const {
    int n = 0;
    for (Step s : letters_) n += (s == Step::R);
    return n;
}

int StepWord::lower_degree() const {
    int n = 0;
    for (Step s : letters_) n += (s == Step::L);
    return n;
}

std::string StepWord::str() const {
    std::string s;
    s.reserve(letters_.size());
    for (Step l : letters_) s.push_back(l == Step::R ? 'R' : 'L');
    return s;
}

StepWord StepWord::operator+(const StepWord& rhs) const {
    std::vector<Step> letters = letters_;
    letters.insert(letters.end(), rhs.letters_.begin(), rhs.letters_.end());
    return StepWord(std::move(letters));
}

StateVector<Configuration> commutator_residual(const WeylGraph& g,
                                               const StateVector<Configuration>& v) {
    auto lr = apply_lower(g, apply_raise(g, v));
    auto rl = apply_raise(g, apply_lower(g, v));
    return state_difference(lr, rl);
}

CommuteReport commute_check(int max_d, int trials, int reorder_trials, std::uint64_t seed) {
    if (max_d < 1 || trials < 0 || reorder_trials < 0)
        throw std::invalid_argument("commute_check: bad parameters");
    CommuteReport report;
    report.max_d = max_d;
    report.trials = trials;
    report.reorder_trials = reorder_trials;
    report.seed = seed;

    RngStream rng(seed, 0);
    for (int t = 0; t < trials; ++t) {
        const int d = 1 + static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(max_d)));
        const Configuration c = random_configuration(d, -10, 10, rng);
        const WeylGraph g{d};
        if (commutator_residual(g, unit_vector(c)).empty()) ++report.zero_residuals;
    }

    RngStream word_rng(seed, 1);
    for (int t = 0; t < reorder_trials; ++t) {
        const int d = 1 + static_cast<int>(
                              uniform_index(word_rng, static_cast<std::uint64_t>(max_d)));
        const Configuration c = random_configuration(d, -6, 6, word_rng);
        const int raises = static_cast<int>(uniform_index(word_rng, 4));
        const int lowers = static_cast<int>(uniform_index(word_rng, 4));
        const StepWord word = random_word(raises, lowers, word_rng);
        const StepWord reordered = shuffle_word(word, word_rng);
        const WeylGraph g{d};
        if (apply_word(g, word, unit_vector(c)) == apply_word(g, reordered, unit_vector(c)))
            ++report.equal_reorderings;
    }

    report.pass = report.zero_residuals == report.trials &&
                  report.equal_reorderings == report.reorder_trials;
    return report;
}

}  // namespace turnwalk
