#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "turnwalk/lattice.hpp"

using namespace turnwalk;

namespace {

Configuration cfg(std::vector<std::int64_t> parts) { return Configuration(std::move(parts)); }
YoungDiagram dia(std::vector<std::int64_t> rows) { return YoungDiagram(std::move(rows)); }

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("configuration validates strict decrease") {
    CHECK_NOTHROW(cfg({3, 1}));
    CHECK_THROWS_AS(cfg({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(cfg({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(cfg({}), std::invalid_argument);
    CHECK(cfg({-1, -4}).dim() == 2);  // negative sites are legal, only order matters
}

TEST_CASE("rank is normalized to the ground state") {
    CHECK(rank_of(cfg({2, 1})) == 0);
    CHECK(rank_of(cfg({3, 2})) == 2);
    CHECK(rank_of(cfg({2, 0})) == -1);
    for (int d = 1; d <= 5; ++d) CHECK(rank_of(ground_state(d)) == 0);
}

TEST_CASE("shifted ground state moves every walker q sites") {
    CHECK(ground_state(2) == cfg({2, 1}));
    CHECK(shifted_ground_state(2, 3) == cfg({5, 4}));
    CHECK(shifted_ground_state(3, 1) == cfg({4, 3, 2}));
    CHECK(rank_of(shifted_ground_state(3, 5)) == 15);  // d*q
    CHECK_THROWS_AS(shifted_ground_state(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(shifted_ground_state(2, -1), std::invalid_argument);
}

TEST_CASE("up neighbors") {
    CHECK(up_neighbors(cfg({2, 1})) == std::vector<Configuration>{cfg({3, 1})});
    CHECK(up_neighbors(cfg({3, 1})) == std::vector<Configuration>{cfg({3, 2}), cfg({4, 1})});
    CHECK(up_neighbors(cfg({1})) == std::vector<Configuration>{cfg({2})});
}

TEST_CASE("down neighbors") {
    CHECK(down_neighbors(cfg({2, 1})) == std::vector<Configuration>{cfg({2, 0})});
    CHECK(down_neighbors(cfg({3, 1})) == std::vector<Configuration>{cfg({2, 1}), cfg({3, 0})});
    CHECK(down_neighbors(cfg({1})) == std::vector<Configuration>{cfg({0})});
}

TEST_CASE("neighbor relations are symmetric and change rank by one") {
    const std::vector<Configuration> probes = {
        cfg({2, 1}), cfg({5, 2, 0}), cfg({3, 1, -2}), cfg({7}), cfg({4, 3, 2, 1}), cfg({9, 4, 3, -5}),
    };
    for (const auto& c : probes) {
        for (const auto& u : up_neighbors(c)) {
            CHECK(rank_of(u) == rank_of(c) + 1);
            const auto back = down_neighbors(u);
            CHECK(std::find(back.begin(), back.end(), c) != back.end());
        }
        for (const auto& l : down_neighbors(c)) {
            CHECK(rank_of(l) == rank_of(c) - 1);
            const auto back = up_neighbors(l);
            CHECK(std::find(back.begin(), back.end(), c) != back.end());
        }
    }
}

TEST_CASE("young diagram normalizes and validates") {
    CHECK(dia({2, 1, 0}) == dia({2, 1}));
    CHECK(dia({}) == YoungDiagram());
    CHECK(dia({0, 0}).empty());
    CHECK_THROWS_AS(dia({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(dia({2, -1}), std::invalid_argument);
    CHECK(YoungDiagram::rectangle(2, 3) == dia({3, 3}));
    CHECK(YoungDiagram::rectangle(3, 0).empty());
    CHECK(cell_count(dia({2, 1})) == 3);
    CHECK(cell_count(YoungDiagram()) == 0);
}

TEST_CASE("young up neighbors respect the row bound") {
    CHECK(young_up_neighbors(YoungDiagram(), 2) == std::vector<YoungDiagram>{dia({1})});
    CHECK(young_up_neighbors(dia({2, 1}), 2) ==
          std::vector<YoungDiagram>{dia({2, 2}), dia({3, 1})});
    CHECK(young_up_neighbors(dia({2, 1}), 3) ==
          std::vector<YoungDiagram>{dia({2, 1, 1}), dia({2, 2}), dia({3, 1})});
    CHECK(young_up_neighbors(dia({1}), 1) == std::vector<YoungDiagram>{dia({2})});
    CHECK_THROWS_AS(young_up_neighbors(dia({1, 1}), 1), std::invalid_argument);
}

TEST_CASE("young down neighbors") {
    CHECK(young_down_neighbors(dia({1})) == std::vector<YoungDiagram>{YoungDiagram()});
    CHECK(young_down_neighbors(dia({2, 1})) == std::vector<YoungDiagram>{dia({1, 1}), dia({2})});
    CHECK(young_down_neighbors(dia({2, 2})) == std::vector<YoungDiagram>{dia({2, 1})});
    CHECK(young_down_neighbors(YoungDiagram()).empty());
}

TEST_CASE("young graph edges are symmetric within the bound") {
    const int d = 3;
    // every diagram with at most 5 cells and at most d rows
    std::vector<YoungDiagram> layer = {YoungDiagram()};
    std::set<YoungDiagram> seen(layer.begin(), layer.end());
    for (int cells = 0; cells < 5; ++cells) {
        std::vector<YoungDiagram> next;
        for (const auto& y : layer)
            for (const auto& u : young_up_neighbors(y, d))
                if (seen.insert(u).second) next.push_back(u);
        layer = std::move(next);
    }
    for (const auto& y : seen) {
        for (const auto& u : young_up_neighbors(y, d)) {
            CHECK(cell_count(u) == cell_count(y) + 1);
            const auto back = young_down_neighbors(u);
            CHECK(std::find(back.begin(), back.end(), y) != back.end());
        }
        for (const auto& l : young_down_neighbors(y)) {
            const auto back = young_up_neighbors(l, d);
            CHECK(std::find(back.begin(), back.end(), y) != back.end());
        }
    }
}

TEST_CASE("young embedding lands on the shifted lattice") {
    CHECK(young_embed(YoungDiagram(), 2) == cfg({2, 1}));
    CHECK(young_embed(dia({2, 1}), 2) == cfg({4, 2}));
    CHECK(young_embed(dia({1, 1}), 2) == cfg({3, 2}));
    CHECK(young_embed(YoungDiagram::rectangle(2, 3), 2) == shifted_ground_state(2, 3));
    CHECK_THROWS_AS(young_embed(dia({1, 1, 1}), 2), std::invalid_argument);
}

TEST_CASE("young embedding is injective and edge preserving") {
    const int d = 2;
    std::vector<YoungDiagram> all = {YoungDiagram()};
    std::set<YoungDiagram> seen(all.begin(), all.end());
    for (int cells = 0; cells < 6; ++cells) {
        std::vector<YoungDiagram> next;
        for (const auto& y : all)
            for (const auto& u : young_up_neighbors(y, d))
                if (seen.insert(u).second) next.push_back(u);
        all = std::move(next);
    }
    std::set<Configuration> images;
    for (const auto& y : seen) {
        const Configuration c = young_embed(y, d);
        CHECK(images.insert(c).second);  // injective
        CHECK(rank_of(c) == cell_count(y));
        const auto ups = up_neighbors(c);
        for (const auto& u : young_up_neighbors(y, d))
            CHECK(std::find(ups.begin(), ups.end(), young_embed(u, d)) != ups.end());
    }
}

TEST_CASE("string forms") {
    CHECK(cfg({3, 1}).str() == "(3,1)");
    CHECK(dia({2, 1}).str() == "(2,1)");
    CHECK(YoungDiagram().str() == "()");
}

}  // TEST_SUITE
