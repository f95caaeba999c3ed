#include "burn/decompose.hpp"
#include "burn/gen.hpp"
#include "burn/simulate.hpp"

#include "support.hpp"

#include <catch2/catch.hpp>

#include <set>

using namespace burn;

TEST_CASE("RadiusSet") {
    RadiusSet r = RadiusSet::initial(4);
    REQUIRE(r.size() == 4);
    REQUIRE(r.max() == 3);
    r.consume(2);
    REQUIRE(r.values() == std::vector<int>{0, 1, 3});
    REQUIRE_THROWS_AS(r.consume(2), std::invalid_argument);
    REQUIRE_THROWS_AS(RadiusSet({3, 3}), std::invalid_argument);
    REQUIRE_THROWS_AS(RadiusSet({2, 1}), std::invalid_argument);
    REQUIRE_THROWS_AS(RadiusSet({-1, 0}), std::invalid_argument);
}

TEST_CASE("select_radius examples") {
    // window [6,8] inside {0..9}: smallest admissible is 6
    REQUIRE(select_radius(RadiusSet::initial(10), 10, 1) == 6);
    // admissible {3, 9}: returns 3
    REQUIRE(select_radius(RadiusSet({0, 1, 2, 3, 9}), 4, 1) == 3);
    // admissible {4, 5, 6}: returns 4
    REQUIRE(select_radius(RadiusSet::initial(7), 6, 1) == 4);

    REQUIRE_THROWS_AS(select_radius(RadiusSet::initial(10), 10, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(select_radius(RadiusSet::initial(10), 10, 5), std::invalid_argument);
    REQUIRE_THROWS_AS(select_radius(RadiusSet::initial(3), 6, 1), std::invalid_argument);
}

TEST_CASE("select_radius agrees with a brute-force scan") {
    Xorshift64Star rng(2024);
    for (int iter = 0; iter < 2000; ++iter) {
        const int j = 3 + static_cast<int>(rng.next_below(30));
        const int m = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>((j - 1) / 2)));
        if (2 * m >= j) continue;
        // random strictly increasing set of exactly j or j+1 values
        const int size = j + static_cast<int>(rng.next_below(2));
        std::set<int> vals;
        while (static_cast<int>(vals.size()) < size)
            vals.insert(static_cast<int>(rng.next_below(static_cast<std::uint64_t>(3 * j + 10))));
        std::vector<int> sorted(vals.begin(), vals.end());
        const auto admissible = testsupport::admissible_radii(sorted, j, m);
        REQUIRE_FALSE(admissible.empty()); // the selection window is never empty
        REQUIRE(select_radius(RadiusSet(sorted), j, m) == admissible.front());
    }
}

TEST_CASE("extract_step case dispatch") {
    SECTION("CASE1 on a path tail") {
        RootedTree t = root_tree(gen_path(10), 0);
        Extraction e = extract_step(t, RadiusSet::initial(4), 3);
        REQUIRE(e.tag == CaseTag::Case1);
        REQUIRE(e.r_star == 3);
        REQUIRE(e.attach == 6);
        std::vector<int> expected{6, 7, 8, 9};
        std::vector<int> got = e.piece;
        std::sort(got.begin(), got.end());
        REQUIRE(got == expected);
    }
    SECTION("CASE2A on a path") {
        RootedTree t = root_tree(gen_path(10), 0);
        Extraction e = extract_step(t, RadiusSet::initial(7), 6);
        REQUIRE(e.tag == CaseTag::Case2a);
        REQUIRE(e.m == 1);
        REQUIRE(e.r_star == 4);
        REQUIRE(e.attach == 3);
        REQUIRE(e.size() == 7);
        REQUIRE(e.measured_radius == 3);
    }
    SECTION("CASE2B with a gapped radius set") {
        RootedTree t = root_tree(gen_path(21), 0);
        Extraction e = extract_step(t, RadiusSet({0, 1, 2, 3, 9}), 4);
        REQUIRE(e.tag == CaseTag::Case2b);
        REQUIRE(e.m == 1);
        REQUIRE(e.r_star == 3);
        REQUIRE(e.attach == 15); // the (r* + j/2)-th ancestor of vertex 20
        REQUIRE(e.size() == 6);
        REQUIRE(e.measured_radius == 3);
    }
    SECTION("whole tree when the deepest vertex is too shallow") {
        RootedTree t = root_tree(gen_star(8), 0);
        Extraction e = extract_step(t, RadiusSet::initial(6), 5);
        REQUIRE(e.tag == CaseTag::WholeTree);
        REQUIRE(e.r_star == 5);
        REQUIRE(e.attach == 0);
        REQUIRE(e.size() == 8);
        REQUIRE(t.empty());
    }
}

TEST_CASE("decompose_tree") {
    SECTION("single vertex") {
        RootedTree t = root_tree(make_graph(1, {}), 0);
        Decomposition d = decompose_tree(t, 6);
        REQUIRE(d.extractions.size() == 1);
        REQUIRE(d.extractions[0].j == 5);
        REQUIRE(d.extractions[0].tag == CaseTag::WholeTree);
        REQUIRE(d.extractions[0].size() == 1);
        REQUIRE(d.covers());
    }
    SECTION("path on 9 at k=8") {
        RootedTree t = root_tree(gen_path(9), 0);
        Decomposition d = decompose_tree(t, 8);
        REQUIRE(d.covers());
        std::set<int> radii;
        for (const auto& e : d.extractions) {
            REQUIRE(radii.insert(e.r_star).second);
            REQUIRE(e.r_star >= 0);
            REQUIRE(e.r_star <= 7);
        }
    }
    SECTION("path on 9 golden trace") {
        RootedTree t = root_tree(gen_path(9), 0);
        Decomposition d = decompose_tree(t, 8);
        REQUIRE(d.extractions.size() == 2);
        REQUIRE(format_extraction(d.extractions[0]) ==
                "j=7 case=CASE2A r*=5 p=1 center=4 size=8 radius=4");
        REQUIRE(format_extraction(d.extractions[1]) ==
                "j=6 case=WHOLE_TREE r*=7 p=0 center=0 size=1 radius=0");
    }
}

TEST_CASE("decomposition invariants on random trees") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        Xorshift64Star rng(seed);
        const int n = 1 + static_cast<int>(rng.next_below(250));
        Graph g = gen_random_tree(n, seed);
        RootedTree t = root_tree(g, 0);
        const int k = burning_bound(n);
        Decomposition d = decompose_tree(t, k);

        REQUIRE(d.covers());
        std::set<int> radii, seen;
        for (std::size_t i = 0; i < d.extractions.size(); ++i) {
            const Extraction& e = d.extractions[i];
            // consumed radii distinct within {0..k-1}
            REQUIRE(radii.insert(e.r_star).second);
            REQUIRE(e.r_star >= 0);
            REQUIRE(e.r_star < k);
            // pieces pairwise disjoint
            for (int v : e.piece) REQUIRE(seen.insert(v).second);
            // independent radius check via double BFS over the induced piece
            const int diam = testsupport::induced_tree_diameter(g, e.piece);
            REQUIRE((diam + 1) / 2 <= e.r_star);
            REQUIRE(e.measured_radius <= e.r_star);
            if (!e.terminal()) REQUIRE(e.size() >= e.r_star + e.j / 2 - 3);
            // case 2 is unreachable at j <= 3
            if (e.j <= 3)
                REQUIRE((e.tag == CaseTag::Case1 || e.tag == CaseTag::WholeTree));
            // only the last extraction may be terminal
            if (e.terminal()) REQUIRE(i + 1 == d.extractions.size());
        }
        REQUIRE(static_cast<int>(seen.size()) == n);
    }
}

TEST_CASE("full-length fixture runs all k iterations") {
    for (int k = 1; k <= 30; ++k) {
        Graph g = testsupport::full_length_fixture(k);
        RootedTree t = root_tree(g, 0);
        Decomposition d = decompose_tree(t, k);
        REQUIRE(static_cast<int>(d.extractions.size()) == k);
        REQUIRE(d.covers());
        long long total = 0;
        for (const auto& e : d.extractions) {
            REQUIRE_FALSE(e.terminal());
            total += e.size();
        }
        // the guaranteed harvest of a full-length run
        REQUIRE(4 * total >= 3LL * k * k - 16LL * k);
    }
}

TEST_CASE("elementary decomposition") {
    SECTION("path on 10 at k=4") {
        RootedTree t = root_tree(gen_path(10), 0);
        Decomposition d = elementary_decompose(t, 4);
        REQUIRE(d.covers());
        REQUIRE(d.extractions.size() == 4);
        for (std::size_t i = 0; i < d.extractions.size(); ++i)
            REQUIRE(d.extractions[i].size() >= 4 - static_cast<int>(i));
    }
    SECTION("single vertex at k=1") {
        RootedTree t = root_tree(make_graph(1, {}), 0);
        REQUIRE(elementary_decompose(t, 1).covers());
    }
    SECTION("path on 3 at k=2") {
        RootedTree t = root_tree(gen_path(3), 0);
        Decomposition d = elementary_decompose(t, 2);
        REQUIRE(d.covers());
    }
    SECTION("covers at the elementary bound, pieces sized k-i+1") {
        for (std::uint64_t seed = 1; seed <= 25; ++seed) {
            Xorshift64Star rng(seed + 99);
            const int n = 1 + static_cast<int>(rng.next_below(400));
            Graph g = gen_random_tree(n, seed);
            RootedTree t = root_tree(g, 0);
            const int k = elementary_bound(n);
            Decomposition d = elementary_decompose(t, k);
            REQUIRE(d.covers());
            for (std::size_t i = 0; i < d.extractions.size(); ++i) {
                const Extraction& e = d.extractions[i];
                if (!e.terminal()) REQUIRE(e.size() >= k - static_cast<int>(i));
                REQUIRE(e.measured_radius <= e.r_star);
            }
        }
    }
}

TEST_CASE("schedule_from") {
    SECTION("round arithmetic") {
        RootedTree t = root_tree(make_graph(1, {}), 0);
        Decomposition d = decompose_tree(t, 6);
        REQUIRE(d.extractions[0].r_star == 5);
        BurnSchedule s = schedule_from(d);
        REQUIRE(s.rounds == 6);
        REQUIRE(s.sources.at(1) == 0); // round k - r* = 1
    }
    SECTION("rounds are k - r*, distinct") {
        RootedTree t = root_tree(gen_path(9), 0);
        Decomposition d = decompose_tree(t, 8);
        BurnSchedule s = schedule_from(d);
        std::set<int> centers;
        REQUIRE(s.sources.size() == d.extractions.size());
        for (const auto& e : d.extractions) {
            REQUIRE(s.sources.at(8 - e.r_star) == e.center);
            REQUIRE(centers.insert(e.center).second);
        }
        // r* in {7, 5} here, so rounds {1, 3}
        REQUIRE(s.sources.count(1) == 1);
        REQUIRE(s.sources.count(3) == 1);
    }
    SECTION("rejects non-covering decompositions") {
        RootedTree t = root_tree(gen_path(60), 0);
        Decomposition d = decompose_tree(t, 3); // far below the bound
        REQUIRE_FALSE(d.covers());
        REQUIRE_THROWS_AS(schedule_from(d), std::invalid_argument);
    }
}

TEST_CASE("burn_tree") {
    SECTION("path on 9") {
        BurnResult r = burn_tree(gen_path(9), 0);
        REQUIRE(r.k == 8);
        Graph g = gen_path(9);
        REQUIRE(verify_schedule(g, r.k, r.schedule).valid);
    }
    SECTION("star on 100") {
        Graph g = gen_star(100);
        BurnResult r = burn_tree(g, 0);
        REQUIRE(r.k == 15);
        auto rep = verify_schedule(g, r.k, r.schedule);
        REQUIRE(rep.valid);
        REQUIRE(rep.completion_round == 2);
    }
    SECTION("single vertex completes in round 1") {
        Graph g = make_graph(1, {});
        BurnResult r = burn_tree(g, 0);
        REQUIRE(r.k == 6);
        REQUIRE(verify_schedule(g, r.k, r.schedule).completion_round == 1);
    }
    SECTION("rejects non-trees") {
        REQUIRE_THROWS_AS(burn_tree(gen_complete(3), 0), std::invalid_argument);
    }
}

TEST_CASE("burn_graph") {
    SECTION("C4") {
        Graph c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
        BurnResult r = burn_graph(c4, 0);
        REQUIRE(r.k == 7); // smallest k with 3k^2-16k >= 16
        REQUIRE(verify_schedule(c4, r.k, r.schedule).valid);
    }
    SECTION("K5") {
        Graph k5 = gen_complete(5);
        BurnResult r = burn_graph(k5, 0);
        auto rep = verify_schedule(k5, r.k, r.schedule);
        REQUIRE(rep.valid);
        REQUIRE(rep.completion_round <= r.k);
    }
    SECTION("tree input matches burn_tree") {
        Graph g = gen_random_tree(40, 7);
        BurnResult a = burn_graph(g, 0);
        BurnResult b = burn_tree(g, 0);
        REQUIRE(a.k == b.k);
        REQUIRE(a.schedule.sources == b.schedule.sources);
    }
    SECTION("disconnected input rejected") {
        REQUIRE_THROWS_AS(burn_graph(make_graph(3, {{0, 1}}), 0), NotConnectedError);
    }
}

TEST_CASE("burn_graph end to end on random connected graphs") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Xorshift64Star rng(seed * 31);
        const int n = 2 + static_cast<int>(rng.next_below(120));
        const long long max_m = static_cast<long long>(n) * (n - 1) / 2;
        const long long m =
            n - 1 + static_cast<long long>(rng.next_below(static_cast<std::uint64_t>(max_m - n + 2)));
        Graph g = gen_random_connected(n, m, seed);
        BurnResult r = burn_graph(g, static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n))));
        REQUIRE(r.k == burning_bound(n));
        REQUIRE(verify_schedule(g, r.k, r.schedule).valid);
    }
}
