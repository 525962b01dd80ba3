#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>

#include "pianocat/dissection.hpp"
#include "pianocat/generators.hpp"

using namespace pianocat;

namespace {

// noncrossing spanning tree on the red points, checked from scratch
bool oracle_tree(int n, const std::vector<Chord> &red) {
    if ((int)red.size() != n - 1) return false;
    for (size_t i = 0; i < red.size(); ++i)
        for (size_t j = i + 1; j < red.size(); ++j) {
            auto [a, b] = red[i];
            auto [c, d] = red[j];
            if (std::minmax(a, b) == std::minmax(c, d)) return false;
            if (a == c || a == d || b == c || b == d) continue;
            auto in = [&](int t) { return std::min(a, b) < t && t < std::max(a, b); };
            if (in(c) != in(d)) return false;
        }
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : red) adj[a / 2].push_back(b / 2), adj[b / 2].push_back(a / 2);
    std::vector<int> seen(n, 0);
    std::function<void(int)> dfs = [&](int v) {
        seen[v] = 1;
        for (int w : adj[v])
            if (!seen[w]) dfs(w);
    };
    dfs(0);
    for (int s : seen)
        if (!s) return false;
    return true;
}

std::vector<Chord> red_chords(int n) {
    std::vector<Chord> v;
    for (int a = 0; a < 2 * n; a += 2)
        for (int b = a + 2; b < 2 * n; b += 2) v.push_back({a, b});
    return v;
}

}  // namespace

TEST_CASE("admissible examples") {
    CHECK(is_admissible_dissection({3, {{0, 2}, {2, 4}}, {}}));
    CHECK_FALSE(is_admissible_dissection({3, {{0, 2}, {0, 4}, {2, 4}}, {}}));
    CHECK(is_admissible_dissection({2, {{0, 2}}, {}}));
    CHECK(is_admissible_dissection({1, {}, {}}));
    CHECK_FALSE(is_admissible_dissection({2, {{0, 1}}, {}}));
    CHECK_FALSE(is_admissible_dissection({2, {{0, 2}}, {{0, 1}}}));
}

TEST_CASE("admissible equals noncrossing spanning tree on every chord subset") {
    for (int n = 1; n <= 5; ++n) {
        auto all = red_chords(n);
        int E = all.size();
        int agree = 0;
        for (long mask = 0; mask < (1L << E); ++mask) {
            std::vector<Chord> red;
            for (int e = 0; e < E; ++e)
                if (mask >> e & 1) red.push_back(all[e]);
            DissectionSet D{n, red, {}};
            REQUIRE(is_admissible_dissection(D) == oracle_tree(n, red));
            agree += oracle_tree(n, red);
        }
        CHECK(agree == (int)enumerate_admissible(n).size());
    }
}

TEST_CASE("faces of a chord dissection") {
    // Euler: k noncrossing chords cut the polygon into k + 1 faces
    for (int n = 2; n <= 5; ++n)
        for (auto &D : enumerate_admissible(n)) {
            auto faces = polygon_faces(2 * n, D.red);
            CHECK(faces.size() == D.red.size() + 1);
            size_t sides = 0, chord_uses = 0;
            for (auto &f : faces)
                for (auto &e : f) (e.side ? sides : chord_uses)++;
            CHECK(sides == size_t(2 * n));
            CHECK(chord_uses == 2 * D.red.size());
        }
    CHECK(polygon_faces(4, {}).size() == 1);
}

TEST_CASE("extended admissible examples") {
    auto F = epsilon(fan_generator(3));
    CHECK(is_extended_admissible(F));
    CHECK(F.red.size() + F.binding.size() == 5);
    auto short_one = F;
    short_one.binding.pop_back();
    CHECK_FALSE(is_extended_admissible(short_one));
    // red {0,4} with a binding arc from 2 to 5 crossing it
    DissectionSet X{3, {{0, 4}, {2, 4}}, {{0, 1}, {2, 5}, {4, 3}}};
    CHECK(chords_cross({0, 4}, {2, 5}, 6));
    CHECK_FALSE(is_extended_admissible(X));
    DissectionSet shared{2, {{0, 2}}, {{0, 1}, {2, 1}}};
    CHECK_FALSE(is_extended_admissible(shared));
}

TEST_CASE("arc counts") {
    CHECK(admissible_arc_count(5, 0, 1, 0) == 4);
    CHECK(extended_arc_count(10, 0, 0, 1, 0) == 9);
    CHECK(admissible_arc_count(3, 1, 2, 1) == 6);
    for (int n = 1; n <= 5; ++n) {
        for (auto &D : enumerate_admissible(n)) CHECK((int)D.red.size() == admissible_arc_count(n, 0, 1, 0));
        for (auto &D : enumerate_extended_admissible(n))
            CHECK((int)(D.red.size() + D.binding.size()) == extended_arc_count(2 * n, 0, 0, 1, 0));
    }
}

TEST_CASE("induced admissible dissection") {
    auto I = induced_admissible(epsilon(fan_generator(2)));
    CHECK(I.disc.n == 4);
    CHECK(I.dissection.red.size() == 3);
    CHECK(is_admissible_dissection(I.dissection));

    DissectionSet one{1, {}, {{0, 1}}};
    auto I1 = induced_admissible(one);
    CHECK(I1.disc.n == 2);
    CHECK(I1.dissection.red.size() == 1);
    CHECK(is_admissible_dissection(I1.dissection));
    CHECK_THROWS(induced_admissible(DissectionSet{2, {{0, 2}}, {}}));

    for (int n = 1; n <= 4; ++n)
        for (auto &D : enumerate_extended_admissible(n)) {
            auto J = induced_admissible(D);
            REQUIRE(is_admissible_dissection(J.dissection));
            for (auto &f : polygon_faces(2 * J.disc.n, J.dissection.red)) {
                int greens = 0;
                for (auto &e : f) greens += e.from % 2;
                REQUIRE(greens == 1);
            }
        }
}

TEST_CASE("extendability") {
    for (int n = 1; n <= 4; ++n)
        for (auto &D : enumerate_extended_admissible(n)) {
            auto r = extendability_report(induced_admissible(D).dissection);
            REQUIRE(r.ok);
            REQUIRE(r.extended.has_value());
            CHECK(*r.extended == D);
        }
    auto odd = extendability_report({3, {{0, 2}, {2, 4}}, {}});
    CHECK_FALSE(odd.ok);
    CHECK(odd.failed_condition == 1);
    // six points, arcs 0-1, 0-2, 0-3, 3-4, 3-5
    DissectionSet six{6, {{0, 2}, {0, 4}, {0, 6}, {6, 8}, {6, 10}}, {}};
    REQUIRE(is_admissible_dissection(six));
    auto r = extendability_report(six);
    CHECK_FALSE(r.ok);
    CHECK(r.failed_condition == 2);
    CHECK_FALSE(r.witness.empty());
}

TEST_CASE("epsilon bijection") {
    auto F = fan_generator(3);
    CHECK(epsilon_inverse(epsilon(F)) == F);
    DissectionSet one{1, {}, {{0, 1}}};
    CHECK(epsilon(fan_generator(1)) == one);
    for (int n = 1; n <= 5; ++n) {
        auto gens = enumerate_limit_generators(n, false);
        auto diss = enumerate_extended_admissible(n);
        CHECK(gens.size() == diss.size());
        std::set<DissectionSet> images;
        for (auto &G : gens) {
            auto D = epsilon(G);
            REQUIRE(is_extended_admissible(D));
            REQUIRE(epsilon_inverse(D) == G);
            images.insert(D);
            REQUIRE(epsilon(rotate(G, 1)) == rotate(D, 1));
        }
        CHECK(images == std::set<DissectionSet>(diss.begin(), diss.end()));
        for (auto &D : diss) REQUIRE(epsilon(epsilon_inverse(D)) == D);
    }
    CHECK_THROWS(epsilon_inverse(DissectionSet{2, {{0, 2}}, {}}));
}

TEST_CASE("the nine-arc keyboard example is extended admissible") {
    // positions read anticlockwise from the figure
    DissectionSet D{5, {{0, 4}, {0, 8}, {2, 4}, {6, 8}}, {{0, 1}, {4, 3}, {4, 5}, {8, 9}, {6, 7}}};
    D.normalize();
    CHECK(is_extended_admissible(D));
    auto G = epsilon_inverse(D);
    CHECK(is_limit_generator(G));
    CHECK(epsilon(G) == D);
}
