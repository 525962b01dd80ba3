#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "pianocat/generators.hpp"
#include "pianocat/hom.hpp"

using namespace pianocat;
using BP = BoundaryPoint;

namespace {

// chords on the 2n-gon; red point i at 2i, green point j at 2j+1
bool chord_cross(std::pair<int, int> c, std::pair<int, int> d) {
    auto in = [&](int t) { return std::min(c.first, c.second) < t && t < std::max(c.first, c.second); };
    if (c.first == d.first || c.first == d.second || c.second == d.first || c.second == d.second) return false;
    return in(d.first) != in(d.second);
}

// brute force over all edge subsets of size n-1 and every apex for each
// segment; the result is a set of ArcSets built from scratch
std::set<ArcSet> oracle_generators(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    std::set<ArcSet> out;
    int E = edges.size();
    for (long mask = 0; mask < (1L << E); ++mask) {
        if (__builtin_popcountl(mask) != n - 1) continue;
        std::vector<std::pair<int, int>> tree;
        for (int e = 0; e < E; ++e)
            if (mask >> e & 1) tree.push_back({2 * edges[e].first, 2 * edges[e].second});
        bool ok = true;
        for (size_t a = 0; a < tree.size(); ++a)
            for (size_t b = a + 1; b < tree.size(); ++b) ok = ok && !chord_cross(tree[a], tree[b]);
        if (!ok) continue;
        std::vector<int> comp(n);
        for (int i = 0; i < n; ++i) comp[i] = i;
        for (auto [u, v] : tree) {
            int cu = comp[u / 2], cv = comp[v / 2];
            for (auto &c : comp)
                if (c == cv) c = cu;
        }
        if (std::set<int>(comp.begin(), comp.end()).size() != 1) continue;
        long combos = 1;
        for (int j = 0; j < n; ++j) combos *= n;
        for (long code = 0; code < combos; ++code) {
            std::vector<std::pair<int, int>> bind;
            long c = code;
            for (int j = 0; j < n; ++j, c /= n) bind.push_back({2 * int(c % n), 2 * j + 1});
            bool good = true;
            for (auto &b : bind) {
                for (auto &t : tree) good = good && !chord_cross(b, t);
                for (auto &b2 : bind) good = good && !chord_cross(b, b2);
            }
            if (!good) continue;
            std::vector<Arc> arcs;
            for (auto [u, v] : tree) arcs.push_back(Arc::make(BP::Acc(u / 2, n), BP::Acc(v / 2, n)));
            for (auto [u, g] : bind) arcs.push_back(Arc::make(BP::Acc(u / 2, n), BP::Pt(g / 2, 0, n)));
            out.insert(ArcSet(n, arcs));
        }
    }
    return out;
}

ArcSet arcs(int n, std::vector<std::pair<BP, BP>> v) {
    std::vector<Arc> a;
    for (auto &[x, y] : v) a.push_back(Arc::make(x, y));
    return ArcSet(n, a);
}

}  // namespace

TEST_CASE("homological connectivity") {
    for (int n = 1; n <= 5; ++n) CHECK(is_homologically_connected(fan_generator(n)));
    int n = 4;
    CHECK_FALSE(is_homologically_connected(
        arcs(n, {{BP::Acc(0, n), BP::Acc(1, n)}, {BP::Acc(2, n), BP::Acc(3, n)}})));
    CHECK(is_homologically_connected(arcs(n, {{BP::Acc(0, n), BP::Acc(1, n)}})));
    CHECK_THROWS_WITH(is_homologically_connected(arcs(n, {{BP::Pt(0, 0, n), BP::Pt(1, 0, n)}})),
                      "unsupported arc configuration");
    CHECK_THROWS_WITH(is_homologically_connected(arcs(n, {{BP::Acc(0, n), BP::Acc(2, n)}, {BP::Acc(1, n), BP::Acc(3, n)}})),
                      "unsupported arc configuration");
}

TEST_CASE("limit pre-generators") {
    int n = 3;
    CHECK(is_limit_pre_generator(arcs(n, {{BP::Acc(0, n), BP::Acc(1, n)}, {BP::Acc(1, n), BP::Acc(2, n)}})));
    CHECK_FALSE(is_limit_pre_generator(arcs(
        n, {{BP::Acc(0, n), BP::Acc(1, n)}, {BP::Acc(1, n), BP::Acc(2, n)}, {BP::Acc(0, n), BP::Acc(2, n)}})));
    int m = 4;
    CHECK_FALSE(is_limit_pre_generator(
        arcs(m, {{BP::Acc(0, m), BP::Acc(2, m)}, {BP::Acc(1, m), BP::Acc(3, m)}, {BP::Acc(0, m), BP::Acc(1, m)}})));
    CHECK(enumerate_pre_generators(3).size() == 3);
    // noncrossing spanning trees on n points: 1, 1, 3, 12, 55
    std::vector<size_t> trees{1, 1, 3, 12, 55};
    for (int k = 1; k <= 5; ++k) CHECK(enumerate_pre_generators(k).size() == trees[k - 1]);
}

TEST_CASE("fan generator") {
    CHECK(fan_generator(1).arcs == std::vector<Arc>{Arc::make(BP::Acc(0, 1), BP::Pt(0, 0, 1))});
    CHECK(fan_generator(2).arcs.size() == 3);
    for (int n = 1; n <= 6; ++n) {
        auto F = fan_generator(n);
        CHECK(F.arcs.size() == size_t(2 * n - 1));
        CHECK(is_limit_generator(F));
        for (auto &x : F.arcs) CHECK(x.has(BP::Acc(n - 1, n)));
    }
}

TEST_CASE("limit generator predicate") {
    int n = 3;
    auto F = fan_generator(n);
    CHECK(is_limit_generator(F));
    auto dec = decompose(F);
    CHECK_FALSE(is_limit_generator(dec.pre_generator));
    auto extra = F.arcs;
    extra.push_back(Arc::make(BP::Acc(2, n), BP::Pt(0, 5, n)));
    CHECK_FALSE(is_limit_generator(ArcSet(n, extra)));
    auto crossing = F.arcs;
    std::replace(crossing.begin(), crossing.end(), Arc::make(BP::Acc(2, n), BP::Pt(1, 0, n)),
                 Arc::make(BP::Acc(0, n), BP::Pt(1, 0, n)));
    REQUIRE(cross(Arc::make(BP::Acc(0, n), BP::Pt(1, 0, n)), Arc::make(BP::Acc(2, n), BP::Acc(1, n))));
    CHECK_FALSE(is_limit_generator(ArcSet(n, crossing)));
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate_limit_generators(1, false).size() == 1);
    CHECK(enumerate_limit_generators(2, false).size() == 4);
    CHECK(enumerate_limit_generators(2, true).size() == 3);
    CHECK(enumerate_limit_generators(3, false).size() == 36);
    CHECK(enumerate_limit_generators(3, true).size() == 12);
    CHECK_THROWS_AS(enumerate_limit_generators(7, false), std::out_of_range);
    CHECK_THROWS_AS(enumerate_limit_generators(0, false), std::out_of_range);
}

TEST_CASE("enumeration agrees with an independent brute force") {
    for (int n = 1; n <= 4; ++n) {
        auto gens = enumerate_limit_generators(n, false);
        auto oracle = oracle_generators(n);
        CHECK(std::set<ArcSet>(gens.begin(), gens.end()) == oracle);
        CHECK(gens.size() == oracle.size());
    }
}

TEST_CASE("classes are rotation orbits") {
    for (int n = 1; n <= 4; ++n) {
        auto all = enumerate_limit_generators(n, false);
        std::set<ArcSet> seen;
        for (auto &g : all) seen.insert(canonical_rotation(g));
        CHECK(seen.size() == enumerate_limit_generators(n, true).size());
        for (auto &g : all) CHECK(is_limit_generator(rotate(g, 1)));
    }
}

TEST_CASE("every generator decomposes into a tree and one limit arc per segment") {
    for (int n = 1; n <= 4; ++n)
        for (auto &G : enumerate_limit_generators(n, false)) {
            REQUIRE(is_limit_generator(G));
            REQUIRE(G.arcs.size() == size_t(2 * n - 1));
            auto d = decompose(G);
            CHECK(d.pre_generator.arcs.size() == size_t(n - 1));
            CHECK(d.limit_part.arcs.size() == size_t(n));
            CHECK(d.segment_assignment.size() == size_t(n));
            if (n > 1) CHECK(is_limit_pre_generator(d.pre_generator));
            std::vector<Arc> back = d.pre_generator.arcs;
            back.insert(back.end(), d.limit_part.arcs.begin(), d.limit_part.arcs.end());
            CHECK(ArcSet(n, back) == G);
            auto c = make_candidate(G);
            CHECK(c.homologically_connected);
            CHECK(c.complete_orbit);
            CHECK(c.limit_kind);
        }
}

TEST_CASE("linear generator axioms") {
    for (int n = 1; n <= 4; ++n) {
        auto r = check_linear_generator(fan_generator(n), 4);
        REQUIRE(r.axioms.size() == 4);
        for (auto &a : r.axioms) CHECK_MESSAGE(a.pass, a.axiom << " " << a.witness);
    }
    // some non-fan generator for n = 3 has an incomparable pair
    bool found = false;
    for (auto &G : enumerate_limit_generators(3, false)) {
        auto r = check_linear_generator(G, 3);
        if (!r.axioms[0].pass && r.axioms[0].witness.find("incomparable") != std::string::npos) {
            found = true;
            // the witness is a pair with no hom in either direction
            break;
        }
    }
    CHECK(found);
}
