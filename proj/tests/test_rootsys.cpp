#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "alcove/rootsys.hpp"

using namespace alcove;

namespace {
RatVec rv(std::initializer_list<long long> xs) {
    RatVec v;
    for (auto x : xs) v.emplace_back(x);
    return v;
}
}  // namespace

TEST_CASE("G2 positive roots and normalization") {
    RootSystem rs = build_root_system('G', 2);
    REQUIRE(rs.positive_roots.size() == 6);

    // alpha_1, alpha_2, alpha_1+alpha_2, 2a_1+a_2, 3a_1+a_2, 3a_1+2a_2
    std::set<IntVec> expect = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
    std::set<IntVec> got(rs.positive_roots.begin(), rs.positive_roots.end());
    REQUIRE(got == expect);

    REQUIRE(rs.positive_roots[rs.highest_root] == IntVec{3, 2});
    REQUIRE(rs.root_norms[rs.highest_root] == 2);
    REQUIRE(rs.highest_root_marks == IntVec{3, 2});

    // short roots have squared length 2/3 in the basic normalization
    REQUIRE(rs.root_norms[rs.root_index({1, 0})] == Rat(2, 3));
    REQUIRE(rs.root_norms[rs.root_index({2, 1})] == Rat(2, 3));
    REQUIRE(rs.root_norms[rs.root_index({0, 1})] == 2);
}

TEST_CASE("G2 coroot table from the basic identification") {
    RootSystem rs = build_root_system('G', 2);
    // h_beta written in t* coordinates: 3a_1, a_2, 3a_1+3a_2, 3a_1+2a_2,
    // 6a_1+3a_2, 3a_1+a_2.  Coroot storage is in simple-coroot coordinates,
    // so convert h_{alpha_1} = 3a_1 and h_{alpha_2} = a_2 by hand.
    auto coroot_in_root_coords = [&](int idx) {
        RatVec v(2, Rat(0));
        // h_{alpha_1} = 3 alpha_1, h_{alpha_2} = alpha_2
        v[0] = Rat(rs.coroots[idx][0]) * 3;
        v[1] = Rat(rs.coroots[idx][1]);
        return v;
    };
    REQUIRE(coroot_in_root_coords(rs.root_index({1, 0})) == rv({3, 0}));
    REQUIRE(coroot_in_root_coords(rs.root_index({0, 1})) == rv({0, 1}));
    REQUIRE(coroot_in_root_coords(rs.root_index({1, 1})) == rv({3, 3}));
    REQUIRE(coroot_in_root_coords(rs.root_index({3, 2})) == rv({3, 2}));
    REQUIRE(coroot_in_root_coords(rs.root_index({2, 1})) == rv({6, 3}));
    REQUIRE(coroot_in_root_coords(rs.root_index({3, 1})) == rv({3, 1}));
}

TEST_CASE("G2 pairing table h_beta(omega_i), all 12 entries") {
    RootSystem rs = build_root_system('G', 2);
    const std::vector<std::pair<IntVec, std::pair<int, int>>> table = {
        {{1, 0}, {1, 0}}, {{0, 1}, {0, 1}}, {{1, 1}, {1, 3}},
        {{3, 2}, {1, 2}}, {{2, 1}, {2, 3}}, {{3, 1}, {1, 1}},
    };
    for (const auto& [root, vals] : table) {
        int idx = rs.root_index(root);
        REQUIRE(idx >= 0);
        RatVec h = to_rat_vec(rs.coroots[idx]);
        REQUIRE(pairing(rs, rs.fundamental_weights[0], h) == vals.first);
        REQUIRE(pairing(rs, rs.fundamental_weights[1], h) == vals.second);
    }
}

TEST_CASE("G2 fundamental weights and inner products") {
    RootSystem rs = build_root_system('G', 2);
    // omega_1 = 2a_1 + a_2 = beta_5, omega_2 = 3a_1 + 2a_2 = highest root
    REQUIRE(rs.fundamental_weights[0] == rv({2, 1}));
    REQUIRE(rs.fundamental_weights[1] == rv({3, 2}));
    REQUIRE(inner_product(rs, rs.fundamental_weights[0], rs.fundamental_weights[0]) ==
            Rat(2, 3));
    RatVec theta = to_rat_vec(rs.positive_roots[rs.highest_root]);
    REQUIRE(inner_product(rs, theta, theta) == 2);
}

TEST_CASE("rank-1 and rank-2 type A basics") {
    RootSystem a1 = build_root_system('A', 1);
    REQUIRE(a1.positive_roots.size() == 1);
    REQUIRE(a1.positive_roots[0] == IntVec{1});
    REQUIRE(inner_product(a1, rv({1}), a1.fundamental_weights[0]) == 1);
    REQUIRE(pairing(a1, a1.fundamental_weights[0], to_rat_vec(a1.coroots[0])) == 1);

    RootSystem a2 = build_root_system('A', 2);
    REQUIRE(a2.positive_roots.size() == 3);
    std::set<IntVec> expect = {{1, 0}, {0, 1}, {1, 1}};
    std::set<IntVec> got(a2.positive_roots.begin(), a2.positive_roots.end());
    REQUIRE(got == expect);
}

TEST_CASE("c1 of maximal parabolics") {
    RootSystem g2 = build_root_system('G', 2);
    REQUIRE(c1_of_parabolic(g2, 0) == 5);
    REQUIRE(c1_of_parabolic(g2, 1) == 3);

    RootSystem a1 = build_root_system('A', 1);
    REQUIRE(c1_of_parabolic(a1, 0) == 2);

    // Gr(k,n) has c1 = n
    RootSystem a3 = build_root_system('A', 3);
    for (int node = 0; node < 3; ++node) REQUIRE(c1_of_parabolic(a3, node) == 4);
}

TEST_CASE("inner product equals pairing through the basic identification") {
    RootSystem rs = build_root_system('G', 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const RatVec& wi = rs.fundamental_weights[i];
            const RatVec& wj = rs.fundamental_weights[j];
            REQUIRE(inner_product(rs, wi, wj) == pairing(rs, wi, coweight_of(rs, wj)));
        }
}

TEST_CASE("reflection closure and Cartan consistency across types") {
    for (auto [fam, rank] : std::vector<std::pair<char, int>>{
             {'A', 3}, {'B', 2}, {'B', 3}, {'C', 3}, {'D', 4}, {'F', 4}, {'G', 2}}) {
        RootSystem rs = build_root_system(fam, rank);
        // <alpha_i, h_{alpha_j}> reproduces the Cartan matrix
        for (int i = 0; i < rank; ++i) {
            int idx = -1;
            IntVec simple(rank, 0);
            simple[i] = 1;
            idx = rs.root_index(simple);
            REQUIRE(idx >= 0);
            for (int j = 0; j < rank; ++j) {
                RatVec alpha_j(rank, Rat(0));
                alpha_j[j] = 1;
                REQUIRE(pairing(rs, alpha_j, to_rat_vec(rs.coroots[idx])) ==
                        rs.cartan[i][j]);
            }
        }
        // simple reflections permute the roots up to sign
        for (int i = 0; i < rank; ++i) {
            for (const auto& beta : rs.positive_roots) {
                IntVec img(rank);
                long long pair = 0;
                for (int j = 0; j < rank; ++j) pair += static_cast<long long>(rs.cartan[i][j]) * beta[j];
                for (int j = 0; j < rank; ++j) img[j] = beta[j];
                img[i] -= static_cast<int>(pair);
                IntVec neg(rank);
                for (int j = 0; j < rank; ++j) neg[j] = -img[j];
                REQUIRE((rs.root_index(img) >= 0 || rs.root_index(neg) >= 0));
            }
        }
    }
}

TEST_CASE("deterministic construction") {
    RootSystem a = build_root_system('F', 4);
    RootSystem b = build_root_system('F', 4);
    REQUIRE(a.positive_roots == b.positive_roots);
    REQUIRE(a.coroots == b.coroots);
    REQUIRE(a.fundamental_weights == b.fundamental_weights);
}

TEST_CASE("invalid types are rejected") {
    REQUIRE_THROWS_AS(build_root_system('A', 0), InvalidType);
    REQUIRE_THROWS_AS(build_root_system('B', 1), InvalidType);
    REQUIRE_THROWS_AS(build_root_system('C', 2), InvalidType);
    REQUIRE_THROWS_AS(build_root_system('D', 3), InvalidType);
    REQUIRE_THROWS_AS(build_root_system('E', 9), InvalidType);
    REQUIRE_THROWS_AS(build_root_system('F', 5), InvalidType);
    REQUIRE_THROWS_AS(build_root_system('G', 3), InvalidType);
    REQUIRE_THROWS_AS(build_root_system('H', 3), InvalidType);
    REQUIRE_THROWS_AS(build_root_system("Q7"), InvalidType);
}

TEST_CASE("pairing dimension checks") {
    RootSystem rs = build_root_system('A', 2);
    REQUIRE_THROWS_AS(pairing(rs, rv({1}), rv({1, 0})), DimensionMismatch);
    REQUIRE_THROWS_AS(inner_product(rs, rv({1, 0}), rv({1})), DimensionMismatch);
}
