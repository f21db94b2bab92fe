#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "alcove/errors.hpp"
#include "alcove/rational.hpp"

namespace alcove {

// Coordinate conventions, used throughout the project:
//   * weights live in t* and are stored in simple-root coordinates,
//   * coweights live in t and are stored in simple-coroot coordinates,
//   * alcove points are stored as the values a_j = alpha_j(mu).
// All three are exact rational vectors.  cartan[i][j] = <alpha_j, h_{alpha_i}>.

struct RootSystem {
    char family = 0;  // 'A'..'G'
    int rank = 0;

    std::vector<IntVec> cartan;          // rank x rank
    std::vector<IntVec> positive_roots;  // simple-root coordinates, sorted by (height, lex)
    std::size_t highest_root = 0;        // index into positive_roots
    std::vector<Rat> root_norms;         // (beta, beta) per positive root
    std::vector<IntVec> coroots;         // h_beta in simple-coroot coordinates
    std::vector<RatVec> fundamental_weights;  // omega_i in simple-root coordinates
    IntVec highest_root_marks;           // c_j with alpha_0 = sum c_j alpha_j
    RatVec simple_half_norms;            // d_i = (alpha_i, alpha_i)/2 after normalization

    std::string label() const { return std::string(1, family) + std::to_string(rank); }

    int root_index(const IntVec& coords) const {
        for (std::size_t i = 0; i < positive_roots.size(); ++i)
            if (positive_roots[i] == coords) return static_cast<int>(i);
        return -1;
    }

    /// <alpha_j, h_beta> for the positive root with index beta, as integers.
    int simple_pairing_with_coroot(int root_idx, int j) const {
        long long acc = 0;
        for (int i = 0; i < rank; ++i)
            acc += static_cast<long long>(coroots[root_idx][i]) * cartan[i][j];
        return static_cast<int>(acc);
    }
};

namespace detail {

inline std::vector<IntVec> cartan_matrix(char family, int rank) {
    auto bad = [&]() {
        throw InvalidType("unsupported simple type " + std::string(1, family) +
                          std::to_string(rank));
    };
    switch (family) {
        case 'A': if (rank < 1) bad(); break;
        case 'B': if (rank < 2) bad(); break;
        case 'C': if (rank < 3) bad(); break;
        case 'D': if (rank < 4) bad(); break;
        case 'E': if (rank < 6 || rank > 8) bad(); break;
        case 'F': if (rank != 4) bad(); break;
        case 'G': if (rank != 2) bad(); break;
        default: bad();
    }

    std::vector<IntVec> c(rank, IntVec(rank, 0));
    for (int i = 0; i < rank; ++i) c[i][i] = 2;
    auto bond = [&](int i, int j) { c[i][j] = -1; c[j][i] = -1; };

    if (family == 'A' || family == 'B' || family == 'C') {
        for (int i = 0; i + 1 < rank; ++i) bond(i, i + 1);
        if (family == 'B') c[rank - 1][rank - 2] = -2;  // alpha_rank short
        if (family == 'C') c[rank - 2][rank - 1] = -2;  // alpha_rank long
    } else if (family == 'D') {
        for (int i = 0; i + 2 < rank; ++i) bond(i, i + 1);
        bond(rank - 3, rank - 1);
    } else if (family == 'E') {
        // Bourbaki: chain 1-3-4-5-...-rank with node 2 attached to 4.
        bond(0, 2);
        for (int i = 2; i + 1 < rank; ++i) bond(i, i + 1);
        bond(1, 3);
    } else if (family == 'F') {
        bond(0, 1); bond(1, 2); bond(2, 3);
        c[2][1] = -2;  // alpha_3, alpha_4 short
    } else {  // G2, paper labeling: alpha_1 short, alpha_2 long
        c[0][1] = -3;
        c[1][0] = -1;
    }
    return c;
}

inline long long weyl_order(char family, int rank) {
    auto fact = [](int n) { long long f = 1; for (int i = 2; i <= n; ++i) f *= i; return f; };
    switch (family) {
        case 'A': return fact(rank + 1);
        case 'B':
        case 'C': return fact(rank) << rank;
        case 'D': return fact(rank) << (rank - 1);
        case 'E': return rank == 6 ? 51840LL : rank == 7 ? 2903040LL : 696729600LL;
        case 'F': return 1152;
        default: return 12;  // G2
    }
}

inline std::size_t positive_root_count(char family, int rank) {
    switch (family) {
        case 'A': return static_cast<std::size_t>(rank) * (rank + 1) / 2;
        case 'B':
        case 'C': return static_cast<std::size_t>(rank) * rank;
        case 'D': return static_cast<std::size_t>(rank) * (rank - 1);
        case 'E': return rank == 6 ? 36u : rank == 7 ? 63u : 120u;
        case 'F': return 24;
        default: return 6;  // G2
    }
}

}  // namespace detail

inline RootSystem build_root_system(char family, int rank) {
    RootSystem rs;
    rs.family = family;
    rs.rank = rank;
    rs.cartan = detail::cartan_matrix(family, rank);

    // Reflection closure from the simple roots.  s_i(v) = v - <v, h_i> alpha_i
    // needs only the Cartan matrix, so the whole closure is integral.
    std::set<IntVec> seen;
    std::vector<IntVec> queue;
    for (int i = 0; i < rank; ++i) {
        IntVec e(rank, 0);
        e[i] = 1;
        seen.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        IntVec v = queue.back();
        queue.pop_back();
        for (int i = 0; i < rank; ++i) {
            long long pair = 0;
            for (int j = 0; j < rank; ++j) pair += static_cast<long long>(rs.cartan[i][j]) * v[j];
            IntVec w = v;
            w[i] -= static_cast<int>(pair);
            if (seen.insert(w).second) queue.push_back(w);
        }
    }
    for (const auto& v : seen) {
        bool pos = true;
        for (int x : v) pos = pos && x >= 0;
        if (pos) rs.positive_roots.push_back(v);
    }
    auto height = [](const IntVec& v) { return std::accumulate(v.begin(), v.end(), 0); };
    std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
              [&](const IntVec& a, const IntVec& b) {
                  int ha = height(a), hb = height(b);
                  return ha != hb ? ha < hb : a < b;
              });
    ALCOVE_ASSERT(rs.positive_roots.size() == detail::positive_root_count(family, rank),
                  "positive root count mismatch");

    rs.highest_root = rs.positive_roots.size() - 1;
    ALCOVE_ASSERT(rs.positive_roots.size() < 2 ||
                      height(rs.positive_roots[rs.highest_root]) >
                          height(rs.positive_roots[rs.highest_root - 1]),
                  "highest root is not unique by height");
    rs.highest_root_marks = rs.positive_roots[rs.highest_root];

    // Relative simple-root lengths from symmetry of the form, then scale so
    // the highest root has squared length 2.
    rs.simple_half_norms.assign(rank, Rat(0));
    rs.simple_half_norms[0] = 1;
    std::vector<int> todo{0};
    while (!todo.empty()) {
        int i = todo.back();
        todo.pop_back();
        for (int j = 0; j < rank; ++j) {
            if (i == j || rs.cartan[i][j] == 0 || rs.simple_half_norms[j] != 0) continue;
            rs.simple_half_norms[j] =
                rs.simple_half_norms[i] * rs.cartan[i][j] / rs.cartan[j][i];
            todo.push_back(j);
        }
    }
    auto form = [&](const IntVec& a, const IntVec& b) {
        Rat acc = 0;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                acc += Rat(a[i]) * b[j] * rs.simple_half_norms[i] * rs.cartan[i][j];
        return acc;
    };
    const IntVec& theta = rs.positive_roots[rs.highest_root];
    Rat scale = Rat(2) / form(theta, theta);
    for (auto& d : rs.simple_half_norms) d *= scale;

    for (const auto& beta : rs.positive_roots) {
        Rat norm = form(beta, beta);  // simple_half_norms already rescaled
        rs.root_norms.push_back(norm);
        IntVec coroot(rank);
        for (int i = 0; i < rank; ++i) {
            Rat m = Rat(beta[i]) * 2 * rs.simple_half_norms[i] / norm;
            ALCOVE_ASSERT(is_integer(m), "coroot coordinate not integral");
            coroot[i] = static_cast<int>(numerator(m).convert_to<long long>());
        }
        rs.coroots.push_back(std::move(coroot));
    }
    ALCOVE_ASSERT(rs.root_norms[rs.highest_root] == 2, "(alpha_0, alpha_0) != 2");

    // omega_i solves <omega_i, h_{alpha_j}> = delta_ij: invert the Cartan matrix.
    int n = rank;
    std::vector<RatVec> aug(n, RatVec(2 * n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = rs.cartan[i][j];
        aug[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (aug[r][col] != 0) { piv = r; break; }
        ALCOVE_ASSERT(piv >= 0, "Cartan matrix singular");
        std::swap(aug[col], aug[piv]);
        Rat p = aug[col][col];
        for (auto& x : aug[col]) x /= p;
        for (int r = 0; r < n; ++r) {
            if (r == col || aug[r][col] == 0) continue;
            Rat f = aug[r][col];
            for (int c = 0; c < 2 * n; ++c) aug[r][c] -= f * aug[col][c];
        }
    }
    // cartan[j][k] (omega_i)_k = delta_ij, so omega_i is column i of the inverse.
    rs.fundamental_weights.assign(n, RatVec(n));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) rs.fundamental_weights[i][k] = aug[k][n + i];

    return rs;
}

inline RootSystem build_root_system(const std::string& type_label) {
    if (type_label.size() < 2) throw InvalidType("bad type label '" + type_label + "'");
    char fam = static_cast<char>(std::toupper(type_label[0]));
    int rank = 0;
    try {
        rank = std::stoi(type_label.substr(1));
    } catch (...) {
        throw InvalidType("bad type label '" + type_label + "'");
    }
    return build_root_system(fam, rank);
}

/// Canonical <weight, coweight> pairing: weight in simple-root coordinates,
/// coweight in simple-coroot coordinates.
inline Rat pairing(const RootSystem& rs, const RatVec& weight, const RatVec& coweight) {
    if (static_cast<int>(weight.size()) != rs.rank ||
        static_cast<int>(coweight.size()) != rs.rank)
        throw DimensionMismatch("pairing: vector size != rank");
    Rat acc = 0;
    for (int i = 0; i < rs.rank; ++i) {
        Rat row = 0;
        for (int j = 0; j < rs.rank; ++j) row += Rat(rs.cartan[i][j]) * weight[j];
        acc += coweight[i] * row;
    }
    return acc;
}

/// Basic inner product on t*, normalized so the highest root has norm^2 = 2.
inline Rat inner_product(const RootSystem& rs, const RatVec& lam, const RatVec& nu) {
    if (static_cast<int>(lam.size()) != rs.rank || static_cast<int>(nu.size()) != rs.rank)
        throw DimensionMismatch("inner_product: vector size != rank");
    Rat acc = 0;
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j)
            acc += lam[i] * nu[j] * rs.simple_half_norms[i] * rs.cartan[i][j];
    return acc;
}

/// Image of a weight under the basic identification t* -> t, in simple-coroot
/// coordinates, so that inner_product(l, n) == pairing(l, coweight_of(n)).
inline RatVec coweight_of(const RootSystem& rs, const RatVec& nu) {
    if (static_cast<int>(nu.size()) != rs.rank)
        throw DimensionMismatch("coweight_of: vector size != rank");
    RatVec m(rs.rank);
    for (int i = 0; i < rs.rank; ++i) m[i] = nu[i] * rs.simple_half_norms[i];
    return m;
}

inline RatVec to_rat_vec(const IntVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
    return r;
}

/// The integer c with sum of positive roots outside the Levi of P equal to
/// c * omega_node.  This is c_1(G/P) for the maximal parabolic at `node`.
inline int c1_of_parabolic(const RootSystem& rs, int node) {
    ALCOVE_ASSERT(node >= 0 && node < rs.rank, "c1_of_parabolic: bad node");
    RatVec sum(rs.rank, Rat(0));
    for (const auto& beta : rs.positive_roots) {
        if (beta[node] == 0) continue;
        for (int j = 0; j < rs.rank; ++j) sum[j] += beta[j];
    }
    const RatVec& omega = rs.fundamental_weights[node];
    Rat c = 0;
    for (int j = 0; j < rs.rank; ++j) {
        if (omega[j] == 0) {
            ALCOVE_ASSERT(sum[j] == 0, "off-Levi root sum not a multiple of omega");
            continue;
        }
        Rat q = sum[j] / omega[j];
        if (c == 0) c = q;
        ALCOVE_ASSERT(q == c, "off-Levi root sum not a multiple of omega");
    }
    ALCOVE_ASSERT(c > 0 && is_integer(c), "c1 not a positive integer");
    return static_cast<int>(numerator(c).convert_to<long long>());
}

}  // namespace alcove
