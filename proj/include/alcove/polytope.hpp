#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "alcove/gw.hpp"
#include "alcove/simplex.hpp"

namespace alcove {

/// Alcove coordinates a_j = alpha_j(mu) of a marking mu.  Membership in the
/// alcove means a_j >= 0 for all j and sum_j c_j a_j <= 1 with c_j the
/// highest-root marks.
struct AlcovePoint {
    RatVec a;
};

inline void check_alcove(const RootSystem& rs, const AlcovePoint& p, std::size_t which) {
    if (static_cast<int>(p.a.size()) != rs.rank)
        throw DimensionMismatch("alcove point size != rank");
    for (int j = 0; j < rs.rank; ++j)
        if (p.a[j] < 0)
            throw AlcoveViolation("point " + std::to_string(which + 1) + ": a_" +
                                  std::to_string(j + 1) + " = " + rat_to_string(p.a[j]) +
                                  " < 0");
    Rat level = 0;
    for (int j = 0; j < rs.rank; ++j) level += Rat(rs.highest_root_marks[j]) * p.a[j];
    if (level > 1)
        throw AlcoveViolation("point " + std::to_string(which + 1) +
                              ": alpha_0(mu) = " + rat_to_string(level) + " > 1");
}

struct MembershipResult {
    bool member = false;
    std::vector<std::size_t> violated;  // indices into the system
};

/// Exact verdict of a marking tuple against an inequality system; the points
/// must lie in the alcove (AlcoveViolation otherwise).
inline MembershipResult membership(const RootSystem& rs, const std::vector<AlcovePoint>& points,
                                   const std::vector<Inequality>& system) {
    std::vector<RatVec> coords;
    for (std::size_t i = 0; i < points.size(); ++i) {
        check_alcove(rs, points[i], i);
        coords.push_back(points[i].a);
    }
    MembershipResult res;
    for (std::size_t i = 0; i < system.size(); ++i)
        if (!system[i].holds(coords)) res.violated.push_back(i);
    res.member = res.violated.empty();
    return res;
}

/// The alcove constraints for b stacked points as LP rows over the
/// non-negative variables x = (a^(1), ..., a^(b)).
inline std::vector<LinRow> alcove_rows(const RootSystem& rs, int b) {
    std::vector<LinRow> rows;
    for (int i = 0; i < b; ++i) {
        LinRow r;
        r.a.assign(static_cast<std::size_t>(b) * rs.rank, Rat(0));
        for (int j = 0; j < rs.rank; ++j)
            r.a[static_cast<std::size_t>(i) * rs.rank + j] = rs.highest_root_marks[j];
        r.rhs = 1;
        rows.push_back(std::move(r));
    }
    return rows;
}

inline LinRow inequality_row(const Inequality& q, int rank) {
    LinRow r;
    r.a.assign(q.coeffs.size() * rank, Rat(0));
    for (std::size_t i = 0; i < q.coeffs.size(); ++i)
        for (int j = 0; j < rank; ++j) r.a[i * rank + j] = q.coeffs[i][j];
    r.rhs = q.d;
    return r;
}

/// Exact maximum of objective.x over (alcove box) ∧ rows, x >= 0 implied by
/// the alcove; returns the optimum and an optimal vertex.
inline LpResult lp_maximize(const RatVec& objective, const std::vector<LinRow>& rows) {
    return Simplex::maximize(objective, rows);
}

struct PruneResult {
    std::vector<Inequality> kept;
    std::vector<Inequality> removed;
    std::vector<Rat> certificates;  // LP optimum of slack per removed entry
};

/// LP-based redundancy pruning: inequality I goes when max(LHS_I - d_I) over
/// the alcove and all other currently-kept inequalities is <= 0.  Processing
/// order (d, node, tuple) ascending is part of the contract.
inline PruneResult prune_redundant(const RootSystem& rs, std::vector<Inequality> system) {
    // tuple key from the reduced words: stable across JSON round trips
    auto word_key = [](const Inequality& q) {
        std::vector<std::pair<std::size_t, std::vector<int>>> key;
        for (const auto& w : q.words) key.emplace_back(w.size(), w);
        return key;
    };
    std::sort(system.begin(), system.end(), [&](const Inequality& a, const Inequality& b) {
        if (a.d != b.d) return a.d < b.d;
        if (a.node != b.node) return a.node < b.node;
        return word_key(a) < word_key(b);
    });
    PruneResult res;
    if (system.empty()) return res;
    int b = static_cast<int>(system.front().words.size());
    for (const auto& q : system)
        ALCOVE_ASSERT(static_cast<int>(q.words.size()) == b,
                      "prune: mixed point counts in one system");

    std::vector<LinRow> base = alcove_rows(rs, b);
    std::vector<bool> alive(system.size(), true);
    for (std::size_t i = 0; i < system.size(); ++i) {
        std::vector<LinRow> rows = base;
        for (std::size_t j = 0; j < system.size(); ++j)
            if (alive[j] && j != i) rows.push_back(inequality_row(system[j], rs.rank));
        LinRow mine = inequality_row(system[i], rs.rank);
        LpResult lp = Simplex::maximize(mine.a, rows);
        Rat slack = lp.value - mine.rhs;
        if (slack <= 0) {
            alive[i] = false;
            res.removed.push_back(system[i]);
            res.certificates.push_back(slack);
        }
    }
    for (std::size_t i = 0; i < system.size(); ++i)
        if (alive[i]) res.kept.push_back(system[i]);
    return res;
}

}  // namespace alcove
