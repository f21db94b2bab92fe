#pragma once

#include <vector>

#include "alcove/errors.hpp"
#include "alcove/rational.hpp"

namespace alcove {

/// One constraint row a.x <= rhs over non-negative variables.
struct LinRow {
    RatVec a;
    Rat rhs;
};

struct LpResult {
    Rat value;
    RatVec witness;
};

// Two-phase primal simplex over exact rationals with Bland's anti-cycling
// rule.  Small and slow by design: pivot counts at desk scale are tiny and
// exactness is what matters.
class Simplex {
  public:
    /// max objective.x subject to rows, x >= 0.  Throws Infeasible when the
    /// feasible set is empty and InternalError on an unbounded program (the
    /// callers always include box constraints).
    static LpResult maximize(const RatVec& objective, const std::vector<LinRow>& rows) {
        int n = static_cast<int>(objective.size());
        int m = static_cast<int>(rows.size());
        for (const auto& r : rows)
            if (static_cast<int>(r.a.size()) != n)
                throw DimensionMismatch("lp row size != objective size");

        // Columns: n structural, m slacks, then artificials for rows with
        // negative rhs.  Rows with rhs < 0 are negated first.
        int art = 0;
        for (const auto& r : rows)
            if (r.rhs < 0) ++art;
        int cols = n + m + art;

        std::vector<RatVec> tab(m, RatVec(cols + 1, Rat(0)));
        std::vector<int> basis(m);
        int next_art = n + m;
        for (int i = 0; i < m; ++i) {
            Rat sgn = rows[i].rhs < 0 ? Rat(-1) : Rat(1);
            for (int j = 0; j < n; ++j) tab[i][j] = sgn * rows[i].a[j];
            tab[i][n + i] = sgn;
            tab[i][cols] = sgn * rows[i].rhs;
            if (rows[i].rhs < 0) {
                tab[i][next_art] = 1;
                basis[i] = next_art++;
            } else {
                basis[i] = n + i;
            }
        }

        if (art > 0) {
            RatVec phase1(cols, Rat(0));
            for (int j = n + m; j < cols; ++j) phase1[j] = -1;
            Rat opt = run(tab, basis, phase1, cols);
            if (opt != 0) throw Infeasible("phase-1 optimum nonzero");
            // pivot any artificial still in the basis out, or drop its row
            for (int i = 0; i < m; ++i) {
                if (basis[i] < n + m) continue;
                int enter = -1;
                for (int j = 0; j < n + m; ++j)
                    if (tab[i][j] != 0) { enter = j; break; }
                if (enter >= 0) pivot(tab, basis, i, enter, cols);
                // else: redundant zero row, harmless to keep
            }
            for (auto& row : tab)
                for (int j = n + m; j < cols; ++j) row[j] = 0;
        }

        RatVec full_obj(cols, Rat(0));
        for (int j = 0; j < n; ++j) full_obj[j] = objective[j];
        Rat value = run(tab, basis, full_obj, cols);

        LpResult res;
        res.value = value;
        res.witness.assign(n, Rat(0));
        for (int i = 0; i < m; ++i)
            if (basis[i] < n) res.witness[basis[i]] = tab[i][cols];
        return res;
    }

  private:
    static void pivot(std::vector<RatVec>& tab, std::vector<int>& basis, int row, int col,
                      int cols) {
        Rat p = tab[row][col];
        for (int j = 0; j <= cols; ++j) tab[row][j] /= p;
        for (std::size_t i = 0; i < tab.size(); ++i) {
            if (static_cast<int>(i) == row || tab[i][col] == 0) continue;
            Rat f = tab[i][col];
            for (int j = 0; j <= cols; ++j) tab[i][j] -= f * tab[row][j];
        }
        basis[row] = col;
    }

    static Rat run(std::vector<RatVec>& tab, std::vector<int>& basis, const RatVec& obj,
                   int cols) {
        int m = static_cast<int>(tab.size());
        while (true) {
            // reduced costs via the basis multipliers
            RatVec reduced = obj;
            Rat value = 0;
            for (int i = 0; i < m; ++i) {
                Rat cb = obj[basis[i]];
                if (cb == 0) continue;
                value += cb * tab[i][cols];
                for (int j = 0; j < cols; ++j)
                    if (tab[i][j] != 0) reduced[j] -= cb * tab[i][j];
            }
            int enter = -1;  // Bland: smallest improving index
            for (int j = 0; j < cols; ++j)
                if (reduced[j] > 0) { enter = j; break; }
            if (enter < 0) return value;

            int leave = -1;
            Rat best;
            for (int i = 0; i < m; ++i) {
                if (tab[i][enter] <= 0) continue;
                Rat ratio = tab[i][cols] / tab[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) throw InternalError("linear program unbounded");
            pivot(tab, basis, leave, enter, cols);
        }
    }
};

}  // namespace alcove
