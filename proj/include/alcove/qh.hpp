#pragma once

#include <utility>
#include <vector>

#include "alcove/engine.hpp"
#include "alcove/poly.hpp"

namespace alcove {

// Divisor-recursion engine for QH*(G/P), P maximal.
//
// The degree-2 products come from the quantum Chevalley rule
//   [Y^{s_alpha}] * [Y^u] = sum <omega_P, h_beta> [Y^{[u~ s_beta]}]
//                         + sum <omega_P, h_beta> q^{<omega_P,h_beta>} [Y^{[u~ s_beta]}]
// with the first sum over positive roots beta with l_P([u~ s_beta]) = l_P(u) + 1
// and the second over those with l_P([u~ s_beta]) = l_P(u) + 1 - c1 <omega_P,h_beta>.
// Every other product is obtained by writing the left factor as a Giambelli
// polynomial in the divisor class and multiplying out.
class DivisorEngine : public QuantumEngine {
  public:
    explicit DivisorEngine(const Context& ctx) : QuantumEngine(ctx) {
        build_chevalley();
        build_giambelli();
        build_powers();
        finalize_table();
    }

    std::string engine_name() const override { return "divisor"; }

    /// g_i(y_1, q) applied to [Y^j] by repeated divisor multiplication.
    QClass star_computed(int i, int j) const override {
        QClass out;
        for (const auto& [key, coeff] : giambelli_[i].terms())
            out.add_scaled(y_power_applied_[j][key.first], coeff, key.second);
        return out;
    }

    /// [Y^{s_alpha}] * [Y^u], straight from the Chevalley rule.
    const QClass& divisor_multiply(int u) const { return chevalley_[u]; }

    /// g_u with g_u(y_1, q) evaluated by star products equal to [Y^u].
    const Poly& giambelli(int u) const { return giambelli_[u]; }

    int divisor_index() const { return divisor_; }

    /// Right-hand side P of the ring presentation y_1^{dim+1} = P(y_1, q).
    Poly presentation() const {
        int top_count = 0;
        for (int i = 0; i < size(); ++i)
            if (length(i) == dim()) ++top_count;
        ALCOVE_ASSERT(top_count == 1, "presentation needs a one-dimensional top degree");
        QClass power = y_power_applied_[identity_][dim() + 1];
        Poly rhs;
        for (const auto& [key, coeff] : power.terms())
            rhs.add_scaled(giambelli_[key.first], coeff, 0, key.second);
        return rhs;
    }

    /// Diagnostic for the semisimplicity remark: is the relation polynomial
    /// y^{dim+1} - P(y, 1) square-free at q = 1?
    bool presentation_squarefree_at_q1() const {
        Poly rhs = presentation();
        std::vector<Rat> f(dim() + 2, Rat(0));
        f[dim() + 1] = 1;
        for (const auto& [key, coeff] : rhs.terms()) f[key.first] -= coeff;
        // gcd(f, f') must be constant
        std::vector<Rat> g(f.size() - 1);
        for (std::size_t i = 1; i < f.size(); ++i) g[i - 1] = f[i] * static_cast<int>(i);
        auto deg = [](const std::vector<Rat>& p) {
            int d = -1;
            for (std::size_t i = 0; i < p.size(); ++i)
                if (p[i] != 0) d = static_cast<int>(i);
            return d;
        };
        std::vector<Rat> a = f, b = g;
        while (deg(b) >= 0) {
            int da = deg(a), db = deg(b);
            if (da < db) {
                std::swap(a, b);
                continue;
            }
            Rat factor = a[da] / b[db];
            for (int i = 0; i <= db; ++i) a[i + da - db] -= factor * b[i];
            if (deg(a) < db) std::swap(a, b);
        }
        return deg(a) == 0;
    }

  private:
    void build_chevalley() {
        const RootSystem& rs = ctx_->rs;
        const CosetBasis& cb = ctx_->basis;
        for (int i = 0; i < size(); ++i) {
            if (length(i) == 0) identity_ = i;
            if (length(i) == 1) {
                ALCOVE_ASSERT(divisor_ < 0, "more than one degree-2 class for maximal P");
                divisor_ = i;
            }
        }
        ALCOVE_ASSERT(identity_ >= 0 && divisor_ >= 0, "missing identity or divisor class");

        const RatVec& omega = rs.fundamental_weights[node()];
        std::vector<int> chi(rs.positive_roots.size());
        for (std::size_t b = 0; b < rs.positive_roots.size(); ++b) {
            Rat p = pairing(rs, omega, to_rat_vec(rs.coroots[b]));
            ALCOVE_ASSERT(is_integer(p) && p >= 0, "<omega_P, h_beta> not a nonneg integer");
            chi[b] = static_cast<int>(numerator(p).convert_to<long long>());
        }

        chevalley_.resize(size());
        for (int u = 0; u < size(); ++u) {
            QClass prod;
            for (std::size_t b = 0; b < rs.positive_roots.size(); ++b) {
                if (chi[b] == 0) continue;
                int v = cb.coset_times_reflection(u, static_cast<int>(b));
                int lv = length(v);
                if (lv == length(u) + 1) prod.add(v, 0, chi[b]);
                if (lv == length(u) + 1 - c1() * chi[b]) prod.add(v, chi[b], chi[b]);
            }
            chevalley_[u] = std::move(prod);
        }
    }

    // Giambelli polynomials by induction on codegree.  At codegree m the
    // classical Chevalley coefficients give a linear system for each class;
    // quantum terms are moved to the right-hand side, already known from
    // lower codegrees.
    void build_giambelli() {
        std::vector<std::vector<int>> by_length(dim() + 1);
        for (int i = 0; i < size(); ++i) by_length[length(i)].push_back(i);

        giambelli_.assign(size(), Poly());
        giambelli_[identity_] = Poly::one();

        for (int m = 1; m <= dim(); ++m) {
            const auto& V = by_length[m - 1];
            const auto& U = by_length[m];
            int nu = static_cast<int>(U.size());
            int nv = static_cast<int>(V.size());

            // rows: classes u' of codegree m; columns: classes v of codegree m-1
            std::vector<RatVec> aug(nu, RatVec(nv + nu, Rat(0)));
            for (int col = 0; col < nv; ++col)
                for (const auto& [key, coeff] : chevalley_[V[col]].terms()) {
                    if (key.second != 0) continue;
                    for (int row = 0; row < nu; ++row)
                        if (key.first == U[row]) aug[row][col] = coeff;
                }
            for (int row = 0; row < nu; ++row) aug[row][nv + row] = 1;

            std::vector<int> pivot_col;
            int r = 0;
            for (int col = 0; col < nv && r < nu; ++col) {
                int sel = -1;
                for (int row = r; row < nu; ++row)
                    if (aug[row][col] != 0) { sel = row; break; }
                if (sel < 0) continue;
                std::swap(aug[r], aug[sel]);
                Rat p = aug[r][col];
                for (auto& x : aug[r]) x /= p;
                for (int row = 0; row < nu; ++row) {
                    if (row == r || aug[row][col] == 0) continue;
                    Rat f = aug[row][col];
                    for (int c = 0; c < nv + nu; ++c) aug[row][c] -= f * aug[r][c];
                }
                pivot_col.push_back(col);
                ++r;
            }
            if (r < nu)
                throw NotDivisorGenerated(
                    "cover-coefficient matrix rank-deficient at codegree " + std::to_string(m) +
                    " for " + ctx_->rs.label() + " node " + std::to_string(node() + 1));

            // x supported on pivot columns solves sum_v x_v chev[v] = [Y^u]
            // modulo quantum corrections; assemble g_u from it.
            for (int uu = 0; uu < nu; ++uu) {
                Poly g;
                for (int i = 0; i < nu; ++i) {
                    Rat xv = aug[i][nv + uu];
                    if (xv == 0) continue;
                    int v = V[pivot_col[i]];
                    g.add_scaled(giambelli_[v], xv, 1, 0);  // y * g_v
                    for (const auto& [key, coeff] : chevalley_[v].terms())
                        if (key.second > 0)
                            g.add_scaled(giambelli_[key.first], -xv * coeff, 0, key.second);
                }
                giambelli_[U[uu]] = std::move(g);
            }
        }
    }

    void build_powers() {
        // y^k applied to each basis class, k = 0..dim+1
        y_power_applied_.assign(size(), std::vector<QClass>(dim() + 2));
        for (int j = 0; j < size(); ++j) {
            y_power_applied_[j][0] = QClass::basis(j);
            for (int k = 1; k <= dim() + 1; ++k) {
                QClass next;
                for (const auto& [key, coeff] : y_power_applied_[j][k - 1].terms())
                    next.add_scaled(chevalley_[key.first], coeff, key.second);
                y_power_applied_[j][k] = std::move(next);
            }
        }

        // every Giambelli polynomial must reproduce its class exactly
        for (int i = 0; i < size(); ++i)
            ALCOVE_ASSERT(star_computed(i, identity_) == QClass::basis(i),
                          "Giambelli evaluation does not reproduce the basis class");
    }

    std::vector<QClass> chevalley_;
    std::vector<Poly> giambelli_;
    std::vector<std::vector<QClass>> y_power_applied_;
    int identity_ = -1;
    int divisor_ = -1;
};

}  // namespace alcove
