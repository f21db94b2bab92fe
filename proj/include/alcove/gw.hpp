#pragma once

#include <algorithm>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "alcove/grassmann.hpp"
#include "alcove/qh.hpp"

namespace alcove {

/// Owns the context together with the engine built on it.
struct EngineHandle {
    std::unique_ptr<Context> ctx;
    std::unique_ptr<QuantumEngine> engine;
};

/// Divisor engine when H^2 generates; otherwise the rim-hook engine for
/// type-A maximal parabolics (Grassmannians).  Anything else propagates
/// NotDivisorGenerated.
inline EngineHandle make_engine(char family, int rank, int node) {
    EngineHandle h;
    h.ctx = std::make_unique<Context>(family, rank, node);
    try {
        h.engine = std::make_unique<DivisorEngine>(*h.ctx);
    } catch (const NotDivisorGenerated&) {
        if (family != 'A') throw;
        h.engine = std::make_unique<RimhookEngine>(*h.ctx);
    }
    return h;
}

/// One b-point Gromov-Witten query: ordered tuple of coset indices and the
/// curve degree.  n_d vanishes unless
/// sum_i (dim - l_P(w_i)) = dim + d*c1.
struct GwQuery {
    int node = 0;
    std::vector<int> reps;
    int degree = 0;
};

/// n_d(w_1,...,w_b): the coefficient of q^d [Y^{w_b}] in the star product of
/// the homology classes [Y_{w_i}] = [Y^{w_o w_i}], i = 1..b-1.
inline Rat gw_invariant(const QuantumEngine& e, const GwQuery& query) {
    ALCOVE_ASSERT(query.reps.size() >= 2, "gw_invariant needs b >= 2");
    ALCOVE_ASSERT(query.degree >= 0, "gw_invariant: negative degree");
    int b = static_cast<int>(query.reps.size());
    QClass prod = QClass::basis(e.dual(query.reps[0]));
    for (int i = 1; i + 1 < b; ++i) prod = e.star_with_basis(prod, e.dual(query.reps[i]));
    return prod.coefficient(query.reps[b - 1], query.degree);
}

/// One Theorem-style constraint sum_i (w_i omega_P, mu_i) <= d, with the
/// coefficient of mu_i stored as the simple-root coordinates of w_i omega_P
/// (so evaluation against alcove coordinates a_j = alpha_j(mu) is a plain
/// dot product).
struct Inequality {
    std::string group;                    // e.g. "G2"
    int node = 1;                         // 1-based simple node of P
    int d = 0;
    std::vector<std::vector<int>> words;  // reduced words (1-based letters)
    std::vector<int> tuple;               // coset indices, internal
    std::vector<RatVec> coeffs;           // one vector per marked point
    std::string pretty;

    Rat evaluate(const std::vector<RatVec>& points) const {
        if (points.size() != coeffs.size())
            throw DimensionMismatch("inequality: wrong number of points");
        Rat acc = 0;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (points[i].size() != coeffs[i].size())
                throw DimensionMismatch("inequality: wrong point dimension");
            for (std::size_t j = 0; j < coeffs[i].size(); ++j)
                acc += coeffs[i][j] * points[i][j];
        }
        return acc;
    }

    bool holds(const std::vector<RatVec>& points) const { return evaluate(points) <= d; }

    bool operator==(const Inequality& o) const {
        return group == o.group && node == o.node && d == o.d && words == o.words &&
               coeffs == o.coeffs;
    }
};

struct EnumerateOptions {
    bool dedup = false;            // collapse tuples equal up to permutation
    long long budget = 1'000'000;  // cap on |W/W_P|^(b-1) per node
};

namespace detail {

inline std::string pretty_inequality(const Inequality& q) {
    std::ostringstream os;
    for (std::size_t i = 0; i < q.coeffs.size(); ++i) {
        if (i) os << " + ";
        os << "(";
        for (std::size_t j = 0; j < q.coeffs[i].size(); ++j) {
            if (j) os << ",";
            os << rat_to_string(q.coeffs[i][j]);
        }
        os << ")·mu" << (i + 1);
    }
    os << " <= " << q.d;
    return os.str();
}

}  // namespace detail

/// All Theorem-style inequalities for Delta_b: every maximal parabolic node,
/// every ordered tuple (w_1,...,w_b) and degree d with n_d = 1.  Output is
/// sorted by (node, d, tuple).
inline std::vector<Inequality> enumerate_inequalities(char family, int rank, int b,
                                                      const EnumerateOptions& opts = {}) {
    ALCOVE_ASSERT(b >= 2, "enumerate_inequalities needs b >= 2");
    std::vector<Inequality> out;
    std::string group = std::string(1, family) + std::to_string(rank);

    for (int node = 0; node < rank; ++node) {
        EngineHandle h = make_engine(family, rank, node);
        const QuantumEngine& e = *h.engine;
        int n = e.size();

        double count = 1;
        for (int i = 0; i + 1 < b; ++i) count *= n;
        if (count > static_cast<double>(opts.budget))
            throw BudgetExceeded("tuple count " + std::to_string(count) + " over budget");

        const RatVec& omega = e.root_system().fundamental_weights[node];
        std::vector<RatVec> translate(n);
        std::vector<std::vector<int>> words(n);
        for (int i = 0; i < n; ++i) {
            translate[i] = e.rep(i).element.apply(omega);
            for (int letter : e.rep(i).element.word) words[i].push_back(letter + 1);
        }

        // Iterate over ordered (b-1)-prefixes; every term of the product with
        // coefficient exactly 1 supplies the final slot and the degree.
        std::vector<int> prefix(b - 1, 0);
        while (true) {
            QClass prod = QClass::basis(e.dual(prefix[0]));
            for (int i = 1; i < b - 1; ++i) prod = e.star_with_basis(prod, e.dual(prefix[i]));
            for (const auto& [key, coeff] : prod.terms()) {
                if (coeff != 1) continue;
                auto [last, d] = key;
                Inequality q;
                q.group = group;
                q.node = node + 1;
                q.d = d;
                q.tuple = prefix;
                q.tuple.push_back(last);
                long long codeg = 0;
                for (int w : q.tuple) codeg += e.dim() - e.length(w);
                ALCOVE_ASSERT(codeg == e.dim() + static_cast<long long>(d) * e.c1(),
                              "emitted tuple violates the grading bookkeeping");
                ALCOVE_ASSERT(d >= 0, "emitted degree negative");
                for (int w : q.tuple) {
                    q.words.push_back(words[w]);
                    q.coeffs.push_back(translate[w]);
                }
                q.pretty = detail::pretty_inequality(q);
                out.push_back(std::move(q));
            }
            int pos = b - 2;
            while (pos >= 0 && ++prefix[pos] == n) prefix[pos--] = 0;
            if (pos < 0) break;
        }
    }

    std::sort(out.begin(), out.end(), [](const Inequality& a, const Inequality& b2) {
        if (a.node != b2.node) return a.node < b2.node;
        if (a.d != b2.d) return a.d < b2.d;
        return a.tuple < b2.tuple;
    });

    if (opts.dedup) {
        std::vector<Inequality> kept;
        std::set<std::tuple<int, int, std::vector<int>>> seen;
        for (auto& q : out) {
            std::vector<int> sorted = q.tuple;
            std::sort(sorted.begin(), sorted.end());
            if (seen.emplace(q.node, q.d, std::move(sorted)).second)
                kept.push_back(std::move(q));
        }
        out = std::move(kept);
    }
    return out;
}

}  // namespace alcove
