#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "alcove/errors.hpp"
#include "alcove/rational.hpp"

namespace alcove {

// Numeric ground truth for SU(n): search for unitaries k_i in the conjugacy
// classes C_{mu_i} with product equal to the identity.  Floating point is
// confined to this module; callers hand in exact alcove coordinates and those
// are converted once at the boundary.

struct OracleConfig {
    int restarts = 64;
    int max_iterations = 2000;
    double tolerance = 1e-8;  // on the squared Frobenius residual
    std::uint64_t rng_seed = 0;
};

struct OracleOutcome {
    bool member = false;  // one-sided: false means unresolved, never "non-member"
    double best_residual = 0.0;
    std::vector<Eigen::MatrixXcd> witness;  // b unitaries, last one identity
};

/// Sum-zero eigenvalue logs of exp(mu), scaled so the alcove condition is
/// lambda_1 - lambda_n <= 1.  Input: alcove coordinates a_j = alpha_j(mu).
inline std::vector<double> eigenvalue_logs(int n, const RatVec& alcove_coords) {
    if (static_cast<int>(alcove_coords.size()) != n - 1)
        throw DimensionMismatch("eigenvalue_logs: expected n-1 alcove coordinates");
    RatVec lam(n, Rat(0));
    Rat trace_shift = 0;
    for (int j = 1; j <= n - 1; ++j) trace_shift += Rat(j) * alcove_coords[j - 1];
    trace_shift /= n;
    for (int i = 1; i <= n; ++i) {
        Rat v = -trace_shift;
        for (int j = i; j <= n - 1; ++j) v += alcove_coords[j - 1];
        lam[i - 1] = v;
    }
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = rat_to_double(lam[i]);
    return out;
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

template <int N>
using CMat = Eigen::Matrix<std::complex<double>, N, N>;

template <int N>
CMat<N> diag_exponential(const std::vector<double>& logs) {
    CMat<N> d = CMat<N>::Zero();
    for (int i = 0; i < N; ++i) {
        double t = 2.0 * std::numbers::pi_v<double> * logs[i];
        d(i, i) = std::complex<double>(std::cos(t), std::sin(t));
    }
    return d;
}

template <int N>
CMat<N> random_unitary(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMat<N> g;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) g(i, j) = std::complex<double>(gauss(rng), gauss(rng));
    Eigen::HouseholderQR<CMat<N>> qr(g);
    CMat<N> q = qr.householderQ();
    CMat<N> r = qr.matrixQR().template triangularView<Eigen::Upper>();
    for (int i = 0; i < N; ++i) {
        std::complex<double> d = r(i, i);
        double ad = std::abs(d);
        q.col(i) *= (ad > 0 ? d / ad : std::complex<double>(1, 0));
    }
    return q;
}

/// exp(A) for skew-Hermitian A via the eigendecomposition of H = -iA.
template <int N>
CMat<N> exp_skew(const CMat<N>& a) {
    CMat<N> h = std::complex<double>(0, -1) * a;
    Eigen::SelfAdjointEigenSolver<CMat<N>> es(h);
    Eigen::Matrix<std::complex<double>, N, 1> phases;
    for (int i = 0; i < N; ++i) {
        double t = es.eigenvalues()(i);
        phases(i) = std::complex<double>(std::cos(t), std::sin(t));
    }
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

template <int N>
double residual_of(const std::vector<CMat<N>>& ks) {
    CMat<N> m = CMat<N>::Identity();
    for (const auto& k : ks) m = m * k;
    return (m - CMat<N>::Identity()).squaredNorm();
}

template <int N>
struct Minimizer {
    std::vector<CMat<N>> diag;  // D_i per marking
    int b;
    const OracleConfig* cfg;

    double run(std::uint64_t seed, std::vector<CMat<N>>& best_us) const {
        std::mt19937_64 rng(seed);
        int free_count = b - 1;
        std::vector<CMat<N>> us(free_count);
        for (auto& u : us) u = random_unitary<N>(rng);

        std::vector<CMat<N>> ks(b);
        auto refresh = [&]() {
            for (int i = 0; i < free_count; ++i) us[i] = reunitarize(us[i]);
            for (int i = 0; i < free_count; ++i) ks[i] = us[i] * diag[i] * us[i].adjoint();
            ks[b - 1] = diag[b - 1];
        };
        refresh();
        double f = residual_of(ks);

        double step = 1.0;
        int stale = 0;
        for (int iter = 0; iter < cfg->max_iterations && free_count > 0; ++iter) {
            if (f < cfg->tolerance * 0.5) break;

            // suffix products S_i = k_i ... k_{b-1}
            std::vector<CMat<N>> suffix(b + 1);
            suffix[b] = CMat<N>::Identity();
            for (int i = b - 1; i >= 0; --i) suffix[i] = ks[i] * suffix[i + 1];
            CMat<N> prefix = CMat<N>::Identity();

            std::vector<CMat<N>> dirs(free_count);
            double gradsq = 0;
            for (int i = 0; i < free_count; ++i) {
                CMat<N> rl = suffix[i + 1] * prefix;
                CMat<N> bracket = ks[i] * rl - rl * ks[i];
                CMat<N> skew = 0.5 * (bracket - bracket.adjoint());
                dirs[i] = -skew;
                gradsq += skew.squaredNorm();
                prefix = prefix * ks[i];
            }
            if (gradsq < 1e-22) break;
            if (gradsq < 1e-12 && f > 1e4 * cfg->tolerance) break;  // stuck high

            // Armijo backtracking on the retraction U_i <- exp(t A_i) U_i.
            // The step cap must be generous: near degenerate minima (boundary
            // of Delta_b) the useful step grows without bound as the gradient
            // shrinks.
            double t = std::min(step * 4.0, 1e6);
            bool accepted = false;
            std::vector<CMat<N>> trial(free_count);
            for (int halvings = 0; halvings < 45; ++halvings) {
                for (int i = 0; i < free_count; ++i)
                    trial[i] = exp_skew<N>(CMat<N>(t * dirs[i])) * us[i];
                std::vector<CMat<N>> tks(b);
                for (int i = 0; i < free_count; ++i)
                    tks[i] = trial[i] * diag[i] * trial[i].adjoint();
                tks[b - 1] = diag[b - 1];
                double ft = residual_of(tks);
                if (ft <= f - 0.2 * t * gradsq) {
                    // Relative progress collapses only when the restart is
                    // settling into a local minimum; if that happens far above
                    // tolerance the basin cannot certify membership, so give up.
                    bool far = f > 1e4 * cfg->tolerance;
                    if (f - ft < (far ? 1e-6 * f : 1e-15)) ++stale; else stale = 0;
                    us = trial;
                    ks = tks;
                    f = ft;
                    step = t;
                    accepted = true;
                    break;
                }
                t *= 0.5;
            }
            if (!accepted || stale >= 3) break;
            if ((iter & 63) == 63) {
                refresh();
                f = residual_of(ks);
            }
        }
        refresh();
        f = residual_of(ks);
        best_us = us;
        return f;
    }

    static CMat<N> reunitarize(const CMat<N>& u) {
        Eigen::HouseholderQR<CMat<N>> qr(u);
        CMat<N> q = qr.householderQ();
        CMat<N> r = qr.matrixQR().template triangularView<Eigen::Upper>();
        for (int i = 0; i < N; ++i) {
            std::complex<double> d = r(i, i);
            double ad = std::abs(d);
            q.col(i) *= (ad > 0 ? d / ad : std::complex<double>(1, 0));
        }
        return q;
    }
};

template <int N>
OracleOutcome decide_impl(const std::vector<RatVec>& mu, const OracleConfig& cfg) {
    int b = static_cast<int>(mu.size());
    Minimizer<N> mini;
    mini.b = b;
    mini.cfg = &cfg;
    for (const auto& coords : mu)
        mini.diag.push_back(diag_exponential<N>(eigenvalue_logs(N, coords)));

    OracleOutcome out;
    out.best_residual = std::numeric_limits<double>::infinity();
    std::vector<CMat<N>> best(b - 1 > 0 ? b - 1 : 0), us;
    if (b == 1) {
        out.best_residual = residual_of<N>(mini.diag);
    } else {
        for (int r = 0; r < cfg.restarts; ++r) {
            std::uint64_t seed = splitmix64(cfg.rng_seed ^ (0x51ED270B0129ull + 77ull * r));
            double f = mini.run(seed, us);
            if (f < out.best_residual) {
                out.best_residual = f;
                best = us;
            }
            if (out.best_residual < cfg.tolerance) break;
        }
    }
    out.member = out.best_residual < cfg.tolerance;
    for (const auto& u : best) out.witness.emplace_back(u);
    out.witness.emplace_back(Eigen::MatrixXcd::Identity(N, N));
    return out;
}

template <int N>
double residual_impl(const std::vector<RatVec>& mu, const std::vector<Eigen::MatrixXcd>& us) {
    if (mu.size() != us.size())
        throw DimensionMismatch("residual: need one unitary per marking");
    std::vector<CMat<N>> ks(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (us[i].rows() != N || us[i].cols() != N)
            throw DimensionMismatch("residual: unitary has wrong size");
        double drift = (us[i] * us[i].adjoint() - Eigen::MatrixXcd::Identity(N, N))
                           .cwiseAbs()
                           .maxCoeff();
        if (drift > 1e-10)
            throw NonUnitaryInput("unitarity drift " + std::to_string(drift));
        CMat<N> u = us[i];
        ks[i] = u * diag_exponential<N>(eigenvalue_logs(N, mu[i])) * u.adjoint();
    }
    return residual_of<N>(ks);
}

}  // namespace detail

/// ||prod_i U_i exp(2 pi i diag(mu_i)) U_i^dagger - I||^2 (squared Frobenius).
inline double residual(int n, const std::vector<RatVec>& mu,
                       const std::vector<Eigen::MatrixXcd>& unitaries) {
    switch (n) {
        case 2: return detail::residual_impl<2>(mu, unitaries);
        case 3: return detail::residual_impl<3>(mu, unitaries);
        case 4: return detail::residual_impl<4>(mu, unitaries);
        default: throw InvalidType("oracle supports SU(2..4)");
    }
}

/// Multistart minimization of the holonomy residual.  One-sided: member means
/// a certified witness with residual below tolerance was found; otherwise the
/// query is unresolved (never a definite non-member).
inline OracleOutcome decide(int n, const std::vector<RatVec>& mu, const OracleConfig& cfg = {}) {
    ALCOVE_ASSERT(!mu.empty(), "decide: need at least one marking");
    ALCOVE_ASSERT(cfg.tolerance > 0 && cfg.restarts >= 1, "decide: bad config");
    switch (n) {
        case 2: return detail::decide_impl<2>(mu, cfg);
        case 3: return detail::decide_impl<3>(mu, cfg);
        case 4: return detail::decide_impl<4>(mu, cfg);
        default: throw InvalidType("oracle supports SU(2..4)");
    }
}

/// Closed-form description of Delta_3 for SU(2) on alcove coordinates:
/// |a_1 - a_2| <= a_3 <= min(a_1 + a_2, 2 - a_1 - a_2).
inline bool su2_closed_form(const Rat& a1, const Rat& a2, const Rat& a3) {
    Rat diff = a1 - a2;
    if (diff < 0) diff = -diff;
    return diff <= a3 && a3 <= a1 + a2 && a1 + a2 + a3 <= 2;
}

}  // namespace alcove
