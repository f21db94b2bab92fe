#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "alcove/engine.hpp"

namespace alcove {

/// Weakly decreasing parts, trailing zeros stripped.
using Partition = std::vector<int>;

inline Partition normalize_partition(Partition p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        ALCOVE_ASSERT(p[i] >= p[i + 1], "partition parts not weakly decreasing");
    ALCOVE_ASSERT(p.empty() || p.back() > 0, "negative partition part");
    return p;
}

inline int partition_weight(const Partition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
}

inline std::string partition_label(const Partition& p) {
    if (p.empty()) return "s[]";
    std::string s = "s[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + "]";
}

namespace detail {

struct LrState {
    const std::vector<int>* inner;   // lambda, padded to rows of target
    const std::vector<int>* outer;   // target
    std::vector<std::vector<int>> fill;
    std::vector<int> counts;         // per value 1..len(nu), 1-based at index v
    const std::vector<int>* content; // nu
};

// Cells are visited row by row, right to left, which is exactly the reverse
// reading word; the lattice condition can then be checked incrementally.
inline long long lr_count(LrState& st, std::size_t row, int col) {
    const auto& inner = *st.inner;
    const auto& outer = *st.outer;
    while (row < outer.size() && col < inner[row]) {
        ++row;
        col = row < outer.size() ? outer[row] - 1 : 0;
    }
    if (row == outer.size()) return 1;

    long long total = 0;
    int nvals = static_cast<int>(st.content->size());
    for (int v = 1; v <= nvals; ++v) {
        if (st.counts[v] >= (*st.content)[v - 1]) continue;
        if (v > 1 && st.counts[v] >= st.counts[v - 1]) continue;  // lattice word
        if (col + 1 < outer[row] && v > st.fill[row][col + 1]) continue;  // rows weakly increase
        if (row > 0 && col < outer[row - 1] && col >= inner[row - 1] &&
            v <= st.fill[row - 1][col])
            continue;  // columns strictly increase
        st.fill[row][col] = v;
        ++st.counts[v];
        std::size_t nrow = row;
        int ncol = col - 1;
        if (ncol < 0) {
            ++nrow;
            ncol = nrow < outer.size() ? outer[nrow] - 1 : 0;
        }
        total += lr_count(st, nrow, ncol);
        --st.counts[v];
        st.fill[row][col] = 0;
    }
    return total;
}

}  // namespace detail

/// Littlewood-Richardson coefficient c^{target}_{lambda, nu}: the number of
/// LR skew tableaux of shape target/lambda and content nu.
inline long long lr_coefficient(const Partition& lambda_in, const Partition& nu_in,
                                const Partition& target_in) {
    Partition lambda = normalize_partition(lambda_in);
    Partition nu = normalize_partition(nu_in);
    Partition target = normalize_partition(target_in);
    if (partition_weight(target) != partition_weight(lambda) + partition_weight(nu)) return 0;
    if (lambda.size() > target.size()) return 0;
    lambda.resize(target.size(), 0);
    for (std::size_t r = 0; r < target.size(); ++r)
        if (lambda[r] > target[r]) return 0;
    if (nu.empty()) return 1;  // skew shape is empty by the weight check

    detail::LrState st;
    st.inner = &lambda;
    st.outer = &target;
    st.content = &nu;
    st.counts.assign(nu.size() + 1, 0);
    st.fill.resize(target.size());
    for (std::size_t r = 0; r < target.size(); ++r) st.fill[r].assign(target[r], 0);
    return detail::lr_count(st, 0, target.empty() ? 0 : target[0] - 1);
}

struct RimhookReduction {
    bool zero = false;
    Partition reduced;
    int q_degree = 0;
    int sign = 1;
};

/// Removes n-rim-hooks from a partition with at most k rows until it fits in
/// the k x (n-k) box.  Each removal contributes q and the sign (-1)^(k-r)
/// where r is the number of rows the hook occupies; if the reduction gets
/// stuck outside the box the class is zero.
inline RimhookReduction rimhook_reduce(const Partition& nu_in, int k, int n) {
    Partition nu = normalize_partition(nu_in);
    ALCOVE_ASSERT(static_cast<int>(nu.size()) <= k, "rimhook_reduce: more than k rows");
    nu.resize(k, 0);

    std::vector<int> beta(k);
    for (int i = 0; i < k; ++i) beta[i] = nu[i] + (k - 1 - i);

    RimhookReduction out;
    while (true) {
        int from = -1;
        for (int i = 0; i < k; ++i) {
            if (beta[i] < n) continue;
            bool clash = false;
            for (int j = 0; j < k; ++j) clash = clash || beta[j] == beta[i] - n;
            if (!clash && (from < 0 || beta[i] > beta[from])) from = i;
        }
        if (from < 0) break;
        int rows_spanned = 1;
        for (int j = 0; j < k; ++j)
            if (beta[j] > beta[from] - n && beta[j] < beta[from]) ++rows_spanned;
        out.sign *= ((k - rows_spanned) % 2 == 0) ? 1 : -1;
        ++out.q_degree;
        beta[from] -= n;
    }

    std::sort(beta.rbegin(), beta.rend());
    Partition res(k);
    for (int i = 0; i < k; ++i) res[i] = beta[i] - (k - 1 - i);
    res = normalize_partition(res);
    if (!res.empty() && res[0] > n - k) {
        out.zero = true;
        return out;
    }
    out.reduced = std::move(res);
    return out;
}

/// All partitions inside the k x (n-k) box, ordered by (weight, lex).
inline std::vector<Partition> box_partitions(int k, int n) {
    std::vector<Partition> all;
    Partition cur;
    auto rec = [&](auto&& self, int row, int maxpart) -> void {
        all.push_back(normalize_partition(cur));
        if (row == k) return;
        for (int p = 1; p <= maxpart; ++p) {
            cur.push_back(p);
            self(self, row + 1, p);
            cur.pop_back();
        }
    };
    rec(rec, 0, n - k);
    std::sort(all.begin(), all.end(), [](const Partition& a, const Partition& b) {
        int wa = partition_weight(a), wb = partition_weight(b);
        return wa != wb ? wa < wb : a < b;
    });
    return all;
}

/// sigma_lambda * sigma_mu in QH*(Gr(k,n)): classical LR expansion in the
/// quotient ring of <= k-row partitions, then rim-hook reduction.  Result maps
/// (partition in box, q-degree) -> coefficient.
inline std::map<std::pair<Partition, int>, long long> grass_star(int k, int n,
                                                                 const Partition& lambda,
                                                                 const Partition& mu) {
    Partition lam = normalize_partition(lambda), m = normalize_partition(mu);
    ALCOVE_ASSERT(lam.empty() || (static_cast<int>(lam.size()) <= k && lam[0] <= n - k),
                  "grass_star: lambda not in box");
    ALCOVE_ASSERT(m.empty() || (static_cast<int>(m.size()) <= k && m[0] <= n - k),
                  "grass_star: mu not in box");

    int total = partition_weight(lam) + partition_weight(m);
    int cap = (lam.empty() ? 0 : lam[0]) + (m.empty() ? 0 : m[0]);

    std::map<std::pair<Partition, int>, long long> out;
    Partition target;
    auto visit = [&](const Partition& t) {
        long long c = lr_coefficient(lam, m, t);
        if (c == 0) return;
        RimhookReduction red = rimhook_reduce(t, k, n);
        if (red.zero) return;
        ALCOVE_ASSERT(partition_weight(t) ==
                          partition_weight(red.reduced) + red.q_degree * n,
                      "rim-hook grading mismatch");
        auto key = std::make_pair(red.reduced, red.q_degree);
        out[key] += c * red.sign * 1LL;
        if (out[key] == 0) out.erase(key);
    };
    auto rec = [&](auto&& self, int row, int maxpart, int remaining) -> void {
        if (remaining == 0) {
            visit(target);
            return;
        }
        if (row == k) return;
        for (int p = std::min(maxpart, remaining); p >= 1; --p) {
            target.push_back(p);
            self(self, row + 1, p, remaining - p);
            target.pop_back();
        }
    };
    rec(rec, 0, cap, total);
    return out;
}

/// Type-A fallback engine: quantum products in QH*(Gr(k,n)) via classical
/// Littlewood-Richardson coefficients and rim-hook reduction.  Basis elements
/// stay indexed by the shared coset order; partitions are the internal labels.
class RimhookEngine : public QuantumEngine {
  public:
    explicit RimhookEngine(const Context& ctx) : QuantumEngine(ctx) {
        ALCOVE_ASSERT(ctx.rs.family == 'A', "rim-hook engine needs type A");
        k_ = node() + 1;
        n_ = ctx.rs.rank + 1;
        partitions_.resize(size());
        for (int i = 0; i < size(); ++i) {
            partitions_[i] = partition_of_rep(i);
            ALCOVE_ASSERT(partition_weight(partitions_[i]) == length(i),
                          "partition weight != coset length");
            index_.emplace(partitions_[i], i);
        }
        // Poincare duality must match the box complement of the partition.
        for (int i = 0; i < size(); ++i) {
            Partition lam = partitions_[i];
            lam.resize(k_, 0);
            Partition comp(k_);
            for (int r = 0; r < k_; ++r) comp[r] = (n_ - k_) - lam[k_ - 1 - r];
            ALCOVE_ASSERT(normalize_partition(comp) == partitions_[dual(i)],
                          "dual coset is not the complementary partition");
        }
        finalize_table();
    }

    std::string engine_name() const override { return "rimhook"; }

    std::string label(int i) const override { return partition_label(partitions_[i]); }

    const Partition& partition(int i) const { return partitions_[i]; }

    int index_of_partition(const Partition& p) const {
        auto it = index_.find(normalize_partition(p));
        ALCOVE_ASSERT(it != index_.end(), "partition not in box basis");
        return it->second;
    }

    QClass star_computed(int i, int j) const override {
        QClass out;
        for (const auto& [key, coeff] : grass_star(k_, n_, partitions_[i], partitions_[j]))
            out.add(index_of_partition(key.first), key.second, Rat(coeff));
        return out;
    }

  private:
    // Minimal coset representatives of S_n / (S_k x S_{n-k}) are Grassmannian
    // permutations; the partition comes from the first k one-line values.
    Partition partition_of_rep(int i) const {
        const WeylElement& w = rep(i).element;
        int n = n_;
        std::vector<int> perm(n);
        for (int x = 0; x < n; ++x) perm[x] = x + 1;
        const auto& word = w.word;
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            int a = *it + 1;
            for (int x = 0; x < n; ++x) {
                if (perm[x] == a) perm[x] = a + 1;
                else if (perm[x] == a + 1) perm[x] = a;
            }
        }
        // cross-check: the permutation's action on root coordinates must be w
        for (int j = 0; j + 1 < n; ++j) {
            std::vector<int> eps(n, 0);
            eps[perm[j] - 1] += 1;
            eps[perm[j + 1] - 1] -= 1;
            int partial = 0;
            for (int row = 0; row + 1 < n; ++row) {
                partial += eps[row];
                ALCOVE_ASSERT(partial == w.at(row, j), "permutation/matrix mismatch");
            }
        }

        std::vector<int> first(perm.begin(), perm.begin() + k_);
        std::sort(first.begin(), first.end());
        Partition lam(k_);
        for (int j = 1; j <= k_; ++j) lam[k_ - j] = first[j - 1] - j;
        return normalize_partition(lam);
    }

    int k_ = 0, n_ = 0;
    std::vector<Partition> partitions_;
    std::map<Partition, int> index_;
};

}  // namespace alcove
