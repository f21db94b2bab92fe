#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "alcove/rootsys.hpp"

namespace alcove {

// A Weyl element is stored as the integer matrix of its action on simple-root
// coordinates (column j = coordinates of w(alpha_j)) plus one reduced word.
// Equality and hashing go through the matrix; the word is bookkeeping.

struct WeylElement {
    int rank = 0;
    IntVec mat;             // rank*rank, row-major
    std::vector<int> word;  // reduced word, 0-based simple reflection indices

    int at(int i, int j) const { return mat[static_cast<std::size_t>(i) * rank + j]; }
    int length() const { return static_cast<int>(word.size()); }

    IntVec apply_int(const IntVec& v) const {
        IntVec out(rank, 0);
        for (int i = 0; i < rank; ++i) {
            long long acc = 0;
            for (int j = 0; j < rank; ++j) acc += static_cast<long long>(at(i, j)) * v[j];
            out[i] = static_cast<int>(acc);
        }
        return out;
    }

    RatVec apply(const RatVec& v) const {
        if (static_cast<int>(v.size()) != rank)
            throw DimensionMismatch("WeylElement::apply: vector size != rank");
        RatVec out(rank, Rat(0));
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) out[i] += Rat(at(i, j)) * v[j];
        return out;
    }

    /// Column j of the matrix: coordinates of w(alpha_j).
    IntVec image_of_simple(int j) const {
        IntVec out(rank);
        for (int i = 0; i < rank; ++i) out[i] = at(i, j);
        return out;
    }

    bool operator==(const WeylElement& o) const { return mat == o.mat; }
};

inline bool root_is_positive(const IntVec& v) {
    for (int x : v)
        if (x != 0) return x > 0;
    return false;  // zero vector, never a root
}

namespace detail {
struct MatHash {
    std::size_t operator()(const IntVec& m) const {
        std::uint64_t h = 1469598103934665603ull;
        for (int x : m) {
            h ^= static_cast<std::uint64_t>(x + 16);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};
}  // namespace detail

class WeylGroup {
  public:
    static constexpr long long kOrderBudget = 10'000'000;

    explicit WeylGroup(const RootSystem& rs) : rs_(&rs) {
        long long order = detail::weyl_order(rs.family, rs.rank);
        if (order > kOrderBudget)
            throw GroupTooLarge("Weyl group order " + std::to_string(order) +
                                " exceeds budget " + std::to_string(kOrderBudget));

        int r = rs.rank;
        simple_refl_.resize(r);
        for (int i = 0; i < r; ++i) {
            WeylElement s;
            s.rank = r;
            s.mat.assign(static_cast<std::size_t>(r) * r, 0);
            // s_i(alpha_j) = alpha_j - cartan[i][j] alpha_i
            for (int j = 0; j < r; ++j) {
                s.mat[static_cast<std::size_t>(j) * r + j] = 1;
                s.mat[static_cast<std::size_t>(i) * r + j] -= rs.cartan[i][j];
            }
            s.word = {i};
            simple_refl_[i] = s;
        }

        WeylElement id;
        id.rank = r;
        id.mat.assign(static_cast<std::size_t>(r) * r, 0);
        for (int i = 0; i < r; ++i) id.mat[static_cast<std::size_t>(i) * r + i] = 1;
        push(id);

        // BFS by length; w*s_i is longer than w exactly when w(alpha_i) > 0,
        // so the word recorded at first discovery is reduced.
        for (std::size_t head = 0; head < elements_.size(); ++head) {
            WeylElement w = elements_[head];  // copy: push may reallocate
            for (int i = 0; i < r; ++i) {
                if (!root_is_positive(w.image_of_simple(i))) continue;
                WeylElement next = compose(w, simple_refl_[i]);
                next.word = w.word;
                next.word.push_back(i);
                if (index_.find(next.mat) == index_.end()) push(next);
            }
        }
        ALCOVE_ASSERT(static_cast<long long>(elements_.size()) == order,
                      "Weyl enumeration size mismatch");
        wo_ = static_cast<int>(elements_.size()) - 1;
        ALCOVE_ASSERT(elements_[wo_].length() ==
                          static_cast<int>(rs.positive_roots.size()),
                      "longest element length != number of positive roots");

        // Reflections in arbitrary positive roots, used by the Chevalley rule.
        root_refl_.resize(rs.positive_roots.size());
        for (std::size_t b = 0; b < rs.positive_roots.size(); ++b) {
            WeylElement s;
            s.rank = r;
            s.mat.assign(static_cast<std::size_t>(r) * r, 0);
            const IntVec& beta = rs.positive_roots[b];
            for (int j = 0; j < r; ++j) {
                int p = rs.simple_pairing_with_coroot(static_cast<int>(b), j);
                s.mat[static_cast<std::size_t>(j) * r + j] = 1;
                for (int i = 0; i < r; ++i)
                    s.mat[static_cast<std::size_t>(i) * r + j] -= p * beta[i];
            }
            auto it = index_.find(s.mat);
            ALCOVE_ASSERT(it != index_.end(), "root reflection not in group");
            root_refl_[b] = it->second;
        }
    }

    const RootSystem& root_system() const { return *rs_; }
    std::size_t size() const { return elements_.size(); }
    const WeylElement& element(int i) const { return elements_[i]; }
    const std::vector<WeylElement>& elements() const { return elements_; }
    const WeylElement& simple_reflection(int i) const { return simple_refl_[i]; }
    const WeylElement& root_reflection(int beta_index) const {
        return elements_[root_refl_[beta_index]];
    }
    const WeylElement& longest() const { return elements_[wo_]; }

    int index_of(const WeylElement& w) const {
        auto it = index_.find(w.mat);
        return it == index_.end() ? -1 : it->second;
    }

    /// Matrix product: (a*b)(v) = a(b(v)).  The stored word is left empty;
    /// use canonical(w) to pull the enumerated element with its reduced word.
    static WeylElement compose(const WeylElement& a, const WeylElement& b) {
        WeylElement out;
        out.rank = a.rank;
        out.mat.assign(a.mat.size(), 0);
        for (int i = 0; i < a.rank; ++i)
            for (int k = 0; k < a.rank; ++k) {
                long long aik = a.at(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < a.rank; ++j)
                    out.mat[static_cast<std::size_t>(i) * a.rank + j] +=
                        static_cast<int>(aik * b.at(k, j));
            }
        return out;
    }

    const WeylElement& canonical(const WeylElement& w) const {
        int i = index_of(w);
        ALCOVE_ASSERT(i >= 0, "element not in enumerated group");
        return elements_[i];
    }

    /// Number of positive roots sent to negative ones.
    int inversions(const WeylElement& w) const {
        int count = 0;
        for (const auto& beta : rs_->positive_roots)
            if (!root_is_positive(w.apply_int(beta))) ++count;
        return count;
    }

  private:
    void push(const WeylElement& w) {
        index_.emplace(w.mat, static_cast<int>(elements_.size()));
        elements_.push_back(w);
    }

    const RootSystem* rs_;
    std::vector<WeylElement> elements_;  // BFS order: length-sorted
    std::unordered_map<IntVec, int, detail::MatHash> index_;
    std::vector<WeylElement> simple_refl_;
    std::vector<int> root_refl_;
    int wo_ = -1;
};

struct CosetRep {
    WeylElement element;
    int length = 0;
    int index = 0;
};

/// Minimal-length representatives of W/W_P for the maximal parabolic whose
/// Levi omits `node`, in the frozen (length, word) order used for all
/// downstream coefficient indexing.
class CosetBasis {
  public:
    CosetBasis(const WeylGroup& weyl, int node) : weyl_(&weyl), node_(node) {
        const RootSystem& rs = weyl.root_system();
        ALCOVE_ASSERT(node >= 0 && node < rs.rank, "CosetBasis: bad node");
        for (const auto& w : weyl.elements()) {
            bool minimal = true;
            for (int j = 0; j < rs.rank && minimal; ++j)
                if (j != node) minimal = root_is_positive(w.image_of_simple(j));
            if (minimal) reps_.push_back(CosetRep{w, w.length(), 0});
        }
        std::sort(reps_.begin(), reps_.end(), [](const CosetRep& a, const CosetRep& b) {
            if (a.length != b.length) return a.length < b.length;
            return a.element.word < b.element.word;
        });
        for (std::size_t i = 0; i < reps_.size(); ++i) {
            reps_[i].index = static_cast<int>(i);
            index_.emplace(reps_[i].element.mat, static_cast<int>(i));
        }

        long long levi_order = 1;
        {
            // closure of the Levi reflections inside the enumerated group
            std::unordered_map<IntVec, int, detail::MatHash> seen;
            std::vector<WeylElement> frontier{weyl.element(0)};
            seen.emplace(frontier[0].mat, 0);
            for (std::size_t head = 0; head < frontier.size(); ++head) {
                WeylElement w = frontier[head];
                for (int j = 0; j < rs.rank; ++j) {
                    if (j == node) continue;
                    WeylElement next = WeylGroup::compose(w, weyl.simple_reflection(j));
                    if (seen.emplace(next.mat, 0).second) frontier.push_back(next);
                }
            }
            levi_order = static_cast<long long>(frontier.size());
        }
        ALCOVE_ASSERT(static_cast<long long>(reps_.size()) * levi_order ==
                          static_cast<long long>(weyl.size()),
                      "coset count != |W| / |W_P|");

        dim_ = reps_.back().length;
        dual_.resize(reps_.size());
        for (std::size_t i = 0; i < reps_.size(); ++i) {
            dual_[i] = coset_of(WeylGroup::compose(weyl.longest(), reps_[i].element));
            ALCOVE_ASSERT(reps_[dual_[i]].length == dim_ - reps_[i].length,
                          "dual length is not complementary");
        }
    }

    const WeylGroup& weyl() const { return *weyl_; }
    int node() const { return node_; }
    int size() const { return static_cast<int>(reps_.size()); }
    int dim() const { return dim_; }
    const CosetRep& rep(int i) const { return reps_[i]; }
    int dual(int i) const { return dual_[i]; }

    /// Index of the coset w W_P: greedy descent through Levi reflections.
    int coset_of(WeylElement w) const {
        const RootSystem& rs = weyl_->root_system();
        bool reduced = true;
        while (reduced) {
            reduced = false;
            for (int j = 0; j < rs.rank; ++j) {
                if (j == node_) continue;
                if (!root_is_positive(w.image_of_simple(j))) {
                    w = WeylGroup::compose(w, weyl_->simple_reflection(j));
                    reduced = true;
                }
            }
        }
        auto it = index_.find(w.mat);
        ALCOVE_ASSERT(it != index_.end(), "minimized element is not a stored rep");
        return it->second;
    }

    /// Coset of u~ * s_beta for a basis rep index and positive-root index.
    int coset_times_reflection(int rep_index, int beta_index) const {
        return coset_of(
            WeylGroup::compose(reps_[rep_index].element, weyl_->root_reflection(beta_index)));
    }

  private:
    const WeylGroup* weyl_;
    int node_;
    std::vector<CosetRep> reps_;
    std::unordered_map<IntVec, int, detail::MatHash> index_;
    std::vector<int> dual_;
    int dim_ = 0;
};

}  // namespace alcove
