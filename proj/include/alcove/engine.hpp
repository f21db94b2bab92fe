#pragma once

#include <memory>
#include <string>
#include <vector>

#include "alcove/qclass.hpp"
#include "alcove/weyl.hpp"

namespace alcove {

/// Root system, Weyl group and coset basis for one (type, node) pair.
/// Self-referential, so it lives behind a unique_ptr and never moves.
struct Context {
    RootSystem rs;
    WeylGroup weyl;
    CosetBasis basis;

    Context(char family, int rank, int node)
        : rs(build_root_system(family, rank)), weyl(rs), basis(weyl, node) {}
    Context(const Context&) = delete;
    Context& operator=(const Context&) = delete;
};

/// Common surface of the two quantum product backends.  Basis elements are
/// indexed by the frozen CosetBasis order; the full pairwise product table is
/// cached eagerly at construction, after which engines are immutable.
class QuantumEngine {
  public:
    explicit QuantumEngine(const Context& ctx)
        : ctx_(&ctx), c1_(c1_of_parabolic(ctx.rs, ctx.basis.node())) {}
    virtual ~QuantumEngine() = default;

    const Context& context() const { return *ctx_; }
    const RootSystem& root_system() const { return ctx_->rs; }
    const CosetBasis& basis() const { return ctx_->basis; }
    int node() const { return ctx_->basis.node(); }
    int size() const { return ctx_->basis.size(); }
    int dim() const { return ctx_->basis.dim(); }
    int c1() const { return c1_; }
    int length(int i) const { return ctx_->basis.rep(i).length; }
    int dual(int i) const { return ctx_->basis.dual(i); }
    const CosetRep& rep(int i) const { return ctx_->basis.rep(i); }

    virtual std::string engine_name() const = 0;
    virtual std::string label(int i) const;

    /// Uncached product of two basis classes.  star_basis serves the cached
    /// copy; this recomputes, so tests can probe commutativity for real.
    virtual QClass star_computed(int i, int j) const = 0;

    const QClass& star_basis(int i, int j) const { return table_[i][j]; }

    QClass star(const QClass& a, const QClass& b) const {
        QClass out;
        for (const auto& [ka, ca] : a.terms())
            for (const auto& [kb, cb] : b.terms())
                out.add_scaled(table_[ka.first][kb.first], ca * cb, ka.second + kb.second);
        return out;
    }

    QClass star_with_basis(const QClass& a, int j) const {
        QClass out;
        for (const auto& [ka, ca] : a.terms())
            out.add_scaled(table_[ka.first][j], ca, ka.second);
        return out;
    }

  protected:
    /// Called at the end of each derived constructor: fills the cache from
    /// star_computed and enforces commutativity plus the grading identity
    /// l(u) + d*c1 = l(i) + l(j) on every term.
    void finalize_table() {
        table_.assign(size(), std::vector<QClass>(size()));
        for (int i = 0; i < size(); ++i)
            for (int j = i; j < size(); ++j) {
                QClass value = star_computed(i, j);
                ALCOVE_ASSERT(value == star_computed(j, i), "basis product not commutative");
                for (const auto& [key, coeff] : value.terms()) {
                    ALCOVE_ASSERT(length(key.first) + key.second * c1_ ==
                                      length(i) + length(j),
                                  "product term violates the grading");
                    (void)coeff;
                }
                table_[j][i] = value;
                table_[i][j] = std::move(value);
            }
    }

    const Context* ctx_;
    int c1_;
    std::vector<std::vector<QClass>> table_;
};

inline std::string QuantumEngine::label(int i) const {
    // One class per codegree (projective-space-like bases) prints as y_k,
    // mirroring the tables; otherwise fall back to the reduced word.
    bool unique = true;
    for (int j = 0; j < size() && unique; ++j)
        if (j != i && length(j) == length(i)) unique = false;
    if (unique) return "y" + std::to_string(length(i));
    std::string s = "y[";
    const auto& word = rep(i).element.word;
    for (std::size_t k = 0; k < word.size(); ++k) {
        if (k) s += " ";
        s += "s" + std::to_string(word[k] + 1);
    }
    return s + "]";
}

}  // namespace alcove
