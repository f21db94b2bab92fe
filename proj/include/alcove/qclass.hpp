#pragma once

#include <map>
#include <string>
#include <utility>

#include "alcove/rational.hpp"

namespace alcove {

/// Element of QH*(G/P): sparse rational coefficients indexed by
/// (basis index, q-degree).  Zero coefficients are never stored.
class QClass {
  public:
    using Key = std::pair<int, int>;  // (basis index, q-degree)
    using Terms = std::map<Key, Rat>;

    QClass() = default;
    static QClass basis(int u, int q_deg = 0) {
        QClass c;
        c.terms_[{u, q_deg}] = 1;
        return c;
    }

    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    Rat coefficient(int u, int q_deg) const {
        auto it = terms_.find({u, q_deg});
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add(int u, int q_deg, const Rat& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(Key{u, q_deg}, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// this += scale * q^shift * other
    void add_scaled(const QClass& other, const Rat& scale, int q_shift = 0) {
        if (scale == 0) return;
        for (const auto& [key, coeff] : other.terms_)
            add(key.first, key.second + q_shift, scale * coeff);
    }

    QClass& operator*=(const Rat& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [key, coeff] : terms_) coeff *= s;
        return *this;
    }

    bool operator==(const QClass& o) const { return terms_ == o.terms_; }
    bool operator!=(const QClass& o) const { return !(*this == o); }

  private:
    Terms terms_;
};

}  // namespace alcove
