#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "alcove/rational.hpp"

namespace alcove {

/// Polynomial in the divisor class y and the quantum parameter q with
/// rational coefficients, stored sparsely by (y-power, q-power).
class Poly {
  public:
    using Key = std::pair<int, int>;  // (y power, q power)
    using Terms = std::map<Key, Rat>;

    Poly() = default;
    static Poly one() { return monomial(0, 0, 1); }
    static Poly monomial(int ypow, int qpow, const Rat& c) {
        Poly p;
        if (c != 0) p.terms_[{ypow, qpow}] = c;
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    Rat coefficient(int ypow, int qpow) const {
        auto it = terms_.find({ypow, qpow});
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add(int ypow, int qpow, const Rat& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(Key{ypow, qpow}, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    void add_scaled(const Poly& other, const Rat& scale, int y_shift = 0, int q_shift = 0) {
        if (scale == 0) return;
        for (const auto& [key, coeff] : other.terms_)
            add(key.first + y_shift, key.second + q_shift, scale * coeff);
    }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Renders like the tables: highest y-power first, e.g. "y1^5/2 - q".
    std::string pretty(const std::string& yname = "y1") const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            Rat c = it->second;
            const auto& [ypow, qpow] = it->first;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            first = false;
            Rat a = abs(c);
            bool unit = (a == 1) && (ypow > 0 || qpow > 0);
            if (!unit) os << rat_to_string(a);
            if (qpow > 0) {
                os << "q";
                if (qpow > 1) os << "^" << qpow;
            }
            if (ypow > 0) {
                os << yname;
                if (ypow > 1) os << "^" << ypow;
            }
        }
        return os.str();
    }

  private:
    Terms terms_;
};

}  // namespace alcove
