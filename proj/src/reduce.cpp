#include "dubrovnik/reduce.hpp"

#include "dubrovnik/coefficients.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace dubrovnik {

namespace {

class Reducer {
  public:
    explicit Reducer(const BraidTuple& tuple) : b_(tuple) {}

    LaurentPoly2 run() {
        const int n = static_cast<int>(b_.size());
        return X(n, entry(n));
    }

  private:
    // b_j with the convention b_0 = b_{-1} = 0.
    int entry(int j) const {
        return (j >= 1 && j <= static_cast<int>(b_.size())) ? b_[j - 1] : 0;
    }

    LaurentPoly2 X(int m, int k) {
        // Bottom closure values: the 0-tangle numerator closure is a
        // two-component unlink, the 1-tangle closure an unknot, and the
        // decremented variant an unknot with one curl.
        if (m == -1) return unlink_value();
        if (m == 0) {
            if (k == 0) return poly_monomial(1, 0, 0);
            if (k == -1) return poly_monomial(1, -1, 0);
            throw std::logic_error("unexpected twist index at the bottom level");
        }
        const auto key = std::make_pair(m, k);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        const LevelCoeffs c = level_coeffs(m, k, entry(m - 1));
        LaurentPoly2 value = c.l * X(m - 1, entry(m - 1)) +
                             c.r * X(m - 2, entry(m - 2)) +
                             c.p * X(m - 1, entry(m - 1) - 1);
        memo_.emplace(key, std::move(value));
        return memo_.at(key);
    }

    const BraidTuple& b_;
    std::map<std::pair<int, int>, LaurentPoly2> memo_;
};

}  // namespace

LaurentPoly2 dubrovnik_reduce(const BraidTuple& tuple) {
    require_engine_tuple(tuple);
    BraidTuple t = tuple_normalize_odd(tuple);
    const bool mirrored = t[0] < 0;
    if (mirrored) t = tuple_mirror(t);
    LaurentPoly2 value = Reducer(t).run();
    return mirrored ? poly_mirror_substitute(value) : value;
}

}  // namespace dubrovnik
