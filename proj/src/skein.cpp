#include "dubrovnik/skein.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <utility>

namespace dubrovnik {

namespace {

// a^e as a polynomial.
LaurentPoly2 mono(int e) { return poly_monomial(1, e, 0); }

const LaurentPoly2& z_poly() {
    static const LaurentPoly2 z = poly_monomial(1, 0, 1);
    return z;
}

// Value of a single positive curl; the closure of one crossing is an unknot.
const LaurentPoly2& c_poly() {
    static const LaurentPoly2 c = mono(1);
    return c;
}

const LaurentPoly2& e_poly() {
    static const LaurentPoly2 e = mono(-1);
    return e;
}

// Value of the two-crossing clasp closure (a two-component unlink diagram):
// z^-1 a - z^-1 a^-1 + 1 - z a^-1 + z a.
const LaurentPoly2& d_poly() {
    static const LaurentPoly2 d = LaurentPoly2({Term{1, -1, 1},
                                                Term{-1, -1, -1},
                                                Term{0, 0, 1},
                                                Term{-1, 1, -1},
                                                Term{1, 1, 1}});
    return d;
}

// {head..., b[from], b[from+1], ...}
template <typename... Head>
BraidTuple mk(const BraidTuple& b, size_t from, Head... head) {
    BraidTuple out{head...};
    out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(from), b.end());
    return out;
}

class Evaluator {
  public:
    explicit Evaluator(bool memoize) : memoize_(memoize) {}

    LaurentPoly2 eval(const BraidTuple& b) {
        if (memoize_) {
            auto it = memo_.find(b);
            if (it != memo_.end()) return it->second;
        }
        LaurentPoly2 value = b[0] > 0 ? positive(b) : negative(b);
        if (memoize_) memo_.emplace(b, value);
        return value;
    }

  private:
    LaurentPoly2 positive(const BraidTuple& b);
    LaurentPoly2 negative(const BraidTuple& b);

    bool memoize_;
    std::map<BraidTuple, LaurentPoly2> memo_;
};

// One rewriting step on a tuple of positive entries.  Cases are ordered most
// specific first; every tuple of positive entries matches exactly one.
LaurentPoly2 Evaluator::positive(const BraidTuple& b) {
    const LaurentPoly2& z = z_poly();
    const size_t n = b.size();

    if (n == 1) {
        if (b[0] == 1) return c_poly();
        if (b[0] == 2) return d_poly();
        return eval({b[0] - 2}) - z * (mono(1 - b[0]) - eval({b[0] - 1}));
    }

    if (n == 2) {
        if (b[0] == 1 && b[1] == 1) return d_poly();
        if (b[0] == 1 && b[1] == 2) return e_poly() - z * (d_poly() - mono(2));
        if (b[0] == 2 && b[1] == 1) return mono(1) - z * mono(-2) + z * eval({1, 1});
        if (b[0] == 1) {
            return eval({1, b[1] - 2}) - z * (eval({1, b[1] - 1}) - mono(b[1]));
        }
        if (b[0] == 2) {
            return mono(b[1]) - z * (e_poly() * eval({1, b[1] - 1}) - eval({1, b[1]}));
        }
        if (b[1] == 1) return eval({b[0] + 1});
        return eval({b[0] - 2, b[1]}) -
               z * (mono(1 - b[0]) * eval({1, b[1] - 1}) - eval({b[0] - 1, b[1]}));
    }

    if (n == 3) {
        if (b[0] == 1 && b[1] == 1) {
            return mono(-b[2]) - z * (eval({b[2] + 1}) - mono(1) * eval({b[2]}));
        }
        if (b[0] == 1 && b[1] == 2) {
            return eval({b[2] + 1}) - z * (eval({1, 1, b[2]}) - mono(2) * eval({b[2]}));
        }
        if (b[0] == 2 && b[1] == 1) {
            return mono(1) * eval({b[2]}) -
                   z * (mono(-1) * eval({b[2] + 1}) - eval({1, 1, b[2]}));
        }
        if (b[0] == 1) {
            return eval({1, b[1] - 2, b[2]}) -
                   z * (eval({1, b[1] - 1, b[2]}) - mono(b[1]) * eval({b[2]}));
        }
        if (b[0] == 2) {
            return mono(b[1]) * eval({b[2]}) -
                   z * (mono(-1) * eval({1, b[1] - 1, b[2]}) - eval({1, b[1], b[2]}));
        }
        if (b[1] == 1) {
            return eval({b[0] - 2, 1, b[2]}) -
                   z * (mono(1 - b[0]) * eval({b[2] + 1}) - eval({b[0] - 1, 1, b[2]}));
        }
        return eval({b[0] - 2, b[1], b[2]}) -
               z * (mono(1 - b[0]) * eval({1, b[1] - 1, b[2]}) -
                    eval({b[0] - 1, b[1], b[2]}));
    }

    if (n == 4) {
        if (b[0] == 1 && b[1] == 1 && b[3] == 1) {
            return mono(-1 - b[2]) -
                   z * (eval({b[2] + 1, 1}) - mono(1) * eval({b[2], 1}));
        }
        if (b[0] == 1 && b[1] == 1) {
            return mono(-b[2]) * eval({1, b[3] - 1}) -
                   z * (eval({b[2] + 1, b[3]}) - mono(1) * eval({b[2], b[3]}));
        }
        if (b[0] == 2 && b[1] == 1) {
            return mono(1) * eval({b[2], b[3]}) -
                   z * (mono(-1) * eval({b[2] + 1, b[3]}) - eval({1, 1, b[2], b[3]}));
        }
        if (b[0] == 1 && b[1] == 2) {
            return eval({b[2] + 1, b[3]}) -
                   z * (eval({1, 1, b[2], b[3]}) - mono(2) * eval({b[2], b[3]}));
        }
        if (b[0] == 1) {
            return eval({1, b[1] - 2, b[2], b[3]}) -
                   z * (eval({1, b[1] - 1, b[2], b[3]}) - mono(b[1]) * eval({b[2], b[3]}));
        }
        if (b[0] == 2) {
            return mono(b[1]) * eval({b[2], b[3]}) -
                   z * (mono(-1) * eval({1, b[1] - 1, b[2], b[3]}) -
                        eval({1, b[1], b[2], b[3]}));
        }
        if (b[1] == 1) {
            return eval({b[0] - 2, 1, b[2], b[3]}) -
                   z * (mono(1 - b[0]) * eval({b[2] + 1, b[3]}) -
                        eval({b[0] - 1, 1, b[2], b[3]}));
        }
        return eval({b[0] - 2, b[1], b[2], b[3]}) -
               z * (mono(1 - b[0]) * eval({1, b[1] - 1, b[2], b[3]}) -
                    eval({b[0] - 1, b[1], b[2], b[3]}));
    }

    if (n == 5) {
        if (b[0] == 1 && b[1] == 1 && b[3] == 1) {
            return mono(-b[2]) * eval({1 + b[4]}) -
                   z * (eval({b[2] + 1, 1, b[4]}) - mono(1) * eval({b[2], 1, b[4]}));
        }
        if (b[0] == 1 && b[1] == 1) {
            return mono(-b[2]) * eval({1, b[3] - 1, b[4]}) -
                   z * (eval({b[2] + 1, b[3], b[4]}) - mono(1) * eval({b[2], b[3], b[4]}));
        }
        if (b[0] == 2 && b[1] == 1) {
            return mono(1) * eval({b[2], b[3], b[4]}) -
                   z * (mono(-1) * eval({b[2] + 1, b[3], b[4]}) -
                        eval({1, 1, b[2], b[3], b[4]}));
        }
        if (b[0] == 1 && b[1] == 2) {
            return eval({b[2] + 1, b[3], b[4]}) -
                   z * (eval({1, 1, b[2], b[3], b[4]}) -
                        mono(2) * eval({b[2], b[3], b[4]}));
        }
        if (b[0] == 1) {
            return eval({1, b[1] - 2, b[2], b[3], b[4]}) -
                   z * (eval({1, b[1] - 1, b[2], b[3], b[4]}) -
                        mono(b[1]) * eval({b[2], b[3], b[4]}));
        }
        if (b[0] == 2) {
            return mono(b[1]) * eval({b[2], b[3], b[4]}) -
                   z * (mono(-1) * eval({1, b[1] - 1, b[2], b[3], b[4]}) -
                        eval({1, b[1], b[2], b[3], b[4]}));
        }
        if (b[1] == 1) {
            return eval({b[0] - 2, 1, b[2], b[3], b[4]}) -
                   z * (mono(1 - b[0]) * eval({b[2] + 1, b[3], b[4]}) -
                        eval({b[0] - 1, 1, b[2], b[3], b[4]}));
        }
        return eval({b[0] - 2, b[1], b[2], b[3], b[4]}) -
               z * (mono(1 - b[0]) * eval({1, b[1] - 1, b[2], b[3], b[4]}) -
                    eval({b[0] - 1, b[1], b[2], b[3], b[4]}));
    }

    // n >= 6
    if (b[0] == 1 && b[1] == 1 && b[3] == 1) {
        return mono(-b[2]) * eval(mk(b, 5, 1 + b[4])) -
               z * (eval(mk(b, 4, b[2] + 1, 1)) - mono(1) * eval(mk(b, 4, b[2], 1)));
    }
    if (b[0] == 1 && b[1] == 1) {
        return mono(-b[2]) * eval(mk(b, 4, 1, b[3] - 1)) -
               z * (eval(mk(b, 3, b[2] + 1)) - mono(1) * eval(mk(b, 2)));
    }
    if (b[0] == 2 && b[1] == 1) {
        return mono(1) * eval(mk(b, 2)) -
               z * (mono(-1) * eval(mk(b, 3, b[2] + 1)) - eval(mk(b, 2, 1, 1)));
    }
    if (b[0] == 1 && b[1] == 2) {
        return eval(mk(b, 3, b[2] + 1)) -
               z * (eval(mk(b, 2, 1, 1)) - mono(2) * eval(mk(b, 2)));
    }
    if (b[0] == 1) {
        return eval(mk(b, 2, 1, b[1] - 2)) -
               z * (eval(mk(b, 2, 1, b[1] - 1)) - mono(b[1]) * eval(mk(b, 2)));
    }
    if (b[0] == 2) {
        return mono(b[1]) * eval(mk(b, 2)) -
               z * (mono(-1) * eval(mk(b, 2, 1, b[1] - 1)) - eval(mk(b, 2, 1, b[1])));
    }
    if (b[1] == 1) {
        return eval(mk(b, 2, b[0] - 2, 1)) -
               z * (mono(1 - b[0]) * eval(mk(b, 3, b[2] + 1)) -
                    eval(mk(b, 2, b[0] - 1, 1)));
    }
    if (b[0] >= 3 && b[1] >= 2) {
        return eval(mk(b, 1, b[0] - 2)) -
               z * (mono(1 - b[0]) * eval(mk(b, 2, 1, b[1] - 1)) -
                    eval(mk(b, 1, b[0] - 1)));
    }
    throw std::logic_error("no rewriting case matched a positive tuple");
}

// Mirror image of the positive rewriting step, for tuples of negative entries.
LaurentPoly2 Evaluator::negative(const BraidTuple& b) {
    const LaurentPoly2& z = z_poly();
    const size_t n = b.size();

    if (n == 1) {
        if (b[0] == -1) return e_poly();
        if (b[0] == -2) return d_poly();
        return eval({b[0] + 2}) + z * (mono(-1 - b[0]) - eval({b[0] + 1}));
    }

    if (n == 2) {
        if (b[0] == -1 && b[1] == -1) return d_poly();
        if (b[0] == -1 && b[1] == -2) return mono(1) + z * (d_poly() - mono(-2));
        if (b[0] == -2 && b[1] == -1) return mono(-1) + z * (mono(2) - eval({-1, -1}));
        if (b[0] == -1) {
            return eval({-1, b[1] + 2}) + z * (eval({-1, b[1] + 1}) - mono(b[1]));
        }
        if (b[0] == -2) {
            return mono(b[1]) + z * (mono(1) * eval({-1, b[1] + 1}) - eval({-1, b[1]}));
        }
        if (b[1] == -1) return eval({b[0] - 1});
        return eval({b[0] + 2, b[1]}) +
               z * (mono(-1 - b[0]) * eval({-1, b[1] + 1}) - eval({b[0] + 1, b[1]}));
    }

    if (n == 3) {
        if (b[0] == -1 && b[1] == -1) {
            return mono(-b[2]) + z * (eval({b[2] - 1}) - mono(-1) * eval({b[2]}));
        }
        if (b[0] == -1 && b[1] == -2) {
            return eval({b[2] - 1}) + z * (eval({-1, -1, b[2]}) - mono(-2) * eval({b[2]}));
        }
        if (b[0] == -2 && b[1] == -1) {
            return mono(-1) * eval({b[2]}) +
                   z * (mono(1) * eval({b[2] - 1}) - eval({-1, -1, b[2]}));
        }
        if (b[0] == -1) {
            return eval({-1, b[1] + 2, b[2]}) +
                   z * (eval({-1, b[1] + 1, b[2]}) - mono(b[1]) * eval({b[2]}));
        }
        if (b[0] == -2) {
            return mono(b[1]) * eval({b[2]}) +
                   z * (mono(1) * eval({-1, b[1] + 1, b[2]}) - eval({-1, b[1], b[2]}));
        }
        if (b[1] == -1) {
            return eval({b[0] + 2, -1, b[2]}) +
                   z * (mono(-1 - b[0]) * eval({b[2] - 1}) - eval({b[0] + 1, -1, b[2]}));
        }
        return eval({b[0] + 2, b[1], b[2]}) +
               z * (mono(-b[0] - 1) * eval({-1, b[1] + 1, b[2]}) -
                    eval({b[0] + 1, b[1], b[2]}));
    }

    if (n == 4) {
        if (b[0] == -1 && b[1] == -1 && b[3] == -1) {
            return mono(1 - b[2]) +
                   z * (eval({b[2] - 1, -1}) - mono(-1) * eval({b[2], -1}));
        }
        if (b[0] == -1 && b[1] == -1) {
            return mono(-b[2]) * eval({-1, b[3] + 1}) +
                   z * (eval({b[2] - 1, b[3]}) - mono(-1) * eval({b[2], b[3]}));
        }
        if (b[0] == -2 && b[1] == -1) {
            return mono(-1) * eval({b[2], b[3]}) +
                   z * (mono(1) * eval({b[2] - 1, b[3]}) - eval({-1, -1, b[2], b[3]}));
        }
        if (b[0] == -1 && b[1] == -2) {
            return eval({b[2] - 1, b[3]}) +
                   z * (eval({-1, -1, b[2], b[3]}) - mono(-2) * eval({b[2], b[3]}));
        }
        if (b[0] == -1) {
            return eval({-1, b[1] + 2, b[2], b[3]}) +
                   z * (eval({-1, b[1] + 1, b[2], b[3]}) - mono(b[1]) * eval({b[2], b[3]}));
        }
        if (b[0] == -2) {
            return mono(b[1]) * eval({b[2], b[3]}) +
                   z * (mono(1) * eval({-1, b[1] + 1, b[2], b[3]}) -
                        eval({-1, b[1], b[2], b[3]}));
        }
        if (b[1] == -1) {
            return eval({b[0] + 2, -1, b[2], b[3]}) +
                   z * (mono(-1 - b[0]) * eval({b[2] - 1, b[3]}) -
                        eval({b[0] + 1, -1, b[2], b[3]}));
        }
        return eval({b[0] + 2, b[1], b[2], b[3]}) +
               z * (mono(-b[0] - 1) * eval({-1, b[1] + 1, b[2], b[3]}) -
                    eval({b[0] + 1, b[1], b[2], b[3]}));
    }

    if (n == 5) {
        if (b[0] == -1 && b[1] == -1 && b[3] == -1) {
            return mono(-b[2]) * eval({b[4] - 1}) +
                   z * (eval({b[2] - 1, -1, b[4]}) - mono(-1) * eval({b[2], -1, b[4]}));
        }
        if (b[0] == -1 && b[1] == -1) {
            return mono(-b[2]) * eval({-1, b[3] + 1, b[4]}) +
                   z * (eval({b[2] - 1, b[3], b[4]}) - mono(-1) * eval({b[2], b[3], b[4]}));
        }
        if (b[0] == -2 && b[1] == -1) {
            return mono(-1) * eval({b[2], b[3], b[4]}) +
                   z * (mono(1) * eval({b[2] - 1, b[3], b[4]}) -
                        eval({-1, -1, b[2], b[3], b[4]}));
        }
        if (b[0] == -1 && b[1] == -2) {
            return eval({b[2] - 1, b[3], b[4]}) +
                   z * (eval({-1, -1, b[2], b[3], b[4]}) -
                        mono(-2) * eval({b[2], b[3], b[4]}));
        }
        if (b[0] == -1) {
            return eval({-1, b[1] + 2, b[2], b[3], b[4]}) +
                   z * (eval({-1, b[1] + 1, b[2], b[3], b[4]}) -
                        mono(b[1]) * eval({b[2], b[3], b[4]}));
        }
        if (b[0] == -2) {
            return mono(b[1]) * eval({b[2], b[3], b[4]}) +
                   z * (mono(1) * eval({-1, b[1] + 1, b[2], b[3], b[4]}) -
                        eval({-1, b[1], b[2], b[3], b[4]}));
        }
        if (b[1] == -1) {
            return eval({b[0] + 2, -1, b[2], b[3], b[4]}) +
                   z * (mono(-1 - b[0]) * eval({b[2] - 1, b[3], b[4]}) -
                        eval({b[0] + 1, -1, b[2], b[3], b[4]}));
        }
        return eval({b[0] + 2, b[1], b[2], b[3], b[4]}) +
               z * (mono(-b[0] - 1) * eval({-1, b[1] + 1, b[2], b[3], b[4]}) -
                    eval({b[0] + 1, b[1], b[2], b[3], b[4]}));
    }

    // n >= 6
    if (b[0] == -1 && b[1] == -1 && b[3] == -1) {
        return mono(-b[2]) * eval(mk(b, 5, b[4] - 1)) +
               z * (eval(mk(b, 4, b[2] - 1, -1)) - mono(-1) * eval(mk(b, 4, b[2], -1)));
    }
    if (b[0] == -1 && b[1] == -1) {
        return mono(-b[2]) * eval(mk(b, 4, -1, b[3] + 1)) +
               z * (eval(mk(b, 3, b[2] - 1)) - mono(-1) * eval(mk(b, 2)));
    }
    if (b[0] == -2 && b[1] == -1) {
        return mono(-1) * eval(mk(b, 2)) +
               z * (mono(1) * eval(mk(b, 3, b[2] - 1)) - eval(mk(b, 2, -1, -1)));
    }
    if (b[0] == -1 && b[1] == -2) {
        return eval(mk(b, 3, b[2] - 1)) +
               z * (eval(mk(b, 2, -1, -1)) - mono(-2) * eval(mk(b, 2)));
    }
    if (b[0] == -1) {
        return eval(mk(b, 2, -1, b[1] + 2)) +
               z * (eval(mk(b, 2, -1, b[1] + 1)) - mono(b[1]) * eval(mk(b, 2)));
    }
    if (b[0] == -2) {
        return mono(b[1]) * eval(mk(b, 2)) +
               z * (mono(1) * eval(mk(b, 2, -1, b[1] + 1)) - eval(mk(b, 2, -1, b[1])));
    }
    if (b[1] == -1) {
        return eval(mk(b, 2, b[0] + 2, -1)) +
               z * (mono(-1 - b[0]) * eval(mk(b, 3, b[2] - 1)) -
                    eval(mk(b, 2, b[0] + 1, -1)));
    }
    if (b[0] <= -3 && b[1] <= -2) {
        return eval(mk(b, 1, b[0] + 2)) +
               z * (mono(-b[0] - 1) * eval(mk(b, 2, -1, b[1] + 1)) -
                    eval(mk(b, 1, b[0] + 1)));
    }
    throw std::logic_error("no rewriting case matched a negative tuple");
}

}  // namespace

LaurentPoly2 dubrovnik_skein_direct(const BraidTuple& tuple, bool memoize) {
    require_engine_tuple(tuple);
    Evaluator ev(memoize);
    return ev.eval(tuple);
}

LaurentPoly2 dubrovnik_skein(const BraidTuple& tuple) {
    require_engine_tuple(tuple);
    Evaluator ev(true);
    return ev.eval(tuple_normalize_odd(tuple));
}

}  // namespace dubrovnik
