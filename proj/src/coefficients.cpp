#include "dubrovnik/coefficients.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace dubrovnik {

BigInt binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

LaurentPoly2 coeff_B(int m) {
    if (m == 0) return poly_monomial(1, 0, 0);
    const int n = std::abs(m);
    // (sign z)^(n-2i) with sign = -1 for negative m, so the parity of n fixes
    // the sign of every term.
    const int sign = (m < 0 && n % 2 != 0) ? -1 : 1;
    std::vector<Term> terms;
    for (int i = 0; i <= n / 2; ++i) {
        terms.push_back(Term{0, n - 2 * i, sign * binomial(n - i, i)});
    }
    return LaurentPoly2(std::move(terms));
}

LaurentPoly2 coeff_A(int m) {
    if (m == 0) return poly_zero();
    if (m == 1 || m == -1) return poly_monomial(1, 0, 0);
    return m > 0 ? coeff_B(m - 1) : coeff_B(m + 1);
}

LaurentPoly2 coeff_C(int m) {
    if (m == 0) return poly_zero();
    const int n = std::abs(m);
    const int dir = m > 0 ? 1 : -1;
    std::vector<Term> terms;
    for (int j = 1; j <= n; ++j) {
        const int sign = (dir < 0 && j % 2 != 0) ? -1 : 1;
        // a^(j-m) when m > 0, a^(n-j) when m < 0.
        const int a_exp = dir > 0 ? j - m : n - j;
        for (int i = 0; i <= (j - 1) / 2; ++i) {
            terms.push_back(Term{a_exp, j - 2 * i, sign * binomial(j - 1 - i, i)});
        }
    }
    return LaurentPoly2(std::move(terms));
}

CoeffTriple coeff_triple_recurrent(int m) {
    CoeffTriple prev{poly_zero(), poly_monomial(1, 0, 0), poly_zero()};
    if (m == 0) return prev;

    const int step = m > 0 ? 1 : -1;
    const LaurentPoly2 zs = poly_monomial(step, 0, 1);  // z or -z
    const LaurentPoly2 one = poly_monomial(1, 0, 0);
    CoeffTriple cur{one, zs, zs};

    for (int i = 2; i <= std::abs(m); ++i) {
        CoeffTriple next;
        next.A = zs * cur.A + prev.A;
        next.B = zs * cur.B + prev.B;
        if (step > 0) {
            next.C = poly_monomial(1, -1, 0) * cur.C + poly_monomial(1, 0, 1) * cur.B;
        } else {
            next.C = zs * cur.C + poly_monomial(-1, i - 1, 1) + prev.C;
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

LevelCoeffs level_coeffs(int n, int k, int b_prev) {
    if (n < 1) throw std::invalid_argument("level index must be at least 1");
    if (k < 0) throw std::invalid_argument("twist count must be nonnegative");
    const int eps = (n % 2 != 0) ? 1 : -1;
    const auto eps_pow = [eps](int e) { return (eps < 0 && e % 2 != 0) ? -1 : 1; };

    std::vector<Term> r_terms;
    for (int i = 0; i <= k / 2; ++i) {
        r_terms.push_back(Term{eps * b_prev, k - 2 * i, eps_pow(k) * binomial(k - i, i)});
    }

    std::vector<Term> p_terms;
    if (k >= 1) {
        for (int i = 0; i <= (k - 1) / 2; ++i) {
            p_terms.push_back(Term{0, k - 1 - 2 * i, eps_pow(k - 1) * binomial(k - 1 - i, i)});
        }
    }

    std::vector<Term> l_terms;
    for (int j = 1; j <= k; ++j) {
        for (int i = 0; i <= (j - 1) / 2; ++i) {
            l_terms.push_back(Term{eps * (j - k), j - 2 * i, -eps_pow(j) * binomial(j - 1 - i, i)});
        }
    }

    LevelCoeffs out;
    out.l = LaurentPoly2(std::move(l_terms));
    out.r = LaurentPoly2(std::move(r_terms));
    out.p = LaurentPoly2(std::move(p_terms));
    return out;
}

}  // namespace dubrovnik
