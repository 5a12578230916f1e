#include "dubrovnik/closedform.hpp"

#include "dubrovnik/coefficients.hpp"

#include <stdexcept>
#include <utility>

namespace dubrovnik {

namespace {

const LaurentPoly2& a_inverse() {
    static const LaurentPoly2 v = poly_monomial(1, -1, 0);
    return v;
}

void walk(int f, bool dec, std::vector<PathStep>& steps, std::vector<TreePath>& out) {
    if (f <= 0) {
        out.push_back(TreePath{steps, f, dec});
        return;
    }
    for (PathStep::Branch branch :
         {PathStep::Branch::l, PathStep::Branch::r, PathStep::Branch::p}) {
        steps.push_back(PathStep{branch, f, dec});
        const int child = branch == PathStep::Branch::r ? f - 2 : f - 1;
        walk(child, branch == PathStep::Branch::p, steps, out);
        steps.pop_back();
    }
}

void stream(const BraidTuple& b, int f, bool dec, const LaurentPoly2& acc,
            LaurentPoly2& total) {
    if (f == -1) {
        total = total + acc * unlink_value();
        return;
    }
    if (f == 0) {
        total = total + (dec ? acc * a_inverse() : acc);
        return;
    }
    const int k = b[f - 1] - (dec ? 1 : 0);
    const LevelCoeffs c = level_coeffs(f, k, f >= 2 ? b[f - 2] : 0);
    if (!c.l.is_zero()) stream(b, f - 1, false, acc * c.l, total);
    stream(b, f - 2, false, acc * c.r, total);
    if (!c.p.is_zero()) stream(b, f - 1, true, acc * c.p, total);
}

void require_positive_odd(const BraidTuple& tuple) {
    require_engine_tuple(tuple);
    if (tuple[0] < 0) {
        throw std::invalid_argument("path products are defined for positive entries");
    }
    if (tuple.size() % 2 == 0) {
        throw std::invalid_argument("path products are defined for odd-length tuples");
    }
}

}  // namespace

bool operator==(const PathStep& lhs, const PathStep& rhs) {
    return lhs.branch == rhs.branch && lhs.level == rhs.level &&
           lhs.decremented == rhs.decremented;
}

std::vector<TreePath> enumerate_paths(int n) {
    if (n < 0) throw std::invalid_argument("tree depth must be nonnegative");
    if (n > 14) throw std::invalid_argument("tree depth limited to 14 levels");
    std::vector<TreePath> out;
    std::vector<PathStep> steps;
    walk(n, false, steps, out);
    return out;
}

LaurentPoly2 path_term(const TreePath& path, const BraidTuple& tuple) {
    LaurentPoly2 acc = poly_monomial(1, 0, 0);
    for (const PathStep& s : path.steps) {
        const int k = tuple.at(static_cast<size_t>(s.level) - 1) - (s.decremented ? 1 : 0);
        const int b_prev = s.level >= 2 ? tuple.at(static_cast<size_t>(s.level) - 2) : 0;
        const LevelCoeffs c = level_coeffs(s.level, k, b_prev);
        switch (s.branch) {
            case PathStep::Branch::l: acc = acc * c.l; break;
            case PathStep::Branch::r: acc = acc * c.r; break;
            case PathStep::Branch::p: acc = acc * c.p; break;
        }
    }
    if (path.leaf_level == -1) return acc * unlink_value();
    return path.leaf_decremented ? acc * a_inverse() : acc;
}

LaurentPoly2 dubrovnik_closed(const BraidTuple& tuple) {
    require_engine_tuple(tuple);
    BraidTuple t = tuple_normalize_odd(tuple);
    const bool mirrored = t[0] < 0;
    if (mirrored) t = tuple_mirror(t);
    LaurentPoly2 total = poly_zero();
    stream(t, static_cast<int>(t.size()), false, poly_monomial(1, 0, 0), total);
    return mirrored ? poly_mirror_substitute(total) : total;
}

std::vector<LaurentPoly2> dubrovnik_closed_terms(const BraidTuple& tuple) {
    require_positive_odd(tuple);
    std::vector<LaurentPoly2> out;
    for (const TreePath& path : enumerate_paths(static_cast<int>(tuple.size()))) {
        out.push_back(path_term(path, tuple));
    }
    return out;
}

}  // namespace dubrovnik
