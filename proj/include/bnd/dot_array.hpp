#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bnd/zperm.hpp"

namespace bnd {

using Dot = std::pair<long long, long long>;

/*
 * A finite set of lattice points in NN^2 with pairwise distinct rows and
 * pairwise distinct columns, stored sorted by row.
 */
class DotArray {
  public:
    DotArray() = default;

    explicit DotArray(std::vector<Dot> dots) : dots_(std::move(dots)) {
        std::sort(dots_.begin(), dots_.end());
        for (std::size_t i = 0; i < dots_.size(); ++i) {
            if (dots_[i].first < 0 || dots_[i].second < 0)
                throw std::invalid_argument("dot array: coordinates must be nonnegative");
            if (i > 0 && dots_[i].first == dots_[i - 1].first)
                throw std::invalid_argument("dot array: two dots share a row");
        }
        std::vector<long long> cols;
        for (const Dot& d : dots_) cols.push_back(d.second);
        std::sort(cols.begin(), cols.end());
        if (std::adjacent_find(cols.begin(), cols.end()) != cols.end())
            throw std::invalid_argument("dot array: two dots share a column");
    }

    std::size_t size() const { return dots_.size(); }
    bool empty() const { return dots_.empty(); }
    const std::vector<Dot>& dots() const { return dots_; }  // sorted by row

    // #{(a',b') in Pi : a' >= a, b' >= b}; a = -1 or b = -1 clamp for free
    long long rank(long long a, long long b) const {
        long long c = 0;
        for (const Dot& d : dots_)
            if (d.first >= a && d.second >= b) ++c;
        return c;
    }

    std::vector<long long> rows() const {
        std::vector<long long> r;
        for (const Dot& d : dots_) r.push_back(d.first);
        return r;  // already sorted
    }

    std::vector<long long> cols() const {
        std::vector<long long> c;
        for (const Dot& d : dots_) c.push_back(d.second);
        std::sort(c.begin(), c.end());
        return c;
    }

    long long max_row() const { return require_nonempty(), dots_.back().first; }
    long long max_col() const { return require_nonempty(), cols().back(); }

    /*
     * {(a,b) : r(a-1,b) = r(a,b-1) = r(a,b) > r(a+1,b) = r(a,b+1)}.  The two
     * strict drops force a to be an occupied row and b an occupied column, so
     * only those candidates are scanned.
     */
    std::vector<Dot> essential_set() const {
        std::vector<Dot> out;
        for (long long a : rows()) {
            for (long long b : cols()) {
                long long r = rank(a, b);
                if (rank(a - 1, b) == r && rank(a, b - 1) == r && rank(a + 1, b) < r &&
                    rank(a, b + 1) < r)
                    out.emplace_back(a, b);
            }
        }
        return out;  // sorted because rows/cols are scanned in order
    }

    friend bool operator==(const DotArray& x, const DotArray& y) { return x.dots_ == y.dots_; }

  private:
    bool require_nonempty() const {
        if (dots_.empty()) throw std::invalid_argument("dot array: empty");
        return true;
    }

    std::vector<Dot> dots_;
};

/*
 *   rho = g - (r+1)(g-d+r) - sum(a_i - i) - sum(b_i - i) - #ascent pairs,
 *
 * with (a_i) and (b_i) the sorted row and column sequences and an ascent pair
 * being two dots that increase in both coordinates.  Empty Pi gives r = -1
 * and every correction term zero, so rho = g.
 */
inline long long rho(long long g, long long d, const DotArray& pi) {
    long long r = static_cast<long long>(pi.size()) - 1;
    long long total = g;
    if (r >= 0) total -= (r + 1) * (g - d + r);
    std::vector<long long> rs = pi.rows(), cs = pi.cols();
    for (std::size_t i = 0; i < rs.size(); ++i) total -= rs[i] - static_cast<long long>(i);
    for (std::size_t i = 0; i < cs.size(); ++i) total -= cs[i] - static_cast<long long>(i);
    const auto& dots = pi.dots();
    for (std::size_t i = 0; i < dots.size(); ++i)
        for (std::size_t j = i + 1; j < dots.size(); ++j)
            if (dots[j].second > dots[i].second) --total;  // rows already increase
    return total;
}

/*
 * The unique (d,g)-confined permutation whose nonnegative graph is Pi.  On
 * the occupied rows pi is the dot bijection; the remaining rows are matched
 * to the remaining values in decreasing order, agreeing with n |-> d-g-n
 * outside a finite window.  Exists iff |Pi| >= d+1-g.
 */
inline ZPerm to_confined(const DotArray& pi, long long d, long long g) {
    long long m = d - g;
    long long r = static_cast<long long>(pi.size()) - 1;
    if (r < m)  // |Pi| < d+1-g
        throw std::invalid_argument("dot array: no confined permutation exists (need |Pi| >= d+1-g)");

    long long wlo, whi;
    if (pi.empty()) {
        wlo = std::min(-1LL, m) - 1;
        whi = std::max(0LL, m) + 1;
    } else {
        wlo = std::min({-1LL, m - pi.max_col(), m}) - 1;
        whi = std::max({pi.max_row(), m, 0LL}) + 1;
    }

    std::vector<char> row_used(static_cast<std::size_t>(whi - wlo + 1), 0);
    std::vector<char> val_used(static_cast<std::size_t>(whi - wlo + 1), 0);
    std::vector<long long> table(static_cast<std::size_t>(whi - wlo + 1), 0);
    // values live in [m - whi, m - wlo]; index value v by v - (m - whi)
    for (const Dot& dot : pi.dots()) {
        table[static_cast<std::size_t>(dot.first - wlo)] = dot.second;
        row_used[static_cast<std::size_t>(dot.first - wlo)] = 1;
        val_used[static_cast<std::size_t>(dot.second - (m - whi))] = 1;
    }
    long long v = m - wlo;  // largest value, scanned downward
    for (long long n = wlo; n <= whi; ++n) {
        if (row_used[static_cast<std::size_t>(n - wlo)]) continue;
        while (val_used[static_cast<std::size_t>(v - (m - whi))]) --v;
        table[static_cast<std::size_t>(n - wlo)] = v--;
    }
    return ZPerm::from_table(TailKind::descending, m, wlo, std::move(table));
}

// the nonnegative graph {(a, pi(a)) : a >= 0, pi(a) >= 0}
inline DotArray from_confined(const ZPerm& pi) {
    if (pi.tail_kind() != TailKind::descending)
        throw std::invalid_argument("dot array: permutation is not confined for any (d,g)");
    std::vector<Dot> dots;
    for (long long a = 0; a <= std::max(pi.tail_shift(), pi.window_hi()); ++a) {
        long long v = pi.evaluate(a);
        if (v >= 0) dots.emplace_back(a, v);
    }
    return DotArray(std::move(dots));
}

/*
 * Essential set of a descending-tail permutation of ZZ:
 * {(a,b) : pi(a-1) < b <= pi(a), pi^{-1}(b-1) < a <= pi^{-1}(b)}.  The first
 * condition needs an ascent of pi at a and the second an ascent of pi^{-1}
 * at b; a descending tail confines both to the windows (plus one).
 */
inline std::vector<Dot> essential_set(const ZPerm& pi) {
    if (pi.tail_kind() != TailKind::descending)
        throw std::invalid_argument("essential set: identity-tail permutations are not supported");
    ZPerm inv = pi.inverse();
    std::vector<Dot> out;
    for (long long a = pi.window_lo(); a <= pi.window_hi() + 1; ++a) {
        if (pi.evaluate(a - 1) >= pi.evaluate(a)) continue;
        for (long long b = inv.window_lo(); b <= inv.window_hi() + 1; ++b) {
            if (pi.evaluate(a - 1) < b && b <= pi.evaluate(a) && inv.evaluate(b - 1) < a &&
                a <= inv.evaluate(b))
                out.emplace_back(a, b);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// window version, interior positions only: 1 <= a, b <= n-1
inline std::vector<Dot> essential_set_perm(const WindowPerm& sigma) {
    WindowPerm inv = sigma.inverse();
    std::vector<Dot> out;
    for (int a = 1; a < sigma.size(); ++a) {
        if (sigma(a - 1) >= sigma(a)) continue;
        for (int b = 1; b < sigma.size(); ++b) {
            if (sigma(a - 1) < b && b <= sigma(a) && inv(b - 1) < a && a <= inv(b))
                out.emplace_back(a, b);
        }
    }
    return out;  // scanned in sorted order
}

enum class EssVersions { equal, corner_case };

/*
 * The dot-array essential set and the confined-permutation essential set
 * agree, except that (0,0) joins the former exactly when g-d+r = 0 and the
 * minimum row and column are both 0.  Both sets are computed and the claimed
 * relation is checked, not assumed.
 */
inline EssVersions ess_versions_check(const DotArray& pi_dots, long long d, long long g) {
    ZPerm pi = to_confined(pi_dots, d, g);
    std::vector<Dot> ess_pi = essential_set(pi);
    std::vector<Dot> ess_dots = pi_dots.essential_set();
    long long r = static_cast<long long>(pi_dots.size()) - 1;
    bool corner = !pi_dots.empty() && g - d + r == 0 && pi_dots.dots().front().first == 0 &&
                  pi_dots.cols().front() == 0;
    if (corner) {
        std::vector<Dot> expected = ess_pi;
        if (std::find(expected.begin(), expected.end(), Dot{0, 0}) != expected.end())
            throw std::logic_error("essential sets: (0,0) unexpectedly present in the permutation version");
        expected.insert(expected.begin(), {0, 0});
        std::sort(expected.begin(), expected.end());
        if (expected != ess_dots)
            throw std::logic_error("essential sets: corner-case relation violated");
        return EssVersions::corner_case;
    }
    if (ess_pi != ess_dots) throw std::logic_error("essential sets: versions disagree");
    return EssVersions::equal;
}

struct IntervalPair {
    long long row_lo, row_hi;
    long long col_lo, col_hi;
    friend bool operator==(const IntervalPair&, const IntervalPair&) = default;
};

/*
 * The square [d-g-b_r, a_r] x [d-g-a_r, b_r] that the confined permutation
 * maps bijectively, being decreasing beyond it in both directions.
 */
inline IntervalPair bijective_square(const ZPerm& pi, long long d, long long g) {
    if (!is_dg_confined(pi, d, g))
        throw std::invalid_argument("bijective square: permutation is not (d,g)-confined");
    DotArray dots = from_confined(pi);
    if (dots.empty()) throw std::invalid_argument("bijective square: empty dot array");
    long long m = d - g, ar = dots.max_row(), br = dots.max_col();
    IntervalPair sq{m - br, ar, m - ar, br};

    for (long long n = sq.row_lo; n <= sq.row_hi; ++n) {
        long long v = pi.evaluate(n);
        if (v < sq.col_lo || v > sq.col_hi)
            throw std::logic_error("bijective square: image escapes the claimed interval");
    }
    ZPerm inv = pi.inverse();
    for (long long n = ar; n <= std::max(ar, pi.window_hi()) + 1; ++n)
        if (pi.evaluate(n) <= pi.evaluate(n + 1))
            throw std::logic_error("bijective square: not decreasing past the last row");
    for (long long b = br; b <= std::max(br, inv.window_hi()) + 1; ++b)
        if (inv.evaluate(b) <= inv.evaluate(b + 1))
            throw std::logic_error("bijective square: inverse not decreasing past the last column");
    return sq;
}

}  // namespace bnd
