#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bnd/window_perm.hpp"

namespace bnd {

enum class TailKind { descending, identity };

/*
 * A bijection ZZ -> ZZ that agrees with a fixed "tail" map outside a finite
 * window [lo, hi]:
 *
 *   descending(m):  n |-> m - n      (the order-reversing involution)
 *   identity:       n |-> n
 *
 * The stored window is minimal: entries equal to the tail value are trimmed
 * from both ends, so structural equality of the normal form is semantic
 * equality.  For a descending(m) tail the window table must be a bijection
 * [lo, hi] -> [m - hi, m - lo]; for an identity tail, [lo, hi] -> [lo, hi].
 * Both facts are forced by bijectivity on all of ZZ set-theoretically, so
 * they are *checked* rather than assumed.
 */
class ZPerm {
  public:
    ZPerm() : tail_(TailKind::identity), shift_(0), lo_(0), hi_(-1) {}

    static ZPerm identity() { return ZPerm(); }

    // omega_m: n |-> m - n everywhere
    static ZPerm descending(long long m) {
        ZPerm p;
        p.tail_ = TailKind::descending;
        p.shift_ = m;
        return p;
    }

    // table[i] = pi(lo + i); tail controls everything outside the window
    static ZPerm from_table(TailKind tail, long long shift, long long lo,
                            std::vector<long long> table) {
        ZPerm p;
        p.tail_ = tail;
        p.shift_ = tail == TailKind::descending ? shift : 0;
        p.lo_ = lo;
        p.hi_ = lo + static_cast<long long>(table.size()) - 1;
        p.table_ = std::move(table);
        p.validate();
        p.normalize();
        return p;
    }

    TailKind tail_kind() const { return tail_; }
    long long tail_shift() const { return shift_; }
    long long window_lo() const { return lo_; }
    long long window_hi() const { return hi_; }
    bool window_empty() const { return lo_ > hi_; }
    const std::vector<long long>& window_table() const { return table_; }

    long long evaluate(long long n) const {
        if (n >= lo_ && n <= hi_) return table_[static_cast<std::size_t>(n - lo_)];
        return tail_value(n);
    }

    ZPerm inverse() const {
        if (window_empty()) return *this;  // both tails are involutions or identity
        long long vlo, vhi;
        value_range(vlo, vhi);
        std::vector<long long> inv(static_cast<std::size_t>(vhi - vlo + 1));
        for (long long n = lo_; n <= hi_; ++n)
            inv[static_cast<std::size_t>(evaluate(n) - vlo)] = n;
        return from_table(tail_, shift_, vlo, std::move(inv));
    }

    std::vector<std::pair<long long, long long>> window_entries() const {
        std::vector<std::pair<long long, long long>> e;
        for (long long n = lo_; n <= hi_; ++n) e.emplace_back(n, evaluate(n));
        return e;
    }

    friend bool operator==(const ZPerm& a, const ZPerm& b) {
        if (a.tail_ != b.tail_) return false;
        if (a.tail_ == TailKind::descending && a.shift_ != b.shift_) return false;
        return a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.table_ == b.table_;
    }

  private:
    long long tail_value(long long n) const {
        return tail_ == TailKind::descending ? shift_ - n : n;
    }

    // image of the window under the tail-forced bijectivity constraint
    void value_range(long long& vlo, long long& vhi) const {
        if (tail_ == TailKind::descending) {
            vlo = shift_ - hi_;
            vhi = shift_ - lo_;
        } else {
            vlo = lo_;
            vhi = hi_;
        }
    }

    void validate() const {
        if (window_empty()) return;
        long long vlo, vhi;
        value_range(vlo, vhi);
        std::vector<char> seen(table_.size(), 0);
        for (long long v : table_) {
            if (v < vlo || v > vhi)
                throw std::invalid_argument("zperm: window table does not respect the tail (not a bijection of ZZ)");
            if (seen[static_cast<std::size_t>(v - vlo)])
                throw std::invalid_argument("zperm: duplicate value in window table");
            seen[static_cast<std::size_t>(v - vlo)] = 1;
        }
    }

    void normalize() {
        while (lo_ <= hi_ && table_.front() == tail_value(lo_)) {
            table_.erase(table_.begin());
            ++lo_;
        }
        while (lo_ <= hi_ && table_.back() == tail_value(hi_)) {
            table_.pop_back();
            --hi_;
        }
        if (window_empty()) {
            lo_ = 0;
            hi_ = -1;
            table_.clear();
        }
    }

    TailKind tail_;
    long long shift_;
    long long lo_, hi_;
    std::vector<long long> table_;
};

// pi1 o pi2. Two descending tails compose to a pure shift, which this type
// can represent only when the shifts agree (shift zero = identity); unequal
// shifts are rejected.
inline ZPerm compose(const ZPerm& a, const ZPerm& b) {
    TailKind tail;
    long long shift = 0;
    if (a.tail_kind() == TailKind::descending && b.tail_kind() == TailKind::descending) {
        if (a.tail_shift() != b.tail_shift())
            throw std::invalid_argument("zperm: descending tails with unequal shifts compose to a shift map, not representable");
        tail = TailKind::identity;
    } else if (a.tail_kind() == TailKind::descending) {
        tail = TailKind::descending;
        shift = a.tail_shift();
    } else if (b.tail_kind() == TailKind::descending) {
        tail = TailKind::descending;
        shift = b.tail_shift();
    } else {
        tail = TailKind::identity;
    }

    long long lo = 0, hi = -1;
    auto widen = [&](long long x, long long y) {
        if (x > y) return;
        if (lo > hi) {
            lo = x;
            hi = y;
        } else {
            lo = std::min(lo, x);
            hi = std::max(hi, y);
        }
    };
    widen(b.window_lo(), b.window_hi());
    if (!a.window_empty()) {
        // n outside b's window with b(n) = tail_b(n) inside a's window
        if (b.tail_kind() == TailKind::descending)
            widen(b.tail_shift() - a.window_hi(), b.tail_shift() - a.window_lo());
        else
            widen(a.window_lo(), a.window_hi());
    }
    if (lo > hi) {
        return tail == TailKind::descending ? ZPerm::descending(shift) : ZPerm::identity();
    }
    std::vector<long long> table;
    table.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (long long n = lo; n <= hi; ++n) table.push_back(a.evaluate(b.evaluate(n)));
    return ZPerm::from_table(tail, shift, lo, std::move(table));
}

// inversion count; finite exactly when the tail is the identity
inline long long finite_length(const ZPerm& tau) {
    if (tau.tail_kind() != TailKind::identity)
        throw std::invalid_argument("zperm: descending-tail permutations have infinite length");
    /*
     * Every inversion lies inside the window: left of it tau(n) = n < tau(w)
     * for all window positions w, right of it tau(n) = n > tau(w), and the
     * outside is order-preserving.
     */
    const auto& t = tau.window_table();
    long long inv = 0;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j)
            if (t[i] > t[j]) ++inv;
    return inv;
}

// #{n >= a : pi(n) >= b}; finite exactly when the tail is descending
inline long long rank_fn(const ZPerm& pi, long long a, long long b) {
    if (pi.tail_kind() != TailKind::descending)
        throw std::invalid_argument("zperm: rank is infinite for identity-tail permutations");
    long long m = pi.tail_shift();
    long long count = 0;
    for (long long n = std::max(a, pi.window_lo()); n <= pi.window_hi(); ++n)
        if (pi.evaluate(n) >= b) ++count;
    // tail rows: a <= n <= m - b, excluding the window
    auto seg = [](long long x, long long y) { return x > y ? 0LL : y - x + 1; };
    long long tail_hi = m - b;
    count += seg(a, tail_hi);
    count -= seg(std::max(a, pi.window_lo()), std::min(tail_hi, pi.window_hi()));
    return count;
}

namespace detail {
// strictly decreasing on (-inf, -1]; pure tail segments need no scan
inline bool decreasing_on_negatives(const ZPerm& pi) {
    if (pi.tail_kind() == TailKind::identity) return false;
    for (long long n = pi.window_lo() - 1; n <= std::min(pi.window_hi(), -2LL); ++n)
        if (pi.evaluate(n) <= pi.evaluate(n + 1)) return false;
    return true;
}
}  // namespace detail

/*
 * Confined for (d, g): pi and pi^{-1} strictly decreasing on the negatives
 * and omega_{d-g} o pi of finite length.  The latter forces the tail to be
 * descending with shift exactly d - g, so that is what is tested.
 */
inline bool is_dg_confined(const ZPerm& pi, long long d, long long g) {
    if (pi.tail_kind() != TailKind::descending || pi.tail_shift() != d - g) return false;
    if (!detail::decreasing_on_negatives(pi)) return false;
    return detail::decreasing_on_negatives(pi.inverse());
}

// n |-> N + pi(n - M); shifts the graph by (M, N)
inline ZPerm slide(const ZPerm& pi, long long M, long long N) {
    if (pi.tail_kind() != TailKind::descending)
        throw std::invalid_argument("zperm: slide expects a descending-tail permutation");
    std::vector<long long> table = pi.window_table();
    for (long long& v : table) v += N;
    return ZPerm::from_table(TailKind::descending, pi.tail_shift() + M + N,
                             pi.window_lo() + M, std::move(table));
}

// restriction to [lo, hi], which must be invariant; reindexed to [0, hi-lo]
inline WindowPerm restrict_to_window(const ZPerm& pi, long long lo, long long hi) {
    if (lo > hi) throw std::invalid_argument("zperm: empty restriction window");
    std::vector<int> map;
    map.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (long long n = lo; n <= hi; ++n) {
        long long v = pi.evaluate(n);
        if (v < lo || v > hi)
            throw std::invalid_argument("zperm: window is not invariant under the permutation");
        map.push_back(static_cast<int>(v - lo));
    }
    return WindowPerm(std::move(map));
}

}  // namespace bnd
