#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bnd/numeric.hpp"
#include "bnd/window_perm.hpp"

namespace bnd {

// r^sigma(a,b) = #{a' >= a : sigma(a') >= b}, defined for 0 <= a,b <= n
inline long long window_rank(const WindowPerm& sigma, int a, int b) {
    if (a < 0 || b < 0 || a > sigma.size() || b > sigma.size())
        throw std::invalid_argument("window rank: arguments out of [0,n]");
    long long c = 0;
    for (int i = a; i < sigma.size(); ++i)
        if (sigma(i) >= b) ++c;
    return c;
}

namespace detail {
// full rank table via suffix sums; entry (a,b) for 0 <= a,b <= n
inline std::vector<std::vector<int>> rank_table(const WindowPerm& s) {
    int n = s.size();
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n + 1),
                                    std::vector<int>(static_cast<std::size_t>(n + 1), 0));
    for (int a = n - 1; a >= 0; --a)
        for (int b = 0; b <= n; ++b)
            t[a][b] = t[a + 1][b] + (s(a) >= b ? 1 : 0);
    return t;
}
}  // namespace detail

// sigma <= tau iff r^sigma >= r^tau pointwise; the identity is minimal
inline bool bruhat_leq(const WindowPerm& sigma, const WindowPerm& tau) {
    if (sigma.size() != tau.size())
        throw std::invalid_argument("bruhat: size mismatch");
    auto rs = detail::rank_table(sigma), rt = detail::rank_table(tau);
    for (int a = 0; a < sigma.size(); ++a)
        for (int b = 0; b < sigma.size(); ++b)
            if (rs[a][b] < rt[a][b]) return false;
    return true;
}

namespace detail {
inline void reduced_words_rec(const WindowPerm& w, std::vector<int>& prefix,
                              std::vector<std::vector<int>>& out) {
    if (w.is_identity()) {
        out.push_back(prefix);
        return;
    }
    // first letters of reduced words are exactly the left descents; ascending
    // recursion yields lexicographic order
    WindowPerm winv = w.inverse();
    for (int i = 0; i + 1 < w.size(); ++i) {
        if (winv(i) > winv(i + 1)) {
            prefix.push_back(i);
            reduced_words_rec(w.left_mult_simple(i), prefix, out);
            prefix.pop_back();
        }
    }
}
}  // namespace detail

// all (a_1,...,a_l) with w = s_{a_1} o ... o s_{a_l}, l = l(w), lexicographic
inline std::vector<std::vector<int>> reduced_words(const WindowPerm& w, long long cap = 12) {
    if (w.length() > cap)
        throw std::invalid_argument("reduced words: length exceeds enumeration cap");
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    detail::reduced_words_rec(w, prefix, out);
    return out;
}

namespace detail {
inline BigInt reduced_words_count_rec(const WindowPerm& w,
                                      std::map<WindowPerm, BigInt>& memo) {
    if (w.is_identity()) return 1;
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    // last letters of reduced words are exactly the right descents
    BigInt total = 0;
    for (int i : w.right_descents()) total += reduced_words_count_rec(w.right_mult_simple(i), memo);
    memo.emplace(w, total);
    return total;
}
}  // namespace detail

inline BigInt reduced_words_count(const WindowPerm& w) {
    std::map<WindowPerm, BigInt> memo;  // per-call cache: thread-confined by construction
    return detail::reduced_words_count_rec(w, memo);
}

namespace detail {
// Bruhat coatoms of w are w*t for transpositions t with l(w*t) = l(w) - 1
inline BigInt chains_count_rec(const WindowPerm& w, std::map<WindowPerm, BigInt>& memo) {
    if (w.is_identity()) return 1;
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    BigInt total = 0;
    long long len = w.length();
    for (int i = 0; i < w.size(); ++i)
        for (int j = i + 1; j < w.size(); ++j) {
            WindowPerm u = w.right_mult_transposition(i, j);
            if (u.length() == len - 1) total += chains_count_rec(u, memo);
        }
    memo.emplace(w, total);
    return total;
}
}  // namespace detail

inline BigInt saturated_bruhat_chains_count(const WindowPerm& w) {
    std::map<WindowPerm, BigInt> memo;
    return detail::chains_count_rec(w, memo);
}

namespace detail {
inline bool pattern_rec(const WindowPerm& w, const WindowPerm& p, int from, int depth,
                        std::vector<int>& chosen) {
    if (depth == p.size()) return true;
    for (int pos = from; pos <= w.size() - (p.size() - depth); ++pos) {
        bool ok = true;
        for (int j = 0; j < depth && ok; ++j)
            if ((w(chosen[static_cast<std::size_t>(j)]) < w(pos)) != (p(j) < p(depth))) ok = false;
        if (!ok) continue;
        chosen.push_back(pos);
        if (pattern_rec(w, p, pos + 1, depth + 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}
}  // namespace detail

// positions (increasing) at which w's values are order-isomorphic to p, if any
inline std::optional<std::vector<int>> find_pattern(const WindowPerm& w, const WindowPerm& p) {
    if (p.size() > w.size()) return std::nullopt;
    std::vector<int> chosen;
    if (detail::pattern_rec(w, p, 0, 0, chosen)) return chosen;
    return std::nullopt;
}

// some subsequence of w's values is order-isomorphic to p
inline bool contains_pattern(const WindowPerm& w, const WindowPerm& p) {
    return find_pattern(w, p).has_value();
}

/*
 * Lakshmibai-Sandhya: X_sigma is smooth iff sigma avoids the two patterns
 * below.  0-indexed one-line notation; in the 1-indexed literature they read
 * [2,3,0,1] = 3412 and [3,1,2,0] = 4231.
 */
inline bool is_smooth_schubert(const WindowPerm& sigma) {
    static const WindowPerm p3412({2, 3, 0, 1});
    static const WindowPerm p4231({3, 1, 2, 0});
    return !contains_pattern(sigma, p3412) && !contains_pattern(sigma, p4231);
}

// #{transpositions t : tau*t <= sigma}; equals l(sigma) iff X_sigma is
// smooth at the T-fixed point indexed by tau
inline long long tangent_dim(const WindowPerm& tau, const WindowPerm& sigma) {
    if (!bruhat_leq(tau, sigma))
        throw std::invalid_argument("tangent dim: tau is not below sigma");
    long long dim = 0;
    for (int i = 0; i < tau.size(); ++i)
        for (int j = i + 1; j < tau.size(); ++j)
            if (bruhat_leq(tau.right_mult_transposition(i, j), sigma)) ++dim;
    return dim;
}

// {tau <= sigma : tangent_dim(tau, sigma) > l(sigma)}, sorted
inline std::vector<WindowPerm> singular_strata(const WindowPerm& sigma, int cap = 7) {
    if (sigma.size() > cap)
        throw std::invalid_argument("singular strata: n exceeds enumeration cap");
    std::vector<int> v(static_cast<std::size_t>(sigma.size()));
    for (int i = 0; i < sigma.size(); ++i) v[static_cast<std::size_t>(i)] = i;
    std::vector<WindowPerm> out;
    long long len = sigma.length();
    do {
        WindowPerm tau(v);
        if (bruhat_leq(tau, sigma) && tangent_dim(tau, sigma) > len) out.push_back(tau);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace bnd
