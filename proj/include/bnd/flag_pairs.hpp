#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bnd/bruhat.hpp"
#include "bnd/dot_array.hpp"
#include "bnd/exact_linalg.hpp"
#include "bnd/numeric.hpp"
#include "bnd/window_perm.hpp"

namespace bnd {

/*
 * A flag indexed by corank: for each a in the corank set, a basis matrix of
 * a codimension-a subspace, nested downward as a grows.  Corank 0 (the whole
 * space) is always present; corank n (the zero subspace) may be.
 */
template <class K>
class Flag {
  public:
    Flag(int n, std::vector<int> coranks, std::vector<Matrix<K>> strata)
        : n_(n), coranks_(std::move(coranks)), strata_(std::move(strata)) {
        if (n_ < 1) throw std::invalid_argument("flag: ambient dimension must be positive");
        if (coranks_.empty() || coranks_.front() != 0)
            throw std::invalid_argument("flag: corank set must contain 0");
        for (std::size_t k = 0; k < coranks_.size(); ++k) {
            if (k > 0 && coranks_[k] <= coranks_[k - 1])
                throw std::invalid_argument("flag: coranks must be strictly increasing");
            if (coranks_[k] < 0 || coranks_[k] > n_)
                throw std::invalid_argument("flag: corank out of range");
        }
        if (strata_.size() != coranks_.size())
            throw std::invalid_argument("flag: one basis matrix per corank required");
        for (std::size_t k = 0; k < strata_.size(); ++k) {
            const Matrix<K>& m = strata_[k];
            if (m.rows() != n_ - coranks_[k] || m.cols() != n_)
                throw std::invalid_argument("flag: stratum shape must be (n-a) x n");
            if (!(m.zero_element() == strata_[0].zero_element()))
                throw std::invalid_argument("flag: strata over mixed fields");
            if (m.rank() != m.rows())
                throw std::invalid_argument("flag: stratum basis is not full row rank");
        }
        for (std::size_t k = 0; k + 1 < strata_.size(); ++k)
            if (strata_[k].stacked(strata_[k + 1]).rank() != n_ - coranks_[k])
                throw std::invalid_argument("flag: strata are not nested");
    }

    int ambient_dim() const { return n_; }
    const std::vector<int>& coranks() const { return coranks_; }
    const K& zero_element() const { return strata_[0].zero_element(); }

    bool has_corank(int a) const {
        return std::binary_search(coranks_.begin(), coranks_.end(), a);
    }

    const Matrix<K>& stratum(int a) const {
        auto it = std::lower_bound(coranks_.begin(), coranks_.end(), a);
        if (it == coranks_.end() || *it != a) throw std::invalid_argument("flag: invalid corank");
        return strata_[static_cast<std::size_t>(it - coranks_.begin())];
    }

    // stratum basis, treating the zero subspace (corank n) as always known
    Matrix<K> stratum_extended(int a) const {
        if (has_corank(a)) return stratum(a);
        if (a == n_) return Matrix<K>(0, n_, zero_element());
        throw std::invalid_argument("flag: invalid corank");
    }

  private:
    int n_;
    std::vector<int> coranks_;
    std::vector<Matrix<K>> strata_;
};

template <class K>
class FlagPair {
  public:
    FlagPair(Flag<K> p, Flag<K> q) : p_(std::move(p)), q_(std::move(q)) {
        if (p_.ambient_dim() != q_.ambient_dim())
            throw std::invalid_argument("flag pair: ambient dimensions differ");
        if (!(p_.zero_element() == q_.zero_element()))
            throw std::invalid_argument("flag pair: flags over different fields");
    }

    int ambient_dim() const { return p_.ambient_dim(); }
    const Flag<K>& p() const { return p_; }
    const Flag<K>& q() const { return q_; }

    // dim(P^a ∩ Q^b) = (n-a) + (n-b) - rank of the stacked bases
    int meet_dim(int a, int b) const {
        const Matrix<K>& pa = p_.stratum(a);
        const Matrix<K>& qb = q_.stratum(b);
        return meet_of(pa, qb, a, b);
    }

    int meet_dim_extended(int a, int b) const {
        return meet_of(p_.stratum_extended(a), q_.stratum_extended(b), a, b);
    }

  private:
    int meet_of(const Matrix<K>& pa, const Matrix<K>& qb, int a, int b) const {
        int n = ambient_dim();
        return (n - a) + (n - b) - static_cast<int>(pa.stacked(qb).rank());
    }

    Flag<K> p_, q_;
};

namespace detail {
inline std::vector<int> with_terminal(std::vector<int> coranks, int n) {
    if (coranks.back() != n) coranks.push_back(n);
    return coranks;
}
}  // namespace detail

/*
 * The unique permutation sigma of [0,n) with dim(P^a ∩ Q^b) = #{i >= a :
 * sigma(i) >= b} on the available coranks, decreasing across rows absent
 * from A and, inversely, columns absent from B.  Dots per corank block come
 * from inclusion-exclusion on the meet table; each row band is filled left
 * to right with its blocks taken in decreasing column order, which forces
 * the in-band antidiagonal layout.  The result is validated against the
 * meet table and both monotonicity conditions before it is returned.
 */
template <class K>
WindowPerm associated_permutation(const FlagPair<K>& pair) {
    int n = pair.ambient_dim();
    std::vector<int> abar = detail::with_terminal(pair.p().coranks(), n);
    std::vector<int> bbar = detail::with_terminal(pair.q().coranks(), n);
    std::size_t s = abar.size(), t = bbar.size();

    std::vector<std::vector<int>> meet(s, std::vector<int>(t, 0));
    for (std::size_t k = 0; k < s; ++k)
        for (std::size_t l = 0; l < t; ++l) meet[k][l] = pair.meet_dim_extended(abar[k], bbar[l]);

    std::vector<std::vector<int>> cnt(s - 1, std::vector<int>(t - 1, 0));
    for (std::size_t k = 0; k + 1 < s; ++k)
        for (std::size_t l = 0; l + 1 < t; ++l) {
            cnt[k][l] = meet[k][l] - meet[k + 1][l] - meet[k][l + 1] + meet[k + 1][l + 1];
            if (cnt[k][l] < 0)
                throw std::logic_error("flag pair: meet table is not permutation-consistent");
        }

    // suffix[k][l] = total dots in column band l strictly below row band k
    std::vector<std::vector<int>> suffix(s, std::vector<int>(t - 1, 0));
    for (std::size_t k = s - 1; k-- > 0;)
        for (std::size_t l = 0; l + 1 < t; ++l) suffix[k][l] = suffix[k + 1][l] + cnt[k][l];

    std::vector<int> img(static_cast<std::size_t>(n), -1);
    for (std::size_t k = 0; k + 1 < s; ++k) {
        int cursor = abar[k];
        for (std::size_t l = t - 1; l-- > 0;) {
            int c = cnt[k][l];
            int col0 = bbar[l] + suffix[k + 1][l];
            for (int j = 0; j < c; ++j) img[static_cast<std::size_t>(cursor + j)] = col0 + (c - 1 - j);
            cursor += c;
        }
        if (cursor != abar[k + 1])
            throw std::logic_error("flag pair: meet table is not permutation-consistent");
    }

    WindowPerm sigma(img);  // validates bijectivity
    for (std::size_t k = 0; k < s; ++k)
        for (std::size_t l = 0; l < t; ++l)
            if (window_rank(sigma, abar[k], bbar[l]) != meet[k][l])
                throw std::logic_error("flag pair: recovered permutation fails the meet table");
    WindowPerm inv = sigma.inverse();
    for (int a = 1; a < n; ++a)
        if (!pair.p().has_corank(a) && sigma(a) >= sigma(a - 1))
            throw std::logic_error("flag pair: permutation not decreasing on corank gaps");
    for (int b = 1; b < n; ++b)
        if (!pair.q().has_corank(b) && inv(b) >= inv(b - 1))
            throw std::logic_error("flag pair: inverse not decreasing on corank gaps");
    return sigma;
}

/*
 * Basis v_0..v_{n-1} with {v_i : i >= a} spanning P^a and {v_i : sigma(i) >=
 * b} spanning Q^b.  Block by block, vectors are chosen inside V = P^a ∩ Q^b
 * extending the spanning set of U = P^{a+} ∩ Q^b + P^a ∩ Q^{b+}; the meet
 * table guarantees dim V - dim U dots per block, and downward induction on
 * the strata makes the union across blocks a basis.  All span conditions
 * are re-verified by rank checks before returning.
 */
template <class K>
Matrix<K> adapted_basis(const FlagPair<K>& pair) {
    int n = pair.ambient_dim();
    const K& zero = pair.p().zero_element();
    WindowPerm sigma = associated_permutation(pair);
    std::vector<int> abar = detail::with_terminal(pair.p().coranks(), n);
    std::vector<int> bbar = detail::with_terminal(pair.q().coranks(), n);

    auto band_floor = [](const std::vector<int>& v, int x) {
        auto it = std::upper_bound(v.begin(), v.end(), x);
        return *std::prev(it);
    };
    auto band_next = [](const std::vector<int>& v, int x) {
        return *std::upper_bound(v.begin(), v.end(), x);
    };

    std::map<std::pair<int, int>, std::vector<int>> blocks;
    for (int i = 0; i < n; ++i)
        blocks[{band_floor(abar, i), band_floor(bbar, sigma(i))}].push_back(i);

    Matrix<K> basis(n, n, zero);
    for (const auto& [ab, idxs] : blocks) {
        auto [a, b] = ab;
        int a2 = band_next(abar, a), b2 = band_next(bbar, b);
        Matrix<K> inside = intersection_basis(pair.p().stratum_extended(a), pair.q().stratum_extended(b));
        Matrix<K> spanning =
            intersection_basis(pair.p().stratum_extended(a2), pair.q().stratum_extended(b))
                .stacked(intersection_basis(pair.p().stratum_extended(a), pair.q().stratum_extended(b2)));
        long long reached = spanning.rank();
        std::size_t next = 0;
        for (long long r = 0; r < inside.rows() && next < idxs.size(); ++r) {
            std::vector<K> v = inside.row(r);
            Matrix<K> grown = spanning.with_row(v);
            if (grown.rank() > reached) {
                spanning = std::move(grown);
                ++reached;
                for (int j = 0; j < n; ++j) basis.at(idxs[next], j) = v[static_cast<std::size_t>(j)];
                ++next;
            }
        }
        if (next != idxs.size()) throw std::logic_error("adapted basis: block extension fell short");
    }

    if (basis.rank() != n) throw std::logic_error("adapted basis: vectors are not independent");
    auto check_span = [&](const std::vector<long long>& rows, const Matrix<K>& stratum) {
        Matrix<K> sub = basis.submatrix_rows(rows);
        if (sub.rank() != sub.rows() || sub.stacked(stratum).rank() != stratum.rows())
            throw std::logic_error("adapted basis: span verification failed");
    };
    for (int a : pair.p().coranks()) {
        std::vector<long long> rows;
        for (int i = a; i < n; ++i) rows.push_back(i);
        check_span(rows, pair.p().stratum(a));
    }
    for (int b : pair.q().coranks()) {
        std::vector<long long> rows;
        for (int i = 0; i < n; ++i)
            if (sigma(i) >= b) rows.push_back(i);
        check_span(rows, pair.q().stratum(b));
    }
    return basis;
}

inline Rational random_element(SplitMix64& rng, const Rational&) {
    return Rational(static_cast<long>(rng.range(-9, 9)));
}
inline Fp random_element(SplitMix64& rng, const Fp& x) {
    return Fp(static_cast<long long>(rng.below(static_cast<std::uint64_t>(x.modulus()))), x.modulus());
}

/*
 * Deterministic pair with prescribed relative position: start from the
 * standard pair P^a = span{e_i : i >= a}, Q^b = span{e_i : sigma(i) >= b}
 * and push both flags through one random invertible change of coordinates.
 */
template <class K>
FlagPair<K> random_flag_pair(const WindowPerm& sigma, std::vector<int> a_set, std::vector<int> b_set,
                             const K& field_zero, std::uint64_t seed) {
    int n = sigma.size();
    auto normalize = [n](std::vector<int>& v, const char* which) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        if (v.empty() || v.front() != 0 || v.back() > n)
            throw std::invalid_argument(std::string("flag pair: corank set ") + which +
                                        " must contain 0 and stay within [0, n]");
    };
    normalize(a_set, "A");
    normalize(b_set, "B");
    WindowPerm inv = sigma.inverse();
    auto in_set = [](const std::vector<int>& v, int x) {
        return std::binary_search(v.begin(), v.end(), x);
    };
    for (int a = 1; a < n; ++a)
        if (!in_set(a_set, a) && sigma(a) >= sigma(a - 1))
            throw std::invalid_argument("flag pair: permutation incompatible with corank set A");
    for (int b = 1; b < n; ++b)
        if (!in_set(b_set, b) && inv(b) >= inv(b - 1))
            throw std::invalid_argument("flag pair: permutation incompatible with corank set B");

    SplitMix64 rng(seed);
    Matrix<K> transform(n, n, field_zero);
    for (int attempt = 0;; ++attempt) {
        if (attempt >= 10000) throw std::logic_error("flag pair: no invertible transform found");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) transform.at(i, j) = random_element(rng, field_zero);
        if (transform.rank() == n) break;
    }

    auto build = [&](const std::vector<int>& coranks, auto keep_row) {
        std::vector<Matrix<K>> strata;
        for (int a : coranks) {
            std::vector<long long> rows;
            for (int i = 0; i < n; ++i)
                if (keep_row(i, a)) rows.push_back(i);
            strata.push_back(transform.submatrix_rows(rows));
        }
        return Flag<K>(n, coranks, std::move(strata));
    };
    Flag<K> p = build(a_set, [](int i, int a) { return i >= a; });
    Flag<K> q = build(b_set, [&sigma](int i, int b) { return sigma(i) >= b; });
    return FlagPair<K>(std::move(p), std::move(q));
}

/*
 * Set-theoretic membership in the degeneracy locus D_sigma: every essential
 * rank condition dim(P^a ∩ Q^b) >= r^sigma(a,b) holds.  The essential set
 * must be covered by the available coranks.
 */
template <class K>
bool in_degeneracy_locus(const FlagPair<K>& pair, const WindowPerm& sigma) {
    if (sigma.size() != pair.ambient_dim())
        throw std::invalid_argument("degeneracy locus: permutation size must match ambient dimension");
    for (const auto& [a, b] : essential_set_perm(sigma)) {
        if (!pair.p().has_corank(static_cast<int>(a)) || !pair.q().has_corank(static_cast<int>(b)))
            throw std::invalid_argument("degeneracy locus: essential set not covered by available coranks");
        if (pair.meet_dim(static_cast<int>(a), static_cast<int>(b)) <
            window_rank(sigma, static_cast<int>(a), static_cast<int>(b)))
            return false;
    }
    return true;
}

}  // namespace bnd
