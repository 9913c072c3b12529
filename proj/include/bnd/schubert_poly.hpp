#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bnd/bruhat.hpp"
#include "bnd/numeric.hpp"
#include "bnd/window_perm.hpp"

namespace bnd {

/*
 * A monomial in two disjoint variable families x_1, x_2, ... and y_1, y_2,
 * ...; exponent vectors are dense, 1-indexed via position, and trimmed of
 * trailing zeros so equal monomials compare equal structurally.
 */
struct Monomial {
    std::vector<int> x, y;

    void trim() {
        while (!x.empty() && x.back() == 0) x.pop_back();
        while (!y.empty() && y.back() == 0) y.pop_back();
    }

    long long degree() const {
        long long d = 0;
        for (int e : x) d += e;
        for (int e : y) d += e;
        return d;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    // total degree first, then dominant-first lexicographic order on x, then y
    friend bool operator<(const Monomial& a, const Monomial& b) {
        long long da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        auto lex = [](const std::vector<int>& p, const std::vector<int>& q) {
            std::size_t n = std::max(p.size(), q.size());
            for (std::size_t i = 0; i < n; ++i) {
                int pe = i < p.size() ? p[i] : 0;
                int qe = i < q.size() ? q[i] : 0;
                if (pe != qe) return pe > qe ? -1 : 1;  // larger exponent sorts earlier
            }
            return 0;
        };
        int cx = lex(a.x, b.x);
        if (cx != 0) return cx < 0;
        return lex(a.y, b.y) < 0;
    }
};

class SparsePoly {
  public:
    SparsePoly() = default;

    static SparsePoly constant(const Rational& c) {
        SparsePoly p;
        if (c != 0) p.terms_[Monomial{}] = c;
        return p;
    }

    static SparsePoly x(int i) { return variable(i, false); }
    static SparsePoly y(int j) { return variable(j, true); }

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Monomial m, const Rational& c) {
        m.trim();
        Rational& slot = terms_[m];
        slot += c;
        if (slot == 0) terms_.erase(m);
    }

    Rational coefficient(Monomial m) const {
        m.trim();
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }

    friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly r;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m;
                m.x = add_exps(ma.x, mb.x);
                m.y = add_exps(ma.y, mb.y);
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }

    friend SparsePoly operator*(const Rational& c, const SparsePoly& a) {
        SparsePoly r;
        if (c == 0) return r;
        for (const auto& [m, k] : a.terms_) r.terms_[m] = c * k;
        return r;
    }

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        return a.terms_ == b.terms_;
    }

    // drop every term containing x_k with k > g
    SparsePoly set_x_zero_beyond(int g) const {
        SparsePoly r;
        for (const auto& [m, c] : terms_)
            if (static_cast<int>(m.x.size()) <= g) r.terms_[m] = c;
        return r;
    }

    SparsePoly set_y_zero() const {
        SparsePoly r;
        for (const auto& [m, c] : terms_)
            if (m.y.empty()) r.terms_[m] = c;
        return r;
    }

    bool uses_y() const {
        for (const auto& [m, c] : terms_)
            if (!m.y.empty()) return true;
        return false;
    }

    int max_x_index() const {
        std::size_t n = 0;
        for (const auto& [m, c] : terms_) n = std::max(n, m.x.size());
        return static_cast<int>(n);
    }

    // exchange x_i and x_{i+1} (1-indexed)
    SparsePoly swap_x(int i) const {
        SparsePoly r;
        for (const auto& [m0, c] : terms_) {
            Monomial m = m0;
            if (static_cast<int>(m.x.size()) < i + 1) m.x.resize(static_cast<std::size_t>(i) + 1, 0);
            std::swap(m.x[static_cast<std::size_t>(i) - 1], m.x[static_cast<std::size_t>(i)]);
            m.trim();
            r.terms_[m] = c;
        }
        return r;
    }

    // exchange the x-family with the y-family wholesale
    SparsePoly swap_blocks() const {
        SparsePoly r;
        for (const auto& [m0, c] : terms_) {
            Monomial m = m0;
            std::swap(m.x, m.y);
            r.terms_[m] = c;
        }
        return r;
    }

    bool is_symmetric_x(int g) const {
        for (int i = 1; i < g; ++i)
            if (!(swap_x(i) == *this)) return false;
        return true;
    }

    // -1 for the zero polynomial; -2 if inhomogeneous
    long long homogeneous_degree() const {
        long long d = -1;
        for (const auto& [m, c] : terms_) {
            if (d == -1) d = m.degree();
            else if (d != m.degree()) return -2;
        }
        return d;
    }

    // terms sorted by total degree then dominant-first lexicographic exponent
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            Rational a = c > 0 ? c : Rational(-c);
            if (s.empty())
                s += c > 0 ? "" : "-";
            else
                s += c > 0 ? " + " : " - ";
            std::string vars = render_vars(m);
            if (vars.empty()) {
                s += a.get_str();
            } else {
                if (a != 1) s += a.get_str() + "*";
                s += vars;
            }
        }
        return s;
    }

  private:
    static SparsePoly variable(int i, bool y_family) {
        if (i < 1) throw std::invalid_argument("polynomial: variables are 1-indexed");
        Monomial m;
        auto& v = y_family ? m.y : m.x;
        v.assign(static_cast<std::size_t>(i), 0);
        v.back() = 1;
        SparsePoly p;
        p.terms_[m] = 1;
        return p;
    }

    static std::vector<int> add_exps(const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
        return r;
    }

    static std::string render_vars(const Monomial& m) {
        std::string s;
        auto emit = [&s](char family, const std::vector<int>& exps) {
            for (std::size_t i = 0; i < exps.size(); ++i) {
                if (exps[i] == 0) continue;
                if (!s.empty()) s += "*";
                s += family + std::to_string(i + 1);
                if (exps[i] > 1) s += "^" + std::to_string(exps[i]);
            }
        };
        emit('x', m.x);
        emit('y', m.y);
        return s;
    }

    std::map<Monomial, Rational> terms_;
};

/*
 * partial_i p = (p - s_i p) / (x_i - x_{i+1}), computed termwise through the
 * identity (u^a v^b - u^b v^a)/(u - v) = sign(a-b) * sum of u^k v^{a+b-1-k}
 * over min(a,b) <= k < max(a,b); no division ever happens.
 */
inline SparsePoly divided_difference(const SparsePoly& p, int i) {
    if (i < 1) throw std::invalid_argument("divided difference: index must be >= 1");
    SparsePoly r;
    for (const auto& [m, c] : p.terms()) {
        int a = static_cast<int>(m.x.size()) >= i ? m.x[static_cast<std::size_t>(i) - 1] : 0;
        int b = static_cast<int>(m.x.size()) >= i + 1 ? m.x[static_cast<std::size_t>(i)] : 0;
        if (a == b) continue;
        Rational sgn = a > b ? 1 : -1;
        for (int k = std::min(a, b); k < std::max(a, b); ++k) {
            Monomial t = m;
            if (static_cast<int>(t.x.size()) < i + 1) t.x.resize(static_cast<std::size_t>(i) + 1, 0);
            t.x[static_cast<std::size_t>(i) - 1] = k;
            t.x[static_cast<std::size_t>(i)] = a + b - 1 - k;
            r.add_term(t, sgn * c);
        }
    }
    return r;
}

/*
 * Billey-Jockusch-Stanley: S_w = sum over reduced words a and over weakly
 * increasing sequences i with i_j <= a_j, strictly increasing across ascents
 * of a, of x_{i_1} ... x_{i_l}.  Letters arrive 0-indexed from the reduced
 * word enumerator and are shifted to the 1-indexed convention here.
 */
inline SparsePoly bjs_schubert(const WindowPerm& w, long long cap = 12) {
    std::vector<std::vector<int>> words = reduced_words(w, cap);
    SparsePoly p;
    std::vector<int> seq;
    for (const auto& word0 : words) {
        std::vector<int> a;
        for (int letter : word0) a.push_back(letter + 1);
        seq.assign(a.size(), 0);
        // depth-first walk over admissible sequences
        std::size_t l = a.size();
        if (l == 0) {
            p.add_term(Monomial{}, 1);
            continue;
        }
        std::size_t j = 0;
        seq[0] = 1;
        while (true) {
            if (seq[j] > a[j]) {
                if (j == 0) break;
                --j;
                ++seq[j];
                continue;
            }
            if (j + 1 == l) {
                Monomial m;
                m.x.assign(static_cast<std::size_t>(*std::max_element(seq.begin(), seq.end())), 0);
                for (int v : seq) ++m.x[static_cast<std::size_t>(v) - 1];
                p.add_term(m, 1);
                ++seq[j];
            } else {
                seq[j + 1] = seq[j] + (a[j] < a[j + 1] ? 1 : 0);
                ++j;
            }
        }
    }
    return p;
}

namespace detail {
// one reduced word, cheaply: repeatedly strip the smallest left descent
inline std::vector<int> any_reduced_word(WindowPerm w) {
    std::vector<int> word;
    while (!w.is_identity()) {
        WindowPerm winv = w.inverse();
        for (int i = 0; i + 1 < w.size(); ++i) {
            if (winv(i) > winv(i + 1)) {
                word.push_back(i);
                w = w.left_mult_simple(i);
                break;
            }
        }
    }
    return word;
}

// descend from the top polynomial along w^{-1} w_0
inline SparsePoly descend_from_top(const WindowPerm& w, SparsePoly top) {
    WindowPerm u = w.inverse().compose(WindowPerm::reversal(w.size()));
    std::vector<int> word = any_reduced_word(u);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        top = divided_difference(top, *it + 1);
    return top;
}
}  // namespace detail

// independent oracle: S_{w_0} = x_1^{n-1} x_2^{n-2} ... x_{n-1}, then
// divided differences downward
inline SparsePoly schubert_via_divided_diff(const WindowPerm& w, int cap = 7) {
    int n = w.size();
    if (n > cap) throw std::invalid_argument("schubert: n exceeds divided-difference cap");
    SparsePoly top = SparsePoly::constant(1);
    for (int i = 1; i < n; ++i) {
        SparsePoly pw = SparsePoly::constant(1);
        for (int e = 0; e < n - i; ++e) pw = pw * SparsePoly::x(i);
        top = top * pw;
    }
    return detail::descend_from_top(w, top);
}

// double Schubert polynomial: descent from prod_{i+j<=n} (x_i - y_j)
inline SparsePoly double_schubert(const WindowPerm& w, int cap = 6) {
    int n = w.size();
    if (n > cap) throw std::invalid_argument("double schubert: n exceeds cap");
    SparsePoly top = SparsePoly::constant(1);
    for (int i = 1; i < n; ++i)
        for (int j = 1; i + j <= n; ++j) top = top * (SparsePoly::x(i) - SparsePoly::y(j));
    return detail::descend_from_top(w, top);
}

/*
 * Substitute e_k(x_1..x_g) |-> Theta^k / k!.  For a polynomial symmetric in
 * x_1..x_g this kills every monomial symmetric function except the
 * elementary ones, so the Theta^k coefficient is the coefficient of the
 * squarefree monomial x_1 x_2 ... x_k divided by k!.
 */
inline std::map<long long, Rational> exponential_substitution(const SparsePoly& p, int g) {
    if (g < 1) throw std::invalid_argument("exponential substitution: g must be positive");
    if (p.uses_y())
        throw std::invalid_argument("exponential substitution: y variables must be specialized away");
    if (p.max_x_index() > g)
        throw std::invalid_argument("exponential substitution: variables beyond x_g must be zero");
    if (!p.is_symmetric_x(g))
        throw std::invalid_argument("exponential substitution: polynomial is not symmetric in x_1..x_g");
    std::map<long long, Rational> out;
    for (const auto& [m, c] : p.terms()) {
        bool squarefree_prefix = true;
        for (int e : m.x)
            if (e != 1) squarefree_prefix = false;
        if (!squarefree_prefix) continue;
        long long k = static_cast<long long>(m.x.size());
        Rational v = c / Rational(factorial(k));
        if (v != 0) out[k] = v;
    }
    return out;
}

struct ChowCoefficient {
    Rational coeff;
    long long theta_power;
    friend bool operator==(const ChowCoefficient&, const ChowCoefficient&) = default;
};

// |R(w)| / l(w)! on Theta^{l(w)}; identically zero past the top power of Theta
inline ChowCoefficient chow_coefficient(const WindowPerm& w, long long g) {
    long long l = w.length();
    if (l > g) return {Rational(0), l};
    Rational c(reduced_words_count(w));
    c /= Rational(factorial(l));
    return {c, l};
}

}  // namespace bnd
