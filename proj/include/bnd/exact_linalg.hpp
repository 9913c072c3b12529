#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bnd/numeric.hpp"

namespace bnd {

inline bool is_prime(long long p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (long long q = 3; q * q <= p; q += 2)
        if (p % q == 0) return false;
    return true;
}

/*
 * Prime-field scalar with runtime modulus.  The modulus stays below 2^31 so
 * every product of two reduced values fits a 64-bit signed intermediate.
 */
class Fp {
  public:
    Fp(long long value, long long modulus) : p_(modulus) {
        if (p_ < 2 || p_ >= (1LL << 31))
            throw std::invalid_argument("prime field: modulus must lie in [2, 2^31)");
        v_ = value % p_;
        if (v_ < 0) v_ += p_;
    }

    long long value() const { return v_; }
    long long modulus() const { return p_; }

    Fp inverse() const {
        if (v_ == 0) throw std::invalid_argument("prime field: division by zero");
        // extended Euclid on (v_, p_)
        long long r0 = v_, r1 = p_, s0 = 1, s1 = 0;
        while (r1 != 0) {
            long long q = r0 / r1;
            r0 -= q * r1;
            std::swap(r0, r1);
            s0 -= q * s1;
            std::swap(s0, s1);
        }
        if (r0 != 1) throw std::invalid_argument("prime field: modulus is not prime");
        return Fp(s0, p_);
    }

    friend Fp operator+(const Fp& a, const Fp& b) { return Fp(a.v_ + b.match(a), a.p_); }
    friend Fp operator-(const Fp& a, const Fp& b) { return Fp(a.v_ - b.match(a), a.p_); }
    friend Fp operator*(const Fp& a, const Fp& b) { return Fp(a.v_ * b.match(a), a.p_); }
    friend Fp operator/(const Fp& a, const Fp& b) {
        b.match(a);
        return a * b.inverse();
    }
    Fp operator-() const { return Fp(-v_, p_); }

    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }

    std::string to_string() const { return std::to_string(v_); }

  private:
    long long match(const Fp& other) const {
        if (p_ != other.p_) throw std::invalid_argument("prime field: mixed moduli");
        return v_;
    }

    long long v_, p_;
};

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Fp zero_like(const Fp& x) { return Fp(0, x.modulus()); }
inline Fp one_like(const Fp& x) { return Fp(1, x.modulus()); }

inline std::string scalar_to_string(const Rational& x) { return x.get_str(); }
inline std::string scalar_to_string(const Fp& x) { return x.to_string(); }

/*
 * Dense exact matrix over ℚ or F_p.  A zero exemplar travels with the matrix
 * so constants of the right field can be minted even when there are no
 * entries (empty strata are legitimate: corank n is the zero subspace).
 * Elimination uses the first nonzero pivot; over ℚ the rational type keeps
 * every intermediate in lowest terms.
 */
template <class K>
class Matrix {
  public:
    Matrix(long long rows, long long cols, const K& zero)
        : rows_(rows), cols_(cols), zero_(zero), data_(static_cast<std::size_t>(rows * cols), zero) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("matrix: negative dimension");
    }

    Matrix(const std::vector<std::vector<K>>& rows, long long cols, const K& zero)
        : Matrix(static_cast<long long>(rows.size()), cols, zero) {
        for (long long i = 0; i < rows_; ++i) {
            if (static_cast<long long>(rows[static_cast<std::size_t>(i)].size()) != cols_)
                throw std::invalid_argument("matrix: ragged rows");
            for (long long j = 0; j < cols_; ++j) at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    }

    static Matrix identity(long long n, const K& zero) {
        Matrix m(n, n, zero);
        for (long long i = 0; i < n; ++i) m.at(i, i) = one_like(zero);
        return m;
    }

    long long rows() const { return rows_; }
    long long cols() const { return cols_; }
    const K& zero_element() const { return zero_; }

    K& at(long long i, long long j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
    const K& at(long long i, long long j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }

    std::vector<K> row(long long i) const {
        std::vector<K> r;
        r.reserve(static_cast<std::size_t>(cols_));
        for (long long j = 0; j < cols_; ++j) r.push_back(at(i, j));
        return r;
    }

    Matrix stacked(const Matrix& other) const {
        if (cols_ != other.cols_ || !(zero_ == other.zero_))
            throw std::invalid_argument("matrix: stack shape or field mismatch");
        Matrix m(rows_ + other.rows_, cols_, zero_);
        for (long long i = 0; i < rows_; ++i)
            for (long long j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        for (long long i = 0; i < other.rows_; ++i)
            for (long long j = 0; j < cols_; ++j) m.at(rows_ + i, j) = other.at(i, j);
        return m;
    }

    Matrix with_row(const std::vector<K>& r) const {
        return stacked(Matrix(std::vector<std::vector<K>>{r}, cols_, zero_));
    }

    Matrix submatrix_rows(const std::vector<long long>& idx) const {
        Matrix m(static_cast<long long>(idx.size()), cols_, zero_);
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (long long j = 0; j < cols_; ++j) m.at(static_cast<long long>(i), j) = at(idx[i], j);
        return m;
    }

    Matrix transpose() const {
        Matrix m(cols_, rows_, zero_);
        for (long long i = 0; i < rows_; ++i)
            for (long long j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    Matrix multiply(const Matrix& other) const {
        if (cols_ != other.rows_ || !(zero_ == other.zero_))
            throw std::invalid_argument("matrix: product shape or field mismatch");
        Matrix m(rows_, other.cols_, zero_);
        for (long long i = 0; i < rows_; ++i)
            for (long long k = 0; k < cols_; ++k) {
                if (at(i, k) == zero_) continue;
                for (long long j = 0; j < other.cols_; ++j)
                    m.at(i, j) = m.at(i, j) + at(i, k) * other.at(k, j);
            }
        return m;
    }

    long long rank() const {
        Matrix m = *this;
        return m.eliminate(nullptr);
    }

    // basis of {x : Mx = 0} as vectors in k^cols
    std::vector<std::vector<K>> kernel_basis() const {
        Matrix m = *this;
        std::vector<long long> pivot_cols;
        long long r = m.eliminate(&pivot_cols);
        // back-substitute to reduced form
        for (long long t = r - 1; t >= 0; --t) {
            long long pc = pivot_cols[static_cast<std::size_t>(t)];
            K inv = one_like(zero_) / m.at(t, pc);
            for (long long j = pc; j < cols_; ++j) m.at(t, j) = m.at(t, j) * inv;
            for (long long i = 0; i < t; ++i) {
                K f = m.at(i, pc);
                if (f == zero_) continue;
                for (long long j = pc; j < cols_; ++j) m.at(i, j) = m.at(i, j) - f * m.at(t, j);
            }
        }
        std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
        for (long long pc : pivot_cols) is_pivot[static_cast<std::size_t>(pc)] = true;
        std::vector<std::vector<K>> basis;
        for (long long f = 0; f < cols_; ++f) {
            if (is_pivot[static_cast<std::size_t>(f)]) continue;
            std::vector<K> v(static_cast<std::size_t>(cols_), zero_);
            v[static_cast<std::size_t>(f)] = one_like(zero_);
            for (long long t = 0; t < r; ++t)
                v[static_cast<std::size_t>(pivot_cols[static_cast<std::size_t>(t)])] = zero_ - m.at(t, f);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

  private:
    // destructive row echelon; returns rank, optionally reports pivot columns
    long long eliminate(std::vector<long long>* pivot_cols) {
        long long r = 0;
        for (long long c = 0; c < cols_ && r < rows_; ++c) {
            long long piv = -1;
            for (long long i = r; i < rows_; ++i)
                if (!(at(i, c) == zero_)) {
                    piv = i;
                    break;
                }
            if (piv < 0) continue;
            if (piv != r)
                for (long long j = 0; j < cols_; ++j) std::swap(at(piv, j), at(r, j));
            for (long long i = r + 1; i < rows_; ++i) {
                if (at(i, c) == zero_) continue;
                K f = at(i, c) / at(r, c);
                for (long long j = c; j < cols_; ++j) at(i, j) = at(i, j) - f * at(r, j);
            }
            if (pivot_cols) pivot_cols->push_back(c);
            ++r;
        }
        return r;
    }

    long long rows_, cols_;
    K zero_;
    std::vector<K> data_;
};

/*
 * Basis of (row span of m1) ∩ (row span of m2).  A kernel vector (y, z) of
 * the n x (r1+r2) system m1^T y - m2^T z = 0 maps to y^T m1; the map is
 * injective whenever both inputs have full row rank, so the kernel basis
 * carries over to an intersection basis.
 */
template <class K>
Matrix<K> intersection_basis(const Matrix<K>& m1, const Matrix<K>& m2) {
    if (m1.cols() != m2.cols() || !(m1.zero_element() == m2.zero_element()))
        throw std::invalid_argument("intersection: ambient mismatch");
    long long n = m1.cols(), r1 = m1.rows(), r2 = m2.rows();
    const K& zero = m1.zero_element();
    Matrix<K> sys(n, r1 + r2, zero);
    for (long long i = 0; i < n; ++i) {
        for (long long j = 0; j < r1; ++j) sys.at(i, j) = m1.at(j, i);
        for (long long j = 0; j < r2; ++j) sys.at(i, r1 + j) = zero - m2.at(j, i);
    }
    std::vector<std::vector<K>> ker = sys.kernel_basis();
    Matrix<K> out(static_cast<long long>(ker.size()), n, zero);
    for (std::size_t v = 0; v < ker.size(); ++v)
        for (long long j = 0; j < n; ++j) {
            K acc = zero;
            for (long long i = 0; i < r1; ++i) acc = acc + ker[v][static_cast<std::size_t>(i)] * m1.at(i, j);
            out.at(static_cast<long long>(v), j) = acc;
        }
    return out;
}

}  // namespace bnd
