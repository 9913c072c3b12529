#pragma once

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace bnd {

/*
 * A permutation of {0, 1, ..., n-1} stored in one-line notation.  All indices
 * and values are 0-based throughout the library; textual interfaces that want
 * 1-based conventions convert at the boundary.
 */
class WindowPerm {
  public:
    WindowPerm() = default;

    explicit WindowPerm(std::vector<int> images) : map_(std::move(images)) {
        int n = static_cast<int>(map_.size());
        if (n == 0) throw std::invalid_argument("window permutation: empty one-line notation");
        std::vector<char> seen(map_.size(), 0);
        for (int v : map_) {
            if (v < 0 || v >= n || seen[v])
                throw std::invalid_argument("window permutation: not a bijection of [0,n)");
            seen[v] = 1;
        }
    }

    static WindowPerm identity(int n) {
        std::vector<int> m(n);
        for (int i = 0; i < n; ++i) m[i] = i;
        return WindowPerm(std::move(m));
    }

    // n-1, n-2, ..., 0: the longest element.
    static WindowPerm reversal(int n) {
        std::vector<int> m(n);
        for (int i = 0; i < n; ++i) m[i] = n - 1 - i;
        return WindowPerm(std::move(m));
    }

    int size() const { return static_cast<int>(map_.size()); }

    int operator()(int i) const {
        if (i < 0 || i >= size()) throw std::invalid_argument("window permutation: index out of range");
        return map_[i];
    }

    const std::vector<int>& images() const { return map_; }

    WindowPerm inverse() const {
        std::vector<int> inv(map_.size());
        for (int i = 0; i < size(); ++i) inv[map_[i]] = i;
        return WindowPerm(std::move(inv));
    }

    // (*this) after `other`: result(i) = this(other(i)).
    WindowPerm compose(const WindowPerm& other) const {
        if (size() != other.size())
            throw std::invalid_argument("window permutation: size mismatch in compose");
        std::vector<int> m(map_.size());
        for (int i = 0; i < size(); ++i) m[i] = map_[other.map_[i]];
        return WindowPerm(std::move(m));
    }

    long long length() const {  // inversion count
        long long inv = 0;
        for (int i = 0; i < size(); ++i)
            for (int j = i + 1; j < size(); ++j)
                if (map_[i] > map_[j]) ++inv;
        return inv;
    }

    // positions i with w(i) > w(i+1); these index the simple reflections s_i
    std::vector<int> right_descents() const {
        std::vector<int> d;
        for (int i = 0; i + 1 < size(); ++i)
            if (map_[i] > map_[i + 1]) d.push_back(i);
        return d;
    }

    // swap values i, i+1: returns s_i * w
    WindowPerm left_mult_simple(int i) const {
        check_simple(i);
        std::vector<int> m = map_;
        for (int& v : m) {
            if (v == i) v = i + 1;
            else if (v == i + 1) v = i;
        }
        return WindowPerm(std::move(m));
    }

    // swap positions i, i+1: returns w * s_i
    WindowPerm right_mult_simple(int i) const {
        check_simple(i);
        std::vector<int> m = map_;
        std::swap(m[i], m[i + 1]);
        return WindowPerm(std::move(m));
    }

    // swap positions i < j: returns w * t_{ij}
    WindowPerm right_mult_transposition(int i, int j) const {
        if (i < 0 || j <= i || j >= size())
            throw std::invalid_argument("window permutation: bad transposition");
        std::vector<int> m = map_;
        std::swap(m[i], m[j]);
        return WindowPerm(std::move(m));
    }

    bool is_identity() const {
        for (int i = 0; i < size(); ++i)
            if (map_[i] != i) return false;
        return true;
    }

    std::string to_string() const {
        std::string s;
        for (int i = 0; i < size(); ++i) {
            if (i) s += ',';
            s += std::to_string(map_[i]);
        }
        return s;
    }

    friend bool operator==(const WindowPerm& a, const WindowPerm& b) { return a.map_ == b.map_; }
    friend auto operator<=>(const WindowPerm& a, const WindowPerm& b) { return a.map_ <=> b.map_; }

  private:
    void check_simple(int i) const {
        if (i < 0 || i + 1 >= size())
            throw std::invalid_argument("window permutation: simple reflection index out of range");
    }

    std::vector<int> map_;
};

}  // namespace bnd
