#include <algorithm>
#include <functional>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "bnd/flag_pairs.hpp"

using namespace bnd;

namespace {
void permutations(int n, const std::function<void(const WindowPerm&)>& fn) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
    do {
        fn(WindowPerm(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

std::vector<int> complete_coranks(int n) {
    std::vector<int> v;
    for (int a = 0; a <= n; ++a) v.push_back(a);
    return v;
}

template <class K>
Flag<K> standard_complete_flag(int n, const K& zero) {
    Matrix<K> id = Matrix<K>::identity(n, zero);
    std::vector<Matrix<K>> strata;
    for (int a = 0; a <= n; ++a) {
        std::vector<long long> rows;
        for (int i = a; i < n; ++i) rows.push_back(i);
        strata.push_back(id.submatrix_rows(rows));
    }
    return Flag<K>(n, complete_coranks(n), std::move(strata));
}

// exhaustive search for the permutation matching the meet table; requires a
// unique hit, which is the uniqueness half of the structure theorem
template <class K>
WindowPerm oracle_associated(const FlagPair<K>& pair) {
    int n = pair.ambient_dim();
    std::vector<int> abar = pair.p().coranks();
    if (abar.back() != n) abar.push_back(n);
    std::vector<int> bbar = pair.q().coranks();
    if (bbar.back() != n) bbar.push_back(n);
    std::vector<WindowPerm> hits;
    permutations(n, [&](const WindowPerm& s) {
        for (int a : abar)
            for (int b : bbar)
                if (window_rank(s, a, b) != pair.meet_dim_extended(a, b)) return;
        WindowPerm inv = s.inverse();
        for (int a = 1; a < n; ++a)
            if (!pair.p().has_corank(a) && s(a) >= s(a - 1)) return;
        for (int b = 1; b < n; ++b)
            if (!pair.q().has_corank(b) && inv(b) >= inv(b - 1)) return;
        hits.push_back(s);
    });
    REQUIRE(hits.size() == 1);
    return hits.front();
}

std::vector<int> random_corank_set(SplitMix64& rng, const WindowPerm& s) {
    int n = s.size();
    std::vector<int> out{0};
    for (int a = 1; a < n; ++a)
        if (s(a) > s(a - 1) || rng.below(2) == 0) out.push_back(a);
    if (rng.below(2) == 0) out.push_back(n);
    return out;
}

WindowPerm random_perm(SplitMix64& rng, int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) {
        auto j = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(v[static_cast<std::size_t>(i)], v[j]);
    }
    return WindowPerm(v);
}
}  // namespace

TEST_CASE("prime field arithmetic") {
    Fp a(3, 7), b(5, 7);
    CHECK((a + b).value() == 1);
    CHECK((a - b).value() == 5);
    CHECK((a * b).value() == 1);
    CHECK((a / b).value() == (a * b.inverse()).value());
    CHECK((b.inverse() * b).value() == 1);
    CHECK((-a).value() == 4);
    CHECK(Fp(-1, 7).value() == 6);
    CHECK(Fp(1, 2).inverse().value() == 1);
    CHECK_THROWS_AS(Fp(0, 7).inverse(), std::invalid_argument);
    CHECK_THROWS_AS(Fp(3, 9).inverse(), std::invalid_argument);  // 3 not invertible mod 9
    CHECK_THROWS_AS(a + Fp(1, 11), std::invalid_argument);
    CHECK_THROWS_AS(Fp(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(Fp(0, 1LL << 31), std::invalid_argument);
}

TEST_CASE("is_prime") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(101));
    CHECK(is_prime(2147483647));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(4));
    CHECK_FALSE(is_prime(91));
}

TEST_CASE("matrix rank and kernel") {
    Rational z(0), one(1);
    Matrix<Rational> id = Matrix<Rational>::identity(3, z);
    CHECK(id.rank() == 3);
    CHECK(id.kernel_basis().empty());

    Matrix<Rational> m({{one, one, z}, {z, z, one}}, 3, z);
    CHECK(m.rank() == 2);
    auto ker = m.kernel_basis();
    REQUIRE(ker.size() == 1);
    for (const auto& v : ker)
        for (long long i = 0; i < m.rows(); ++i) {
            Rational acc(0);
            for (long long j = 0; j < m.cols(); ++j) acc += m.at(i, j) * v[static_cast<std::size_t>(j)];
            REQUIRE(acc == 0);
        }

    Matrix<Rational> sing({{one, one}, {one, one}}, 2, z);
    CHECK(sing.rank() == 1);
    CHECK(Matrix<Rational>(0, 4, z).rank() == 0);
    CHECK(Matrix<Rational>(0, 2, z).kernel_basis().size() == 2);

    Matrix<Fp> mp({{Fp(2, 5), Fp(4, 5)}, {Fp(1, 5), Fp(2, 5)}}, 2, Fp(0, 5));
    CHECK(mp.rank() == 1);
    CHECK(mp.kernel_basis().size() == 1);
}

TEST_CASE("intersection of row spans") {
    Rational z(0), one(1);
    // two planes in k^3 meeting in a line
    Matrix<Rational> p1({{one, z, z}, {z, one, z}}, 3, z);
    Matrix<Rational> p2({{z, one, z}, {z, z, one}}, 3, z);
    Matrix<Rational> cap = intersection_basis(p1, p2);
    REQUIRE(cap.rows() == 1);
    CHECK(cap.at(0, 0) == 0);
    CHECK(cap.at(0, 2) == 0);
    CHECK(!(cap.at(0, 1) == 0));
    // transverse lines in k^2
    Matrix<Rational> l1({{one, z}}, 2, z);
    Matrix<Rational> l2({{z, one}}, 2, z);
    CHECK(intersection_basis(l1, l2).rows() == 0);
    // containment
    CHECK(intersection_basis(p1, Matrix<Rational>::identity(3, z)).rows() == 2);
    CHECK(intersection_basis(p1, Matrix<Rational>(0, 3, z)).rows() == 0);
}

TEST_CASE("flag validation") {
    Rational z(0), one(1);
    Matrix<Rational> id = Matrix<Rational>::identity(2, z);
    CHECK_THROWS_AS(Flag<Rational>(2, {1, 2}, {id.submatrix_rows({1}), Matrix<Rational>(0, 2, z)}),
                    std::invalid_argument);  // missing corank 0
    CHECK_THROWS_AS(Flag<Rational>(2, {0}, {Matrix<Rational>({{one, one}, {one, one}}, 2, z)}),
                    std::invalid_argument);  // rank-deficient stratum
    CHECK_THROWS_AS(Flag<Rational>(2, {0, 1}, {id, id.submatrix_rows({0, 1})}),
                    std::invalid_argument);  // wrong shape
    // non-nested: corank-2 line outside the corank-1 plane in k^3
    Matrix<Rational> id3 = Matrix<Rational>::identity(3, z);
    CHECK_THROWS_AS(Flag<Rational>(3, {0, 1, 2},
                                   {id3, id3.submatrix_rows({0, 1}), id3.submatrix_rows({2})}),
                    std::invalid_argument);
    Matrix<Rational> diag({{one, one}}, 2, z);
    // they are nested when the line lies inside the plane
    Flag<Rational> ok(2, {0, 1, 2}, {id, diag, Matrix<Rational>(0, 2, z)});
    CHECK(ok.stratum(1).rows() == 1);
    CHECK_THROWS_AS(ok.stratum(3), std::invalid_argument);
}

TEST_CASE("meet dimensions") {
    Rational z(0);
    int n = 4;
    FlagPair<Rational> same(standard_complete_flag(n, z), standard_complete_flag(n, z));
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b) REQUIRE(same.meet_dim(a, b) == n - std::max(a, b));

    FlagPair<Rational> pair = random_flag_pair(WindowPerm::reversal(2), {0, 1, 2}, {0, 1, 2}, z, 7);
    CHECK(pair.meet_dim(1, 1) == 0);
    CHECK(pair.meet_dim(0, 0) == 2);
    CHECK_THROWS_AS(pair.meet_dim(3, 0), std::invalid_argument);
}

TEST_CASE("meet_dim is order-reversing in each corank") {
    Rational z(0);
    SplitMix64 rng(99);
    for (int n = 2; n <= 5; ++n) {
        WindowPerm s = random_perm(rng, n);
        FlagPair<Rational> pair =
            random_flag_pair(s, complete_coranks(n), complete_coranks(n), z, rng.next());
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                REQUIRE(pair.meet_dim(a, b) >= pair.meet_dim(a + 1, b));
                REQUIRE(pair.meet_dim(a, b) >= pair.meet_dim(a, b + 1));
            }
    }
}

TEST_CASE("associated permutation of the pinned pairs") {
    Rational z(0);
    FlagPair<Rational> same(standard_complete_flag(3, z), standard_complete_flag(3, z));
    CHECK(associated_permutation(same) == WindowPerm::identity(3));

    Matrix<Rational> id = Matrix<Rational>::identity(2, z);
    Flag<Rational> p = standard_complete_flag(2, z);
    Flag<Rational> q(2, {0, 1, 2}, {id, id.submatrix_rows({0}), Matrix<Rational>(0, 2, z)});
    FlagPair<Rational> transverse(p, q);
    CHECK(associated_permutation(transverse) == WindowPerm::reversal(2));
    CHECK(oracle_associated(transverse) == WindowPerm::reversal(2));
}

TEST_CASE("random pair round-trips and matches the exhaustive oracle") {
    SplitMix64 rng(0x5EED);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 2 + static_cast<int>(rng.below(4));  // n in [2,5]
        WindowPerm s = random_perm(rng, n);
        std::vector<int> a_set = random_corank_set(rng, s);
        std::vector<int> b_set = random_corank_set(rng, s.inverse());
        std::uint64_t seed = rng.next();
        if (iter % 2 == 0) {
            FlagPair<Rational> pair = random_flag_pair(s, a_set, b_set, Rational(0), seed);
            REQUIRE(associated_permutation(pair) == s);
            REQUIRE(oracle_associated(pair) == s);
        } else {
            FlagPair<Fp> pair = random_flag_pair(s, a_set, b_set, Fp(0, 101), seed);
            REQUIRE(associated_permutation(pair) == s);
            REQUIRE(oracle_associated(pair) == s);
        }
    }
}

TEST_CASE("random_flag_pair rejects incompatible corank sets") {
    CHECK_THROWS_AS(random_flag_pair(WindowPerm::identity(3), {0}, {0, 1, 2, 3}, Rational(0), 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(random_flag_pair(WindowPerm::identity(3), {0, 1, 2, 3}, {0}, Rational(0), 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(random_flag_pair(WindowPerm::identity(2), {5}, {0, 1, 2}, Rational(0), 1),
                    std::invalid_argument);
    // reversal needs no interior coranks at all
    FlagPair<Rational> pair = random_flag_pair(WindowPerm::reversal(3), {0}, {0}, Rational(0), 3);
    CHECK(associated_permutation(pair) == WindowPerm::reversal(3));
}

TEST_CASE("random_flag_pair is deterministic in the seed") {
    WindowPerm s = WindowPerm({1, 3, 0, 2});
    auto coranks = complete_coranks(4);
    FlagPair<Rational> a = random_flag_pair(s, coranks, coranks, Rational(0), 42);
    FlagPair<Rational> b = random_flag_pair(s, coranks, coranks, Rational(0), 42);
    for (int x = 0; x <= 4; ++x)
        for (int y = 0; y <= 4; ++y) REQUIRE(a.meet_dim(x, y) == b.meet_dim(x, y));
    CHECK(a.p().stratum(0) == b.p().stratum(0));
}

TEST_CASE("adapted basis satisfies both span families") {
    Rational z(0);
    // the construction self-verifies; re-check the pinned n=2 example here
    Matrix<Rational> id = Matrix<Rational>::identity(2, z);
    Flag<Rational> p = standard_complete_flag(2, z);
    Flag<Rational> q(2, {0, 1, 2}, {id, id.submatrix_rows({0}), Matrix<Rational>(0, 2, z)});
    FlagPair<Rational> transverse(p, q);
    Matrix<Rational> basis = adapted_basis(transverse);
    // v_0 spans Q^1 = <e_0>, v_1 spans P^1 = <e_1>
    CHECK(basis.at(0, 1) == 0);
    CHECK(!(basis.at(0, 0) == 0));
    CHECK(basis.at(1, 0) == 0);
    CHECK(!(basis.at(1, 1) == 0));

    SplitMix64 rng(0xADA97ED);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 2 + static_cast<int>(rng.below(4));
        WindowPerm s = random_perm(rng, n);
        std::vector<int> a_set = random_corank_set(rng, s);
        std::vector<int> b_set = random_corank_set(rng, s.inverse());
        std::uint64_t seed = rng.next();
        if (iter % 2 == 0) {
            FlagPair<Rational> pair = random_flag_pair(s, a_set, b_set, Rational(0), seed);
            CHECK(adapted_basis(pair).rank() == n);
        } else {
            FlagPair<Fp> pair = random_flag_pair(s, a_set, b_set, Fp(0, 5), seed);
            CHECK(adapted_basis(pair).rank() == n);
        }
    }
}

TEST_CASE("degeneracy locus membership") {
    Rational z(0);
    FlagPair<Rational> same(standard_complete_flag(2, z), standard_complete_flag(2, z));
    CHECK(in_degeneracy_locus(same, WindowPerm::identity(2)));

    Matrix<Rational> id = Matrix<Rational>::identity(2, z);
    Flag<Rational> q(2, {0, 1, 2}, {id, id.submatrix_rows({0}), Matrix<Rational>(0, 2, z)});
    FlagPair<Rational> transverse(standard_complete_flag(2, z), q);
    CHECK_FALSE(in_degeneracy_locus(transverse, WindowPerm::identity(2)));

    // essential set outside the recorded coranks
    FlagPair<Rational> coarse = random_flag_pair(WindowPerm::reversal(3), {0}, {0}, z, 5);
    CHECK_THROWS_AS(in_degeneracy_locus(coarse, WindowPerm::identity(3)), std::invalid_argument);
    CHECK_THROWS_AS(in_degeneracy_locus(coarse, WindowPerm::identity(4)), std::invalid_argument);
}

TEST_CASE("membership in D_sigma is the Bruhat comparison, exhaustive n=3 over F_5") {
    SplitMix64 rng(31);
    permutations(3, [&](const WindowPerm& tau) {
        FlagPair<Fp> pair =
            random_flag_pair(tau, complete_coranks(3), complete_coranks(3), Fp(0, 5), rng.next());
        permutations(3, [&](const WindowPerm& sigma) {
            REQUIRE(in_degeneracy_locus(pair, sigma) == bruhat_leq(tau, sigma));
        });
    });
}
