#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bnd/bruhat.hpp"
#include "bnd/dot_array.hpp"
#include "bnd/numeric.hpp"
#include "bnd/schubert_poly.hpp"
#include "bnd/zperm.hpp"

namespace bnd {

struct BNInput {
    long long g;
    long long d;
    DotArray dots;
};

/*
 * The rescaled permutation: slide pi by (M, N) with M = N = 2g-1 and restrict
 * to [0, n-1], n = d' + 1 - g, d' = d + M + N.  Exists only when the dot
 * array fits inside [0, d]^2.
 */
struct PiPrimeBlock {
    long long m_shift;
    long long n_shift;
    long long d_prime;
    long long n;
    WindowPerm perm;
};

struct BNReport {
    bool valid = false;
    std::string reason;  // populated exactly when !valid

    long long rho = 0;
    long long codim = 0;  // length of omega_{d-g} pi; also the coupled-tensor dimension count
    bool nonempty = false;
    ChowCoefficient chow{Rational(0), 0};
    std::optional<BigInt> point_count;  // populated exactly when rho = 0
    std::optional<ZPerm> confined_perm;
    std::vector<Dot> essential_set;
    std::optional<PiPrimeBlock> pi_prime;
    bool schubert_smooth = false;  // meaningful only when pi_prime is present
    long long dim_coupled_tensors = 0;
    std::optional<std::vector<WindowPerm>> singular_strata_list;  // only when pi_prime n <= 7
};

namespace detail {
// window restriction of a finite-length permutation, as a window permutation
inline WindowPerm finite_part(const ZPerm& p) {
    if (p.window_lo() > p.window_hi()) return WindowPerm::identity(1);
    return restrict_to_window(p, p.window_lo(), p.window_hi());
}
}  // namespace detail

inline BNReport analyze(const BNInput& in) {
    BNReport rep;
    if (in.g < 1 || in.d < 1) {
        rep.reason = "genus and degree must be positive integers";
        return rep;
    }
    long long size = static_cast<long long>(in.dots.dots().size());
    if (size < in.d + 1 - in.g) {
        rep.reason = "dot array too small: at least d + 1 - g dots are required";
        return rep;
    }
    rep.valid = true;

    ZPerm pi = to_confined(in.dots, in.d, in.g);
    ZPerm wpi = compose(ZPerm::descending(in.d - in.g), pi);
    rep.codim = finite_length(wpi);
    rep.dim_coupled_tensors = rep.codim;
    rep.rho = rho(in.g, in.d, in.dots);
    if (rep.rho != in.g - rep.codim)
        throw std::logic_error("analyzer: expected dimension disagrees with permutation length");
    rep.nonempty = rep.rho >= 0;
    rep.confined_perm = pi;
    rep.essential_set = in.dots.essential_set();

    WindowPerm w = detail::finite_part(wpi);
    rep.chow = chow_coefficient(w, in.g);
    if (rep.rho == 0) rep.point_count = reduced_words_count(w);

    bool contained = true;
    for (const auto& [a, b] : in.dots.dots())
        if (a > in.d || b > in.d) contained = false;
    if (!contained) {
        // a dot beyond degree d forces an always-zero section space
        if (rep.rho >= 0) throw std::logic_error("analyzer: out-of-square dot array with rho >= 0");
        return rep;
    }

    long long m_shift = 2 * in.g - 1, n_shift = m_shift;
    long long d_prime = in.d + m_shift + n_shift;
    long long n = d_prime + 1 - in.g;
    WindowPerm pip = restrict_to_window(slide(pi, m_shift, n_shift), 0, n - 1);
    WindowPerm pinv = pip.inverse();
    for (long long i = n - in.g; i + 1 < n; ++i)
        if (pip(static_cast<int>(i)) < pip(static_cast<int>(i + 1)) ||
            pinv(static_cast<int>(i)) < pinv(static_cast<int>(i + 1)))
            throw std::logic_error("analyzer: rescaled permutation is not decreasing on its tail block");
    std::vector<Dot> expected_ess;
    for (const auto& [a, b] : essential_set(pi)) expected_ess.emplace_back(a + m_shift, b + n_shift);
    if (essential_set_perm(pip) != expected_ess)
        throw std::logic_error("analyzer: essential set did not translate with the rescaling");

    rep.schubert_smooth = is_smooth_schubert(pip);
    if (pip.size() <= 7) rep.singular_strata_list = singular_strata(pip);
    rep.pi_prime = PiPrimeBlock{m_shift, n_shift, d_prime, n, std::move(pip)};
    return rep;
}

// the classical one-point locus W^r_d realized by the antidiagonal dot array
inline BNReport classical_wrd(long long g, long long d, long long r) {
    if (r < 0) throw std::invalid_argument("classical locus: rank must be nonnegative");
    std::vector<Dot> dots;
    for (long long i = 0; i <= r; ++i) dots.emplace_back(i, r - i);
    return analyze(BNInput{g, d, DotArray(std::move(dots))});
}

// g! * prod_{i=0}^{r} i! / (g-d+r+i)!  -- the classical point count at rho = 0
inline BigInt castelnuovo_oracle(long long g, long long d, long long r) {
    if (g < 1 || d < 1 || r < 0)
        throw std::invalid_argument("point-count oracle: g, d must be positive and r nonnegative");
    if (g - (r + 1) * (g - d + r) != 0)
        throw std::invalid_argument("point-count oracle: expected dimension must be zero");
    Rational acc(factorial(g));
    for (long long i = 0; i <= r; ++i)
        acc *= Rational(factorial(i)) / Rational(factorial(g - d + r + i));
    if (acc.get_den() != 1) throw std::logic_error("point-count oracle: non-integer result");
    return acc.get_num();
}

}  // namespace bnd
