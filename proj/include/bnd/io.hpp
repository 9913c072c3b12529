#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "bnd/analyzer.hpp"
#include "bnd/dot_array.hpp"
#include "bnd/exact_linalg.hpp"
#include "bnd/flag_pairs.hpp"
#include "bnd/window_perm.hpp"
#include "bnd/zperm.hpp"

/*
 * Text and JSON codecs for every value the command-line surface exchanges.
 * All formatting lives here so the CLI itself stays a pure dispatcher and the
 * codecs can be unit-tested without spawning processes.
 *
 * JSON conventions: objects use canonical (alphabetical) key order, rationals
 * are lowest-terms strings "p/q", and integers wider than a signed long are
 * emitted as decimal strings.  Parsing an emitted report and re-serializing
 * it is byte-identical.
 */

namespace bnd {

using json = nlohmann::json;

namespace detail {
inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

inline long long parse_ll(const std::string& tok, const std::string& what) {
    const std::string t = trim(tok);
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(t, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(what + ": expected an integer, got '" + tok + "'");
    }
    if (used != t.size())
        throw std::invalid_argument(what + ": trailing characters in '" + tok + "'");
    return v;
}
}  // namespace detail

// ---- dot arrays: "a:b,a:b,..." (empty string = empty array) ----

inline DotArray parse_dots(const std::string& text) {
    std::vector<Dot> dots;
    if (detail::trim(text).empty()) return DotArray(std::move(dots));
    for (const std::string& piece : detail::split(text, ',')) {
        auto parts = detail::split(piece, ':');
        if (parts.size() != 2)
            throw std::invalid_argument("dots: expected 'row:col', got '" + piece + "'");
        dots.emplace_back(detail::parse_ll(parts[0], "dots: row"),
                          detail::parse_ll(parts[1], "dots: column"));
    }
    return DotArray(std::move(dots));  // rejects repeated rows/columns, negatives
}

inline std::string format_dots(const DotArray& pi) {
    std::string out;
    for (const Dot& d : pi.dots()) {  // dots() is sorted by row
        if (!out.empty()) out += ',';
        out += std::to_string(d.first) + ':' + std::to_string(d.second);
    }
    return out;
}

// "(a,b) (a,b) ..." used for essential sets
inline std::string format_dot_pairs(const std::vector<Dot>& dots) {
    std::string out;
    for (const Dot& d : dots) {
        if (!out.empty()) out += ' ';
        out += '(' + std::to_string(d.first) + ',' + std::to_string(d.second) + ')';
    }
    return out;
}

// ---- window permutations: comma-separated images "2,0,1" (0-indexed) ----

inline WindowPerm parse_perm(const std::string& text) {
    std::vector<int> images;
    for (const std::string& piece : detail::split(text, ',')) {
        long long v = detail::parse_ll(piece, "perm: entry");
        if (v < 0 || v > 1000000) throw std::invalid_argument("perm: entry out of range");
        images.push_back(static_cast<int>(v));
    }
    return WindowPerm(std::move(images));  // rejects non-bijections
}

inline std::string format_perm(const WindowPerm& w) {
    std::string out;
    for (int i = 0; i < w.size(); ++i) {
        if (!out.empty()) out += ',';
        out += std::to_string(w(i));
    }
    return out;
}

// ---- confined permutations ----

inline std::string format_confined(const ZPerm& pi) {
    std::string out = "tail_shift: " + std::to_string(pi.tail_shift()) + "\n";
    if (pi.window_empty()) {
        out += "window: []\n";
    } else {
        out += "window: [" + std::to_string(pi.window_lo()) + ", " +
               std::to_string(pi.window_hi()) + "]\n";
        for (auto [n, v] : pi.window_entries())
            out += std::to_string(n) + " -> " + std::to_string(v) + "\n";
    }
    return out;
}

// ---- JSON encoders ----

inline json dots_to_json(const std::vector<Dot>& dots) {
    json arr = json::array();
    for (const Dot& d : dots) arr.push_back(json::array({d.first, d.second}));
    return arr;
}

inline json zperm_to_json(const ZPerm& pi) {
    json j;
    j["tail_shift"] = pi.tail_shift();
    json win = json::array();
    json table = json::array();
    if (!pi.window_empty()) {
        win.push_back(pi.window_lo());
        win.push_back(pi.window_hi());
        for (auto [n, v] : pi.window_entries()) table.push_back(json::array({n, v}));
    }
    j["window"] = std::move(win);
    j["table"] = std::move(table);
    return j;
}

inline json perm_to_json(const WindowPerm& w) {
    json arr = json::array();
    for (int i = 0; i < w.size(); ++i) arr.push_back(w(i));
    return arr;
}

inline json bigint_to_json(const BigInt& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());  // too wide for consumers' doubles: keep exact as text
}

/*
 * Report schema (top level, canonical order): chow, codim, confined_perm,
 * dim_coupled_tensors, essential_set, input, nonempty, pi_prime, point_count,
 * rho, schubert_smooth, valid.  point_count appears only at rho = 0;
 * pi_prime and schubert_smooth appear only when the dot array fits in
 * [0,d]^2 (otherwise the locus is empty and no right-sized restriction
 * exists).  Invalid inputs carry only {input, reason, valid}.
 */
inline json report_to_json(const BNReport& rep, json input_echo) {
    json j;
    j["input"] = std::move(input_echo);
    j["valid"] = rep.valid;
    if (!rep.valid) {
        j["reason"] = rep.reason;
        return j;
    }
    j["rho"] = rep.rho;
    j["codim"] = rep.codim;
    j["nonempty"] = rep.nonempty;
    j["chow"] = json{{"coeff", rep.chow.coeff.get_str()}, {"theta_power", rep.chow.theta_power}};
    if (rep.point_count) j["point_count"] = bigint_to_json(*rep.point_count);
    if (rep.confined_perm) j["confined_perm"] = zperm_to_json(*rep.confined_perm);
    j["essential_set"] = dots_to_json(rep.essential_set);
    if (rep.pi_prime) {
        const PiPrimeBlock& pp = *rep.pi_prime;
        j["pi_prime"] = json{{"M", pp.m_shift},
                             {"N", pp.n_shift},
                             {"d_prime", pp.d_prime},
                             {"n", pp.n},
                             {"map", perm_to_json(pp.perm)}};
        j["schubert_smooth"] = rep.schubert_smooth;
    }
    j["dim_coupled_tensors"] = rep.dim_coupled_tensors;
    return j;
}

inline std::string format_chow(const ChowCoefficient& c) {
    return c.coeff.get_str() + " * theta^" + std::to_string(c.theta_power);
}

inline std::string format_report_text(const BNReport& rep) {
    std::string out = "valid: " + std::string(rep.valid ? "true" : "false") + "\n";
    if (!rep.valid) return out + "reason: " + rep.reason + "\n";
    out += "rho: " + std::to_string(rep.rho) + "\n";
    out += "codim: " + std::to_string(rep.codim) + "\n";
    out += "nonempty: " + std::string(rep.nonempty ? "true" : "false") + "\n";
    out += "chow: " + format_chow(rep.chow) + "\n";
    if (rep.point_count) out += "point_count: " + rep.point_count->get_str() + "\n";
    if (rep.confined_perm) {
        out += "confined_perm:\n";
        for (const std::string& line : detail::split(format_confined(*rep.confined_perm), '\n'))
            if (!line.empty()) out += "  " + line + "\n";
    }
    out += "essential_set: " + format_dot_pairs(rep.essential_set) + "\n";
    if (rep.pi_prime) {
        const PiPrimeBlock& pp = *rep.pi_prime;
        out += "pi_prime: M=" + std::to_string(pp.m_shift) + " N=" + std::to_string(pp.n_shift) +
               " d_prime=" + std::to_string(pp.d_prime) + " n=" + std::to_string(pp.n) + "\n";
        out += "  map: " + format_perm(pp.perm) + "\n";
        out += "schubert_smooth: " + std::string(rep.schubert_smooth ? "true" : "false") + "\n";
    }
    out += "dim_coupled_tensors: " + std::to_string(rep.dim_coupled_tensors) + "\n";
    if (rep.singular_strata_list && !rep.singular_strata_list->empty()) {
        out += "singular_strata:";
        for (const WindowPerm& w : *rep.singular_strata_list) out += " [" + format_perm(w) + "]";
        out += "\n";
    }
    return out;
}

// ---- flag pairs: matrices as arrays of rows ----

inline json scalar_to_json(const Rational& x) { return json(x.get_str()); }
inline json scalar_to_json(const Fp& x) { return json(x.value()); }

template <class K>
json matrix_to_json(const Matrix<K>& m) {
    json rows = json::array();
    for (long long i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (long long j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

// coranks as a sorted array; strata as an aligned array of row bases
template <class K>
json flag_to_json(const Flag<K>& f) {
    json j;
    j["coranks"] = f.coranks();
    json strata = json::array();
    for (int a : f.coranks()) strata.push_back(matrix_to_json(f.stratum_extended(a)));
    j["strata"] = std::move(strata);
    return j;
}

}  // namespace bnd
