#include <cstdint>
#include <iostream>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "bnd/analyzer.hpp"
#include "bnd/bruhat.hpp"
#include "bnd/dot_array.hpp"
#include "bnd/io.hpp"
#include "bnd/schubert_poly.hpp"

/*
 * Command-line surface.  Every subcommand is a thin wrapper: parse flags,
 * call the library, format the result through bnd/io.hpp.  Exit codes:
 * 0 success, 2 invalid input (reason on stderr), 1 internal error.
 */

namespace {

int emit_report(const bnd::BNReport& rep, bnd::json input_echo, bool want_json) {
    if (want_json)
        std::cout << bnd::report_to_json(rep, std::move(input_echo)).dump() << "\n";
    else
        std::cout << bnd::format_report_text(rep);
    if (!rep.valid) {
        std::cerr << rep.reason << "\n";
        return 2;
    }
    return 0;
}

template <class K>
int run_flags_demo(const bnd::WindowPerm& sigma, const K& zero, std::uint64_t seed,
                   const std::string& field_label, bool want_json) {
    int n = sigma.size();
    std::vector<int> complete(static_cast<std::size_t>(n) + 1);
    std::iota(complete.begin(), complete.end(), 0);
    auto pair = bnd::random_flag_pair(sigma, complete, complete, zero, seed);
    bnd::WindowPerm recovered = bnd::associated_permutation(pair);
    bool ok = recovered == sigma;
    if (want_json) {
        bnd::json j;
        j["ambient"] = n;
        j["field"] = field_label;
        j["perm"] = bnd::perm_to_json(sigma);
        j["recovered"] = bnd::perm_to_json(recovered);
        j["round_trip"] = ok;
        j["seed"] = seed;
        j["p_flag"] = bnd::flag_to_json(pair.p());
        j["q_flag"] = bnd::flag_to_json(pair.q());
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "ambient: " << n << "\n"
                  << "field: " << field_label << "\n"
                  << "perm: " << bnd::format_perm(sigma) << "\n"
                  << "recovered: " << bnd::format_perm(recovered) << "\n"
                  << "round_trip: " << (ok ? "ok" : "MISMATCH") << "\n";
    }
    if (!ok) {
        std::cerr << "flag pair did not reproduce the requested permutation\n";
        return 1;
    }
    return 0;
}

std::string join_positions(const std::vector<int>& pos) {
    std::string out;
    for (int p : pos) {
        if (!out.empty()) out += ',';
        out += std::to_string(p);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for two-pointed Brill-Noether degeneracy loci"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);
    int rc = 0;

    long long genus = 0, degree = 0, rank = 0;
    std::string dots_text, perm_text, field_text;
    std::uint64_t seed = 0;
    bool want_json = false, count_only = false;

    auto* analyze_cmd = app.add_subcommand("analyze", "full report for a dot array");
    analyze_cmd->add_option("--genus", genus, "curve genus g >= 1")->required();
    analyze_cmd->add_option("--degree", degree, "line bundle degree d >= 1")->required();
    analyze_cmd->add_option("--dots", dots_text, "dot array as 'a:b,a:b,...'")->required();
    analyze_cmd->add_flag("--json", want_json, "emit the JSON report");
    analyze_cmd->callback([&] {
        bnd::DotArray dots = bnd::parse_dots(dots_text);
        bnd::json echo{{"degree", degree}, {"dots", bnd::dots_to_json(dots.dots())}, {"genus", genus}};
        rc = emit_report(bnd::analyze(bnd::BNInput{genus, degree, dots}), std::move(echo), want_json);
    });

    auto* wrd_cmd = app.add_subcommand("wrd", "report for the classical locus W^r_d");
    wrd_cmd->add_option("--genus", genus, "curve genus g >= 1")->required();
    wrd_cmd->add_option("--degree", degree, "line bundle degree d >= 1")->required();
    wrd_cmd->add_option("--rank", rank, "projective rank r >= 0")->required();
    wrd_cmd->add_flag("--json", want_json, "emit the JSON report");
    wrd_cmd->callback([&] {
        bnd::json echo{{"degree", degree}, {"genus", genus}, {"rank", rank}};
        rc = emit_report(bnd::classical_wrd(genus, degree, rank), std::move(echo), want_json);
    });

    auto* confine_cmd = app.add_subcommand("confine", "the (d,g)-confined permutation of a dot array");
    confine_cmd->add_option("--dots", dots_text, "dot array as 'a:b,a:b,...'")->required();
    confine_cmd->add_option("--genus", genus, "curve genus g >= 1")->required();
    confine_cmd->add_option("--degree", degree, "line bundle degree d >= 1")->required();
    confine_cmd->callback([&] {
        std::cout << bnd::format_confined(bnd::to_confined(bnd::parse_dots(dots_text), degree, genus));
    });

    auto* ess_cmd = app.add_subcommand("ess", "essential set of a dot array");
    ess_cmd->add_option("--dots", dots_text, "dot array as 'a:b,a:b,...'")->required();
    ess_cmd->callback([&] {
        std::cout << bnd::format_dot_pairs(bnd::parse_dots(dots_text).essential_set()) << "\n";
    });

    auto* schubert_cmd = app.add_subcommand("schubert", "Schubert polynomial of a permutation");
    schubert_cmd->add_option("--perm", perm_text, "one-line notation '2,0,1' (0-indexed)")->required();
    schubert_cmd->callback([&] {
        std::cout << bnd::bjs_schubert(bnd::parse_perm(perm_text)).to_string() << "\n";
    });

    auto* rw_cmd = app.add_subcommand("reduced-words", "reduced words of a permutation");
    rw_cmd->add_option("--perm", perm_text, "one-line notation '2,0,1' (0-indexed)")->required();
    rw_cmd->add_flag("--count-only", count_only, "print only the number of reduced words");
    rw_cmd->callback([&] {
        bnd::WindowPerm w = bnd::parse_perm(perm_text);
        if (count_only) {
            std::cout << bnd::reduced_words_count(w).get_str() << "\n";
            return;
        }
        for (const std::vector<int>& word : bnd::reduced_words(w)) {
            std::string line;
            for (int s : word) {
                if (!line.empty()) line += ' ';
                line += std::to_string(s);
            }
            std::cout << line << "\n";
        }
    });

    auto* smooth_cmd = app.add_subcommand("smooth", "smoothness of the Schubert variety X_w");
    smooth_cmd->add_option("--perm", perm_text, "one-line notation '2,0,1' (0-indexed)")->required();
    smooth_cmd->callback([&] {
        bnd::WindowPerm w = bnd::parse_perm(perm_text);
        auto hit3412 = bnd::find_pattern(w, bnd::WindowPerm({2, 3, 0, 1}));
        auto hit4231 = bnd::find_pattern(w, bnd::WindowPerm({3, 1, 2, 0}));
        if (!hit3412 && !hit4231) {
            std::cout << "smooth\n";
            return;
        }
        if (hit3412)
            std::cout << "singular: contains 3412 at positions " << join_positions(*hit3412) << "\n";
        if (hit4231)
            std::cout << "singular: contains 4231 at positions " << join_positions(*hit4231) << "\n";
    });

    auto* flags_cmd = app.add_subcommand("flags", "flag-pair round trip for a permutation");
    flags_cmd->add_option("--perm", perm_text, "one-line notation '2,0,1' (0-indexed)")->required();
    flags_cmd->add_option("--field", field_text, "'q' for rationals or an odd prime modulus")
        ->required();
    flags_cmd->add_option("--seed", seed, "PRNG seed (result is a pure function of it)")->required();
    flags_cmd->add_flag("--json", want_json, "emit flags and bases as JSON");
    flags_cmd->callback([&] {
        bnd::WindowPerm sigma = bnd::parse_perm(perm_text);
        if (field_text == "q") {
            rc = run_flags_demo(sigma, bnd::Rational(0), seed, "q", want_json);
            return;
        }
        long long p = bnd::detail::parse_ll(field_text, "field");
        if (!bnd::is_prime(p)) throw std::invalid_argument("field: modulus must be prime or 'q'");
        rc = run_flags_demo(sigma, bnd::Fp(0, p), seed, field_text, want_json);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
