// imzv: command-line access to t-shuffle products, interpolated expansions,
// numerical evaluation and the verification suites.
//
// Exit codes: 0 success, 1 identity or tolerance failure, 2 usage/parse error.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "imzv/closedforms.hpp"
#include "imzv/halg.hpp"
#include "imzv/mzvnum.hpp"
#include "imzv/tshuffle.hpp"
#include "imzv/verify.hpp"
#include "imzv/words.hpp"
#include "imzv/zeta_combo.hpp"

namespace {

using namespace imzv;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool json_output(const std::string& format) { return format == "json"; }

void print(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

bool looks_like_index(const std::string& s) { return !s.empty() && s.front() == '('; }

int cmd_product(const std::string& a, const std::string& b, const std::string& format) {
    const HElement u = parse_helement(a);
    const HElement v = parse_helement(b);
    const HElement r = tshuffle(u, v);
    if (json_output(format))
        print(r.to_json());
    else
        std::cout << r.to_text() << "\n";
    return kExitOk;
}

int cmd_expand(const std::string& text, const std::string& format) {
    const Index idx = parse_index(text);
    if (!idx.admissible()) throw UsageError("index " + idx.str() + " is not admissible (first entry must be >= 2)");
    const ZetaCombo r = expand_index(idx);
    if (json_output(format))
        print(r.to_json());
    else
        std::cout << r.to_text() << "\n";
    return kExitOk;
}

int cmd_eval(const std::string& text, const std::string& t_text, double tol, bool interpolated, const std::string& method,
             const std::string& format) {
    const ZetaCombo zc = parse_zeta_combo(text, interpolated ? Interpretation::Interpolated : Interpretation::Plain);
    const Rational t0 = parse_rational(t_text);
    const EvalResult r = eval_combo(zc, t0, tol, parse_eval_method(method));
    const bool ok = r.tolerance_met && r.error_estimate <= std::max(tol, kErrorFloor);
    if (json_output(format)) {
        print({{"value", r.value},
               {"error_estimate", r.error_estimate},
               {"cutoff_used", r.cutoff_used},
               {"tolerance", tol},
               {"tolerance_met", ok},
               {"method", to_string(r.method)}});
    } else {
        char buf[128];
        std::snprintf(buf, sizeof buf, "%.12f +/- %.3g", r.value, r.error_estimate);
        std::cout << buf;
        if (!ok) std::cout << "  (tolerance " << tol << " not met)";
        std::cout << "\n";
    }
    return ok ? kExitOk : kExitFailure;
}

int cmd_verify(const std::string& suite, const VerifyOptions& options, const std::string& format) {
    if (!is_suite(suite)) {
        std::string known;
        for (const auto& n : suite_names()) known += (known.empty() ? "" : ", ") + n;
        throw UsageError("unknown suite '" + suite + "' (known: " + known + ")");
    }
    const VerifyReport report = run_suite(suite, options);
    if (json_output(format))
        print(report.to_json());
    else
        std::cout << report.to_text() << "\n";
    return report.ok() ? kExitOk : kExitFailure;
}

int cmd_dual(const std::string& text, const std::string& format) {
    if (looks_like_index(text)) {
        const Index idx = parse_index(text);
        const Index d = dual(idx);
        if (json_output(format))
            print({{"index", idx.str()}, {"dual", d.str()}});
        else
            std::cout << d.str() << "\n";
    } else {
        const Word w(text);
        const Word d = dual(w);
        if (json_output(format))
            print({{"word", w.str()}, {"dual", d.str()}});
        else
            std::cout << d.str() << "\n";
    }
    return kExitOk;
}

int cmd_index(const std::string& text, const std::string& format) {
    Index idx;
    Word w;
    if (looks_like_index(text)) {
        idx = parse_index(text);
        w = word_from_index(idx);
    } else {
        w = Word(text);
        idx = index_from_word(w);
    }
    if (json_output(format)) {
        print({{"index", idx.str()},
               {"word", w.str()},
               {"weight", idx.weight()},
               {"depth", idx.depth()},
               {"height", idx.height()},
               {"admissible", idx.admissible()}});
    } else {
        std::cout << (looks_like_index(text) ? w.str() : idx.str()) << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interpolated multiple zeta values: t-shuffle products, expansions and verification"};
    app.require_subcommand(1);
    app.fallthrough();  // --format is accepted before or after the subcommand
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::string w1, w2;
    auto* product = app.add_subcommand("product", "t-shuffle product of two words or elements (\"1\" is the empty word)");
    product->add_option("w1", w1)->required();
    product->add_option("w2", w2)->required();

    std::string index_text;
    auto* expand = app.add_subcommand("expand", "expand an interpolated symbol into plain symbols, e.g. \"(2,1)\"");
    expand->add_option("index", index_text)->required();

    std::string combo, t_text = "0", method = "auto";
    double tol = 1e-6;
    bool interpolated = false;
    auto* eval = app.add_subcommand("eval", "numerically evaluate a combination such as \"2*z(2,2)+4*z(3,1)\"");
    eval->add_option("combo", combo)->required();
    eval->add_option("--t", t_text, "Rational value substituted for t");
    eval->add_option("--tol", tol, "Absolute error target")->check(CLI::PositiveNumber);
    eval->add_flag("--interpolated", interpolated, "Read z(...) as interpolated symbols");
    eval->add_option("--method", method, "auto, partial-sums or half-split");

    std::string suite;
    VerifyOptions vopts;
    long max = 0, r = 0, s = 0, max_exp = 0, k = 0, p = 0, count = 0, max_weight = 0;
    double vtol = 0;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite)->required();
    auto* o_max = verify->add_option("--max", max, "Main grid bound");
    auto* o_r = verify->add_option("--r", r, "Depth bound of the first word");
    auto* o_s = verify->add_option("--s", s, "Depth bound of the second word");
    auto* o_max_exp = verify->add_option("--max-exp", max_exp, "Exponent bound");
    auto* o_k = verify->add_option("--k", k, "Single k");
    auto* o_p = verify->add_option("--p", p, "Single p");
    auto* o_count = verify->add_option("--count", count, "Number of sampled cases");
    auto* o_max_weight = verify->add_option("--max-weight", max_weight, "Weight bound for numeric suites");
    auto* o_tol = verify->add_option("--tol", vtol, "Numeric tolerance");
    verify->add_option("--seed", vopts.seed, "Seed for sampled suites");

    std::string dual_text;
    auto* dualc = app.add_subcommand("dual", "dual of an admissible word or index");
    dualc->add_option("word_or_index", dual_text)->required();

    std::string idx_text;
    auto* indexc = app.add_subcommand("index", "convert between words and indices");
    indexc->add_option("word_or_index", idx_text)->required();

    auto* disc = app.add_subcommand("discrepancies", "compare the uncorrected formula variants with the recursive product");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*product) return cmd_product(w1, w2, format);
        if (*expand) return cmd_expand(index_text, format);
        if (*eval) return cmd_eval(combo, t_text, tol, interpolated, method, format);
        if (*verify) {
            if (*o_max) vopts.max = max;
            if (*o_r) vopts.r = r;
            if (*o_s) vopts.s = s;
            if (*o_max_exp) vopts.max_exp = max_exp;
            if (*o_k) vopts.k = k;
            if (*o_p) vopts.p = p;
            if (*o_count) vopts.count = count;
            if (*o_max_weight) vopts.max_weight = max_weight;
            if (*o_tol) vopts.tol = vtol;
            return cmd_verify(suite, vopts, format);
        }
        if (*dualc) return cmd_dual(dual_text, format);
        if (*indexc) return cmd_index(idx_text, format);
        if (*disc) {
            print(discrepancy_report());
            return kExitOk;
        }
    } catch (const std::exception& e) {
        // Malformed words, indices, combos and bounds are all usage errors.
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
