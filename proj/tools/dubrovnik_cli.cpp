// Command-line front end: evaluates the Dubrovnik polynomial of rational
// knots and links given as braid-form tuples or tangle fractions, with
// optional cross-checking of the three engines, batch files and a golden
// selftest.  Exit codes: 0 success, 1 input error, 2 cross-check mismatch.
#include <CLI11.hpp>
#include <json.hpp>

#include "dubrovnik/closedform.hpp"
#include "dubrovnik/reduce.hpp"
#include "dubrovnik/skein.hpp"
#include "dubrovnik/tangle.hpp"

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace dubrovnik;

// A disagreement between engines on the same input; exits with code 2
// because it can only come from an implementation bug.
struct MismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ComputeOptions {
    std::string tuple_text;
    std::string fraction_text;
    std::string batch_file;
    std::vector<std::string> check_equiv;
    std::string engine = "all";
    std::string format = "plain";
    bool normalize = false;
    bool mirror = false;
    bool canonicalize = false;
};

// Everything computed for one input, for any of the output formats.
struct Evaluation {
    std::string input;
    BraidTuple tuple;
    Fraction fraction;
    std::vector<std::string> engines;
    LaurentPoly2 poly;
    bool normalized = false;
    int writhe = 0;
};

std::string trim(const std::string& s) {
    size_t begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    size_t end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

LaurentPoly2 run_engine(const std::string& name, const BraidTuple& tuple) {
    if (name == "skein") return dubrovnik_skein(tuple);
    if (name == "reduce") return dubrovnik_reduce(tuple);
    if (name == "closed") return dubrovnik_closed(tuple);
    throw std::logic_error("unknown engine " + name);
}

std::vector<std::string> engine_list(const std::string& selection) {
    if (selection == "all") return {"skein", "reduce", "closed"};
    return {selection};
}

// Folds q into 1 <= |q| <= p so the fraction has a braid-form expansion;
// K(p/q) and K(p/(q mod p)) close to the same knot or link.
Fraction fold_fraction(const Fraction& f) {
    using boost::multiprecision::abs;
    if (abs(f.q) <= f.p) return f;
    BigInt r = abs(f.q) % f.p;
    if (r == 0) r = f.p;  // only when p = 1
    return Fraction{f.p, f.q < 0 ? -r : r};
}

BraidTuple tuple_for_fraction(const Fraction& f) {
    return tuple_from_fraction(fold_fraction(f));
}

BraidTuple canonicalize_tuple(const BraidTuple& tuple) {
    const TupleValue value = tuple_value(tuple);
    if (value.kind != TupleValue::Kind::finite) {
        throw std::invalid_argument(
            "the continued fraction degenerates to 0 or infinity; "
            "no braid-form tuple exists");
    }
    return tuple_for_fraction(value.fraction);
}

Evaluation evaluate_input(const std::string& text, const ComputeOptions& opts) {
    Evaluation e;
    e.input = text;

    if (text.find('/') != std::string::npos) {
        e.tuple = tuple_for_fraction(parse_fraction(text));
    } else {
        e.tuple = parse_tuple(text);
        if (opts.canonicalize) {
            e.tuple = canonicalize_tuple(e.tuple);
        } else if (!sign_homogeneous(e.tuple)) {
            throw std::invalid_argument(
                "tuple mixes positive and negative entries; "
                "pass --canonicalize to rewrite it");
        }
    }
    if (opts.mirror) e.tuple = tuple_mirror(e.tuple);
    e.fraction = tuple_fraction(e.tuple);

    e.engines = engine_list(opts.engine);
    std::vector<LaurentPoly2> values;
    for (const std::string& name : e.engines) {
        values.push_back(run_engine(name, e.tuple));
    }
    for (size_t i = 1; i < values.size(); ++i) {
        if (values[i] != values[0]) {
            throw MismatchError("engines disagree on " + tuple_to_string(e.tuple) +
                                ": " + e.engines[0] + " and " + e.engines[i] +
                                " differ");
        }
    }
    e.poly = values[0];

    if (opts.normalize) {
        e.writhe = tuple_writhe(e.tuple);  // throws for two-component links
        e.poly = poly_monomial(1, -e.writhe, 0) * e.poly;
        e.normalized = true;
    }
    return e;
}

nlohmann::ordered_json evaluation_json(const Evaluation& e) {
    nlohmann::ordered_json out;
    out["input"] = e.input;
    out["tuple"] = e.tuple;
    out["fraction"] = fraction_to_string(e.fraction);
    out["type"] = e.fraction.is_knot() ? "knot" : "link";
    out["engines"] = e.engines;
    if (e.engines.size() > 1) out["engines_agree"] = true;
    out["normalized"] = e.normalized;
    if (e.normalized) out["writhe"] = e.writhe;
    out["polynomial"] = poly_format(e.poly);
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const Term& t : e.poly.terms()) {
        terms.push_back({{"a_exp", t.a_exp}, {"z_exp", t.z_exp}, {"coeff", t.coeff.str()}});
    }
    out["terms"] = terms;
    return out;
}

std::string format_poly(const Evaluation& e, const std::string& format) {
    return poly_format(e.poly, format == "latex" ? PolyStyle::latex : PolyStyle::plain);
}

int run_single(const std::string& text, const ComputeOptions& opts) {
    const Evaluation e = evaluate_input(text, opts);
    if (opts.format == "json") {
        std::cout << evaluation_json(e).dump(2) << "\n";
        return 0;
    }
    std::cout << format_poly(e, opts.format) << "\n";
    if (e.engines.size() > 1) {
        std::cout << "engines: " << e.engines.size() << "/" << e.engines.size()
                  << " agree\n";
    }
    return 0;
}

int run_check_equiv(const std::vector<std::string>& args, const ComputeOptions& opts) {
    const Fraction lhs = parse_fraction(args[0]);
    const Fraction rhs = parse_fraction(args[1]);
    const bool equivalent = fractions_equivalent(lhs, rhs);
    std::cout << "fractions: " << fraction_to_string(lhs) << " and "
              << fraction_to_string(rhs) << "\n";
    std::cout << "equivalent: " << (equivalent ? "yes" : "no") << "\n";
    if (!equivalent) return 0;
    if (!lhs.is_knot()) {
        std::cout << "polynomial comparison skipped (two-component link)\n";
        return 0;
    }
    // Same knot, possibly different diagrams: the writhe-normalized
    // polynomials must coincide.
    ComputeOptions sub = opts;
    sub.engine = opts.engine;
    sub.normalize = true;
    sub.mirror = false;
    const Evaluation a = evaluate_input(fraction_to_string(lhs), sub);
    const Evaluation b = evaluate_input(fraction_to_string(rhs), sub);
    const bool agree = a.poly == b.poly;
    std::cout << "normalized polynomials agree: " << (agree ? "yes" : "no") << "\n";
    if (!agree) {
        throw MismatchError("equivalent fractions produced different normalized "
                            "polynomials");
    }
    return 0;
}

int run_batch(const ComputeOptions& opts) {
    std::ifstream in(opts.batch_file);
    if (!in) {
        throw std::invalid_argument("cannot open batch file " + opts.batch_file);
    }
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);

    struct Slot {
        bool is_input = false;
        std::string text;  // echoed verbatim for comment and blank lines
        int severity = 0;
    };
    std::vector<Slot> slots(lines.size());
    std::vector<size_t> jobs;
    for (size_t i = 0; i < lines.size(); ++i) {
        const std::string trimmed = trim(lines[i]);
        if (trimmed.empty() || trimmed[0] == '#') {
            slots[i].text = lines[i];
        } else {
            slots[i].is_input = true;
            slots[i].text = trimmed;
            jobs.push_back(i);
        }
    }

    auto work_one = [&](size_t index) {
        Slot& slot = slots[index];
        try {
            const Evaluation e = evaluate_input(slot.text, opts);
            if (opts.format == "json") {
                slot.text = evaluation_json(e).dump();
            } else {
                slot.text = slot.text + " -> " + format_poly(e, opts.format);
            }
        } catch (const MismatchError& ex) {
            slot.severity = 2;
            slot.text = opts.format == "json"
                            ? nlohmann::ordered_json(
                                  {{"input", slot.text}, {"error", ex.what()}})
                                  .dump()
                            : slot.text + " -> error: " + ex.what();
        } catch (const std::exception& ex) {
            slot.severity = 1;
            slot.text = opts.format == "json"
                            ? nlohmann::ordered_json(
                                  {{"input", slot.text}, {"error", ex.what()}})
                                  .dump()
                            : slot.text + " -> error: " + ex.what();
        }
    };

    // Lines are independent; evaluate them in parallel and print in file
    // order afterwards.
    const size_t worker_count =
        std::min<size_t>(jobs.size(), std::max(1u, std::thread::hardware_concurrency()));
    if (worker_count > 1) {
        std::atomic<size_t> next{0};
        std::vector<std::thread> workers;
        for (size_t w = 0; w < worker_count; ++w) {
            workers.emplace_back([&] {
                for (size_t j = next++; j < jobs.size(); j = next++) work_one(jobs[j]);
            });
        }
        for (std::thread& t : workers) t.join();
    } else {
        for (size_t j : jobs) work_one(j);
    }

    int severity = 0;
    for (const Slot& slot : slots) {
        std::cout << slot.text << "\n";
        severity = std::max(severity, slot.severity);
    }
    return severity;
}

int run_compute(const ComputeOptions& opts) {
    const int selected = (!opts.tuple_text.empty() ? 1 : 0) +
                         (!opts.fraction_text.empty() ? 1 : 0) +
                         (!opts.batch_file.empty() ? 1 : 0) +
                         (!opts.check_equiv.empty() ? 1 : 0);
    if (selected != 1) {
        throw std::invalid_argument(
            "exactly one of --tuple, --fraction, --batch, --check-equiv is required");
    }
    if (!opts.check_equiv.empty()) return run_check_equiv(opts.check_equiv, opts);
    if (!opts.batch_file.empty()) return run_batch(opts);
    const std::string text =
        !opts.tuple_text.empty() ? opts.tuple_text : opts.fraction_text;
    return run_single(trim(text), opts);
}

int run_selftest(const std::string& fixture_path) {
    std::ifstream in(fixture_path);
    if (!in) {
        throw std::invalid_argument("cannot open fixture file " + fixture_path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    const LaurentPoly2 expected = poly_parse(trim(buffer.str()));

    const BraidTuple tuple = {4, 3, 5};
    bool all_ok = true;
    for (const std::string& name : engine_list("all")) {
        const bool ok = run_engine(name, tuple) == expected;
        all_ok = all_ok && ok;
        std::cout << name << ": " << (ok ? "ok" : "MISMATCH") << "\n";
    }
    if (!all_ok) throw MismatchError("selftest failed against " + fixture_path);
    std::cout << "selftest passed\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dubrovnik polynomial of rational knots and links"};
    app.require_subcommand(1);

    ComputeOptions opts;
    CLI::App* compute =
        app.add_subcommand("compute", "Evaluate the polynomial of a tuple or fraction");
    CLI::Option* opt_tuple = compute->add_option(
        "--tuple", opts.tuple_text, "Braid-form tuple, e.g. \"[4,3,5]\"");
    CLI::Option* opt_fraction = compute->add_option(
        "--fraction", opts.fraction_text, "Tangle fraction p/q, e.g. 69/16");
    CLI::Option* opt_batch = compute->add_option(
        "--batch", opts.batch_file,
        "File with one tuple or fraction per line; # starts a comment");
    CLI::Option* opt_check = compute->add_option(
        "--check-equiv", opts.check_equiv,
        "Two fractions to test for presenting the same knot or link");
    opt_check->expected(2);
    opt_tuple->excludes(opt_fraction, opt_batch, opt_check);
    opt_fraction->excludes(opt_batch, opt_check);
    opt_batch->excludes(opt_check);
    compute->add_option("--engine", opts.engine, "skein|reduce|closed|all")
        ->check(CLI::IsMember({"skein", "reduce", "closed", "all"}));
    compute->add_option("--format", opts.format, "plain|latex|json")
        ->check(CLI::IsMember({"plain", "latex", "json"}));
    compute->add_flag("--normalize", opts.normalize,
                      "Emit a^-writhe * P (knots only)");
    compute->add_flag("--mirror", opts.mirror, "Mirror the input tuple first");
    compute->add_flag("--canonicalize", opts.canonicalize,
                      "Accept mixed-sign tuples by rewriting via the fraction");

    std::string fixture_path = "data/dubrovnik_4_3_5.txt";
    CLI::App* selftest = app.add_subcommand(
        "selftest", "Recompute the stored golden polynomial on every engine");
    selftest->add_option("--fixture", fixture_path, "Path of the fixture file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (compute->parsed()) return run_compute(opts);
        return run_selftest(fixture_path);
    } catch (const MismatchError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
}
