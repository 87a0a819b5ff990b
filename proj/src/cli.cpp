#include "bkit/cli.hpp"

#include <optional>
#include <ostream>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "bkit/action.hpp"
#include "bkit/oracles.hpp"
#include "bkit/theorems.hpp"

namespace bkit::cli {
namespace {

using nlohmann::ordered_json;

struct Term {
    std::uint64_t divisor;
    Natural term;
};

// One result record per command; big values are rendered as decimal strings
// in both formats so consumers never parse floating point or wide integers.
struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::optional<Natural> value;
    std::optional<std::uint64_t> modulus;
    std::optional<Natural> residue;
    std::optional<bool> check;
    std::vector<Term> details;
};

void render_text(const Report& rep, std::ostream& out) {
    out << "command: " << rep.command << '\n';
    for (const auto& [key, val] : rep.inputs) out << key << ": " << val << '\n';
    if (rep.value) out << "value: " << rep.value->str() << '\n';
    if (rep.modulus) out << "modulus: " << *rep.modulus << '\n';
    if (rep.residue) out << "residue: " << rep.residue->str() << '\n';
    if (rep.check) out << "check: " << (*rep.check ? "pass" : "fail") << '\n';
    if (!rep.details.empty()) {
        out << "terms:\n";
        for (const auto& t : rep.details) {
            out << "  d=" << t.divisor << ": " << t.term.str() << '\n';
        }
    }
}

void render_json(const Report& rep, std::ostream& out) {
    ordered_json j;
    j["command"] = rep.command;
    j["inputs"] = ordered_json::object();
    for (const auto& [key, val] : rep.inputs) j["inputs"][key] = val;
    if (rep.value) j["value"] = rep.value->str();
    if (rep.modulus) j["modulus"] = std::to_string(*rep.modulus);
    if (rep.residue) j["residue"] = rep.residue->str();
    if (rep.check) j["check"] = *rep.check ? "pass" : "fail";
    if (!rep.details.empty()) {
        j["details"] = ordered_json::array();
        for (const auto& t : rep.details) {
            j["details"].push_back(
                {{"divisor", std::to_string(t.divisor)}, {"term", t.term.str()}});
        }
    }
    out << j.dump(2) << '\n';
}

int emit(const Report& rep, const std::string& format, std::ostream& out) {
    if (format == "json") {
        render_json(rep, out);
    } else {
        render_text(rep, out);
    }
    return rep.check && !*rep.check ? 1 : 0;
}

std::string u2s(std::uint64_t v) { return std::to_string(v); }

// ------------------------------ sweeps (verify) -----------------------------

struct SweepOutcome {
    std::uint64_t checked = 0;
    std::vector<std::string> failures;  // "consistency:" prefix marks engine bugs
};

// Runs fn over [0, count) in parallel, collecting failure messages in point
// order. fn returns an empty string on pass.
template <class F>
SweepOutcome run_sweep(std::uint64_t count, F&& fn) {
    std::vector<std::string> messages(count);
    const auto len = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < len; ++i) {
        try {
            messages[static_cast<std::size_t>(i)] = fn(static_cast<std::uint64_t>(i));
        } catch (const consistency_error& e) {
            messages[static_cast<std::size_t>(i)] = std::string("consistency: ") + e.what();
        } catch (const std::exception& e) {
            messages[static_cast<std::size_t>(i)] = std::string("error: ") + e.what();
        }
    }
    SweepOutcome outcome;
    outcome.checked = count;
    for (auto& m : messages) {
        if (!m.empty()) outcome.failures.push_back(std::move(m));
    }
    return outcome;
}

std::string verify_fermat_point(std::uint64_t n, std::uint64_t a, std::uint64_t budget) {
    if (!fermat_check(a, n)) {
        return "fermat a=" + u2s(a) + " n=" + u2s(n) + ": sum not divisible";
    }
    if (pow_nat(a, n) > budget) return {};
    const CyclicAction action = words_action(a, n, budget);
    if (Natural(orbit_count_direct(action)) != necklace_count(a, n)) {
        return "fermat a=" + u2s(a) + " n=" + u2s(n) + ": necklace count != direct orbit count";
    }
    for (std::uint64_t d : divisors(n).divisors) {
        if (Natural(brute_fixed_count(action, d)) != pow_nat(a, d)) {
            return "fermat a=" + u2s(a) + " n=" + u2s(n) + " d=" + u2s(d) +
                   ": fixed count != a^d";
        }
    }
    return {};
}

std::string verify_wilson_point(std::uint64_t n, std::uint64_t budget) {
    if (!wilson_check(n)) return "wilson n=" + u2s(n) + ": sum not divisible";
    if (factorial(n - 1) > budget) return {};
    const CyclicAction action = cycles_action(n, budget);
    for (std::uint64_t d : divisors(n).divisors) {
        if (Natural(brute_fixed_count(action, d)) != cycle_fixed_count(n, d)) {
            return "wilson n=" + u2s(n) + " d=" + u2s(d) + ": fixed count != closed form";
        }
    }
    return {};
}

std::string verify_lucas_point(std::uint64_t n, std::uint64_t m, std::uint64_t r,
                               std::uint64_t budget) {
    if (!lucas_check(n, m, r)) {
        return "lucas n=" + u2s(n) + " m=" + u2s(m) + " r=" + u2s(r) + ": sum not divisible";
    }
    if (binomial(m, static_cast<std::int64_t>(r)) > budget) return {};
    const CyclicAction action = subsets_action(n, m, r, budget);
    const LucasParams params = lucas_params(n, m, r);
    for (std::uint64_t d : divisors(n).divisors) {
        if (Natural(brute_fixed_count(action, d)) != lucas_inner_sum(params, d)) {
            return "lucas n=" + u2s(n) + " m=" + u2s(m) + " r=" + u2s(r) + " d=" + u2s(d) +
                   ": fixed count != inner sum";
        }
    }
    return {};
}

std::string verify_burnside_point(std::uint64_t max_n, std::uint64_t max_size,
                                  std::uint64_t seed, std::uint64_t i) {
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15 * (i + 1));
    const std::uint64_t n = 1 + rng() % max_n;
    const auto size = static_cast<index_t>(rng() % (max_size + 1));
    const CyclicAction action = make_random_action(n, size, rng());
    const std::string where = "burnside point " + u2s(i) + " (n=" + u2s(n) +
                              " size=" + u2s(size) + ")";
    if (orbit_count_direct(action) != orbit_count_burnside(action)) {
        return where + ": direct != burnside";
    }
    Natural per_element = 0;
    for (std::uint64_t g = 0; g < n; ++g) per_element += fixed_point_count(action, g);
    Natural per_divisor = 0;
    for (std::uint64_t d : divisors(n).divisors) {
        per_divisor += Natural(euler_phi(n / d)) * brute_fixed_count(action, d);
    }
    if (per_element != per_divisor || per_element % n != 0) {
        return where + ": fixed-point sums inconsistent";
    }
    if (!gcd_collapse_check(action)) return where + ": gcd collapse failed";
    return {};
}

// ------------------------------ subcommands --------------------------------

struct Options {
    std::string format = "text";
    std::uint64_t n = 1, a = 0, m = 0, r = 0, p = 2;
    std::string action_kind;
    std::string theorem;
    std::uint64_t max_n = 10, max_a = 5, max_m = 12;
    std::uint64_t seed = 1, count = 100, max_size = 2000;
};

CyclicAction build_named_action(const CLI::App& sub, const Options& opt) {
    const std::uint64_t budget = default_action_budget();
    if (opt.action_kind == "words") {
        if (!sub.count("--a") || !sub.count("--n")) {
            throw std::invalid_argument("words action requires --a and --n");
        }
        return words_action(opt.a, opt.n, budget);
    }
    if (opt.action_kind == "cycles") {
        if (!sub.count("--n")) throw std::invalid_argument("cycles action requires --n");
        return cycles_action(opt.n, budget);
    }
    if (!sub.count("--n") || !sub.count("--m") || !sub.count("--r")) {
        throw std::invalid_argument("subsets action requires --n, --m and --r");
    }
    return subsets_action(opt.n, opt.m, opt.r, budget);
}

std::vector<std::pair<std::string, std::string>> action_inputs(const Options& opt) {
    std::vector<std::pair<std::string, std::string>> in{{"action", opt.action_kind}};
    if (opt.action_kind == "words") {
        in.emplace_back("a", u2s(opt.a));
        in.emplace_back("n", u2s(opt.n));
    } else if (opt.action_kind == "cycles") {
        in.emplace_back("n", u2s(opt.n));
    } else {
        in.emplace_back("n", u2s(opt.n));
        in.emplace_back("m", u2s(opt.m));
        in.emplace_back("r", u2s(opt.r));
    }
    return in;
}

int run_verify(const Options& opt, std::ostream& out) {
    const std::uint64_t budget = default_action_budget();
    SweepOutcome outcome;
    std::vector<std::pair<std::string, std::string>> inputs{{"theorem", opt.theorem}};
    if (opt.theorem == "fermat") {
        inputs.emplace_back("max_n", u2s(opt.max_n));
        inputs.emplace_back("max_a", u2s(opt.max_a));
        const std::uint64_t span = opt.max_a + 1;
        outcome = run_sweep(opt.max_n * span, [&](std::uint64_t i) {
            return verify_fermat_point(1 + i / span, i % span, budget);
        });
    } else if (opt.theorem == "wilson") {
        inputs.emplace_back("max_n", u2s(opt.max_n));
        outcome = run_sweep(opt.max_n, [&](std::uint64_t i) {
            return verify_wilson_point(1 + i, budget);
        });
    } else if (opt.theorem == "lucas") {
        inputs.emplace_back("max_n", u2s(opt.max_n));
        inputs.emplace_back("max_m", u2s(opt.max_m));
        // (m, r) pairs with 0 <= r <= m <= max_m, flattened per n.
        std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
        for (std::uint64_t m = 0; m <= opt.max_m; ++m) {
            for (std::uint64_t r = 0; r <= m; ++r) pairs.emplace_back(m, r);
        }
        outcome = run_sweep(opt.max_n * pairs.size(), [&](std::uint64_t i) {
            const auto [m, r] = pairs[i % pairs.size()];
            return verify_lucas_point(1 + i / pairs.size(), m, r, budget);
        });
    } else {
        inputs.emplace_back("max_n", u2s(opt.max_n));
        inputs.emplace_back("count", u2s(opt.count));
        inputs.emplace_back("max_size", u2s(opt.max_size));
        inputs.emplace_back("seed", u2s(opt.seed));
        outcome = run_sweep(opt.count, [&](std::uint64_t i) {
            return verify_burnside_point(opt.max_n, opt.max_size, opt.seed, i);
        });
    }

    const bool pass = outcome.failures.empty();
    if (opt.format == "json") {
        ordered_json j;
        j["command"] = "verify";
        j["inputs"] = ordered_json::object();
        for (const auto& [key, val] : inputs) j["inputs"][key] = val;
        j["checked"] = u2s(outcome.checked);
        j["check"] = pass ? "pass" : "fail";
        j["failures"] = outcome.failures;
        out << j.dump(2) << '\n';
    } else {
        out << "command: verify\n";
        for (const auto& [key, val] : inputs) out << key << ": " << val << '\n';
        out << "checked: " << outcome.checked << '\n';
        out << "check: " << (pass ? "pass" : "fail") << '\n';
        for (const auto& f : outcome.failures) out << "failure: " << f << '\n';
    }
    if (pass) return 0;
    for (const auto& f : outcome.failures) {
        if (f.rfind("consistency:", 0) == 0) return 3;
    }
    return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"exact verification of cyclic-action divisibility theorems"};
    app.require_subcommand(1);

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* phi = app.add_subcommand("phi", "Euler totient of n");
    phi->add_option("--n", opt.n, "argument")->required()->check(CLI::PositiveNumber);
    add_format(phi);

    CLI::App* fermat = app.add_subcommand(
        "fermat", "sum of phi(n/d) a^d over d|n, with the mod-n check");
    fermat->add_option("--a", opt.a, "alphabet size")->required();
    fermat->add_option("--n", opt.n, "modulus")->required()->check(CLI::PositiveNumber);
    add_format(fermat);

    CLI::App* necklaces = app.add_subcommand(
        "necklaces", "number of length-n necklaces over a letters");
    necklaces->add_option("--a", opt.a, "alphabet size")->required();
    necklaces->add_option("--n", opt.n, "length")->required()->check(CLI::PositiveNumber);
    add_format(necklaces);

    CLI::App* wilson = app.add_subcommand(
        "wilson", "sum of phi(n/d)^2 (n/d)^(d-1) (d-1)! over d|n, with the mod-n check");
    wilson->add_option("--n", opt.n, "modulus")->required()->check(CLI::PositiveNumber);
    add_format(wilson);

    CLI::App* lucas = app.add_subcommand(
        "lucas", "block-subset fixed-point sum for (n, m, r), with the mod-n check");
    lucas->add_option("--n", opt.n, "modulus")->required()->check(CLI::PositiveNumber);
    lucas->add_option("--m", opt.m, "set size")->required();
    lucas->add_option("--r", opt.r, "subset size")->required();
    add_format(lucas);

    CLI::App* lucas_prime = app.add_subcommand(
        "lucas-prime", "binomial C(m,r) mod p by base-p digit reduction");
    lucas_prime->add_option("--p", opt.p, "prime modulus")->required();
    lucas_prime->add_option("--m", opt.m, "upper argument")->required();
    lucas_prime->add_option("--r", opt.r, "lower argument")->required();
    add_format(lucas_prime);

    CLI::App* orbits = app.add_subcommand(
        "orbits", "orbit count of a built-in action, direct and by the divisor formula");
    orbits->add_option("--action", opt.action_kind, "action family")
        ->required()
        ->check(CLI::IsMember({"words", "cycles", "subsets"}));
    orbits->add_option("--a", opt.a, "alphabet size (words)");
    orbits->add_option("--n", opt.n, "group order")->check(CLI::PositiveNumber);
    orbits->add_option("--m", opt.m, "set size (subsets)");
    orbits->add_option("--r", opt.r, "subset size (subsets)");
    add_format(orbits);

    CLI::App* verify = app.add_subcommand(
        "verify", "sweep a theorem over a parameter range; nonzero exit on any failure");
    verify->add_option("--theorem", opt.theorem, "which family to verify")
        ->required()
        ->check(CLI::IsMember({"fermat", "wilson", "lucas", "burnside"}));
    verify->add_option("--max-n", opt.max_n, "largest modulus")
        ->required()
        ->check(CLI::PositiveNumber);
    verify->add_option("--max-a", opt.max_a, "largest alphabet size (fermat)");
    verify->add_option("--max-m", opt.max_m, "largest set size (lucas)");
    verify->add_option("--seed", opt.seed, "seed for the randomized actions (burnside)");
    verify->add_option("--count", opt.count, "number of randomized actions (burnside)");
    verify->add_option("--max-size", opt.max_size, "largest randomized action (burnside)");
    add_format(verify);

    CLI::App* dump = app.add_subcommand(
        "dump-action", "emit the generator table of a built-in action");
    dump->add_option("--action", opt.action_kind, "action family")
        ->required()
        ->check(CLI::IsMember({"words", "cycles", "subsets"}));
    dump->add_option("--a", opt.a, "alphabet size (words)");
    dump->add_option("--n", opt.n, "group order")->check(CLI::PositiveNumber);
    dump->add_option("--m", opt.m, "set size (subsets)");
    dump->add_option("--r", opt.r, "subset size (subsets)");

    try {
        std::vector<const char*> argv;
        argv.push_back("bkit");
        for (const auto& s : args) argv.push_back(s.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (app.got_subcommand(phi)) {
            Report rep{"phi", {{"n", u2s(opt.n)}}};
            rep.value = euler_phi(opt.n);
            return emit(rep, opt.format, out);
        }
        if (app.got_subcommand(fermat)) {
            Report rep{"fermat", {{"a", u2s(opt.a)}, {"n", u2s(opt.n)}}};
            Natural sum = 0;
            for (std::uint64_t d : divisors(opt.n).divisors) {
                Natural term = Natural(euler_phi(opt.n / d)) * pow_nat(opt.a, d);
                sum += term;
                rep.details.push_back({d, std::move(term)});
            }
            rep.value = sum;
            rep.modulus = opt.n;
            rep.residue = sum % opt.n;
            rep.check = *rep.residue == 0;
            return emit(rep, opt.format, out);
        }
        if (app.got_subcommand(necklaces)) {
            Report rep{"necklaces", {{"a", u2s(opt.a)}, {"n", u2s(opt.n)}}};
            rep.value = necklace_count(opt.a, opt.n);
            for (std::uint64_t d : divisors(opt.n).divisors) {
                rep.details.push_back({d, Natural(euler_phi(opt.n / d)) * pow_nat(opt.a, d)});
            }
            return emit(rep, opt.format, out);
        }
        if (app.got_subcommand(wilson)) {
            Report rep{"wilson", {{"n", u2s(opt.n)}}};
            Natural sum = 0;
            for (std::uint64_t d : divisors(opt.n).divisors) {
                Natural term = euler_phi(opt.n / d) * cycle_fixed_count(opt.n, d);
                sum += term;
                rep.details.push_back({d, std::move(term)});
            }
            rep.value = sum;
            rep.modulus = opt.n;
            rep.residue = sum % opt.n;
            rep.check = *rep.residue == 0;
            return emit(rep, opt.format, out);
        }
        if (app.got_subcommand(lucas)) {
            Report rep{"lucas", {{"n", u2s(opt.n)}, {"m", u2s(opt.m)}, {"r", u2s(opt.r)}}};
            const LucasParams params = lucas_params(opt.n, opt.m, opt.r);
            Natural sum = 0;
            for (std::uint64_t d : divisors(opt.n).divisors) {
                Natural inner = lucas_inner_sum(params, d);
                if (d == opt.n && inner != binomial(opt.m, static_cast<std::int64_t>(opt.r))) {
                    throw consistency_error("lucas: inner sum at d=n differs from C(m,r)");
                }
                Natural term = euler_phi(opt.n / d) * inner;
                sum += term;
                rep.details.push_back({d, std::move(term)});
            }
            rep.value = sum;
            rep.modulus = opt.n;
            rep.residue = sum % opt.n;
            rep.check = *rep.residue == 0;
            return emit(rep, opt.format, out);
        }
        if (app.got_subcommand(lucas_prime)) {
            Report rep{"lucas-prime",
                       {{"p", u2s(opt.p)}, {"m", u2s(opt.m)}, {"r", u2s(opt.r)}}};
            const std::uint64_t reduced = lucas_prime_reduce(opt.p, opt.m, opt.r);
            rep.modulus = opt.p;
            rep.residue = Natural(reduced);
            // Cross-check against the exact binomial where it is tractable.
            if (opt.m <= 100000) {
                const Natural direct = binomial(opt.m, static_cast<std::int64_t>(opt.r));
                rep.value = direct;
                rep.check = direct % opt.p == reduced;
            }
            return emit(rep, opt.format, out);
        }
        if (app.got_subcommand(orbits)) {
            const CyclicAction action = build_named_action(*orbits, opt);
            Report rep{"orbits", action_inputs(opt)};
            rep.inputs.emplace_back("size", u2s(action.size()));
            const index_t direct = orbit_count_direct(action);
            const index_t formula = orbit_count_burnside(action);
            if (direct != formula) {
                throw consistency_error("orbits: direct count " + u2s(direct) +
                                        " != formula count " + u2s(formula));
            }
            rep.value = Natural(direct);
            rep.modulus = action.n;
            for (std::uint64_t d : divisors(action.n).divisors) {
                rep.details.push_back({d, Natural(brute_fixed_count(action, d))});
            }
            rep.check = true;
            return emit(rep, opt.format, out);
        }
        if (app.got_subcommand(verify)) {
            return run_verify(opt, out);
        }
        // dump-action
        const CyclicAction action = build_named_action(*dump, opt);
        dump_action(action, out);
        return 0;
    } catch (const consistency_error& e) {
        err << "internal consistency failure: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace bkit::cli
