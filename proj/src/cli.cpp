#include "ratcalc/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ratcalc/calculus.hpp"
#include "ratcalc/interpolation.hpp"
#include "ratcalc/recurrence.hpp"
#include "ratcalc/scalar_io.hpp"
#include "ratcalc/selftest.hpp"
#include "ratcalc/derivatives.hpp"

namespace ratcalc {

namespace {

using nlohmann::json;

// Resource guards on structural integers; requests beyond these are rejected
// as malformed rather than attempted.
constexpr long long kMaxFactors = 16;
constexpr long long kMaxMultiplicity = 32;
constexpr long long kMaxOrder = 64;
constexpr long long kMaxN = 128;
constexpr long long kMaxListLength = 256;
constexpr long long kMaxSequenceIndex = 4096;

/// Fully-formed failure response; carries its own exit code.
struct CliFailure {
    int exit_code;
    json body;
};

[[noreturn]] void fail_domain(errc code, const std::string& message,
                              std::optional<ParamWitness> witness = std::nullopt) {
    json body{{"code", errc_slug(code)}, {"message", message}};
    if (witness) {
        body["witness"] = json{{"j", witness->j},
                               {"r", witness->r},
                               {"m", witness->m},
                               {"p", witness->p},
                               {"q", witness->q}};
    }
    throw CliFailure{code == errc::parse_error ? 2 : 1, std::move(body)};
}

void require_schema(const json& j, const std::vector<std::string>& required,
                    const std::vector<std::string>& optional = {}) {
    if (!j.is_object()) fail(errc::parse_error, "payload must be a JSON object");
    for (const auto& key : required)
        if (!j.contains(key)) fail(errc::parse_error, "missing key \"" + key + "\"");
    for (const auto& item : j.items()) {
        bool known = false;
        for (const auto& key : required) known = known || key == item.key();
        for (const auto& key : optional) known = known || key == item.key();
        if (!known) fail(errc::parse_error, "unknown key \"" + item.key() + "\"");
    }
}

long long get_integer(const json& j, const std::string& name, long long lo, long long hi) {
    if (!j.is_number_integer())
        fail(errc::parse_error, name + " must be a JSON integer");
    const long long v = j.get<long long>();
    if (v < lo || v > hi)
        fail(errc::parse_error, name + " must be between " + std::to_string(lo) + " and " +
                                    std::to_string(hi));
    return v;
}

const json& get_array(const json& j, const std::string& name, long long max_len) {
    if (!j.is_array()) fail(errc::parse_error, name + " must be a JSON array");
    if (static_cast<long long>(j.size()) > max_len)
        fail(errc::parse_error, name + " exceeds the supported length " +
                                    std::to_string(max_len));
    return j;
}

FactoredDenominator parse_factored(const json& j) {
    const json& arr = get_array(j, "roots", kMaxFactors);
    if (arr.empty()) fail(errc::parse_error, "roots must be nonempty");
    std::vector<Factor> factors;
    factors.reserve(arr.size());
    for (const auto& item : arr) {
        require_schema(item, {"root", "mult"});
        factors.push_back(
            Factor{scalar_from_json(item["root"]),
                   static_cast<int>(get_integer(item["mult"], "mult", 1, kMaxMultiplicity))});
    }
    return FactoredDenominator(std::move(factors));
}

std::vector<GaussianRational> parse_scalar_list(const json& j, const std::string& name) {
    const json& arr = get_array(j, name, kMaxListLength);
    std::vector<GaussianRational> out;
    out.reserve(arr.size());
    for (const auto& item : arr) out.push_back(scalar_from_json(item));
    return out;
}

ParamSet parse_params(const json& j) {
    require_schema(j, {"s_list", "s"});
    return ParamSet{parse_scalar_list(j["s_list"], "s_list"), scalar_from_json(j["s"])};
}

json pf_to_json(const PartialFractionDecomposition& pfd) {
    json terms = json::array();
    for (const auto& term : pfd.terms)
        terms.push_back(json{{"root", scalar_to_json(term.root)},
                             {"order", term.order},
                             {"coef", scalar_to_json(term.coefficient)}});
    return json{{"poly", poly_to_json(pfd.polynomial_part)}, {"terms", std::move(terms)}};
}

// ---------------------------------------------------------------------------
// subcommand payload handlers

struct DeriveOptions {
    std::string formula;  // empty = not given on the command line
    std::optional<long long> n_value;
    std::string params_text;
};

json run_derive(const json& payload, const DeriveOptions& flags) {
    require_schema(payload, {"roots", "order", "at"}, {"formula", "N", "params"});
    FactoredDenominator den = parse_factored(payload["roots"]);
    const int t = static_cast<int>(get_integer(payload["order"], "order", 0, kMaxOrder));
    GaussianRational z = scalar_from_json(payload["at"]);

    std::string formula = "I";
    if (!flags.formula.empty() && payload.contains("formula"))
        fail(errc::parse_error, "formula given both as flag and payload key");
    if (!flags.formula.empty()) formula = flags.formula;
    if (payload.contains("formula")) {
        if (!payload["formula"].is_string())
            fail(errc::parse_error, "formula must be the string \"I\" or \"II\"");
        formula = payload["formula"].get<std::string>();
    }
    if (formula != "I" && formula != "II")
        fail(errc::parse_error, "formula must be \"I\" or \"II\"");

    std::optional<long long> n_value;
    if (flags.n_value && payload.contains("N"))
        fail(errc::parse_error, "N given both as flag and payload key");
    if (flags.n_value) n_value = flags.n_value;
    if (payload.contains("N")) n_value = get_integer(payload["N"], "N", 1, kMaxN);
    if (n_value && *n_value > kMaxN)
        fail(errc::parse_error, "N must be between 1 and " + std::to_string(kMaxN));
    if (formula == "II" && n_value)
        fail(errc::parse_error, "N applies to formula I only");

    std::optional<ParamSet> params;
    if (!flags.params_text.empty() && payload.contains("params"))
        fail(errc::parse_error, "params given both as flag and payload key");
    if (!flags.params_text.empty()) params = parse_params(json::parse(flags.params_text));
    if (payload.contains("params")) params = parse_params(payload["params"]);

    if (den.has_root(z)) fail_domain(errc::pole, "the evaluation point is a pole");
    const int n_effective =
        formula == "II" ? t : static_cast<int>(n_value.value_or(t + 1));
    if (params) {
        ValidityReport report = validate_params(den, z, t, n_effective, *params);
        if (!report.ok) fail_domain(errc::invalid_parameters, report.reason, report.witness);
    } else {
        params = canonical_params(den, z);
    }

    EvalContext ctx{std::move(den), std::move(z), t, n_effective, std::move(*params)};
    GaussianRational value =
        formula == "II" ? derivative_formula_II(ctx) : derivative_formula_I(ctx);
    return json{{"value", scalar_to_json(value)}};
}

json run_partfrac(const json& payload) {
    require_schema(payload, {"num", "roots"});
    Polynomial num = poly_from_json(get_array(payload["num"], "num", kMaxListLength));
    FactoredDenominator den = parse_factored(payload["roots"]);
    return pf_to_json(partial_fractions(num, den));
}

json run_integrate(const json& payload) {
    require_schema(payload, {"num", "roots"});
    Polynomial num = poly_from_json(get_array(payload["num"], "num", kMaxListLength));
    FactoredDenominator den = parse_factored(payload["roots"]);
    AntiderivativeExpr expr = antiderivative(num, den);

    json logs = json::array();
    for (const auto& term : expr.log_terms)
        logs.push_back(json{{"coef", scalar_to_json(term.coefficient)},
                            {"root", scalar_to_json(term.root)}});
    json powers = json::array();
    for (const auto& term : expr.power_terms)
        powers.push_back(json{{"coef", scalar_to_json(term.coefficient)},
                              {"root", scalar_to_json(term.root)},
                              {"exp", term.exponent}});
    return json{{"poly", poly_to_json(expr.polynomial_part)},
                {"logs", std::move(logs)},
                {"powers", std::move(powers)}};
}

json run_interp(const json& payload) {
    require_schema(payload, {"nodes"});
    const json& arr = get_array(payload["nodes"], "nodes", kMaxFactors);
    if (arr.empty()) fail(errc::parse_error, "nodes must be nonempty");
    HermiteSpec spec;
    for (const auto& item : arr) {
        require_schema(item, {"point", "targets"});
        const json& targets = get_array(item["targets"], "targets", kMaxMultiplicity);
        if (targets.empty()) fail(errc::parse_error, "targets must be nonempty");
        spec.nodes.push_back(HermiteNode{scalar_from_json(item["point"]),
                                         parse_scalar_list(targets, "targets")});
    }
    return json{{"poly", poly_to_json(hermite_interpolate(spec))}};
}

json run_recur(const json& payload) {
    require_schema(payload, {"initials", "coefficients", "roots"}, {"n", "range"});
    if (payload.contains("n") == payload.contains("range"))
        fail(errc::parse_error, "give exactly one of n or range");
    RecurrenceSpec spec(parse_scalar_list(payload["initials"], "initials"),
                        parse_scalar_list(payload["coefficients"], "coefficients"),
                        parse_factored(payload["roots"]));
    if (payload.contains("n")) {
        const long long n = get_integer(payload["n"], "n", 0, kMaxSequenceIndex);
        return json{{"value", scalar_to_json(closed_form_term(spec, n))}};
    }
    const json& range = get_array(payload["range"], "range", 2);
    if (range.size() != 2) fail(errc::parse_error, "range must be [first, last]");
    const long long lo = get_integer(range[0], "range first", 0, kMaxSequenceIndex);
    const long long hi = get_integer(range[1], "range last", lo, kMaxSequenceIndex);
    json values = json::array();
    for (long long n = lo; n <= hi; ++n)
        values.push_back(scalar_to_json(closed_form_term(spec, n)));
    return json{{"values", std::move(values)}};
}

json run_selftest_cmd(const json& payload, const std::optional<std::uint64_t>& seed_flag,
                      int& exit_code) {
    require_schema(payload, {}, {"seed"});
    if (seed_flag && payload.contains("seed"))
        fail(errc::parse_error, "seed given both as flag and payload key");
    std::uint64_t seed = 0;
    if (seed_flag) seed = *seed_flag;
    if (payload.contains("seed")) {
        if (!payload["seed"].is_number_unsigned())
            fail(errc::parse_error, "seed must be a nonnegative JSON integer");
        seed = payload["seed"].get<std::uint64_t>();
    }
    SelftestReport report = run_selftest(seed);
    json suites = json::array();
    for (const auto& suite : report.suites)
        suites.push_back(json{{"name", suite.name},
                              {"checks", suite.checks},
                              {"failures", suite.failures}});
    exit_code = report.passed ? 0 : 1;
    return json{{"passed", report.passed}, {"suites", std::move(suites)}};
}

// ---------------------------------------------------------------------------

std::string read_input(const std::string& in_path) {
    if (!in_path.empty()) {
        std::ifstream file(in_path, std::ios::binary);
        if (!file) fail(errc::parse_error, "cannot open input file " + in_path);
        std::ostringstream buffer;
        buffer << file.rdbuf();
        return buffer.str();
    }
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
}

void write_output(const std::string& out_path, const json& body) {
    if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            std::cerr << "cannot open output file " << out_path << "\n";
            return;
        }
        file << body.dump() << "\n";
        return;
    }
    std::cout << body.dump() << "\n";
}

bool blank(const std::string& text) {
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

int cli_run(int argc, const char* const* argv) {
    CLI::App app{"exact calculus of rational functions with factored denominators"};
    app.require_subcommand(1);

    std::string in_path, out_path;
    DeriveOptions derive_flags;
    std::optional<std::uint64_t> seed_flag;

    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("--in", in_path, "read the JSON payload from a file (default stdin)");
        cmd->add_option("--out", out_path, "write the JSON result to a file (default stdout)");
    };

    CLI::App* derive = app.add_subcommand(
        "derive", "derivative of 1/((z-a_1)^m_1...(z-a_L)^m_L) at a point");
    add_io(derive);
    derive->add_option("--formula", derive_flags.formula, "formula family: I (default) or II");
    long long n_flag_storage = 0;
    CLI::Option* n_flag =
        derive->add_option("--N", n_flag_storage, "outer summation bound for formula I");
    derive->add_option("--params", derive_flags.params_text,
                       "JSON object {\"s_list\": [...], \"s\": ...} overriding the "
                       "canonical parameters");

    CLI::App* partfrac =
        app.add_subcommand("partfrac", "partial fractions of num/expanded(roots)");
    add_io(partfrac);
    CLI::App* integrate =
        app.add_subcommand("integrate", "antiderivative of num/expanded(roots)");
    add_io(integrate);
    CLI::App* interp =
        app.add_subcommand("interp", "polynomial matching prescribed derivative values");
    add_io(interp);
    CLI::App* recur = app.add_subcommand("recur", "closed-form terms of a linear recurrence");
    add_io(recur);
    CLI::App* selftest = app.add_subcommand("selftest", "built-in verification suites");
    add_io(selftest);
    std::uint64_t seed_storage = 0;
    CLI::Option* seed_opt =
        selftest->add_option("--seed", seed_storage, "seed for the randomized suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    if (n_flag->count() > 0) derive_flags.n_value = n_flag_storage;
    if (seed_opt->count() > 0) seed_flag = seed_storage;

    int exit_code = 0;
    json body;
    try {
        std::string text = read_input(in_path);
        if (blank(text)) {
            if (selftest->parsed())
                text = "{}";
            else
                fail(errc::parse_error, "empty input");
        }
        json payload;
        try {
            payload = json::parse(text);
        } catch (const json::exception& e) {
            fail(errc::parse_error, e.what());
        }

        if (derive->parsed())
            body = run_derive(payload, derive_flags);
        else if (partfrac->parsed())
            body = run_partfrac(payload);
        else if (integrate->parsed())
            body = run_integrate(payload);
        else if (interp->parsed())
            body = run_interp(payload);
        else if (recur->parsed())
            body = run_recur(payload);
        else
            body = run_selftest_cmd(payload, seed_flag, exit_code);
    } catch (const CliFailure& failure) {
        write_output(out_path, failure.body);
        return failure.exit_code;
    } catch (const Error& e) {
        json err{{"code", errc_slug(e.code())}, {"message", e.what()}};
        write_output(out_path, err);
        return e.code() == errc::parse_error ? 2 : 1;
    } catch (const std::exception& e) {
        json err{{"code", errc_slug(errc::bad_input)}, {"message", e.what()}};
        write_output(out_path, err);
        return 2;
    }

    write_output(out_path, body);
    return exit_code;
}

}  // namespace ratcalc
