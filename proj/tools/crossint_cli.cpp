#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "crossint/bounds.hpp"
#include "crossint/counterex.hpp"
#include "crossint/hirschorn.hpp"
#include "crossint/oracle.hpp"
#include "crossint/verify.hpp"

using namespace crossint;
using Json = nlohmann::ordered_json;

namespace {

constexpr const char* version = "0.1.0";

enum Exit { ok = 0, internal = 1, bad_input = 2, cap = 3, assertion = 4 };

struct AssertionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    InstanceParams params{0, 0, 0, 0};
    std::string functional = "prod";
    std::string output; // empty: json for single instances, csv for scans
    int threads = 0;
};

void add_params(CLI::App* cmd, Common& c)
{
    cmd->add_option("--n", c.params.n, "ground set size")->required();
    cmd->add_option("--a", c.params.a, "uniformity of F")->required();
    cmd->add_option("--b", c.params.b, "uniformity of G")->required();
    cmd->add_option("--t", c.params.t, "intersection threshold")->required();
}

void add_output(CLI::App* cmd, Common& c)
{
    cmd->add_option("--output", c.output, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--threads", c.threads, "worker threads, 0 = auto")->check(CLI::NonNegativeNumber);
}

Json params_json(const InstanceParams& p)
{
    return {{"n", p.n}, {"a", p.a}, {"b", p.b}, {"t", p.t}};
}

Json triple_json(const Triple& x)
{
    return {{"s", x.s}, {"u", x.u}, {"v", x.v}};
}

Json triples_json(const std::vector<Triple>& xs)
{
    Json out = Json::array();
    for (const Triple& x : xs)
        out.push_back(triple_json(x));
    return out;
}

std::string triples_cell(const std::vector<Triple>& xs)
{
    std::string out;
    for (const Triple& x : xs) {
        if (!out.empty())
            out += ';';
        out += "(" + std::to_string(x.s) + "," + std::to_string(x.u) + "," + std::to_string(x.v) + ")";
    }
    return out;
}

Json log_json(const std::optional<LogValue>& v)
{
    if (!v)
        return nullptr;
    if (v->is_zero)
        return "-inf";
    return v->ln_value;
}

std::string log_cell(const std::optional<LogValue>& v)
{
    if (!v)
        return "";
    if (v->is_zero)
        return "-inf";
    std::ostringstream out;
    out.precision(17);
    out << v->ln_value;
    return out.str();
}

Json envelope(const std::string& command, Json params)
{
    return {{"command", command}, {"params", std::move(params)}, {"result", Json::object()}};
}

void emit(Json& out, Json stats)
{
    out["stats"] = std::move(stats);
    out["version"] = version;
    std::cout << out.dump(2) << '\n';
}

void print_csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows)
{
    auto line = [](const std::vector<std::string>& cells) {
        std::string out;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i)
                out += ',';
            const bool quote = cells[i].find_first_of(",;\"\n") != std::string::npos;
            out += quote ? "\"" + cells[i] + "\"" : cells[i];
        }
        return out;
    };
    std::cout << line(header) << '\n';
    for (const auto& row : rows)
        std::cout << line(row) << '\n';
}

std::string flag(bool b)
{
    return b ? "true" : "false";
}

OracleCaps caps_from_env()
{
    const char* spec = std::getenv("CROSSINT_CAPS");
    return spec ? OracleCaps::parse(spec) : OracleCaps{};
}

int cmd_hirschorn(const Common& c)
{
    c.params.validate();
    const Functional fn = parse_functional(c.functional);
    const HirschornOptimum opt = hirschorn_optimum(c.params, fn);
    if (c.output == "csv") {
        print_csv({"n", "a", "b", "t", "functional", "value", "argmax"},
                  {{std::to_string(c.params.n), std::to_string(c.params.a), std::to_string(c.params.b),
                    std::to_string(c.params.t), std::string(to_string(fn)), to_decimal(opt.value),
                    triples_cell(opt.argmax)}});
        return ok;
    }
    Json out = envelope("hirschorn", params_json(c.params));
    out["params"]["functional"] = to_string(fn);
    Json pairs = Json::array();
    for (const Triple& x : opt.argmax) {
        const auto [f, g] = pair_sizes({c.params, x.s, x.u, x.v});
        Json row = triple_json(x);
        row["f_size"] = to_decimal(f);
        row["g_size"] = to_decimal(g);
        pairs.push_back(std::move(row));
    }
    out["result"] = {{"value", to_decimal(opt.value)}, {"argmax", std::move(pairs)}};
    emit(out, {{"triples_in_argmax", opt.argmax.size()}});
    return ok;
}

int cmd_oracle(const Common& c, const std::string& mode_name, bool canonicalize)
{
    c.params.validate();
    const Functional fn = parse_functional(c.functional);
    const OracleMode mode = parse_mode(mode_name);
    const OracleCaps caps = caps_from_env();
    const OracleResult r = solve(c.params, fn, mode, caps, canonicalize);
    if (c.output == "csv") {
        print_csv({"n", "a", "b", "t", "functional", "mode", "value", "degenerate", "f_size", "g_size", "nodes"},
                  {{std::to_string(c.params.n), std::to_string(c.params.a), std::to_string(c.params.b),
                    std::to_string(c.params.t), std::string(to_string(fn)), std::string(to_string(mode)),
                    to_decimal(r.value), flag(r.degenerate), std::to_string(r.witness_f.count()),
                    std::to_string(r.witness_g.count()), std::to_string(r.nodes_explored)}});
        return ok;
    }
    Json out = envelope("oracle", params_json(c.params));
    out["params"]["functional"] = to_string(fn);
    out["params"]["mode"] = to_string(mode);
    out["params"]["canonicalize"] = canonicalize;
    out["result"] = {{"value", to_decimal(r.value)},
                     {"f_size", r.witness_f.count()},
                     {"g_size", r.witness_g.count()},
                     {"degenerate", r.degenerate}};
    out["witnesses"] = {{"F", serialize(r.witness_f)}, {"G", serialize(r.witness_g)}};
    emit(out, {{"nodes_explored", r.nodes_explored},
               {"caps",
                {{"exhaustive", caps.exhaustive_max_members},
                 {"compressed", caps.compressed_max_n},
                 {"nodes", caps.max_nodes}}}});
    return ok;
}

int cmd_bounds(const Common& c)
{
    const BoundsReport r = bounds_report(c.params);
    const bool has_bounds = r.entropy_bound_ln.has_value();
    if (c.output == "csv") {
        print_csv({"n", "a", "b", "t", "regime", "M", "M_argmax", "n3M", "trivial_bound_ln", "entropy_bound_ln",
                   "concentration_bound_ln", "exact"},
                  {{std::to_string(c.params.n), std::to_string(c.params.a), std::to_string(c.params.b),
                    std::to_string(c.params.t), std::string(to_string(r.regime)), to_decimal(r.m),
                    triples_cell(r.m_argmax), to_decimal(r.sandwich_hi), log_cell(r.trivial_bound_ln),
                    log_cell(r.entropy_bound_ln), log_cell(r.concentration_bound_ln),
                    r.exact ? to_decimal(*r.exact) : ""}});
        return ok;
    }
    Json out = envelope("bounds", params_json(c.params));
    out["result"] = {{"regime", to_string(r.regime)},
                     {"M", to_decimal(r.m)},
                     {"M_argmax", triples_json(r.m_argmax)},
                     {"n3M", to_decimal(r.sandwich_hi)},
                     {"trivial_bound_ln", log_json(r.trivial_bound_ln)},
                     {"entropy_bound_ln", log_json(r.entropy_bound_ln)},
                     {"concentration_bound_ln", log_json(r.concentration_bound_ln)},
                     {"exact", r.exact ? Json(to_decimal(*r.exact)) : Json(nullptr)}};
    if (has_bounds)
        out["result"]["deviation"] = concentration_deviation(c.params);
    emit(out, {{"M_argmax_size", r.m_argmax.size()}});
    return ok;
}

int cmd_scan_prop4(const Common& c, int max_n)
{
    std::vector<Prop4Report> rows;
    for (int n = 8; n <= max_n; n += 12)
        rows.push_back(prop4_scan(n));
    bool all_pass = true;
    for (const Prop4Report& r : rows)
        all_pass = all_pass && r.claim_holds();

    if (c.output == "json") {
        Json out = envelope("scan-prop4", {{"max_n", max_n}});
        Json table = Json::array();
        for (const Prop4Report& r : rows)
            table.push_back({{"n", r.n},
                             {"split_product", to_decimal(r.split_product)},
                             {"hirschorn_max", to_decimal(r.hirschorn_max)},
                             {"hirschorn_argmax", triples_json(r.hirschorn_argmax)},
                             {"quadratic_roots", r.quadratic_roots},
                             {"mod3_certificate", r.mod3},
                             {"pairing_bound_ok", r.pairing_bound_ok},
                             {"status", r.claim_holds() ? "pass" : "FAIL"}});
        out["result"] = {{"rows", std::move(table)}, {"all_pass", all_pass}};
        emit(out, {{"rows", rows.size()}});
    } else {
        std::vector<std::vector<std::string>> cells;
        for (const Prop4Report& r : rows) {
            std::string roots;
            for (long s : r.quadratic_roots)
                roots += (roots.empty() ? "" : ";") + std::to_string(s);
            cells.push_back({std::to_string(r.n), to_decimal(r.binom_half), to_decimal(r.split_product),
                             to_decimal(r.hirschorn_max), triples_cell(r.hirschorn_argmax), roots, flag(r.mod3),
                             flag(r.pairing_bound_ok), r.claim_holds() ? "pass" : "FAIL"});
        }
        print_csv({"n", "binom_half", "split_product", "hirschorn_max", "hirschorn_argmax", "quadratic_roots",
                   "mod3_certificate", "pairing_bound_ok", "status"},
                  cells);
    }
    if (!all_pass)
        throw AssertionFailure("scan-prop4: at least one row violates the strict inequality or has a root");
    return ok;
}

struct AkBkRow {
    AkBkReport report;
    std::string explicit_check = "not run";
    std::string status;
    bool failed = false;
};

std::string explicit_check(int k, const AkBkReport& r)
{
    if (k > 4)
        return "skipped";
    const auto [fa, fb] = akbk_families(k);
    const bool sizes = BigCount(static_cast<unsigned long>(fa.count())) == r.size_a &&
                       BigCount(static_cast<unsigned long>(fb.count())) == r.size_b;
    return sizes && is_cross_t_intersecting(fa, fb, 2) ? "pass" : "FAIL";
}

int cmd_scan_akbk(const Common& c, int kmin, int kmax, bool verify_explicit)
{
    if (kmin < 3)
        throw UsageError("scan-akbk needs kmin >= 3");
    if (kmax < kmin)
        throw UsageError("scan-akbk needs kmax >= kmin");
    std::vector<AkBkRow> rows;
    for (int k = kmin; k <= kmax; ++k) {
        AkBkRow row{akbk_report(k), "not run", "", false};
        const AkBkReport& r = row.report;
        if (verify_explicit)
            row.explicit_check = explicit_check(k, r);
        if (!r.in_claimed_range) {
            row.status = "unchecked";
        } else {
            std::vector<std::string> broken;
            if (!r.product_exceeds_hirschorn())
                broken.push_back("product");
            if (!r.argmax_has_balanced_triple())
                broken.push_back("argmax");
            if (row.explicit_check == "FAIL")
                broken.push_back("explicit");
            row.failed = !broken.empty();
            row.status = row.failed ? "FAIL(" : "pass";
            for (std::size_t i = 0; i < broken.size(); ++i)
                row.status += (i ? "+" : "") + broken[i];
            if (row.failed)
                row.status += ")";
        }
        rows.push_back(std::move(row));
    }
    bool all_pass = true;
    for (const AkBkRow& row : rows)
        all_pass = all_pass && !row.failed;

    const auto range_cell = [](const AkBkReport& r) {
        return r.in_claimed_range ? std::string("in claimed range") : std::string("outside claimed range");
    };
    if (c.output == "json") {
        Json out = envelope("scan-akbk", {{"kmin", kmin}, {"kmax", kmax}, {"verify_explicit", verify_explicit}});
        Json table = Json::array();
        for (const AkBkRow& row : rows) {
            const AkBkReport& r = row.report;
            table.push_back({{"k", r.k},
                             {"n", r.n},
                             {"a", r.a},
                             {"b", r.b},
                             {"size_a", to_decimal(r.size_a)},
                             {"size_b", to_decimal(r.size_b)},
                             {"product", to_decimal(r.product)},
                             {"hirschorn_max", to_decimal(r.hirschorn_max)},
                             {"hirschorn_argmax", triples_json(r.hirschorn_argmax)},
                             {"balanced_triple_in_argmax", r.argmax_has_balanced_triple()},
                             {"hirschorn_max_b_plus_one", to_decimal(r.hirschorn_max_b_plus_one)},
                             {"hirschorn_argmax_b_plus_one", triples_json(r.hirschorn_argmax_b_plus_one)},
                             {"explicit_check", row.explicit_check},
                             {"range", range_cell(r)},
                             {"status", row.status}});
        }
        out["result"] = {{"rows", std::move(table)}, {"all_pass", all_pass}};
        emit(out, {{"rows", rows.size()}});
    } else {
        std::vector<std::vector<std::string>> cells;
        for (const AkBkRow& row : rows) {
            const AkBkReport& r = row.report;
            cells.push_back({std::to_string(r.k), std::to_string(r.n), std::to_string(r.a), std::to_string(r.b),
                             to_decimal(r.size_a), to_decimal(r.size_b), to_decimal(r.product),
                             to_decimal(r.hirschorn_max), triples_cell(r.hirschorn_argmax),
                             flag(r.argmax_has_balanced_triple()), to_decimal(r.hirschorn_max_b_plus_one),
                             triples_cell(r.hirschorn_argmax_b_plus_one), row.explicit_check, range_cell(r),
                             row.status});
        }
        print_csv({"k", "n", "a", "b", "size_a", "size_b", "product", "hirschorn_max", "hirschorn_argmax",
                   "balanced_triple_in_argmax", "hirschorn_max_b_plus_one", "hirschorn_argmax_b_plus_one",
                   "explicit_check", "range", "status"},
                  cells);
    }
    if (!all_pass)
        throw AssertionFailure("scan-akbk: at least one row in 3..50 failed its check");
    return ok;
}

int cmd_verify(const Common& c, long trials, std::uint64_t seed)
{
    c.params.validate();
    if (c.params.n > 12)
        throw UsageError("verify needs n <= 12");
    if (c.params.t > std::min(c.params.a, c.params.b))
        throw UsageError("verify needs t <= min(a, b)");
    if (trials < 0)
        throw UsageError("verify needs trials >= 0");

    const CompressionSuiteStats suite = compression_suite(trials, seed, c.params);
    const PrefixScanStats scan = prefix_condition_scan(c.params.n);
    const bool pass = suite.failed == 0 && scan.discrepancies == 0;

    if (c.output == "csv") {
        print_csv({"n", "a", "b", "t", "seed", "trials", "passed", "failed", "total_steps", "prefix_pairs",
                   "prefix_discrepancies", "status"},
                  {{std::to_string(c.params.n), std::to_string(c.params.a), std::to_string(c.params.b),
                    std::to_string(c.params.t), std::to_string(seed), std::to_string(suite.trials),
                    std::to_string(suite.passed), std::to_string(suite.failed), std::to_string(suite.total_steps),
                    std::to_string(scan.pairs_checked), std::to_string(scan.discrepancies), pass ? "pass" : "FAIL"}});
    } else {
        Json out = envelope("verify", params_json(c.params));
        out["params"]["trials"] = trials;
        out["params"]["seed"] = seed;
        out["result"] = {{"compression",
                          {{"trials", suite.trials},
                           {"passed", suite.passed},
                           {"failed", suite.failed},
                           {"first_failure", suite.first_failure ? Json(*suite.first_failure) : Json(nullptr)}}},
                         {"prefix_conditions",
                          {{"n", c.params.n},
                           {"pairs_checked", scan.pairs_checked},
                           {"discrepancies", scan.discrepancies},
                           {"condition_a_true", scan.condition_a_true}}},
                         {"status", pass ? "pass" : "FAIL"}};
        emit(out, {{"total_compression_steps", suite.total_steps}});
    }
    if (!pass)
        throw AssertionFailure("verify: an invariant failed");
    return ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations for cross-t-intersecting uniform families", "crossint"};
    app.require_subcommand(1);
    app.set_version_flag("--version", version);

    Common common;

    auto* hirschorn = app.add_subcommand("hirschorn", "best Hirschorn pair and its value");
    add_params(hirschorn, common);
    hirschorn->add_option("--functional", common.functional, "prod or sum");
    add_output(hirschorn, common);

    std::string mode = "compressed";
    bool canonicalize = false;
    auto* oracle = app.add_subcommand("oracle", "exact optimum by exhaustive search");
    add_params(oracle, common);
    oracle->add_option("--functional", common.functional, "prod or sum");
    oracle->add_option("--mode", mode, "exhaustive or compressed");
    oracle->add_flag("--canonicalize", canonicalize, "search the smaller equivalent instance");
    add_output(oracle, common);

    auto* bounds = app.add_subcommand("bounds", "M, n^3 M and the analytic upper bounds");
    add_params(bounds, common);
    add_output(bounds, common);

    int max_n = 8;
    auto* prop4 = app.add_subcommand("scan-prop4", "the (n, 2, n-2, 1) series for n = 8 mod 12");
    prop4->add_option("--max-n", max_n, "largest n")->required();
    add_output(prop4, common);

    int kmin = 3;
    int kmax = 50;
    bool verify_explicit = false;
    auto* akbk = app.add_subcommand("scan-akbk", "the A_k, B_k construction against every Hirschorn pair");
    akbk->add_option("--kmin", kmin, "first k");
    akbk->add_option("--kmax", kmax, "last k");
    akbk->add_flag("--verify-explicit", verify_explicit, "enumerate A_k, B_k for k <= 4");
    add_output(akbk, common);

    long trials = 1000;
    std::uint64_t seed = 1;
    auto* verify = app.add_subcommand("verify", "compression property suite and prefix-condition scan");
    add_params(verify, common);
    verify->add_option("--trials", trials, "random pairs");
    verify->add_option("--seed", seed, "RNG seed");
    add_output(verify, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : bad_input;
    }

    if (common.output.empty())
        common.output = prop4->parsed() || akbk->parsed() ? "csv" : "json";

    try {
        if (hirschorn->parsed())
            return cmd_hirschorn(common);
        if (oracle->parsed())
            return cmd_oracle(common, mode, canonicalize);
        if (bounds->parsed())
            return cmd_bounds(common);
        if (prop4->parsed())
            return cmd_scan_prop4(common, max_n);
        if (akbk->parsed())
            return cmd_scan_akbk(common, kmin, kmax, verify_explicit);
        if (verify->parsed())
            return cmd_verify(common, trials, seed);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return bad_input;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return cap;
    } catch (const AssertionFailure& e) {
        std::cerr << "assertion failed: " << e.what() << '\n';
        return assertion;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return internal;
    }
    return internal;
}
