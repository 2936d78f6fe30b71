// Command-line front end: reproducible experiment orchestration with
// machine-readable reports. Every JSON report embeds the resolved run
// configuration; timings are reported in a separate field so byte-level
// comparisons of results can exclude them. Exit codes: 0 success, 2 bad
// input or failed precondition, 3 budget exhaustion.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "acceptance_suite.hpp"
#include "reports.hpp"
#include "sumclique/cayley.hpp"
#include "sumclique/census.hpp"
#include "sumclique/errors.hpp"
#include "sumclique/exactmath.hpp"
#include "sumclique/freiman.hpp"
#include "sumclique/group.hpp"
#include "sumclique/sampler.hpp"
#include "sumclique/subspace.hpp"
#include "sumclique/sumset.hpp"

namespace {

using nlohmann::json;
using namespace sumclique;

struct Options {
    std::string group_kind = "zN";
    std::uint64_t size = 0;  // cyclic order (0 = unset)
    std::int64_t dim = -1;   // boolean dimension (-1 = unset)
    std::uint64_t seed = 0;
    std::string out = "-";
    std::string format = "json";

    // set sources (exactly one where a set is required)
    std::string set_text;
    std::string set_file;
    std::string ap_text;
    bool paley = false;
    std::string random_density;

    // per-command parameters
    std::uint32_t k = 0;
    bool k_set = false;
    std::uint64_t m_max = 0;
    bool m_max_set = false;
    bool symmetry = false;
    std::uint64_t trials = 30;
    std::string baseline = "cayley";
    std::uint64_t budget_nodes = kDefaultNodeBudget;
    std::uint64_t budget_subsets = kDefaultCensusBudget;
    std::uint64_t budget_subspaces = kDefaultSubspaceBudget;
    std::string epsilon = "1/9";
    std::uint32_t retries = 0;
    bool retries_set = false;

    // freiman-specific
    std::string ambient = "z";
    std::uint64_t modulus = 0;
    std::string other_text;
    int s_param = 2;
    std::string method = "span";

    // subspace-specific
    std::int64_t pair_l = -1;
    bool pair_brute = false;
    std::uint64_t m_param = 0;
    bool m_param_set = false;
    bool tail = false;

    // verify-specific
    std::string level = "quick";
};

struct CommandResult {
    json payload;
    std::optional<std::string> csv;
    int exit_code = 0;
};

GroupSpec resolve_group(const Options& o) {
    if (o.group_kind == "zN") {
        if (o.size == 0) throw PreconditionError("--size is required with --group zN");
        return GroupSpec::cyclic(o.size);
    }
    if (o.group_kind == "z2n") {
        if (o.dim < 0) throw PreconditionError("--dim is required with --group z2n");
        return GroupSpec::boolean(static_cast<std::uint32_t>(o.dim));
    }
    throw PreconditionError("unknown group kind: " + o.group_kind);
}

std::vector<std::uint64_t> parse_uint_list(const std::string& text, std::size_t want,
                                           const std::string& what) {
    std::vector<std::uint64_t> vals;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        try {
            vals.push_back(std::stoull(token));
        } catch (const std::exception&) {
            throw PreconditionError("malformed " + what + ": " + text);
        }
    }
    if (vals.size() != want) throw PreconditionError(what + " needs " + std::to_string(want) +
                                                     " comma-separated values");
    return vals;
}

GroupSet resolve_set(const GroupSpec& g, const Options& o) {
    int provided = int(!o.set_text.empty()) + int(!o.set_file.empty()) + int(!o.ap_text.empty()) +
                   int(o.paley) + int(!o.random_density.empty());
    if (provided != 1)
        throw PreconditionError(
            "provide exactly one of --set, --set-file, --ap, --paley, --random-density");
    if (!o.set_text.empty()) return parse_set(g, o.set_text);
    if (!o.set_file.empty()) return load_set_file(g, o.set_file);
    if (!o.ap_text.empty()) {
        auto v = parse_uint_list(o.ap_text, 3, "--ap");
        return arithmetic_progression(g, static_cast<Element>(v[0]), static_cast<Element>(v[1]),
                                      static_cast<std::uint32_t>(v[2]));
    }
    if (o.paley) {
        if (!g.is_cyclic()) throw PreconditionError("--paley requires a cyclic group");
        return paley_set(g.order);
    }
    return random_subset(g, parse_fraction(o.random_density), SeedSpec{o.seed, 0});
}

std::string set_source_description(const Options& o) {
    if (!o.set_text.empty()) return "list:" + o.set_text;
    if (!o.set_file.empty()) return "file:" + o.set_file;
    if (!o.ap_text.empty()) return "ap:" + o.ap_text;
    if (o.paley) return "paley";
    if (!o.random_density.empty()) return "random:" + o.random_density;
    return "none";
}

json config_json(const std::string& command, const json& group, const Options& o,
                 const std::map<std::string, std::string>& params) {
    json p = json::object();
    for (const auto& [key, value] : params) p[key] = value;
    return json{{"command", command},
                {"group", group},
                {"params", p},
                {"master_seed", o.seed},
                {"budgets",
                 {{"nodes", o.budget_nodes},
                  {"subsets", o.budget_subsets},
                  {"subspaces", o.budget_subspaces}}},
                {"output", {{"path", o.out}, {"format", o.format}}}};
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw PreconditionError("cannot open output file: " + path);
    f << text;
}

// --- subcommand handlers ----------------------------------------------------

CommandResult run_census(const Options& o, json& group, std::map<std::string, std::string>& params) {
    GroupSpec g = resolve_group(o);
    group = reports::group_json(g);
    if (!o.k_set) throw PreconditionError("--k is required");
    params = {{"k", std::to_string(o.k)},
              {"symmetry", o.symmetry ? "true" : "false"},
              {"m_max", o.m_max_set ? std::to_string(o.m_max) : "all"}};
    CensusTable t = census(g, o.k, o.symmetry, o.budget_subsets);
    std::uint64_t cap = o.m_max_set ? o.m_max : ~std::uint64_t(0);
    CensusTable shown = t;
    for (auto it = shown.counts.begin(); it != shown.counts.end();)
        it = (it->first > cap) ? shown.counts.erase(it) : std::next(it);
    return {reports::census_payload(shown, cap), census_csv(shown), 0};
}

CommandResult run_expect(const Options& o, json& group, std::map<std::string, std::string>& params) {
    GroupSpec g = resolve_group(o);
    group = reports::group_json(g);
    if (!o.k_set) throw PreconditionError("--k is required");
    params = {{"k", std::to_string(o.k)}, {"symmetry", o.symmetry ? "true" : "false"}};
    CensusTable t = census(g, o.k, o.symmetry, o.budget_subsets);
    return {reports::expectation_payload(t), std::nullopt, 0};
}

CommandResult run_clique(const Options& o, json& group, std::map<std::string, std::string>& params) {
    GroupSpec g = resolve_group(o);
    group = reports::group_json(g);
    params = {{"set", set_source_description(o)}};
    GroupSet a = resolve_set(g, o);
    CayleyGraph graph = build_cayley_sum_graph(a);
    CliqueResult res = max_clique(graph, o.budget_nodes);
    json payload{{"group", reports::group_json(g)},
                 {"generator", reports::elements_json(a)},
                 {"generator_size", a.card()},
                 {"edge_count", graph.adj.edge_count()},
                 {"omega", res.omega},
                 {"witness", res.witness},
                 {"nodes", res.nodes},
                 {"exact", res.exact}};
    return {payload, std::nullopt, res.exact ? 0 : 3};
}

CommandResult run_simulate(const Options& o, json& group,
                           std::map<std::string, std::string>& params) {
    GroupSpec g = resolve_group(o);
    group = reports::group_json(g);
    BaselineModel model;
    if (o.baseline == "cayley")
        model = BaselineModel::CayleySum;
    else if (o.baseline == "binomial")
        model = BaselineModel::Binomial;
    else
        throw PreconditionError("unknown baseline: " + o.baseline);
    params = {{"trials", std::to_string(o.trials)}, {"baseline", o.baseline}};
    DistributionReport rep = clique_number_distribution(g, o.trials, o.seed, o.budget_nodes, model);
    return {reports::simulate_payload(rep), reports::histogram_csv(rep),
            rep.budget_hits.empty() ? 0 : 3};
}

AmbientSpace resolve_ambient(const Options& o) {
    if (o.ambient == "z") return AmbientSpace::integers();
    if (o.ambient == "zN") {
        if (o.modulus == 0) throw PreconditionError("--mod is required with --ambient zN");
        return AmbientSpace::prime_cyclic(static_cast<std::uint32_t>(o.modulus));
    }
    if (o.ambient == "z2n") {
        if (o.dim < 0) throw PreconditionError("--dim is required with --ambient z2n");
        return AmbientSpace::boolean_space(static_cast<std::uint32_t>(o.dim));
    }
    throw PreconditionError("unknown ambient: " + o.ambient);
}

std::vector<long long> parse_int_list(const std::string& text) {
    std::vector<long long> vals;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        try {
            vals.push_back(std::stoll(token));
        } catch (const std::exception&) {
            throw PreconditionError("malformed element list: " + text);
        }
    }
    if (vals.empty()) throw PreconditionError("empty element list");
    return vals;
}

CommandResult run_freiman(const Options& o, json& group,
                          std::map<std::string, std::string>& params) {
    AmbientSpace amb = resolve_ambient(o);
    group = json{{"ambient", amb.name()}, {"field", amb.field_id()}};
    if (o.set_text.empty()) throw PreconditionError("--set is required");
    OrderedSet a = make_ordered_set(amb, parse_int_list(o.set_text));
    params = {{"set", o.set_text},
              {"s", std::to_string(o.s_param)},
              {"method", o.method}};
    if (!o.other_text.empty()) {
        params["other"] = o.other_text;
        OrderedSet b = make_ordered_set(amb, parse_int_list(o.other_text));
        IsoMethod method;
        if (o.method == "span")
            method = IsoMethod::RelationSpan;
        else if (o.method == "oracle")
            method = IsoMethod::DefinitionOracle;
        else
            throw PreconditionError("unknown method: " + o.method);
        IsoResult res = are_s_isomorphic(a, b, o.s_param, method);
        const char* verdict = res.verdict == IsoVerdict::Yes   ? "yes"
                              : res.verdict == IsoVerdict::No  ? "no"
                                                               : "unknown";
        json payload{{"mode", "isomorphism"},
                     {"k", a.size()},
                     {"verdict", verdict}};
        if (res.verdict == IsoVerdict::Yes) payload["witness"] = res.witness;
        return {payload, std::nullopt, 0};
    }
    HomSpace h = hom_space(a);
    json payload{{"mode", "structure"},
                 {"k", a.size()},
                 {"hom_dim", h.dim},
                 {"dimension", h.freiman_dim}};
    if (a.size() <= 8) payload["class_key"] = class_key_hex(canonical_set_key(a, o.s_param));
    if (amb.kind == AmbientKind::Integers) {
        FreimanInequalityReport ineq = check_freiman_inequality(a);
        payload["inequality"] = json{{"k", ineq.k},
                                     {"m", ineq.m},
                                     {"r", ineq.r},
                                     {"lower_bound", ineq.lower_bound.str()},
                                     {"holds", ineq.holds}};
    }
    return {payload, std::nullopt, 0};
}

CommandResult run_witness(const Options& o, json& group,
                          std::map<std::string, std::string>& params) {
    GroupSpec g = resolve_group(o);
    group = reports::group_json(g);
    GroupSet a = resolve_set(g, o);
    std::uint32_t cap = o.retries_set ? o.retries : 50;
    params = {{"set", set_source_description(o)},
              {"epsilon", o.epsilon},
              {"retries", std::to_string(cap)}};
    WitnessResult w = small_doubling_witness(a, parse_fraction(o.epsilon), SeedSpec{o.seed, 0}, cap);
    json payload{{"input_size", a.card()},
                 {"witness", reports::elements_json(w.b)},
                 {"witness_size", w.b.card()},
                 {"retries", w.retries},
                 {"achieved_m", w.achieved_m},
                 {"density", w.p},
                 {"size_bound", w.size_bound},
                 {"size_bound_log2", w.size_bound_log2}};
    return {payload, std::nullopt, 0};
}

CommandResult run_refine(const Options& o, json& group,
                         std::map<std::string, std::string>& params) {
    GroupSpec g = resolve_group(o);
    group = reports::group_json(g);
    GroupSet a = resolve_set(g, o);
    std::uint32_t cap = o.retries_set ? o.retries : 100;
    params = {{"set", set_source_description(o)}, {"retries", std::to_string(cap)}};
    RefinementContext ctx = make_refinement_context(a);
    RefinementResult res = popular_sum_refinement(ctx, SeedSpec{o.seed, 0}, cap);
    json payload{{"input_size", a.card()},
                 {"sumset_size", ctx.m},
                 {"popularity_threshold", ctx.popularity_threshold},
                 {"pick_density", ctx.pick_density},
                 {"anchor", res.a_star},
                 {"anchor_unpopular_degree", ctx.a_star_unpopular_degree},
                 {"a0", reports::elements_json(res.a0)},
                 {"a0_size", res.a0.card()},
                 {"a1_size", res.a1.card()},
                 {"removed", a.card() - res.a1.card()},
                 {"retries", res.retries},
                 {"met_target", res.met_target},
                 {"size_score", res.size_score},
                 {"size_target", res.size_target}};
    return {payload, std::nullopt, res.met_target ? 0 : 3};
}

CommandResult run_subspace(const Options& o, json& group,
                           std::map<std::string, std::string>& params) {
    if (o.dim < 0) throw PreconditionError("--dim is required");
    if (!o.k_set) throw PreconditionError("--k is required");
    std::uint32_t n = static_cast<std::uint32_t>(o.dim);
    GroupSpec g = GroupSpec::boolean(n);
    group = reports::group_json(g);
    params = {{"k", std::to_string(o.k)}};
    json payload{{"moments", reports::moment_payload(moment_report(n, o.k))}};
    int provided = int(!o.set_text.empty()) + int(!o.set_file.empty()) +
                   int(!o.random_density.empty());
    if (provided > 0) {
        GroupSet a = resolve_set(g, o);
        params["set"] = set_source_description(o);
        payload["statistic"] = subspace_clique_statistic(a, o.k, o.budget_subspaces).get_str();
        payload["set_size"] = a.card();
    }
    if (o.pair_l >= 0) {
        std::uint32_t l = static_cast<std::uint32_t>(o.pair_l);
        params["pair_l"] = std::to_string(l);
        json pair{{"l", l},
                  {"formula",
                   intersection_pair_count(n, o.k, l, PairCountMode::Formula).get_str()}};
        if (o.pair_brute)
            pair["brute_force"] =
                intersection_pair_count(n, o.k, l, PairCountMode::BruteForce, o.budget_subspaces)
                    .get_str();
        payload["pair_count"] = pair;
    }
    return {payload, std::nullopt, 0};
}

CommandResult run_bounds(const Options& o, json& group,
                         std::map<std::string, std::string>& params) {
    GroupSpec::Kind kind;
    std::uint64_t n_value = 0;
    if (o.group_kind == "zN") {
        kind = GroupSpec::Kind::Cyclic;
        if (o.size == 0) throw PreconditionError("--size is required with --group zN");
        n_value = o.size;
    } else if (o.group_kind == "z2n") {
        kind = GroupSpec::Kind::Boolean;
        if (o.dim >= 0)
            n_value = std::uint64_t(1) << o.dim;
        else if (o.size > 0)
            n_value = o.size;
        else
            throw PreconditionError("--dim or --size is required with --group z2n");
    } else {
        throw PreconditionError("unknown group kind: " + o.group_kind);
    }
    group = json{{"kind", kind == GroupSpec::Kind::Cyclic ? "cyclic" : "boolean"},
                 {"order", n_value}};
    params = {{"tail", o.tail ? "true" : "false"}};
    json payload = json::object();
    if (o.k_set && o.m_param_set) {
        params["k"] = std::to_string(o.k);
        params["m"] = std::to_string(o.m_param);
        payload["count_bounds"] =
            reports::count_bounds_payload(evaluate_count_bounds(kind, n_value, o.k, o.m_param));
    }
    if (o.tail) payload["tail"] = reports::tail_payload(tail_sum_bound(kind, n_value));
    if (payload.empty())
        throw PreconditionError("nothing to evaluate: pass --k with --m, or --tail");
    return {payload, std::nullopt, 0};
}

CommandResult run_rectify(const Options& o, json& group,
                          std::map<std::string, std::string>& params) {
    GroupSpec g = resolve_group(o);
    if (!g.is_cyclic()) throw PreconditionError("rectification applies to cyclic groups");
    group = reports::group_json(g);
    GroupSet a = resolve_set(g, o);
    params = {{"set", set_source_description(o)}};
    std::optional<RectifyWitness> w = rectify(a);
    json payload{{"set", reports::elements_json(a)},
                 {"set_size", a.card()},
                 {"found", w.has_value()}};
    if (w) {
        payload["lambda"] = w->lambda;
        payload["mu"] = w->mu;
    }
    return {payload, std::nullopt, 0};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sumclique: restricted sumsets, Cayley sum graphs, and clique experiments"};
    app.require_subcommand(1);
    Options o;

    auto add_group = [&](CLI::App* cmd) {
        cmd->add_option("--group", o.group_kind, "group family: zN or z2n");
        cmd->add_option("--size", o.size, "cyclic group order N");
        cmd->add_option("--dim", o.dim, "boolean group dimension n");
    };
    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("--seed", o.seed, "master seed");
        cmd->add_option("--out", o.out, "output path ('-' = stdout)");
        cmd->add_option("--format", o.format, "json or csv");
    };
    auto add_set_source = [&](CLI::App* cmd) {
        cmd->add_option("--set", o.set_text, "comma-separated elements");
        cmd->add_option("--set-file", o.set_file, "file with one element per line");
        cmd->add_option("--ap", o.ap_text, "arithmetic progression start,step,length");
        cmd->add_flag("--paley", o.paley, "nonzero quadratic residues (cyclic prime order)");
        cmd->add_option("--random-density", o.random_density,
                        "random subset with rational density A/B");
    };

    CLI::App* census_cmd = app.add_subcommand("census", "subset counts by restricted-sumset size");
    add_group(census_cmd);
    add_io(census_cmd);
    census_cmd->add_option("--k", o.k, "subset size");
    census_cmd->add_option("--m-max", o.m_max, "truncate the table to m <= this");
    census_cmd->add_flag("--symmetry", o.symmetry, "orbit-reduced enumeration");
    census_cmd->add_option("--budget-subsets", o.budget_subsets, "enumeration budget");

    CLI::App* expect_cmd =
        app.add_subcommand("expect", "expected clique count of a density-1/2 random set");
    add_group(expect_cmd);
    add_io(expect_cmd);
    expect_cmd->add_option("--k", o.k, "clique size");
    expect_cmd->add_flag("--symmetry", o.symmetry, "orbit-reduced enumeration");
    expect_cmd->add_option("--budget-subsets", o.budget_subsets, "enumeration budget");

    CLI::App* clique_cmd = app.add_subcommand("clique", "exact clique number of a Cayley sum graph");
    add_group(clique_cmd);
    add_io(clique_cmd);
    add_set_source(clique_cmd);
    clique_cmd->add_option("--budget-nodes", o.budget_nodes, "search node budget");

    CLI::App* simulate_cmd =
        app.add_subcommand("simulate", "clique-number distribution over random sets");
    add_group(simulate_cmd);
    add_io(simulate_cmd);
    simulate_cmd->add_option("--trials", o.trials, "number of independent trials");
    simulate_cmd->add_option("--baseline", o.baseline, "cayley or binomial");
    simulate_cmd->add_option("--budget-nodes", o.budget_nodes, "search node budget per trial");

    CLI::App* freiman_cmd =
        app.add_subcommand("freiman", "relation spans, isomorphism tests, dimension invariants");
    add_io(freiman_cmd);
    freiman_cmd->add_option("--ambient", o.ambient, "z (integers), zN (prime modulus), or z2n");
    freiman_cmd->add_option("--mod", o.modulus, "modulus for --ambient zN");
    freiman_cmd->add_option("--dim", o.dim, "dimension for --ambient z2n");
    freiman_cmd->add_option("--set", o.set_text, "comma-separated elements (required)");
    freiman_cmd->add_option("--other", o.other_text, "second set for an isomorphism test");
    freiman_cmd->add_option("--s", o.s_param, "sum arity s");
    freiman_cmd->add_option("--method", o.method, "span or oracle");

    CLI::App* witness_cmd =
        app.add_subcommand("witness", "random subset witnessing near-maximal restricted doubling");
    add_group(witness_cmd);
    add_io(witness_cmd);
    add_set_source(witness_cmd);
    witness_cmd->add_option("--epsilon", o.epsilon, "doubling slack, rational A/B in (0, 1/4]");
    witness_cmd->add_option("--retries", o.retries, "draw cap")->each([&](const std::string&) {
        o.retries_set = true;
    });

    CLI::App* refine_cmd =
        app.add_subcommand("refine", "popular-sum refinement around an unpopular anchor");
    add_group(refine_cmd);
    add_io(refine_cmd);
    add_set_source(refine_cmd);
    refine_cmd->add_option("--retries", o.retries, "draw cap")->each([&](const std::string&) {
        o.retries_set = true;
    });

    CLI::App* subspace_cmd =
        app.add_subcommand("subspace", "subspace counts, pair formulas, and clique statistics");
    add_io(subspace_cmd);
    subspace_cmd->add_option("--dim", o.dim, "ambient dimension n");
    subspace_cmd->add_option("--k", o.k, "subspace dimension");
    subspace_cmd->add_option("--set", o.set_text, "comma-separated elements");
    subspace_cmd->add_option("--set-file", o.set_file, "file with one element per line");
    subspace_cmd->add_option("--random-density", o.random_density, "random set density A/B");
    subspace_cmd->add_option("--pair-l", o.pair_l, "intersection dimension for pair counts");
    subspace_cmd->add_flag("--pair-brute", o.pair_brute, "also brute-force the pair count");
    subspace_cmd->add_option("--budget-subspaces", o.budget_subspaces, "enumeration budget");

    CLI::App* bounds_cmd =
        app.add_subcommand("bounds", "analytic count bounds and the tail-sum certificate");
    add_io(bounds_cmd);
    bounds_cmd->add_option("--group", o.group_kind, "group family: zN or z2n");
    bounds_cmd->add_option("--size", o.size, "group order N");
    bounds_cmd->add_option("--dim", o.dim, "boolean dimension n (order 2^n)");
    bounds_cmd->add_option("--k", o.k, "subset size");
    bounds_cmd->add_option("--m", o.m_param, "restricted-sumset size");
    bounds_cmd->add_flag("--tail", o.tail, "evaluate the tail-sum certificate");

    CLI::App* rectify_cmd =
        app.add_subcommand("rectify", "dilation placing a cyclic set into a rectifiable range");
    add_group(rectify_cmd);
    add_io(rectify_cmd);
    add_set_source(rectify_cmd);

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the acceptance battery");
    verify_cmd->add_option("--level", o.level, "quick or full");

    // mark value-presence for options CLI11 can't default-distinguish
    census_cmd->get_option("--k")->each([&](const std::string&) { o.k_set = true; });
    expect_cmd->get_option("--k")->each([&](const std::string&) { o.k_set = true; });
    subspace_cmd->get_option("--k")->each([&](const std::string&) { o.k_set = true; });
    bounds_cmd->get_option("--k")->each([&](const std::string&) { o.k_set = true; });
    bounds_cmd->get_option("--m")->each([&](const std::string&) { o.m_param_set = true; });
    census_cmd->get_option("--m-max")->each([&](const std::string&) { o.m_max_set = true; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {  // help and friends
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (app.got_subcommand(verify_cmd)) {
        acceptance::Level level;
        if (o.level == "quick")
            level = acceptance::Level::Quick;
        else if (o.level == "full")
            level = acceptance::Level::Full;
        else {
            std::cerr << "error: unknown level: " << o.level << "\n";
            return 2;
        }
        return acceptance::run_suite(level, std::cout) == 0 ? 0 : 1;
    }

    try {
        std::string command;
        CommandResult (*handler)(const Options&, json&, std::map<std::string, std::string>&) =
            nullptr;
        if (app.got_subcommand(census_cmd)) command = "census", handler = run_census;
        if (app.got_subcommand(expect_cmd)) command = "expect", handler = run_expect;
        if (app.got_subcommand(clique_cmd)) command = "clique", handler = run_clique;
        if (app.got_subcommand(simulate_cmd)) command = "simulate", handler = run_simulate;
        if (app.got_subcommand(freiman_cmd)) command = "freiman", handler = run_freiman;
        if (app.got_subcommand(witness_cmd)) command = "witness", handler = run_witness;
        if (app.got_subcommand(refine_cmd)) command = "refine", handler = run_refine;
        if (app.got_subcommand(subspace_cmd)) command = "subspace", handler = run_subspace;
        if (app.got_subcommand(bounds_cmd)) command = "bounds", handler = run_bounds;
        if (app.got_subcommand(rectify_cmd)) command = "rectify", handler = run_rectify;
        if (!handler) {
            std::cerr << "error: no subcommand\n";
            return 2;
        }

        if (o.format != "json" && o.format != "csv")
            throw PreconditionError("unknown format: " + o.format);
        if (o.format == "csv" && command != "census" && command != "simulate")
            throw PreconditionError("csv output is available for census and simulate only");

        auto t0 = std::chrono::steady_clock::now();
        json group;
        std::map<std::string, std::string> params;
        CommandResult result = handler(o, group, params);
        double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();

        json config = config_json(command, group, o, params);
        if (o.format == "csv") {
            std::string text = "# " + config.dump() + "\n" + *result.csv;
            write_text(o.out, text);
        } else {
            json doc{{"config", config},
                     {"report", result.payload},
                     {"timings_ms", {{"total", ms}}}};
            write_text(o.out, doc.dump(2) + "\n");
        }
        return result.exit_code;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
