#pragma once

// JSON payload builders shared by the command-line front end and the
// acceptance suite, so determinism checks compare the exact bytes the CLI
// would emit. Keys are emitted in sorted order; exact integers and rationals
// are rendered as decimal strings.

#include <string>

#include <json.hpp>

#include "sumclique/census.hpp"
#include "sumclique/exactmath.hpp"
#include "sumclique/group.hpp"
#include "sumclique/sampler.hpp"
#include "sumclique/subspace.hpp"

namespace sumclique::reports {

using nlohmann::json;

inline json group_json(const GroupSpec& g) {
    json j;
    j["kind"] = g.is_cyclic() ? "cyclic" : "boolean";
    j["order"] = g.order;
    if (g.is_boolean()) j["dim"] = g.dim;
    j["name"] = g.name();
    return j;
}

inline json rat_json(const BigRat& r) {
    return json{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

inline json fraction_json(const Fraction& f) {
    return json{{"num", f.num}, {"den", f.den}};
}

inline json elements_json(const GroupSet& s) {
    json arr = json::array();
    for (Element e : s.elements()) arr.push_back(e);
    return arr;
}

inline json census_payload(const CensusTable& t, std::uint64_t m_max) {
    json counts = json::object();
    for (const auto& [m, c] : t.counts)
        if (m <= m_max) counts[std::to_string(m)] = c.get_str();
    return json{{"group", group_json(t.group)},
                {"k", t.k},
                {"counts", counts},
                {"total", t.total.get_str()}};
}

inline json expectation_payload(const CensusTable& t) {
    ExpectationReport rep = expected_cliques(t);
    json j = census_payload(t, ~std::uint64_t(0));
    j["expectation"] = rat_json(rep.expectation);
    j["markov_bound"] = rat_json(rep.markov_bound);
    return j;
}

inline json simulate_payload(const DistributionReport& rep) {
    json per_trial = json::array();
    for (const TrialOutcome& out : rep.per_trial)
        per_trial.push_back(json{{"trial", out.trial},
                                 {"omega", out.omega},
                                 {"exact", out.exact},
                                 {"nodes", out.nodes}});
    json histogram = json::object();
    for (const auto& [omega, count] : rep.histogram) histogram[std::to_string(omega)] = count;
    return json{{"group", group_json(rep.group)},
                {"baseline", rep.baseline == BaselineModel::CayleySum ? "cayley" : "binomial"},
                {"trials", rep.trials},
                {"per_trial", per_trial},
                {"histogram", histogram},
                {"budget_hits", rep.budget_hits},
                {"median_omega", rep.median_omega}};
}

inline std::string histogram_csv(const DistributionReport& rep) {
    std::string out = "omega,count\n";
    for (const auto& [omega, count] : rep.histogram)
        out += std::to_string(omega) + "," + std::to_string(count) + "\n";
    return out;
}

inline json moment_payload(const MomentReport& r) {
    return json{{"n", r.n},
                {"k", r.k},
                {"subspace_count", r.subspace_count.get_str()},
                {"mean", rat_json(r.mean_exact)},
                {"mean_lb_log2", log2_of(r.mean_lower_bound)},
                {"variance_ub_log2", log2_of(r.variance_bound)},
                {"chebyshev_log2", log2_of(r.chebyshev_bound)},
                {"target_dimension", r.target_dimension},
                {"concentrated", r.concentrated}};
}

inline json count_bounds_payload(const CountBoundReport& r) {
    json j{{"kind", r.kind == GroupSpec::Kind::Cyclic ? "cyclic" : "boolean"},
           {"order", r.n_value},
           {"k", r.k},
           {"m", r.m}};
    auto put = [&](const char* name, const std::optional<double>& v) {
        if (v) j[name] = *v;
    };
    put("log2_bb1", r.log2_bb1);
    put("log2_bb2", r.log2_bb2);
    put("log2_bb1a", r.log2_bb1a);
    put("log2_bb2a", r.log2_bb2a);
    return j;
}

inline json tail_payload(const TailSumReport& r) {
    return json{{"kind", r.kind == GroupSpec::Kind::Cyclic ? "cyclic" : "boolean"},
                {"order", r.n_value},
                {"k_used", r.k_used},
                {"log2_tail", r.log2_tail},
                {"passes", r.passes},
                {"scalar_max_2e", r.scalar_max_2e},
                {"scalar_max_e", r.scalar_max_e},
                {"scalar_2e_ok", r.scalar_2e_ok},
                {"scalar_e_ok", r.scalar_e_ok}};
}

}  // namespace sumclique::reports
