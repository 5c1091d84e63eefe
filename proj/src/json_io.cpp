#include "biplab/json_io.hpp"

namespace biplab {

namespace {

OrderedJson side_to_json(const SideReport& s) {
    return OrderedJson{{"max_bad_count", s.max_bad_count},
                       {"threshold", s.threshold},
                       {"passes", s.passes},
                       {"worst_offender", s.worst_offender}};
}

OrderedJson pack_to_json(const VertexPack& p) {
    OrderedJson members = OrderedJson::array();
    for (std::size_t k = 0; k < p.size(); ++k) members.push_back(p[k]);
    return OrderedJson{{"side", side_name(p.side())}, {"members", members}};
}

}  // namespace

OrderedJson to_json(const SpectrumReport& rep) {
    return OrderedJson{{"phi", rep.phi},
                       {"method", method_name(rep.method)},
                       {"max_size", rep.sizes.max_value()},
                       {"budget_used", rep.budget_used}};
}

OrderedJson to_json(const CoverageProfile& prof) {
    OrderedJson windows = OrderedJson::array();
    for (const auto& w : prof.windows)
        windows.push_back(OrderedJson{{"start", w.start}, {"distinct", w.distinct}});
    return OrderedJson{{"window_width", prof.window_width},
                       {"min_distinct", prof.min_distinct},
                       {"windows", windows}};
}

OrderedJson to_json(const BicliqueWitness& w) {
    return OrderedJson{{"kind", kind_name(w.kind)}, {"x_set", w.x_set}, {"y_set", w.y_set}};
}

OrderedJson to_json(const RamseyVerdict& v) {
    OrderedJson j{{"C", v.C},
                  {"a_threshold", v.a_threshold},
                  {"b_threshold", v.b_threshold},
                  {"a_effective", v.a_effective},
                  {"b_effective", v.b_effective},
                  {"is_ramsey", v.is_ramsey},
                  {"exhaustive", v.search_exhaustive}};
    if (v.witness) j["witness"] = to_json(*v.witness);
    return j;
}

OrderedJson to_json(const DiversityReport& rep) {
    OrderedJson j;
    if (rep.pair_mode) {
        j["alpha"] = rep.alpha;
        j["eps"] = rep.c;
    } else {
        j["c"] = rep.c;
    }
    j["delta"] = rep.delta;
    j["mode"] = rep.exact ? "exact" : "sampled";
    j["x_side"] = side_to_json(rep.x_side);
    j["y_side"] = side_to_json(rep.y_side);
    j["passes"] = rep.passes;
    return j;
}

OrderedJson to_json(const RichnessReport& rep) {
    return OrderedJson{{"gamma", rep.gamma},
                       {"delta", rep.delta},
                       {"eps", rep.eps},
                       {"mode", rep.sampled ? "sampled" : "exact"},
                       {"x_side", side_to_json(rep.x_side)},
                       {"y_side", side_to_json(rep.y_side)},
                       {"worst_w_x", rep.worst_w_x},
                       {"worst_w_y", rep.worst_w_y},
                       {"passes", rep.passes}};
}

OrderedJson to_json(const Lemma46Report& rep) {
    return OrderedJson{{"hypothesis_met", rep.hypothesis_met},
                       {"diversity_ok", rep.diversity_ok},
                       {"pair_diversity_ok", rep.pair_diversity_ok},
                       {"pair_count_ok", rep.pair_count_ok},
                       {"pair_count_x", rep.pair_count_x},
                       {"pair_count_y", rep.pair_count_y},
                       {"pair_count_limit_x", rep.pair_count_limit_x},
                       {"pair_count_limit_y", rep.pair_count_limit_y}};
}

OrderedJson to_json(const ClaimDiagnostics& diag) {
    return OrderedJson{{"e_u", diag.e_u},
                       {"deviation_1", diag.deviation_1},
                       {"limit_1", diag.limit_1},
                       {"fraction_untouched", diag.fraction_untouched},
                       {"fraction_in_window", diag.fraction_in_window},
                       {"min_pair_symdiff", diag.min_pair_symdiff},
                       {"limit_4", diag.limit_4},
                       {"equal_degree_pairs", diag.equal_degree_pairs},
                       {"limit_5", diag.limit_5},
                       {"vacuous_45", diag.vacuous_45},
                       {"holds", OrderedJson::array({diag.c1, diag.c2, diag.c3, diag.c4, diag.c5})}};
}

OrderedJson to_json(const ConstructionParams& p) {
    return OrderedJson{{"C", p.C},         {"alpha", p.alpha},
                       {"c", p.c},         {"c1", p.c1},
                       {"c2", p.c2},       {"Q_window", p.Q_window},
                       {"delta", p.delta}, {"gamma", p.gamma},
                       {"eps", p.eps},     {"K1", p.K1},
                       {"K2", p.K2},       {"K3", p.K3},
                       {"K4", p.K4},       {"K5", p.K5},
                       {"retries", p.retries}, {"claim_floors", p.claim_floors},
                       {"seed", p.seed}};
}

OrderedJson witness_to_json(const ConstructionWitness& w, bool with_timings) {
    OrderedJson packs = OrderedJson::array();
    OrderedJson j{{"params", to_json(w.params)},
                  {"l", w.l},
                  {"seed", w.seed},
                  {"attempts", w.attempts},
                  {"transposed", w.transposed},
                  {"p", w.p},
                  {"d_prime", w.d_prime},
                  {"d_dprime", w.d_dprime},
                  {"d", w.d},
                  {"mode", mode_name(w.mode)},
                  {"A_size", w.A.size()},
                  {"S_size", w.S.size()},
                  {"T_size", w.T.size()},
                  {"Z_size", w.Z.size()},
                  {"B_size", w.B.size()},
                  {"separation", w.separation},
                  {"branch", w.branch},
                  {"sub_nominal", w.sub_nominal},
                  {"claims", to_json(w.diagnostics)},
                  {"q_family",
                   OrderedJson{{"k_lo", w.q_family.k_lo},
                               {"k_hi", w.q_family.k_hi},
                               {"i_max", w.q_family.i_max},
                               {"entries", w.q_family.entries.size()},
                               {"clipped", w.q_family.clipped}}}};
    OrderedJson z = OrderedJson::array();
    for (const auto& pk : w.Z) z.push_back(pack_to_json(pk));
    j["Z"] = z;
    if (with_timings) {
        OrderedJson t;
        for (const auto& [name, ms] : w.stage_ms) t[name] = ms;
        j["timings_ms"] = t;
    }
    return j;
}

OrderedJson family_to_json(const SizeFamily& fam) {
    return OrderedJson{{"raw_entries", fam.raw.size()},
                       {"ladder", fam.ladder.size()},
                       {"kept", fam.kept.size()},
                       {"thinning_gap", fam.thinning_gap},
                       {"z_used", fam.z_used},
                       {"distinct_count", fam.distinct_count},
                       {"verified", fam.verified}};
}

}  // namespace biplab
