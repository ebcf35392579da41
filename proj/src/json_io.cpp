#include "ectff/json_io.hpp"

namespace ectff {

Json to_json(const Rational& r) {
    if (r.is_integer()) return r.num();
    return Json{{"num", r.num()}, {"den", r.den()}, {"value", r.as_double()}};
}

Json to_json(const DifferenceSetCertificate& cert) {
    Json j;
    j["group"] = cert.subset.group().to_string();
    j["elements"] = cert.subset.literal();
    j["size"] = cert.subset.size();
    j["lambda"] = to_json(cert.lambda);
    j["verdict"] = cert.verdict;
    if (cert.witness)
        j["witness"] = cert.subset.group().element_literal(*cert.witness);
    else
        j["witness"] = nullptr;
    return j;
}

Json to_json(const FrameCertificate& cert) {
    Json j;
    j["ambient"] = cert.ambient;
    j["count"] = cert.count;
    j["rank"] = cert.rank;
    j["tight"] = cert.tight;
    j["tight_constant"] = cert.exact ? to_json(cert.tight_constant) : Json(cert.tight_constant_value);
    j["equal_norm"] = cert.equal_norm;
    j["norm2"] = cert.exact ? to_json(cert.norm2) : Json(cert.norm2_value);
    j["equiangular"] = cert.equiangular;
    j["inner_modulus"] = cert.inner_modulus;
    j["coherence"] = cert.coherence;
    j["welch_bound"] = cert.welch_bound;
    j["is_etf"] = cert.is_etf;
    j["exact"] = cert.exact;
    j["max_residual"] = cert.max_residual;
    return j;
}

Json to_json(const SrgCertificate& cert) {
    Json j;
    j["v"] = cert.v;
    j["k"] = cert.k;
    j["lambda"] = cert.lambda_graph;
    j["u"] = cert.u;
    j["identity_residual"] = cert.identity_residual;
    j["degenerate"] = cert.degenerate;
    return j;
}

Json to_json(const PairedDSCertificate& cert) {
    Json j;
    j["group"] = cert.group_name;
    j["bicharacter"] = cert.bicharacter_name;
    j["d"] = cert.d_literal;
    j["e"] = cert.e_literal;
    j["r"] = to_json(cert.rank_value);
    j["gram_rank"] = cert.gram_rank;
    j["a"] = to_json(cert.tight_constant);
    j["verdict"] = cert.verdict;
    j["trivial"] = cert.trivial;
    j["necessary_check"] = cert.necessary_check;
    j["exact"] = cert.exact;
    j["residuals"] = Json{{"idempotency", cert.idempotency_residual}};
    return j;
}

Json to_json(const CharsumResult& cs) {
    Json j;
    j["verdict"] = cs.verdict;
    j["constant_re"] = cs.constant.real();
    j["constant_im"] = cs.constant.imag();
    j["exact"] = cs.exact;
    j["profile_size"] = cs.profile.size();
    return j;
}

Json to_json(const EctffCertificate& cert) {
    Json j;
    j["ambient"] = cert.ambient;
    j["count"] = cert.count;
    j["rank"] = cert.rank;
    j["tight"] = cert.tight;
    j["tight_constant"] = to_json(cert.tight_constant);
    j["tight_residual"] = cert.tight_residual;
    j["equichordal"] = cert.equichordal;
    j["common_trace"] = cert.exact ? to_json(cert.common_trace) : Json(cert.common_trace_value);
    j["max_trace_deviation"] = cert.max_trace_deviation;
    j["theoretical_trace"] = to_json(cert.theoretical_trace);
    j["matches_theoretical"] = cert.matches_theoretical;
    j["min_chordal_distance"] = cert.min_chordal_distance;
    j["simplex_bound"] = cert.bounds.simplex;
    j["orthoplex_bound"] = cert.bounds.orthoplex;
    j["gerzon_real"] = cert.bounds.gerzon_r;
    j["gerzon_complex"] = cert.bounds.gerzon_c;
    j["meets_simplex"] = cert.meets_simplex;
    if (cert.equiisoclinic.has_value()) {
        j["equiisoclinic"] = *cert.equiisoclinic;
        j["sigma"] = cert.sigma;
    } else {
        j["equiisoclinic"] = nullptr;
    }
    if (!cert.angle_spectra.empty()) {
        Json spectra = Json::array();
        for (const auto& s : cert.angle_spectra) spectra.push_back(s);
        j["principal_angle_cosines"] = spectra;
    }
    j["is_ectff"] = cert.is_ectff;
    j["exact"] = cert.exact;
    return j;
}

Json to_json(const FeasibleTriple& t) {
    Json j;
    j["d"] = t.d;
    j["e"] = t.e;
    j["n"] = t.n;
    j["r"] = t.r;
    j["sums_to_n"] = t.sums_to_n;
    j["ds_known"] = t.ds_known.has_value() ? Json(*t.ds_known) : Json(nullptr);
    return j;
}

Json to_json(const ScanReport& report) {
    Json j;
    j["max_n"] = report.max_n;
    j["rule"] = report.rule == ESideRule::OverNMinus1 ? "e(e-1)/(n-1)" : "e(e-1)/n";
    j["count_over_n_minus_1"] = report.count_over_n_minus_1;
    j["count_over_n"] = report.count_over_n;
    Json arr = Json::array();
    for (const auto& t : report.triples) arr.push_back(to_json(t));
    j["triples"] = arr;
    j["count"] = report.triples.size();
    return j;
}

Json to_json(const SearchReport& report) {
    Json j;
    j["group"] = report.group.to_string();
    j["d_size"] = report.d_size;
    j["e_size"] = report.e_size;
    j["feasible"] = report.feasible;
    j["infeasible_reasons"] = report.infeasible_reasons;
    Json arr = Json::array();
    for (const auto& p : report.pairs) {
        Json pj;
        pj["d"] = p.d_set.literal();
        pj["e"] = p.e_set.literal();
        pj["certificate"] = to_json(p.certificate);
        arr.push_back(pj);
    }
    j["pairs"] = arr;
    j["pair_count"] = report.pairs.size();
    j["d_classes"] = report.d_classes;
    j["e_classes"] = report.e_classes;
    j["pairs_tested"] = report.pairs_tested;
    j["exhaustive"] = report.exhaustive;
    j["caps"] = Json{{"nodes_per_side", report.cap_nodes_per_side},
                     {"class_pairs", report.cap_class_pairs}};
    return j;
}

Json to_json(const InfiniteFamilyBundle& bundle) {
    Json j;
    j["m"] = bundle.m;
    j["kind"] = to_string(bundle.kind);
    j["sign"] = bundle.sign;
    j["quadric"] = to_json(bundle.quadric_cert);
    j["complement"] = to_json(bundle.complement_cert);
    j["pds"] = to_json(bundle.pds);
    j["charsum"] = to_json(bundle.charsum);
    j["etf_a"] = to_json(bundle.etf_a);
    j["sub_etf_b"] = to_json(bundle.sub_etf_b);
    j["sub_b_gram_invariant"] = bundle.sub_b_gram_invariant;
    j["ectff_c"] = to_json(bundle.ectff_c);
    j["etf_d"] = to_json(bundle.etf_d);
    j["sub_etf_e"] = to_json(bundle.sub_etf_e);
    j["sub_e_gram_invariant"] = bundle.sub_e_gram_invariant;
    j["ectff_f"] = to_json(bundle.ectff_f);
    return j;
}

Json run_report(const std::string& command_echo, const Tolerance& tol, Json payload,
                double elapsed_seconds) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["command"] = command_echo;
    j["tolerance"] = Json{{"rel", tol.rel}, {"abs", tol.abs}};
    j["report"] = std::move(payload);
    j["timing"] = Json{{"elapsed_seconds", elapsed_seconds}};
    return j;
}

}  // namespace ectff
