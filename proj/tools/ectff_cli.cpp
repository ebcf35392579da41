#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ectff/json_io.hpp"
#include "ectff/parallel.hpp"

namespace {

using namespace ectff;
namespace fs = std::filesystem;

struct GlobalOpts {
    Tolerance tol;
    std::string out_dir;
    bool pretty = false;
    int threads = 0;  // 0 = leave env default
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

fs::path resolve_out(const GlobalOpts& g, const std::string& file) {
    if (g.out_dir.empty()) return fs::path(file);
    fs::create_directories(g.out_dir);
    return fs::path(g.out_dir) / file;
}

void emit(const GlobalOpts& g, const Json& j, const std::string& file = {}) {
    std::string text = g.pretty ? j.dump(2) : j.dump();
    if (!file.empty()) {
        std::ofstream os(resolve_out(g, file));
        os << text << '\n';
    } else {
        std::cout << text << '\n';
    }
}

PairingForm make_form(const GroupSpec& group, const std::string& name) {
    if (name == "standard") return PairingForm::standard(group);
    if (name == "symplectic") return PairingForm::symplectic(group);
    throw CLI::ValidationError("--bicharacter", "expected standard or symplectic");
}

std::string echo_command(int argc, char** argv) {
    std::ostringstream ss;
    for (int i = 0; i < argc; ++i) {
        if (i) ss << ' ';
        ss << argv[i];
    }
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Difference-set frames: construction, certification and search"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--tol-rel", g.tol.rel, "relative tolerance for floating-point paths");
    app.add_option("--tol-abs", g.tol.abs, "absolute tolerance for floating-point paths");
    app.add_option("--out", g.out_dir, "directory for file outputs");
    app.add_option("--threads", g.threads, "worker thread cap (default: ECTFF_THREADS or 1)");
    app.add_flag("--pretty", g.pretty, "indent JSON output");

    std::string group_str, set_str, d_str, e_str, bichar = "standard", kind_str = "elliptic";
    std::string rule_str = "auto", what = "gamma", emit_file, dump_gamma, dump_chirp;
    int m = 2, d_size = 0, e_size = 0;
    std::int64_t max_n = 1024;
    bool transpose = false, no_angles = false, with_angles = false, include_trivial = false;
    bool exhaustive = false, json_flag = false, force_cubic = false;
    std::uint64_t max_nodes = UINT64_MAX;

    auto* verify_ds = app.add_subcommand("verify-ds", "certify a difference set");
    verify_ds->add_option("--group", group_str, "group spec, e.g. Z2^4")->required();
    verify_ds->add_option("--set", set_str, "subset literal")->required();

    auto* verify_pds = app.add_subcommand("verify-pds", "certify a paired difference set");
    verify_pds->add_option("--group", group_str)->required();
    verify_pds->add_option("--d", d_str, "difference set of the group")->required();
    verify_pds->add_option("--e", e_str, "difference set of the dual")->required();
    verify_pds->add_option("--bicharacter", bichar, "standard|symplectic");

    std::string dump_projections;
    auto* build = app.add_subcommand("build-ectff", "build and certify the fusion frame of a pair");
    build->add_option("--group", group_str)->required();
    build->add_option("--d", d_str)->required();
    build->add_option("--e", e_str)->required();
    build->add_option("--bicharacter", bichar, "standard|symplectic");
    build->add_flag("--transpose", transpose, "build the (E,N,R) family instead");
    build->add_flag("--no-angles", no_angles, "skip principal-angle spectra");
    build->add_option("--dump-projections", dump_projections,
                      "write every projection matrix (concatenated dump format)");

    auto* quad = app.add_subcommand("quadform", "certified bundle of one canonical quadratic form");
    quad->add_option("--m", m, "half the dimension (Z_2^{2M})")->required();
    quad->add_option("--kind", kind_str, "hyperbolic|elliptic");
    quad->add_option("--emit", emit_file, "write the bundle JSON to this file");
    quad->add_option("--dump-gamma", dump_gamma, "write the character table in dump format");
    quad->add_option("--dump-chirp", dump_chirp, "write the chirp filter matrix in dump format");
    quad->add_flag("--with-angles", with_angles, "include principal-angle spectra");
    quad->add_flag("--force-cubic", force_cubic, "verify (Gamma Delta)^3 even at M=5");

    auto* scan = app.add_subcommand("scan-triples", "integer-feasibility scan for pair parameters");
    scan->add_option("--max-n", max_n, "largest group order");
    scan->add_option("--rule", rule_str, "auto|n|n-1");
    scan->add_flag("--json", json_flag, "JSON output (default)");

    auto* search = app.add_subcommand("search-pds", "exhaustive search for paired difference sets");
    search->add_option("--group", group_str)->required();
    search->add_option("--d", d_size, "cardinality of D")->required();
    search->add_option("--e", e_size, "cardinality of E")->required();
    search->add_flag("--exhaustive", exhaustive, "fail rather than cap the enumeration");
    search->add_option("--max-nodes", max_nodes, "search-tree node budget per side");
    search->add_flag("--include-trivial", include_trivial, "report trivial pairings too");
    search->add_flag("--json", json_flag, "JSON output (default)");

    auto* dump = app.add_subcommand("dump", "matrix dumps (character tables)");
    dump->add_option("--group", group_str)->required();
    dump->add_option("--bicharacter", bichar, "standard|symplectic");
    dump->add_option("--what", what, "gamma");
    dump->add_option("--file", emit_file, "output file (stdout when omitted)");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    if (g.threads >= 1) set_thread_budget(g.threads);
    auto start = std::chrono::steady_clock::now();
    std::string echo = echo_command(argc, argv);

    try {
        if (verify_ds->parsed()) {
            GroupSpec group = GroupSpec::parse(group_str);
            GroupSubset subset = GroupSubset::parse(group, set_str);
            DifferenceSetCertificate cert = is_difference_set(subset, g.tol);
            emit(g, run_report(echo, g.tol, to_json(cert), seconds_since(start)));
            return cert.verdict ? 0 : 1;
        }
        if (verify_pds->parsed()) {
            GroupSpec group = GroupSpec::parse(group_str);
            PairedDSCandidate cand(group, make_form(group, bichar),
                                   GroupSubset::parse(group, d_str),
                                   GroupSubset::parse(group, e_str), g.tol);
            PairedDSCertificate cert = is_paired_gram(cand, g.tol);
            CharsumResult cs = is_paired_charsum(cand, g.tol);
            Json payload;
            payload["pds"] = to_json(cert);
            payload["charsum"] = to_json(cs);
            emit(g, run_report(echo, g.tol, payload, seconds_since(start)));
            return cert.verdict ? 0 : 1;
        }
        if (build->parsed()) {
            GroupSpec group = GroupSpec::parse(group_str);
            PairedDSCandidate cand(group, make_form(group, bichar),
                                   GroupSubset::parse(group, d_str),
                                   GroupSubset::parse(group, e_str), g.tol);
            if (transpose) cand = symmetry_transpose(cand);
            SubspaceFamily family = ectff_from_pds(cand, g.tol);
            CertifyOptions copt;
            copt.with_angles = !no_angles;
            EctffCertificate cert = certify_ectff(family, g.tol, copt);
            if (!dump_projections.empty()) {
                std::ofstream os(resolve_out(g, dump_projections));
                for (std::size_t i = 0; i < family.count(); ++i) family.projection(i).dump(os);
            }
            emit(g, run_report(echo, g.tol, to_json(cert), seconds_since(start)));
            return cert.is_ectff ? 0 : 1;
        }
        if (quad->parsed()) {
            BundleOptions bopt;
            bopt.with_angles = with_angles;
            bopt.tol = g.tol;
            QuadKind kind = quad_kind_from_string(kind_str);
            InfiniteFamilyBundle bundle = build_infinite_family(m, kind, bopt);
            if (!dump_gamma.empty() || !dump_chirp.empty()) {
                BinaryQuadraticForm q = kind == QuadKind::Hyperbolic
                                            ? BinaryQuadraticForm::canonical_hyperbolic(m)
                                            : BinaryQuadraticForm::canonical_elliptic(m);
                ChirpOptions copt;
                copt.force_cubic = force_cubic;
                ChirpBundle chirp = chirp_bundle(q, copt);
                if (!dump_gamma.empty()) {
                    std::ofstream os(resolve_out(g, dump_gamma));
                    chirp.gamma.dump(os);
                }
                if (!dump_chirp.empty()) {
                    std::ofstream os(resolve_out(g, dump_chirp));
                    chirp.c.dump(os);
                }
            }
            emit(g, run_report(echo, g.tol, to_json(bundle), seconds_since(start)), emit_file);
            if (!emit_file.empty())
                emit(g, run_report(echo, g.tol, to_json(bundle), seconds_since(start)));
            return 0;
        }
        if (scan->parsed()) {
            std::optional<ESideRule> rule;
            if (rule_str == "n")
                rule = ESideRule::OverN;
            else if (rule_str == "n-1")
                rule = ESideRule::OverNMinus1;
            else if (rule_str != "auto")
                throw CLI::ValidationError("--rule", "expected auto, n or n-1");
            ScanReport report = scan_triples(max_n, rule);
            emit(g, run_report(echo, g.tol, to_json(report), seconds_since(start)));
            return 0;
        }
        if (search->parsed()) {
            GroupSpec group = GroupSpec::parse(group_str);
            SearchOptions sopt;
            sopt.tol = g.tol;
            sopt.include_trivial = include_trivial;
            if (!exhaustive) sopt.max_nodes_per_side = max_nodes;
            SearchReport report = search_pds(group, d_size, e_size, sopt);
            emit(g, run_report(echo, g.tol, to_json(report), seconds_since(start)));
            return report.pairs.empty() ? 1 : 0;
        }
        if (dump->parsed()) {
            GroupSpec group = GroupSpec::parse(group_str);
            if (what != "gamma") throw CLI::ValidationError("--what", "only gamma is supported");
            ExactMatrix gamma = character_table(group, make_form(group, bichar));
            if (emit_file.empty()) {
                gamma.dump(std::cout);
            } else {
                std::ofstream os(resolve_out(g, emit_file));
                gamma.dump(os);
            }
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
