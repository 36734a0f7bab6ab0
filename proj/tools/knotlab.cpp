// knotlab: random-graph knotting laboratory CLI.
//
// Subcommands: generate, classify, minor, apex, bounds, enumerate,
// search-complement, experiment <kind>. Exit codes: 0 success, 1 an
// assertion-gated experiment found a violation, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "knotlab/bounds.hpp"
#include "knotlab/canonical.hpp"
#include "knotlab/detectors.hpp"
#include "knotlab/experiments.hpp"
#include "knotlab/graph.hpp"
#include "knotlab/minors.hpp"
#include "knotlab/models.hpp"
#include "knotlab/planarity.hpp"

using namespace knotlab;
using nlohmann::json;

namespace {

ModelSpec::Kind parse_model_kind(const std::string& name) {
    if (name == "gilbert") return ModelSpec::Kind::Gilbert;
    if (name == "erdos-renyi") return ModelSpec::Kind::ErdosRenyi;
    if (name == "uniform-labelled") return ModelSpec::Kind::UniformLabelled;
    if (name == "uniform-unlabelled") return ModelSpec::Kind::UniformUnlabelled;
    throw CLI::ValidationError("--model", "unknown model: " + name);
}

std::vector<Graph> read_graph6(const std::string& path) {
    std::vector<Graph> graphs;
    std::istream* in = &std::cin;
    std::ifstream file;
    if (path != "-") {
        file.open(path);
        if (!file) throw std::invalid_argument("cannot open " + path);
        in = &file;
    }
    std::string line;
    while (std::getline(*in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
        graphs.push_back(Graph::from_graph6(line));
    }
    return graphs;
}

json certificate_json(const Graph& g, const Verdict& v) {
    json data = json::object();
    switch (v.kind) {
        case CertKind::MaderBound:
            data["order"] = g.order();
            data["size"] = g.size();
            data["edge_bound"] = 5 * g.order() - 14;
            break;
        case CertKind::CliqueMinor:
            data["target"] = "K7";
            data["branch_sets"] = v.minor_cert.branch_sets;
            break;
        case CertKind::PetersenMinor:
            data["family_member"] = v.family_member;
            data["member_graph6"] = petersen_family()[v.family_member].to_graph6();
            data["branch_sets"] = v.minor_cert.branch_sets;
            break;
        case CertKind::ApexWitness:
            data["witness"] = v.witness;
            break;
        case CertKind::NotIL:
        case CertKind::Planarity:
        case CertKind::None:
            break;
    }
    return data;
}

json verdict_json(const Graph& g, const std::string& property, const Verdict& v) {
    return json{{"property", property},
                {"status", to_string(v.status)},
                {"certificate_kind", to_string(v.kind)},
                {"certificate_data", certificate_json(g, v)}};
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open " + out_path);
    out << text;
}

int finish(const ExperimentResult& result, const std::string& out_path) {
    emit(result.csv, out_path);
    for (const auto& note : result.notes) std::cerr << "note: " << note << "\n";
    return result.exit_code;
}

std::vector<int> parse_n_range(const std::vector<int>& ns, const std::string& range) {
    if (range.empty()) return ns;
    std::vector<int> out = ns;
    int lo, hi, step = 1;
    if (std::sscanf(range.c_str(), "%d:%d:%d", &lo, &hi, &step) >= 2) {
        for (int n = lo; n <= hi; n += step) out.push_back(n);
        return out;
    }
    throw CLI::ValidationError("--n-range", "expected lo:hi[:step]");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"knotlab: generators, certified detectors, bounds, and experiments "
                 "for knotting and linking of random graphs"};
    app.require_subcommand(1);
    app.fallthrough();  // --seed/--trials/--jobs may follow the subcommand

    uint64_t seed_value = 0;
    uint64_t trials = 1000;
    int jobs = 0;
    app.add_option("--seed", seed_value, "base RNG seed")->capture_default_str();
    app.add_option("--trials", trials, "Monte Carlo trials")->capture_default_str();
    app.add_option("--jobs", jobs, "parallel jobs (0 = all cores)")->capture_default_str();

    // generate ---------------------------------------------------------------
    auto* gen = app.add_subcommand("generate", "sample graphs, one graph6 line each");
    std::string gen_model = "gilbert";
    int gen_n = 10;
    double gen_p = 0.5;
    long long gen_M = 0;
    gen->add_option("--model", gen_model, "gilbert|erdos-renyi|uniform-labelled|uniform-unlabelled")
        ->capture_default_str();
    gen->add_option("--n", gen_n, "order")->required();
    gen->add_option("--p", gen_p, "edge probability (gilbert)");
    gen->add_option("--M", gen_M, "edge count (erdos-renyi)");

    // classify ---------------------------------------------------------------
    auto* cls = app.add_subcommand("classify", "graph6 in, JSON verdicts out");
    std::string cls_input = "-";
    std::vector<std::string> cls_props{"nonplanar", "il", "ik"};
    cls->add_option("--input", cls_input, "graph6 file, - for stdin")->capture_default_str();
    cls->add_option("--props", cls_props, "properties: nonplanar, il, ik, not-apex:<k>")
        ->delimiter(',')
        ->capture_default_str();

    // minor ------------------------------------------------------------------
    auto* minor_cmd = app.add_subcommand("minor", "minor containment with certificate");
    std::string minor_g, minor_h;
    int minor_clique = 0;
    minor_cmd->add_option("--g", minor_g, "host graph, graph6")->required();
    minor_cmd->add_option("--target", minor_h, "target graph, graph6");
    minor_cmd->add_option("--clique", minor_clique, "target K_r instead of --target");

    // apex -------------------------------------------------------------------
    auto* apex_cmd = app.add_subcommand("apex", "n-apex decision with witness");
    std::string apex_g;
    int apex_k = 1;
    apex_cmd->add_option("--g", apex_g, "graph6")->required();
    apex_cmd->add_option("--k", apex_k, "deletions allowed")->capture_default_str();

    // bounds -----------------------------------------------------------------
    auto* bounds_cmd = app.add_subcommand("bounds", "tail/Hoeffding and counting-chain report");
    int bounds_n = 20;
    double bounds_p = 0.5;
    std::string bounds_format = "json";
    bounds_cmd->add_option("--n", bounds_n, "order")->required();
    bounds_cmd->add_option("--p", bounds_p, "edge probability")->capture_default_str();
    bounds_cmd->add_option("--format", bounds_format, "json|csv")->capture_default_str();

    // enumerate --------------------------------------------------------------
    auto* enum_cmd = app.add_subcommand("enumerate", "isomorphism-free enumeration");
    int enum_n = 5;
    bool enum_count_only = false;
    enum_cmd->add_option("--n", enum_n, "order (<= 9)")->required();
    enum_cmd->add_flag("--count-only", enum_count_only, "print Gamma_n only");

    // search-complement --------------------------------------------------------
    auto* search_cmd = app.add_subcommand("search-complement",
                                          "graphs with neither side of the pair certified");
    int search_n = 9;
    std::string search_property = "nonplanar";
    std::string search_mode = "exhaustive";
    uint64_t search_budget = 10000;
    search_cmd->add_option("--n", search_n, "order")->required();
    search_cmd->add_option("--property", search_property, "nonplanar|il|ik|not-apex:<k>")
        ->capture_default_str();
    search_cmd->add_option("--mode", search_mode, "exhaustive|sampled")->capture_default_str();
    search_cmd->add_option("--budget", search_budget, "samples in sampled mode")->capture_default_str();

    // experiment -------------------------------------------------------------
    auto* exp = app.add_subcommand("experiment", "seeded campaigns, CSV out");
    exp->require_subcommand(1);
    std::string exp_out;
    exp->add_option("--out", exp_out, "output file (default stdout)");

    auto* ikf = exp->add_subcommand("ik-fraction", "certified-IK fraction per order");
    std::vector<int> ikf_n;
    std::string ikf_range;
    std::string ikf_model = "gilbert";
    double ikf_p = 0.5;
    long long ikf_M = 0;
    bool ikf_exhaustive = false, ikf_weighted = false;
    ikf->add_option("--n", ikf_n, "orders")->delimiter(',');
    ikf->add_option("--n-range", ikf_range, "lo:hi[:step]");
    ikf->add_option("--model", ikf_model)->capture_default_str();
    ikf->add_option("--p", ikf_p)->capture_default_str();
    ikf->add_option("--M", ikf_M);
    ikf->add_flag("--exhaustive", ikf_exhaustive, "whole unlabelled universe (n <= 9)");
    ikf->add_flag("--weighted", ikf_weighted, "|Aut|-weighted labelled estimator of the unlabelled model");

    auto* thr = exp->add_subcommand("threshold", "clique-minor fraction at p = c/n");
    std::vector<double> thr_c{0.5, 2.0};
    std::vector<int> thr_n{100, 200, 400};
    int thr_r = 5;
    thr->add_option("--c", thr_c, "c values")->delimiter(',')->capture_default_str();
    thr->add_option("--n", thr_n, "orders")->delimiter(',')->capture_default_str();
    thr->add_option("--r", thr_r, "clique order (5, 6, or 7)")->capture_default_str();

    auto* tvb = exp->add_subcommand("tail-vs-bound", "empirical vs exact tail vs Hoeffding");
    std::vector<int> tvb_n{20};
    std::string tvb_range;
    double tvb_p = 0.5;
    tvb->add_option("--n", tvb_n, "orders")->delimiter(',')->capture_default_str();
    tvb->add_option("--n-range", tvb_range, "lo:hi[:step]");
    tvb->add_option("--p", tvb_p)->capture_default_str();

    auto* pf = exp->add_subcommand("pairing-fraction", "fraction of graphs with the property");
    int pf_n = 9;
    std::string pf_property = "nonplanar";
    std::string pf_mode = "exhaustive";
    uint64_t pf_budget = 10000;
    pf->add_option("--n", pf_n)->required();
    pf->add_option("--property", pf_property)->capture_default_str();
    pf->add_option("--mode", pf_mode, "exhaustive|sampled")->capture_default_str();
    pf->add_option("--budget", pf_budget)->capture_default_str();

    auto* naf = exp->add_subcommand("napex-fraction", "not-n-apex fraction of labelled graphs");
    int naf_k = 9, naf_apex = 0;
    bool naf_force = false;
    naf->add_option("--k", naf_k, "graph order")->required();
    naf->add_option("--apex", naf_apex, "deletions allowed")->capture_default_str();
    naf->add_flag("--force", naf_force, "override the budget guard");

    auto* wr = exp->add_subcommand("wright-ratio", "labelled share of middle-size classes, n=5..8");

    auto* csx = exp->add_subcommand("complement-search", "CSV summary of the pair search");
    int csx_n = 8;
    std::string csx_property = "nonplanar";
    std::string csx_mode = "exhaustive";
    uint64_t csx_budget = 10000;
    csx->add_option("--n", csx_n)->required();
    csx->add_option("--property", csx_property)->capture_default_str();
    csx->add_option("--mode", csx_mode)->capture_default_str();
    csx->add_option("--budget", csx_budget)->capture_default_str();

    try {
        app.parse(argc, argv);

        Seed seed{seed_value};

        if (*gen) {
            ModelSpec model;
            model.kind = parse_model_kind(gen_model);
            model.n = gen_n;
            model.p = gen_p;
            model.M = gen_M;
            model.validate();
            for (uint64_t t = 0; t < trials; ++t)
                std::cout << sample(model, seed, t).to_graph6() << "\n";
            return 0;
        }

        if (*cls) {
            std::vector<PropertySelector> props;
            for (const auto& p : cls_props) props.push_back(PropertySelector::parse(p));
            json out = json::array();
            for (const Graph& g : read_graph6(cls_input)) {
                json rec{{"graph6", g.to_graph6()}, {"order", g.order()}, {"size", g.size()}};
                rec["verdicts"] = json::array();
                for (const auto& p : props)
                    rec["verdicts"].push_back(verdict_json(g, p.name(), p.classify(g)));
                out.push_back(std::move(rec));
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }

        if (*minor_cmd) {
            Graph g = Graph::from_graph6(minor_g);
            Graph h = minor_clique > 0 ? Graph::complete(minor_clique) : Graph::from_graph6(minor_h);
            auto cert = has_minor(g, h);
            json out{{"g", g.to_graph6()}, {"h", h.to_graph6()}, {"present", cert.has_value()}};
            if (cert) out["branch_sets"] = cert->branch_sets;
            std::cout << out.dump(2) << "\n";
            return 0;
        }

        if (*apex_cmd) {
            Graph g = Graph::from_graph6(apex_g);
            ApexResult r = is_n_apex(g, apex_k);
            json out{{"g", g.to_graph6()}, {"k", apex_k}, {"is_n_apex", r.is_n_apex}};
            if (r.is_n_apex) out["witness"] = r.witness;
            std::cout << out.dump(2) << "\n";
            return 0;
        }

        if (*bounds_cmd) {
            BoundReport rep = tail_report(bounds_n, bounds_p);
            BoundReport chain;
            bool have_chain = bounds_n >= 18;
            if (have_chain) chain = counting_chain(bounds_n);
            if (bounds_format == "json") {
                json out{{"n", rep.n},       {"p", rep.p},
                         {"N", rep.N},       {"r", rep.r},
                         {"q", rep.q},       {"t", rep.t},
                         {"exact_tail", rep.exact_tail}};
                if (!std::isnan(rep.hoeffding)) out["hoeffding"] = rep.hoeffding;
                if (have_chain) {
                    out["counting_chain"] = json{{"log_sum_binom_le_r", chain.log_sum_binom_le_r},
                                         {"log_count_bound", chain.log_count_bound},
                                         {"log_wright_count", chain.log_wright_count},
                                         {"log_power_term", chain.log_power_term},
                                         {"log_ratio_bound", chain.log_ratio_bound},
                                         {"log_final_term", chain.log_final_term},
                                         {"sum_below_count_bound", chain.sum_below_count_bound},
                                         {"gap_exceeds_n2_over_5", chain.gap_exceeds_n2_over_5},
                                         {"ratio_below_three_fifths", chain.ratio_below_three_fifths},
                                         {"power_term_small", chain.power_term_small}};
                }
                std::cout << out.dump(2) << "\n";
            } else {
                std::printf("# bounds n=%d p=%.17g\n", bounds_n, bounds_p);
                std::printf("n,p,N,r,q,t,exact_tail,hoeffding,log_final_term\n");
                std::printf("%d,%.17g,%lld,%lld,%lld,%.9e,%.9e,%.9e,%.9e\n", rep.n, rep.p, rep.N,
                            rep.r, rep.q, rep.t, rep.exact_tail, rep.hoeffding,
                            have_chain ? chain.log_final_term : std::nan(""));
            }
            return 0;
        }

        if (*enum_cmd) {
            if (enum_count_only) {
                std::cout << count_unlabelled(enum_n) << "\n";
            } else {
                long long count = enumerate_unlabelled(
                    enum_n, [](const Graph& g) { std::cout << g.to_graph6() << "\n"; });
                std::cerr << "gamma_" << enum_n << " = " << count << "\n";
            }
            return 0;
        }

        if (*search_cmd) {
            ComplementSearchSpec spec;
            spec.n = search_n;
            spec.property = PropertySelector::parse(search_property);
            spec.exhaustive = search_mode == "exhaustive";
            spec.budget = search_budget;
            spec.seed = seed;
            spec.jobs = jobs;
            auto res = run_complement_search(spec);
            std::cout << res.json;
            for (const auto& note : res.notes) std::cerr << "note: " << note << "\n";
            return res.exit_code;
        }

        if (*ikf) {
            IkFractionSpec spec;
            spec.model = parse_model_kind(ikf_model);
            spec.p = ikf_p;
            spec.M = ikf_M;
            spec.n_list = parse_n_range(ikf_n, ikf_range);
            spec.trials = trials;
            spec.seed = seed;
            spec.exhaustive = ikf_exhaustive;
            spec.weighted = ikf_weighted;
            spec.jobs = jobs;
            return finish(run_ik_fraction(spec), exp_out);
        }
        if (*thr) {
            ThresholdSpec spec;
            spec.c_list = thr_c;
            spec.n_list = thr_n;
            spec.r = thr_r;
            spec.trials = trials;
            spec.seed = seed;
            spec.jobs = jobs;
            return finish(run_threshold_sweep(spec), exp_out);
        }
        if (*tvb) {
            TailVsBoundSpec spec;
            spec.n_list = parse_n_range(tvb_n, tvb_range);
            spec.p = tvb_p;
            spec.trials = trials;
            spec.seed = seed;
            spec.jobs = jobs;
            return finish(run_tail_vs_bound(spec), exp_out);
        }
        if (*pf) {
            PairingFractionSpec spec;
            spec.n = pf_n;
            spec.property = PropertySelector::parse(pf_property);
            spec.exhaustive = pf_mode == "exhaustive";
            spec.budget = pf_budget;
            spec.seed = seed;
            spec.jobs = jobs;
            return finish(run_pairing_fraction(spec), exp_out);
        }
        if (*naf) {
            NotApexFractionSpec spec;
            spec.k = naf_k;
            spec.apex_n = naf_apex;
            spec.trials = trials;
            spec.seed = seed;
            spec.jobs = jobs;
            spec.override_budget_guard = naf_force;
            return finish(run_not_napex_fraction(spec), exp_out);
        }
        if (*wr) return finish(run_wright_ratio(), exp_out);
        if (*csx) {
            ComplementSearchSpec spec;
            spec.n = csx_n;
            spec.property = PropertySelector::parse(csx_property);
            spec.exhaustive = csx_mode == "exhaustive";
            spec.budget = csx_budget;
            spec.seed = seed;
            spec.jobs = jobs;
            auto res = run_complement_search(spec);
            emit(res.csv, exp_out);
            for (const auto& note : res.notes) std::cerr << "note: " << note << "\n";
            return res.exit_code;
        }
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
