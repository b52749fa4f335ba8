#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "thinness/bounds.hpp"
#include "thinness/constructions.hpp"
#include "thinness/families.hpp"
#include "thinness/graph_io.hpp"
#include "thinness/harness.hpp"
#include "thinness/solver.hpp"

using namespace thinness;

namespace {

void emit(const nlohmann::json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << j.dump() << "\n";
    }
}

std::vector<int> parse_permutation(const std::string& csv) {
    std::vector<int> out;
    std::string token;
    std::istringstream in(csv);
    while (std::getline(in, token, ',')) out.push_back(std::stoi(token));
    return out;
}

Variant variant_arg(const std::string& name) {
    auto v = variant_from_name(name);
    if (!v) throw CLI::ValidationError("variant", "unknown variant: " + name);
    return *v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"thinness: exact computation and certified bounds for graph thinness and its variants"};
    app.require_subcommand(1);

    // family
    auto* family_cmd = app.add_subcommand("family", "generate a named family graph");
    std::string family_name_arg, family_out, family_dot, family_g1, family_g2, family_perm;
    std::vector<int> family_params;
    family_cmd->add_option("--name", family_name_arg, "family name")->required();
    family_cmd->add_option("--params", family_params, "integer parameters");
    family_cmd->add_option("--g1", family_g1, "boxminus: first component graph file");
    family_cmd->add_option("--g2", family_g2, "boxminus: second component graph file");
    family_cmd->add_option("--perm", family_perm, "boxminus: bijection as comma-separated images");
    family_cmd->add_option("-o,--out", family_out, "output graph file (default: stdout)");
    family_cmd->add_option("--dot", family_dot, "also write a DOT rendering here");

    // product
    auto* product_cmd = app.add_subcommand("product", "apply a binary graph operation");
    std::string product_kind, product_g1, product_g2, product_out, product_perm;
    int product_vertex = -1;
    product_cmd->add_option("--kind", product_kind, "operation kind")->required();
    product_cmd->add_option("g1", product_g1, "first graph file")->required();
    product_cmd->add_option("g2", product_g2, "second graph file")->required();
    product_cmd->add_option("-v,--vertex", product_vertex, "substituted vertex (lex_vertex)");
    product_cmd->add_option("--perm", product_perm, "bijection for boxminus");
    product_cmd->add_option("-o,--out", product_out, "output graph file (default: stdout)");

    // thin
    auto* thin_cmd = app.add_subcommand("thin", "exact thinness of a variant");
    std::string thin_graph, thin_variant = "thin", thin_out;
    int thin_cap = default_search_cap;
    std::int64_t thin_timeout = 0;
    bool thin_oracle = false;
    thin_cmd->add_option("graph", thin_graph, "graph file")->required();
    thin_cmd->add_option("--variant", thin_variant, "thin|pthin|indthin|indpthin|compthin|comppthin");
    thin_cmd->add_option("--cap", thin_cap, "search cap (vertices)");
    thin_cmd->add_option("--timeout-ms", thin_timeout, "time budget; expiry returns an upper bound");
    thin_cmd->add_flag("--oracle", thin_oracle, "use the definition-level oracle (n <= 7)");
    thin_cmd->add_option("-o,--out", thin_out, "output file (default: stdout)");

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "certified bounds for a graph");
    std::string bounds_graph, bounds_variant = "thin", bounds_out;
    bounds_cmd->add_option("graph", bounds_graph, "graph file")->required();
    bounds_cmd->add_option("--variant", bounds_variant, "variant the report focuses on");
    bounds_cmd->add_option("-o,--out", bounds_out, "output file (default: stdout)");

    // witness
    auto* witness_cmd = app.add_subcommand("witness", "compose a product witness from factor witnesses");
    std::string witness_rule, witness_g1, witness_g2, witness_w1, witness_w2, witness_out;
    int witness_vertex = -1;
    witness_cmd->add_option("--rule", witness_rule, "composition rule name")->required();
    witness_cmd->add_option("--g1", witness_g1, "first factor graph file")->required();
    witness_cmd->add_option("--w1", witness_w1, "first factor witness file");
    witness_cmd->add_option("--g2", witness_g2, "second factor graph file")->required();
    witness_cmd->add_option("--w2", witness_w2, "second factor witness file");
    witness_cmd->add_option("-v,--vertex", witness_vertex, "substituted vertex (lexv rules)");
    witness_cmd->add_option("-o,--out", witness_out, "output prefix: writes <prefix>.product.json and <prefix>.witness.json");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run one theorem-verification campaign");
    std::string verify_id, verify_cache;
    std::int64_t verify_timeout = 60000;
    bool verify_list = false;
    verify_cmd->add_option("theorem", verify_id, "theorem id");
    verify_cmd->add_flag("--list", verify_list, "list campaign ids");
    verify_cmd->add_option("--timeout-ms", verify_timeout, "per-solve timeout");
    verify_cmd->add_option("--cache", verify_cache, "cache file (JSON lines)");

    // report
    auto* report_cmd = app.add_subcommand("report", "run campaigns and write CSV + JSON reports");
    std::string report_config, report_csv, report_json, report_cache;
    report_cmd->add_option("--config", report_config, "config file (JSON)");
    report_cmd->add_option("--out-csv", report_csv, "CSV output path (default: stdout)");
    report_cmd->add_option("--out-json", report_json, "JSON output path");
    report_cmd->add_option("--cache", report_cache, "cache file override");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*family_cmd) {
            auto fam = family_from_name(family_name_arg);
            if (!fam) throw std::invalid_argument("unknown family: " + family_name_arg);
            FamilySpec spec{*fam, family_params, {}, {}, {}};
            if (*fam == Family::boxminus) {
                if (family_g1.empty() || family_g2.empty())
                    throw std::invalid_argument("boxminus needs --g1 and --g2");
                spec.g1 = load_graph(family_g1);
                spec.g2 = load_graph(family_g2);
                spec.bijection = family_perm.empty() ? identity_permutation(spec.g1->n())
                                                     : parse_permutation(family_perm);
            }
            Graph g = make_family(spec);
            emit(graph_to_json(g), family_out);
            if (!family_dot.empty()) {
                std::ofstream dot(family_dot);
                dot << graph_to_dot(g, family_name_arg);
            }
        } else if (*product_cmd) {
            Graph g1 = load_graph(product_g1), g2 = load_graph(product_g2);
            Graph result;
            if (product_kind == "boxminus") {
                auto perm = product_perm.empty() ? identity_permutation(g1.n()) : parse_permutation(product_perm);
                result = boxminus(g1, g2, perm);
            } else {
                auto kind = product_kind_from_name(product_kind);
                if (!kind) throw std::invalid_argument("unknown product kind: " + product_kind);
                result = apply_product(*kind, g1, g2, product_vertex);
            }
            emit(graph_to_json(result), product_out);
        } else if (*thin_cmd) {
            Graph g = load_graph(thin_graph);
            Variant variant = variant_arg(thin_variant);
            if (thin_oracle) {
                int value = brute_force_oracle(g, variant);
                emit({{"value", value}, {"exact", true}, {"engine", "oracle"}}, thin_out);
            } else {
                SolverOptions opts;
                opts.search_cap = thin_cap;
                opts.timeout_ms = thin_timeout;
                SolveResult r = exact_value(g, variant, opts);
                emit(solve_result_to_json(r), thin_out);
            }
        } else if (*bounds_cmd) {
            Graph g = load_graph(bounds_graph);
            Variant variant = variant_arg(bounds_variant);
            nlohmann::json certs = nlohmann::json::array();
            if (g.n() >= 2) certs.push_back(certificate_to_json(lb_neighborhood(g)));
            if (g.has_any_edge() && g.n() <= 12) certs.push_back(certificate_to_json(lb_isoperimetric(g)));
            for (const auto& c : ub_suite(g)) certs.push_back(certificate_to_json(c));
            emit({{"variant", variant_name(variant)}, {"certificates", certs}}, bounds_out);
        } else if (*witness_cmd) {
            auto rule = find_rule(witness_rule);
            if (!rule) throw std::invalid_argument("unknown rule: " + witness_rule +
                                                   " (see rule_catalog in the docs)");
            Graph g1 = load_graph(witness_g1), g2 = load_graph(witness_g2);
            std::optional<ThinWitness> w1, w2;
            if (!witness_w1.empty()) {
                std::ifstream in(witness_w1);
                nlohmann::json j;
                in >> j;
                w1 = witness_from_json(j);
            }
            if (!witness_w2.empty()) {
                std::ifstream in(witness_w2);
                nlohmann::json j;
                in >> j;
                w2 = witness_from_json(j);
            }
            Composition comp = compose_witness(*rule, g1, w1, g2, w2, witness_vertex);
            nlohmann::json summary{{"rule", rule->name},
                                   {"theorem", rule->theorem},
                                   {"nominal", comp.nominal},
                                   {"classes", comp.witness.value},
                                   {"product", graph_to_json(comp.product)},
                                   {"witness", witness_to_json(comp.witness)}};
            if (witness_out.empty()) {
                std::cout << summary.dump(2) << "\n";
            } else {
                save_graph(comp.product, witness_out + ".product.json");
                std::ofstream wout(witness_out + ".witness.json");
                wout << witness_to_json(comp.witness).dump() << "\n";
                std::cout << "wrote " << witness_out << ".product.json and " << witness_out
                          << ".witness.json (classes: " << comp.witness.value << ", nominal " << comp.nominal
                          << ")\n";
            }
        } else if (*verify_cmd) {
            if (verify_list) {
                for (const auto& id : Harness::campaign_ids()) std::cout << id << "\n";
                return 0;
            }
            if (verify_id.empty()) throw std::invalid_argument("verify: give a theorem id or --list");
            HarnessOptions opts;
            opts.timeout_ms = verify_timeout;
            opts.cache_path = verify_cache;
            Harness h(opts);
            auto rows = h.verify_theorem(verify_id);
            bool all_pass = true;
            for (const auto& r : rows) {
                std::cout << "[" << (r.verdict == "pass" ? "PASS" : r.verdict == "skip" ? "SKIP" : "FAIL")
                          << "] " << r.theorem_id << " | " << r.instance << " | " << r.variant << " | claimed "
                          << r.claimed << " | " << r.computed << "\n";
                if (r.verdict == "fail") all_pass = false;
            }
            return all_pass ? 0 : 1;
        } else if (*report_cmd) {
            RunConfig cfg;
            if (!report_config.empty()) cfg = load_config(report_config);
            if (!report_cache.empty()) cfg.cache_path = report_cache;
            Report report = run_corpus(cfg);
            if (report_csv.empty())
                std::cout << report.csv();
            else {
                std::ofstream out(report_csv);
                out << report.csv();
            }
            if (!report_json.empty()) {
                std::ofstream out(report_json);
                out << report.json().dump(2) << "\n";
            }
            return report.all_pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
