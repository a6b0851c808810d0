#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "pfc/json_io.hpp"
#include "pfc/source_spec.hpp"

namespace {

using pfc::Int;

std::vector<pfc::GroupVal> catalog_from_text(const std::string& text) {
    if (text.empty()) return pfc::default_catalog();
    std::vector<pfc::GroupVal> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string entry = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!entry.empty()) {
            pfc::SourceGroup s = pfc::parse_source(entry);
            switch (s.kind) {
                case pfc::SourceGroup::Kind::finite:
                    out.push_back(*s.finite_group);
                    break;
                case pfc::SourceGroup::Kind::fg_abelian: {
                    if (s.rank != 0) throw std::invalid_argument("catalog entries must be finite: " + entry);
                    out.push_back(pfc::GroupVal(pfc::FinAbGroup::from_factors(s.torsion)));
                    break;
                }
                case pfc::SourceGroup::Kind::fp_space: {
                    std::vector<Int> factors(static_cast<size_t>(s.dim), s.p);
                    out.push_back(pfc::GroupVal(pfc::FinAbGroup::from_factors(factors)));
                    break;
                }
                default:
                    throw std::invalid_argument("catalog entries must be finite groups: " + entry);
            }
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << content;
}

void print_report(const pfc::json& rep) {
    std::cout << (rep.at("status") == "pass" ? "[PASS] " : "[FAIL] ") << rep.at("claim").get<std::string>() << " ("
              << rep.at("instance").get<std::string>() << ")\n";
    if (rep.contains("witness")) std::cout << "  " << rep.at("witness").dump() << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"truncated profinite completions of groups, with exact verification suites"};
    app.require_subcommand(1);

    std::string source_text, mode = "surjective", json_path, dot_path, catalog_text, suite;
    Int bound = -1, p = 2, dim = 1, depth = 2, level = 0;
    bool include_elements = false;

    auto* cmd_complete = app.add_subcommand("complete", "compute a truncated completion and its projection");
    cmd_complete->add_option("--source", source_text, "source group expression")->required();
    cmd_complete->add_option("--bound", bound, "max target order")->required();
    cmd_complete->add_option("--mode", mode)->check(CLI::IsMember({"full", "surjective"}));
    cmd_complete->add_option("--catalog", catalog_text, "comma list of target groups (full mode)");
    cmd_complete->add_option("--json", json_path, "write the completion as JSON");
    cmd_complete->add_flag("--elements", include_elements, "include limit elements in the JSON");

    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    cmd_verify->add_option("suite", suite, "one of theorem|triangle|prop34|perp|classify|remark47|fact|iterate")
        ->required()
        ->check(CLI::IsMember({"theorem", "triangle", "prop34", "perp", "classify", "remark47", "fact", "iterate"}));
    cmd_verify->add_option("--p", p, "field characteristic");
    cmd_verify->add_option("--dim", dim, "vector space dimension");
    cmd_verify->add_option("--bound", bound, "diagram bound (defaults per suite)");
    cmd_verify->add_option("--source", source_text, "source group expression");
    cmd_verify->add_option("--catalog", catalog_text, "comma list of target groups");
    cmd_verify->add_option("--depth", depth, "number of completion stages");
    cmd_verify->add_option("--json", json_path, "write the report as JSON");

    auto* cmd_witness = app.add_subcommand("witness", "minimal-support growth over the sequence model");
    cmd_witness->add_option("--p", p, "field characteristic")->required();
    cmd_witness->add_option("--level", level, "highest coordinate form index")->required();
    cmd_witness->add_option("--json", json_path, "write the report as JSON");

    auto* cmd_diagram = app.add_subcommand("diagram", "export an approximation diagram as DOT");
    cmd_diagram->add_option("--source", source_text)->required();
    cmd_diagram->add_option("--bound", bound)->required();
    cmd_diagram->add_option("--mode", mode)->check(CLI::IsMember({"full", "surjective"}));
    cmd_diagram->add_option("--catalog", catalog_text);
    cmd_diagram->add_option("--dot", dot_path, "output DOT path")->required();

    CLI11_PARSE(app, argc, argv);

    if (cmd_complete->parsed()) {
        pfc::SourceGroup src = pfc::parse_source(source_text);
        pfc::CompletionResult res = pfc::complete(src, bound, mode, catalog_from_text(catalog_text));
        if (!json_path.empty()) write_file(json_path, pfc::completion_to_json(res, include_elements).dump(2) + "\n");
        std::cout << "source " << src.describe() << ", bound " << bound << ", mode " << mode << "\n";
        std::cout << "limit order " << res.limit.order();
        if (res.limit.all_abelian) {
            std::cout << ", invariant factors [";
            for (size_t i = 0; i < res.limit.invariant_factors.size(); ++i) {
                if (i) std::cout << ",";
                std::cout << res.limit.invariant_factors[i];
            }
            std::cout << "]";
        }
        std::cout << "\n";
        std::cout << "projection: kernel " << res.projection.kernel_text << ", "
                  << (res.projection.injective ? "injective" : "not injective") << ", "
                  << (res.projection.surjective ? "surjective" : "not surjective") << "\n";
        return 0;
    }

    if (cmd_verify->parsed()) {
        pfc::json rep;
        if (suite == "theorem") {
            rep = pfc::theorem_to_json(pfc::check_theorem_iso(p, dim, bound));
        } else if (suite == "triangle") {
            rep = pfc::triangle_to_json(pfc::check_triangle(p, dim, bound));
        } else if (suite == "prop34") {
            if (source_text.empty()) throw CLI::ValidationError("--source is required for prop34");
            if (bound < 1) throw CLI::ValidationError("--bound is required for prop34");
            pfc::SourceGroup src = pfc::parse_source(source_text);
            rep = pfc::full_vs_surjective_to_json(pfc::compare_full_vs_surjective(src, bound, catalog_from_text(catalog_text)));
        } else if (suite == "perp") {
            rep = pfc::perp_to_json(pfc::check_perp(p, dim));
        } else if (suite == "classify") {
            rep = pfc::classify_to_json(pfc::classify_surjective_images(p, dim, catalog_from_text(catalog_text)));
        } else if (suite == "remark47") {
            rep = pfc::quotient_limit_to_json(pfc::quotient_limit_presentation(p, dim));
        } else if (suite == "fact") {
            rep = pfc::fact_to_json(pfc::fact_linearity_sweep(p, dim));
        } else if (suite == "iterate") {
            if (source_text.empty()) throw CLI::ValidationError("--source is required for iterate");
            pfc::SourceGroup src = pfc::parse_source(source_text);
            rep = pfc::iterate_to_json(pfc::iterate_completion(src, depth));
        }
        if (!json_path.empty()) write_file(json_path, rep.dump(2) + "\n");
        print_report(rep);
        return rep.at("status") == "pass" ? 0 : 1;
    }

    if (cmd_witness->parsed()) {
        pfc::WitnessReport rep = pfc::nonsurjectivity_witness(p, level);
        if (!json_path.empty()) write_file(json_path, pfc::witness_to_json(rep).dump(2) + "\n");
        std::cout << "sequence model over F" << p << ", coordinate forms up to level " << level << "\n";
        for (size_t n = 0; n < rep.min_support.size(); ++n)
            std::cout << "  level " << n << ": minimal preimage support " << rep.min_support[n] << "\n";
        std::cout << (rep.pass ? "[PASS]" : "[FAIL]")
                  << " support grows without bound; no single vector works at every level\n";
        return rep.pass ? 0 : 1;
    }

    if (cmd_diagram->parsed()) {
        pfc::SourceGroup src = pfc::parse_source(source_text);
        pfc::ApproxDiagram dia = mode == "surjective"
                                     ? pfc::surjective_approximations(src, bound)
                                     : pfc::all_approximations(src, bound, catalog_from_text(catalog_text));
        write_file(dot_path, pfc::to_dot(dia));
        std::cout << "wrote " << dia.nodes.size() << " nodes, " << dia.edges.size() << " edges to " << dot_path
                  << "\n";
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const pfc::spec_parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const pfc::budget_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
