#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "clawtop/errors.hpp"
#include "clawtop/families.hpp"
#include "clawtop/graph_io.hpp"
#include "clawtop/json_io.hpp"
#include "clawtop/pipeline.hpp"
#include "clawtop/verify.hpp"

using namespace clawtop;

namespace {

Graph make_family(const std::string& family, int n, int k, double p, long long seed) {
    if (family == "L") return band_graph(n, k);
    if (family == "C") return circular_band_graph(n, k);
    if (family == "path") return path_graph(n);
    if (family == "cycle") return cycle_graph(n);
    if (family == "complete") return complete_graph(n);
    if (family == "star") {
        if (n < 1) throw InputError("star needs --n >= 1 (total vertex count)");
        return star_graph(n - 1);
    }
    if (family == "random") return random_graph(n, p, static_cast<uint64_t>(seed));
    if (family == "random-claw-free")
        return random_claw_free_graph(n, p, static_cast<uint64_t>(seed));
    throw InputError("unknown family: " + family);
}

void write_output(const std::string& out, const std::string& text) {
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw InputError("cannot open output file: " + out);
    f << text;
}

Json analysis_to_json(const GraphAnalysis& a) {
    Json folds = Json::array();
    for (const FoldRecord& f : a.folds)
        folds.push_back(Json{{"kept", f.kept}, {"removed", f.removed}});
    return Json{{"n", a.n},
                {"edges", a.edge_count},
                {"claw_free", a.claw_free},
                {"folds", folds},
                {"reduced_f_vector", a.reduced_f_vector},
                {"collapse_steps", a.collapse_steps},
                {"cone", a.cone},
                {"homology", profile_to_json(a.homology)},
                {"connectivity", a.connectivity.to_string()},
                {"pi1", to_string(a.pi1)},
                {"certified_topological", a.certified_topological}};
}

std::string analysis_to_text(const GraphAnalysis& a) {
    std::string s;
    s += "n=" + std::to_string(a.n) + " edges=" + std::to_string(a.edge_count) +
         " claw_free=" + (a.claw_free ? "yes" : "no") + "\n";
    s += "folds=" + std::to_string(a.folds.size());
    for (const FoldRecord& f : a.folds)
        s += " (" + std::to_string(f.removed) + "->" + std::to_string(f.kept) + ")";
    s += "\n";
    s += "reduced_f_vector=[";
    for (size_t i = 0; i < a.reduced_f_vector.size(); ++i)
        s += (i ? "," : "") + std::to_string(a.reduced_f_vector[i]);
    s += "] collapse_steps=" + std::to_string(a.collapse_steps) +
         " cone=" + (a.cone ? "yes" : "no") + "\n";
    s += "homology=" + a.homology.to_string() + "\n";
    s += "connectivity=" + a.connectivity.to_string() + " pi1=" + to_string(a.pi1) +
         " certified_topological=" + (a.certified_topological ? "yes" : "no") + "\n";
    return s;
}

std::string basename_of(const std::string& path) {
    const size_t slash = path.find_last_of("/\\");
    return slash == std::string::npos ? path : path.substr(slash + 1);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Independence complexes of claw-free graphs: generate, analyze, verify"};
    app.require_subcommand(1);

    // --- gen ---
    std::string gen_family, gen_format = "edgelist", gen_out;
    int gen_n = 0, gen_k = 2;
    double gen_p = 0.5;
    long long gen_seed = 1;
    CLI::App* gen = app.add_subcommand("gen", "Generate a graph from a named family");
    gen->add_option("--family", gen_family, "L|C|path|cycle|complete|star|random|random-claw-free")
        ->required();
    gen->add_option("--n", gen_n, "Number of vertices")->required();
    gen->add_option("--k", gen_k, "Band width for the L/C families");
    gen->add_option("--p", gen_p, "Edge probability for random families")
        ->check(CLI::Range(0.0, 1.0));
    gen->add_option("--seed", gen_seed, "Random seed");
    gen->add_option("--format", gen_format, "Output format")
        ->check(CLI::IsMember({"edgelist", "graph6"}));
    gen->add_option("--out", gen_out, "Output file (default stdout)");

    // --- analyze ---
    std::string an_in, an_family, an_format = "json", an_out;
    int an_n = 0, an_k = 2, an_cap_vertices = 30;
    long long an_cap_faces = 200000, an_seed = 1, an_tietze = 10000;
    double an_p = 0.5;
    CLI::App* analyze =
        app.add_subcommand("analyze", "Run the full measurement pipeline on one graph");
    analyze->add_option("--in", an_in, "Graph file (edge list or graph6)");
    analyze->add_option("--family", an_family, "Generate the input instead of reading a file");
    analyze->add_option("--n", an_n, "Number of vertices (with --family)");
    analyze->add_option("--k", an_k, "Band width (with --family L|C)");
    analyze->add_option("--p", an_p, "Edge probability (with random families)")
        ->check(CLI::Range(0.0, 1.0));
    analyze->add_option("--seed", an_seed, "Random seed (with random families)");
    analyze->add_option("--cap-vertices", an_cap_vertices, "Vertex cap")->check(CLI::PositiveNumber);
    analyze->add_option("--cap-faces", an_cap_faces, "Face cap per dimension")
        ->check(CLI::PositiveNumber);
    analyze->add_option("--tietze-steps", an_tietze, "Simplification budget for pi1")
        ->check(CLI::NonNegativeNumber);
    analyze->add_option("--format", an_format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    analyze->add_option("--out", an_out, "Output file (default stdout)");

    // --- verify ---
    std::string ver_suite, ver_ensemble = "default", ver_graph, ver_format = "json", ver_out;
    std::vector<int> ver_ks = {2, 3, 4};
    int ver_nmax = 18, ver_jobs = std::max(1u, std::thread::hardware_concurrency()),
        ver_cap_vertices = 30, ver_exhaustive = 7, ver_random_count = 500;
    long long ver_cap_faces = 200000, ver_seed = 1, ver_tietze = 10000;
    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
    verify
        ->add_option("--suite", ver_suite,
                     "bounds|lemma31|thm28|wedge|L-recursion|C-theorem|all")
        ->required()
        ->check(CLI::IsMember(std::vector<std::string>(kSuiteNames.begin(), kSuiteNames.end())));
    verify->add_option("--ensemble", ver_ensemble, "Ensemble name (only 'default' exists)");
    verify->add_option("--graph", ver_graph, "Verify one graph file instead of the ensemble");
    verify->add_option("--k", ver_ks, "Band widths for the L/C suites");
    verify->add_option("--n-max", ver_nmax, "Largest n for the L suite")->check(CLI::PositiveNumber);
    verify->add_option("--jobs", ver_jobs, "Worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--seed", ver_seed, "Ensemble seed");
    verify->add_option("--cap-vertices", ver_cap_vertices, "Vertex cap")
        ->check(CLI::PositiveNumber);
    verify->add_option("--cap-faces", ver_cap_faces, "Face cap per dimension")
        ->check(CLI::PositiveNumber);
    verify->add_option("--tietze-steps", ver_tietze, "Simplification budget for pi1")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--exhaustive-max-n", ver_exhaustive,
                       "Exhaustive part of the ensemble covers all graphs up to this size");
    verify->add_option("--random-count", ver_random_count, "Random claw-free sample count");
    verify->add_option("--format", ver_format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    verify->add_option("--out", ver_out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);

        if (gen->parsed()) {
            Graph g = make_family(gen_family, gen_n, gen_k, gen_p, gen_seed);
            std::string text =
                gen_format == "graph6" ? to_graph6(g) + "\n" : to_edge_list(g);
            write_output(gen_out, text);
            return 0;
        }

        if (analyze->parsed()) {
            Graph g(0);
            if (!an_in.empty())
                g = read_graph_file(an_in);
            else if (!an_family.empty())
                g = make_family(an_family, an_n, an_k, an_p, an_seed);
            else
                throw InputError("analyze needs --in or --family");
            PipelineOptions opts;
            opts.limits.max_vertices = an_cap_vertices;
            opts.limits.max_faces_per_dim = an_cap_faces;
            opts.tietze.steps = an_tietze;
            GraphAnalysis a = analyze_graph(g, opts);
            std::string text = an_format == "text"
                                   ? analysis_to_text(a)
                                   : canonical_dump(analysis_to_json(a)) + "\n";
            write_output(an_out, text);
            return 0;
        }

        // verify
        if (ver_ensemble != "default")
            throw InputError("unknown ensemble: " + ver_ensemble);
        SuiteOptions sopts;
        sopts.ensemble.seed = ver_seed;
        sopts.ensemble.exhaustive_max_n = ver_exhaustive;
        sopts.ensemble.random_count = ver_random_count;
        sopts.pipeline.limits.max_vertices = ver_cap_vertices;
        sopts.pipeline.limits.max_faces_per_dim = ver_cap_faces;
        sopts.pipeline.tietze.steps = ver_tietze;
        sopts.jobs = ver_jobs;
        sopts.band_ks = ver_ks;
        sopts.band_n_max = ver_nmax;

        SuiteReport rep =
            ver_graph.empty()
                ? run_suite(ver_suite, sopts)
                : run_suite_on_graph(ver_suite, basename_of(ver_graph),
                                     read_graph_file(ver_graph), sopts);

        std::string text = ver_format == "csv"    ? records_to_csv(rep.records)
                           : ver_format == "text" ? records_to_text(rep.records)
                                                  : records_to_jsonl(rep.records);
        write_output(ver_out, text);
        std::cerr << "passed=" << rep.passed << " failed=" << rep.failed
                  << " skipped=" << rep.skipped << "\n";
        return rep.failed > 0 ? 1 : 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
