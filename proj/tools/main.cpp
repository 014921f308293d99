// icgraph command line tool: info, loops, diagram, verify, distance, generate.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse/validation
// errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "icgraph/generators.hpp"
#include "icgraph/json_io.hpp"
#include "icgraph/theorem.hpp"

namespace {

using namespace icgraph;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::ofstream out(out_path);
        if (!out) throw GraphError("cannot write " + out_path);
        out << j.dump(2) << '\n';
    }
}

void emit_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw GraphError("cannot write " + out_path);
        out << text;
    }
}

FiltrationModel parse_brute_model(const std::string& name) {
    if (name == "cech") return FiltrationModel::cech;
    if (name == "rips") return FiltrationModel::rips;
    throw GraphError("unknown model \"" + name + "\"");
}

struct CommonFlags {
    std::string output = "json";
    std::string out_path;
    double delta = 0.1;
    double eps_max = 0.0;
    double tol = 0.0;
    std::string model = "cech";
    int threads = 0;
};

std::string render_points_text(const std::vector<DiagramPoint>& points) {
    std::ostringstream out;
    for (const DiagramPoint& p : points) {
        out << p.birth << ' ';
        if (p.infinite())
            out << "inf";
        else
            out << p.death;
        out << '\n';
    }
    return out.str();
}

int run(int argc, char** argv) {
    CLI::App app{"intrinsic Cech persistence diagrams of finite metric graphs"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string input, input2;

    auto add_output_flags = [&](CLI::App* cmd) {
        cmd->add_option("--output", flags.output, "Output format: json or text")
            ->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("-o,--out", flags.out_path, "Write output to a file");
    };

    CLI::App* info = app.add_subcommand("info", "Genus, components, total length");
    info->add_option("input", input, "Graph JSON file")->required();
    add_output_flags(info);

    CLI::App* loops = app.add_subcommand("loops", "Shortest system of loops");
    loops->add_option("input", input, "Graph JSON file")->required();
    add_output_flags(loops);

    CLI::App* diagram = app.add_subcommand("diagram", "Dim-1 persistence diagram");
    diagram->add_option("input", input, "Graph JSON file")->required();
    diagram->add_option("--model", flags.model, "cech, rips, or theorem (closed form)")
        ->check(CLI::IsMember({"cech", "rips", "theorem"}));
    diagram->add_option("--delta", flags.delta, "Discretization scale (brute-force models)");
    diagram->add_option("--eps-max", flags.eps_max, "Filtration cutoff (0 = auto)");
    diagram->add_option("--threads", flags.threads, "Worker threads (0 = all cores)");
    int diagram_dim = 1;
    diagram->add_option("--dim", diagram_dim, "Diagram dimension (0 or 1)")
        ->check(CLI::Range(0, 1));
    add_output_flags(diagram);

    CLI::App* verify_cmd = app.add_subcommand("verify", "Closed form vs brute force");
    verify_cmd->add_option("input", input, "Graph JSON file")->required();
    verify_cmd->add_option("--delta", flags.delta, "Discretization scale");
    verify_cmd->add_option("--tol", flags.tol, "Bottleneck tolerance (0 = auto)");
    verify_cmd->add_option("--model", flags.model, "Brute-force side: cech or rips")
        ->check(CLI::IsMember({"cech", "rips"}));
    verify_cmd->add_option("--eps-max", flags.eps_max, "Filtration cutoff (0 = auto)");
    verify_cmd->add_option("--threads", flags.threads, "Worker threads (0 = all cores)");
    add_output_flags(verify_cmd);

    CLI::App* distance = app.add_subcommand("distance", "Intrinsic Cech distance d_IC");
    distance->add_option("input", input, "First graph JSON file")->required();
    distance->add_option("input2", input2, "Second graph JSON file")->required();
    std::string distance_output = "text";  // the bare number by default
    distance->add_option("--output", distance_output, "Output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    distance->add_option("-o,--out", flags.out_path, "Write output to a file");

    CLI::App* gen = app.add_subcommand("generate", "Emit a synthetic graph");
    std::string family;
    std::vector<double> lengths;
    int gen_n = 0, gen_m = 0;
    double gen_edge_length = 1.0;
    std::uint64_t seed = 0;
    gen->add_option("family", family, "cycle | wedge | theta | complete | random")
        ->required()
        ->check(CLI::IsMember({"cycle", "wedge", "theta", "complete", "random"}));
    gen->add_option("--lengths", lengths, "Lengths (cycle: 1, theta: 3, wedge: any)");
    gen->add_option("-n,--vertices", gen_n, "Vertex count (complete, random)");
    gen->add_option("-m,--edges", gen_m, "Edge count (random)");
    gen->add_option("--edge-length", gen_edge_length, "Edge length (complete)");
    gen->add_option("--seed", seed, "Seed (random)");
    add_output_flags(gen);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const bool text = flags.output == "text";

    if (*info) {
        MetricGraph g = load_graph(input);
        json j{{"vertices", g.vertex_count()},
               {"edges", g.edge_count()},
               {"components", g.component_count()},
               {"genus", g.genus()},
               {"total_length", g.total_length()}};
        if (text) {
            std::ostringstream out;
            out << "vertices: " << g.vertex_count() << "\nedges: " << g.edge_count()
                << "\ncomponents: " << g.component_count() << "\ngenus: " << g.genus()
                << "\ntotal length: " << g.total_length() << '\n';
            emit_text(out.str(), flags.out_path);
        } else {
            emit(j, flags.out_path);
        }
        return kExitOk;
    }

    if (*loops) {
        MetricGraph g = load_graph(input);
        const MetricGraph normalized = normalize(g).graph;
        LoopSystem system = normalized.genus() > 0 ? shortest_system(normalized) : LoopSystem{};
        json j = loops_to_json(normalized, system);
        if (text) {
            std::ostringstream out;
            for (const Loop& loop : system.loops) out << loop.length << '\n';
            emit_text(out.str(), flags.out_path);
        } else {
            emit(j, flags.out_path);
        }
        return kExitOk;
    }

    if (*diagram) {
        MetricGraph g = load_graph(input);
        PersistenceDiagram d;
        if (flags.model == "theorem") {
            d = predicted_diagram(g);
        } else {
            PipelineOptions opts;
            opts.delta = flags.delta;
            opts.model = parse_brute_model(flags.model);
            opts.eps_max = flags.eps_max;
            opts.threads = flags.threads;
            d = computed_diagram(g, opts);
        }
        if (text)
            emit_text(render_points_text(d.points(diagram_dim)), flags.out_path);
        else
            emit(diagram_to_json(d, diagram_dim), flags.out_path);
        return kExitOk;
    }

    if (*verify_cmd) {
        MetricGraph g = load_graph(input);
        VerificationReport report = verify(g, flags.delta, flags.tol,
                                           parse_brute_model(flags.model), flags.eps_max,
                                           flags.threads);
        if (text) {
            std::ostringstream out;
            out << (report.pass ? "PASS" : "FAIL") << ": " << report.status << '\n';
            emit_text(out.str(), flags.out_path);
        } else {
            emit(report_to_json(report), flags.out_path);
        }
        return report.pass ? kExitOk : kExitVerifyFailed;
    }

    if (*distance) {
        MetricGraph g1 = load_graph(input);
        MetricGraph g2 = load_graph(input2);
        const double value = d_ic(g1, g2);
        if (distance_output == "text") {
            std::ostringstream out;
            out << value << '\n';
            emit_text(out.str(), flags.out_path);
        } else {
            emit(json{{"d_ic", value}}, flags.out_path);
        }
        return kExitOk;
    }

    if (*gen) {
        GeneratorSpec spec;
        spec.lengths = lengths;
        spec.vertices = gen_n;
        spec.edges = gen_m;
        spec.edge_length = gen_edge_length;
        spec.seed = seed;
        if (family == "cycle") spec.family = GeneratorSpec::Family::cycle;
        else if (family == "wedge") spec.family = GeneratorSpec::Family::wedge;
        else if (family == "theta") spec.family = GeneratorSpec::Family::theta;
        else if (family == "complete") spec.family = GeneratorSpec::Family::complete;
        else spec.family = GeneratorSpec::Family::random_graph;
        MetricGraph g = generate(spec);
        emit(graph_to_json(g), flags.out_path);
        return kExitOk;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const GraphError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kExitUsage;
    }
}
