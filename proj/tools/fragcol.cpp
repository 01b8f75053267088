// Command-line front end for the bounded-component colouring library.
//
// Exit codes: 0 success / all checks pass, 1 I/O or parse failure,
// 2 precondition violation, 3 verification or check failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fragcol/fragcol.hpp"

namespace {

fragcol::Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw fragcol::ParseError("cannot open input file: " + path);
    return fragcol::from_edge_list(in);
}

fragcol::Colouring load_colouring(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw fragcol::ParseError("cannot open colouring file: " + path);
    return fragcol::parse_colouring(in);
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw fragcol::ParseError("cannot open output file: " + path);
    out << bytes;
    if (!out) throw fragcol::ParseError("failed writing output file: " + path);
}

long long parse_integer(const std::string& text, const std::string& what) {
    if (text.empty()) throw fragcol::ParseError(what + " is empty");
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(text, &used);
    } catch (const std::exception&) {
        throw fragcol::ParseError(what + " is not an integer: '" + text + "'");
    }
    if (used != text.size())
        throw fragcol::ParseError(what + " is not an integer: '" + text + "'");
    return value;
}

int to_int(long long value, const std::string& what) {
    if (value < -2147483647LL || value > 2147483647LL)
        throw fragcol::ParseError(what + " is out of range: " + std::to_string(value));
    return static_cast<int>(value);
}

std::vector<std::string> split_on_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) {
            parts.push_back(text.substr(pos));
            return parts;
        }
        parts.push_back(text.substr(pos, comma - pos));
        pos = comma + 1;
    }
}

// "v:c,v:c" -> precoloured clique; syntax errors are parse failures, while
// semantic problems (not a clique, bad ranges) surface later as precondition
// violations from the library.
fragcol::PrecolouredClique parse_precolour_text(const std::string& text) {
    fragcol::PrecolouredClique clique;
    if (text.empty()) return clique;
    for (const std::string& token : split_on_commas(text)) {
        const std::size_t colon = token.find(':');
        if (colon == std::string::npos)
            throw fragcol::ParseError("precolour entry must look like v:c, got '" + token + "'");
        const long long v = parse_integer(token.substr(0, colon), "precolour vertex");
        const long long c = parse_integer(token.substr(colon + 1), "precolour colour");
        clique.vertices.push_back(to_int(v, "precolour vertex"));
        clique.colours.push_back(to_int(c, "precolour colour"));
    }
    return clique;
}

std::vector<long long> parse_params(const std::string& text) {
    std::vector<long long> values;
    for (const std::string& token : split_on_commas(text))
        values.push_back(parse_integer(token, "--params entry"));
    return values;
}

struct ColourArgs {
    std::string input;
    std::string output;
    std::string precolour;
    int k = 0;
    bool k_given = false;
    bool trace = false;
    bool no_recompute = false;
};

int run_colour(const ColourArgs& a) {
    const fragcol::Graph g = load_graph(a.input);
    const fragcol::PrecolouredClique clique = parse_precolour_text(a.precolour);
    fragcol::FragmentOptions opts;
    opts.recompute_circumference = !a.no_recompute;
    opts.emit_trace = a.trace;
    const int k = a.k_given ? a.k : std::max(fragcol::circumference(g), 2);
    const fragcol::FragmentResult res = fragcol::fragment_colour(g, k, clique, opts);
    if (a.trace && res.trace) fragcol::write_trace(std::cerr, *res.trace);
    int maxcomp = 0;
    for (const auto& part : fragcol::monochromatic_components(g, res.colouring))
        maxcomp = std::max(maxcomp, part.size());
    std::ostringstream summary;
    summary << "k=" << k << " colours=" << res.colouring.colours_used() << " maxcomp=" << maxcomp
            << "\n";
    const std::string body = fragcol::to_colouring_text(res.colouring);
    if (!a.output.empty()) {
        write_file(a.output, body);
        std::cout << summary.str();
    } else {
        std::cout << body;
        std::cerr << summary.str();
    }
    return 0;
}

struct VerifyArgs {
    std::string input;
    std::string colouring;
    std::string precolour;
    int k = 0;
};

int run_verify(const VerifyArgs& a) {
    const fragcol::Graph g = load_graph(a.input);
    const fragcol::Colouring col = load_colouring(a.colouring);
    if (col.size() != g.vertex_count())
        throw fragcol::ParseError("colouring has " + std::to_string(col.size()) +
                                  " entries but the graph has " +
                                  std::to_string(g.vertex_count()) + " vertices");
    const fragcol::PrecolouredClique clique = parse_precolour_text(a.precolour);
    const fragcol::VerifyReport rep = fragcol::verify_fragmentation(g, col, a.k, clique);
    std::cout << fragcol::to_report_text(rep);
    return rep.passed() ? 0 : 3;
}

struct CircumferenceArgs {
    std::string input;
    bool witness = false;
};

int run_circumference(const CircumferenceArgs& a) {
    const fragcol::Graph g = load_graph(a.input);
    const std::optional<fragcol::CycleWitness> w = fragcol::longest_cycle(g);
    std::cout << (w ? w->length() : 2) << "\n";
    if (a.witness && w) {
        for (std::size_t i = 0; i < w->vertices.size(); ++i) {
            if (i > 0) std::cout << ' ';
            std::cout << w->vertices[i];
        }
        std::cout << "\n";
    }
    return 0;
}

struct ExtremalArgs {
    std::string check;
    std::string output;
    int k = 0;
    int d = 0;
    int jobs = 1;
};

int run_extremal(const ExtremalArgs& a) {
    const fragcol::Graph g = fragcol::build_extremal(a.k, a.d);
    if (!a.output.empty()) write_file(a.output, fragcol::to_edge_list(g));
    std::cout << "k=" << a.k << " d=" << a.d << " n=" << g.vertex_count()
              << " m=" << g.edge_count() << "\n";
    bool all_ok = true;
    if (a.check == "structural" || a.check == "all") {
        const fragcol::StructuralReport r = fragcol::verify_structural(a.k, a.d);
        std::cout << "circumference=" << r.circumference_value << " bound=" << r.circumference_bound
                  << " ok=" << (r.circumference_ok ? 1 : 0) << "\n";
        std::cout << "longest_path=" << r.longest_path << " bound=" << r.longest_path_bound
                  << " ok=" << (r.longest_path_ok ? 1 : 0) << "\n";
        all_ok = all_ok && r.ok();
    }
    if (a.check == "colourings" || a.check == "all") {
        const fragcol::ForcedDegreeResult r = fragcol::check_forced_degree(a.k, a.d, a.jobs);
        std::cout << "forced_degree=" << (r.forced ? 1 : 0) << " space=" << r.space << "\n";
        if (!r.forced && r.counterexample) {
            std::cout << "counterexample=";
            const auto& col = r.counterexample->colour;
            for (std::size_t i = 0; i < col.size(); ++i) {
                if (i > 0) std::cout << ',';
                std::cout << col[i];
            }
            std::cout << "\n";
        }
        all_ok = all_ok && r.forced;
    }
    return all_ok ? 0 : 3;
}

struct BoundsArgs {
    long long kmax = 0;
};

int run_bounds(const BoundsArgs& a) {
    fragcol::write_bound_table(std::cout, a.kmax);
    return 0;
}

struct OracleArgs {
    std::string input;
    std::string mode = "fragment";
    int d = 0;
};

int run_oracle(const OracleArgs& a) {
    const fragcol::Graph g = load_graph(a.input);
    const int result = a.mode == "defective" ? fragcol::min_defective_colours(g, a.d)
                                             : fragcol::min_fragmentation_colours(g, a.d);
    std::cout << result << "\n";
    return 0;
}

struct GenArgs {
    std::string family;
    std::string params;
    std::string output;
    std::uint64_t seed = 1;
};

fragcol::Graph generate_family(const GenArgs& a) {
    const std::vector<long long> ps = parse_params(a.params);
    const auto need = [&](std::size_t count) {
        if (ps.size() != count)
            throw std::invalid_argument("family '" + a.family + "' takes " +
                                        std::to_string(count) + " parameter(s)");
    };
    const auto arg = [&](std::size_t i) { return to_int(ps[i], "--params entry"); };
    if (a.family == "cycle") {
        need(1);
        return fragcol::cycle_graph(arg(0));
    }
    if (a.family == "path") {
        need(1);
        return fragcol::path_graph(arg(0));
    }
    if (a.family == "complete") {
        need(1);
        return fragcol::complete_graph(arg(0));
    }
    if (a.family == "star") {
        need(1);
        return fragcol::star_graph(arg(0));
    }
    if (a.family == "wheel") {
        need(1);
        return fragcol::wheel_graph(arg(0));
    }
    if (a.family == "cactus") {
        need(2);
        return fragcol::random_cactus(arg(0), arg(1), a.seed);
    }
    if (a.family == "treeclosure") {
        need(2);
        return fragcol::tree_closure(arg(0), arg(1));
    }
    if (a.family == "extremal") {
        need(2);
        return fragcol::build_extremal(arg(0), arg(1));
    }
    throw std::invalid_argument("unknown family: " + a.family);
}

int run_gen(const GenArgs& a) {
    const fragcol::Graph g = generate_family(a);
    const std::string body = fragcol::to_edge_list(g);
    if (!a.output.empty())
        write_file(a.output, body);
    else
        std::cout << body;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for colourings with bounded monochromatic components"};
    app.require_subcommand(1);
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker threads for enumeration subcommands")
        ->check(CLI::PositiveNumber);

    ColourArgs colour_args;
    CLI::App* colour_cmd = app.add_subcommand("colour", "colour a graph so every monochromatic component has order <= k");
    colour_cmd->fallthrough();
    colour_cmd->add_option("--input", colour_args.input, "edge-list file")->required();
    colour_cmd->add_option("--output", colour_args.output, "write the colouring here instead of standard output");
    CLI::Option* colour_k = colour_cmd->add_option("--k", colour_args.k, "component order bound (default: max(circumference, 2))");
    colour_cmd->add_option("--precolour", colour_args.precolour, "precoloured clique 'v:c,v:c' of at most two vertices");
    colour_cmd->add_flag("--trace", colour_args.trace, "write the recursion trace to standard error");
    colour_cmd->add_flag("--no-recompute", colour_args.no_recompute, "do not shrink k to the observed circumference while recursing");

    VerifyArgs verify_args;
    CLI::App* verify_cmd = app.add_subcommand("verify", "check a colouring against the bounded-component rules");
    verify_cmd->fallthrough();
    verify_cmd->add_option("--input", verify_args.input, "edge-list file")->required();
    verify_cmd->add_option("--colouring", verify_args.colouring, "colouring file")->required();
    verify_cmd->add_option("--k", verify_args.k, "component order bound")->required();
    verify_cmd->add_option("--precolour", verify_args.precolour, "precoloured clique 'v:c,v:c'");

    CircumferenceArgs circ_args;
    CLI::App* circ_cmd = app.add_subcommand("circumference", "exact circumference (2 for forests)");
    circ_cmd->fallthrough();
    circ_cmd->add_option("--input", circ_args.input, "edge-list file")->required();
    circ_cmd->add_flag("--witness", circ_args.witness, "also print a longest cycle");

    ExtremalArgs extremal_args;
    CLI::App* extremal_cmd = app.add_subcommand("extremal", "build the recursive lower-bound graph and run its checks");
    extremal_cmd->fallthrough();
    extremal_cmd->add_option("--k", extremal_args.k, "recursion depth")->required();
    extremal_cmd->add_option("--d", extremal_args.d, "degree target")->required();
    extremal_cmd->add_option("--check", extremal_args.check, "which checks to run")
        ->check(CLI::IsMember({"structural", "colourings", "all"}));
    extremal_cmd->add_option("--output", extremal_args.output, "write the graph edge list here");

    BoundsArgs bounds_args;
    CLI::App* bounds_cmd = app.add_subcommand("bounds", "closed-form bound table as CSV");
    bounds_cmd->fallthrough();
    bounds_cmd->add_option("--kmax", bounds_args.kmax, "largest k in the table")->required();

    OracleArgs oracle_args;
    CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force optimum for small graphs");
    oracle_cmd->fallthrough();
    oracle_cmd->add_option("--input", oracle_args.input, "edge-list file")->required();
    oracle_cmd->add_option("--d", oracle_args.d, "order bound (fragment) or degree bound (defective)")->required();
    oracle_cmd->add_option("--mode", oracle_args.mode, "fragment (default) or defective")
        ->check(CLI::IsMember({"fragment", "defective"}));

    GenArgs gen_args;
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a graph from a named family");
    gen_cmd->fallthrough();
    gen_cmd->add_option("--family", gen_args.family, "cycle|path|complete|star|wheel|cactus|treeclosure|extremal")
        ->required()
        ->check(CLI::IsMember({"cycle", "path", "complete", "star", "wheel", "cactus", "treeclosure", "extremal"}));
    gen_cmd->add_option("--params", gen_args.params, "comma-separated integer parameters")->required();
    gen_cmd->add_option("--seed", gen_args.seed, "random seed (cactus family)");
    gen_cmd->add_option("--output", gen_args.output, "write the edge list here instead of standard output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (colour_cmd->parsed()) {
            colour_args.k_given = colour_k->count() > 0;
            return run_colour(colour_args);
        }
        if (verify_cmd->parsed()) return run_verify(verify_args);
        if (circ_cmd->parsed()) return run_circumference(circ_args);
        if (extremal_cmd->parsed()) {
            extremal_args.jobs = jobs;
            return run_extremal(extremal_args);
        }
        if (bounds_cmd->parsed()) return run_bounds(bounds_args);
        if (oracle_cmd->parsed()) return run_oracle(oracle_args);
        if (gen_cmd->parsed()) return run_gen(gen_args);
    } catch (const fragcol::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
