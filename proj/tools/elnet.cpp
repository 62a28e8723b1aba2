#include "elnet/dynamics.hpp"
#include "elnet/standard.hpp"
#include "elnet/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace elnet;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ArgumentError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

enum class FileKind { network, model, conductances };

FileKind sniff(const std::string& text) {
    auto p = text.find_first_not_of(" \t\r\n");
    if (p != std::string::npos && text[p] == '{') return FileKind::network;
    if (text.compare(p == std::string::npos ? 0 : p, 7, "strands") == 0) return FileKind::model;
    return FileKind::conductances;
}

std::vector<int> parse_triple(const std::string& s) {
    std::vector<int> out;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw ArgumentError("--triangle expects three edge indices a,b,c");
        }
    }
    if (out.size() != 3) throw ArgumentError("--triangle expects three edge indices a,b,c");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"electrical networks as vertex models, in exact arithmetic"};
    app.require_subcommand(1);

    std::string file, vertex, triangle, new_id, to, suite = "all", word;
    int position = 0;
    SuiteOptions opt;

    auto* respond = app.add_subcommand("respond", "response matrix of a network");
    respond->add_option("network", file)->required();

    auto* mutate = app.add_subcommand("mutate", "star-triangle mutation of a network, or a braid move on a model");
    mutate->add_option("input", file)->required();
    mutate->add_option("--vertex", vertex, "interior degree-3 vertex");
    mutate->add_option("--triangle", triangle, "edge indices a,b,c of a triangular face");
    mutate->add_option("--new-id", new_id, "id of the new star center");
    mutate->add_option("--position", position, "1-based crossing position of a braid move");

    auto* medial = app.add_subcommand("medial", "medial wiring diagram of a network");
    medial->add_option("network", file)->required();

    auto* partition = app.add_subcommand("partition", "boundary partition function M_B");
    partition->add_option("input", file, "network json, model file or conductance file")->required();

    auto* convert = app.add_subcommand("convert", "convert between M_R and M_B");
    convert->add_option("matrix", file)->required();
    convert->add_option("--to", to)->required()->check(CLI::IsMember({"mb", "mr"}));

    auto* invert = app.add_subcommand("invert", "recover standard-graph conductances from M_B");
    invert->add_option("matrix", file)->required();

    auto* verify = app.add_subcommand("verify", "run a property suite");
    verify->add_option("suite", suite);
    verify->add_option("--seed", opt.seed);
    verify->add_option("--samples", opt.samples);
    verify->add_option("--size", opt.size);

    auto* evolve = app.add_subcommand("evolve", "apply a generator word to a lattice");
    evolve->add_option("lattice", file)->required();
    evolve->add_option("--word", word)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (respond->parsed()) {
            std::cout << to_string(response(parse_network(slurp(file))));
        } else if (mutate->parsed()) {
            auto text = slurp(file);
            if (sniff(text) == FileKind::network) {
                MutationSite site;
                if (!vertex.empty() == !triangle.empty()) throw ArgumentError("give exactly one of --vertex or --triangle");
                if (!vertex.empty()) site.vertex = vertex;
                else site.triangle = parse_triple(triangle);
                if (!new_id.empty()) site.new_center = new_id;
                std::cout << format_network(star_triangle_mutate(parse_network(text), site));
            } else {
                if (position < 1) throw ArgumentError("a model mutation needs --position k");
                std::cout << format_model(yb_mutate(parse_model(text), position));
            }
        } else if (medial->parsed()) {
            auto m = medial_of_network(parse_network(slurp(file)));
            try {
                std::cout << format_wiring(wiring_from_medial(m));
            } catch (const EmbeddingError&) {
                // not sweepable into a wiring diagram: list crossings in flow order
                std::cout << "strands " << m.diagram.n_strands << "\n";
                for (int k : crossing_order(m)) {
                    const auto& c = m.diagram.crossings[k];
                    std::cout << c.lo << " " << c.hi << " " << color_char(c.color) << "\n";
                }
            }
        } else if (partition->parsed()) {
            auto text = slurp(file);
            switch (sniff(text)) {
            case FileKind::network:
                std::cout << to_string(partition_product(vertex_model(parse_network(text))));
                break;
            case FileKind::model:
                std::cout << to_string(partition_product(parse_model(text)));
                break;
            case FileKind::conductances:
                std::cout << to_string(mb_standard(parse_conductances(text)));
                break;
            }
        } else if (convert->parsed()) {
            auto m = parse_matrix(slurp(file));
            std::cout << to_string(to == "mb" ? mb_from_mr(m) : mr_from_mb(m));
        } else if (invert->parsed()) {
            auto m = parse_matrix(slurp(file));
            std::cout << format_conductances(invert_conductances(m, static_cast<int>(m.rows())));
        } else if (verify->parsed()) {
            std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
            bool ok = true;
            for (const auto& n : names) {
                auto r = run_suite(n, opt);
                if (r.passed) {
                    std::cout << n << ": PASS (" << r.checks << " checks)\n";
                } else {
                    std::cout << n << ": FAIL\n" << r.counterexample << "\n";
                    ok = false;
                }
            }
            return ok ? 0 : 1;
        } else if (evolve->parsed()) {
            std::cout << format_lattice(elnet::evolve(parse_lattice(slurp(file)), word));
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
