#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pianocat/dissection.hpp"
#include "pianocat/generators.hpp"
#include "pianocat/io.hpp"
#include "pianocat/verify.hpp"

using namespace pianocat;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// either an arc set or a dissection, as read from a file
struct Input {
    std::optional<ArcSet> arcs;
    std::optional<DissectionSet> dissection;
};

Input read_input(const std::string &path) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    json j = parse_json_text(ss.str());
    if (!j.is_object()) throw ParseError("top level must be an object");
    Input in;
    if (j.contains("arcs"))
        in.arcs = arcset_from_json(j);
    else if (j.contains("red") || j.contains("binding"))
        in.dissection = dissection_from_json(j);
    else
        throw ParseError("expected an arc set {n, arcs} or a dissection {n, red, binding}");
    return in;
}

ArcSet generator_of(const Input &in) {
    if (in.arcs) {
        if (!is_limit_generator(*in.arcs)) throw UsageError("input arcs do not form a limit generator");
        return *in.arcs;
    }
    if (!is_extended_admissible(*in.dissection)) throw UsageError("input dissection is not extended admissible");
    return epsilon_inverse(*in.dissection);
}

DissectionSet dissection_of(const Input &in) {
    if (in.dissection) return *in.dissection;
    return epsilon(generator_of(in));
}

long default_window() {
    if (const char *e = std::getenv("PIANO_CAT_WINDOW")) {
        try {
            size_t used;
            long w = std::stol(e, &used);
            if (used == std::string(e).size()) return w;
        } catch (const std::exception &) {
        }
        throw UsageError("PIANO_CAT_WINDOW must be an integer");
    }
    return 6;
}

void emit(const std::string &text, const std::string &out_dir, const std::string &name) {
    if (out_dir.empty()) {
        std::cout << text;
        return;
    }
    std::filesystem::create_directories(out_dir);
    std::ofstream(std::filesystem::path(out_dir) / name) << text;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Arc model, dissections and piano algebras of the completed discrete cluster category"};
    app.require_subcommand(1);

    int n = 0;
    long window = 0;
    std::string en_format, qv_format, ht_format, rd_format, from, out_dir;

    auto *en = app.add_subcommand("enumerate", "list limit generators or extended dissections");
    bool equiv = false, as_dissections = false;
    en->add_option("--n", n, "number of accumulation points")->required();
    en->add_flag("--equiv", equiv, "one representative per rotation class");
    en->add_flag("--dissections", as_dissections, "emit the extended dissections instead");
    en->add_option("--format,--render", en_format, "json, svg or tikz")
        ->check(CLI::IsMember({"json", "svg", "tikz"}))
        ->default_val("json");
    en->add_option("--out", out_dir, "directory for one figure per record");

    auto *qv = app.add_subcommand("quiver", "piano quiver of a generator or extended dissection");
    qv->add_option("--from", from, "input JSON file")->required();
    qv->add_option("--format", qv_format, "dot, json or svg")->check(CLI::IsMember({"dot", "json", "svg"}))->default_val("json");

    auto *ht = app.add_subcommand("homtable", "graded hom dimensions between the arcs of a file");
    std::string pair;
    ht->add_option("--from", from, "arc set JSON file")->required();
    ht->add_option("--pair", pair, "1-based source,target; default all pairs");
    ht->add_option("--format", ht_format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->default_val("json");
    ht->add_option("--window", window, "degree window");

    auto *vf = app.add_subcommand("verify", "run a verifier over every generator of size n");
    std::string which, choice;
    CheckOptions opt;
    std::vector<std::string> names = kCheckNames;
    names.push_back("all");
    vf->add_option("which", which, "check name")->required()->check(CLI::IsMember(names));
    vf->add_option("--n", n, "number of accumulation points");
    vf->add_option("--from", from, "verify a single generator or extended dissection instead");
    vf->add_option("--window", window, "degree window");
    vf->add_option("--length", opt.length, "word length cap for confluence")->check(CLI::PositiveNumber);
    vf->add_option("--choice", choice, "initial sign choice, beta:J or delta:J");
    vf->add_flag("--literal", opt.literal, "piano-as-paths: compare with p_abar itself in positive degree");

    auto *rd = app.add_subcommand("render", "draw an arc diagram, dissection or quiver");
    std::string kind;
    rd->add_option("--from", from, "input JSON file")->required();
    rd->add_option("--kind", kind, "arc-diagram, dissection or quiver")->default_val("arc-diagram");
    rd->add_option("--format", rd_format, "svg, tikz or dot")->default_val("svg");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (window == 0) window = default_window();
        if (window < 2) throw UsageError("window must be at least 2");
        opt.window = window;

        if (*en) {
            if (n < 1 || n > kEnumerationCap)
                throw UsageError("n must lie in 1.." + std::to_string(kEnumerationCap));
            auto gens = enumerate_limit_generators(n, equiv);
            if (en_format == "json") {
                std::cout << "[\n";
                for (size_t k = 0; k < gens.size(); ++k)
                    std::cout << (as_dissections ? to_json(epsilon(gens[k])) : to_json(gens[k])).dump()
                              << (k + 1 < gens.size() ? ",\n" : "\n");
                std::cout << "]\n";
                return 0;
            }
            for (size_t k = 0; k < gens.size(); ++k) {
                std::string text = en_format == "svg"
                                       ? (as_dissections ? dissection_svg(epsilon(gens[k])) : arcs_svg(gens[k]))
                                       : (as_dissections ? dissection_tikz(epsilon(gens[k])) : arcs_tikz(gens[k]));
                emit(text, out_dir, "n" + std::to_string(n) + "_" + std::to_string(k + 1) + "." + en_format);
            }
            return 0;
        }

        if (*qv) {
            auto P = piano_from_generator(generator_of(read_input(from)));
            std::cout << (qv_format == "dot" ? quiver_dot(P) : qv_format == "svg" ? quiver_svg(P) : to_json(P).dump(2) + "\n");
            return 0;
        }

        if (*ht) {
            auto in = read_input(from);
            if (!in.arcs) throw UsageError("homtable needs an arc set");
            auto &A = in.arcs->arcs;
            std::vector<std::pair<int, int>> pairs;
            if (!pair.empty()) {
                int i, j;
                char comma;
                std::istringstream ps(pair);
                if (!(ps >> i >> comma >> j) || comma != ',' || i < 1 || j < 1 || i > (int)A.size() || j > (int)A.size())
                    throw UsageError("--pair must be i,j within 1.." + std::to_string(A.size()));
                pairs.push_back({i - 1, j - 1});
            } else {
                for (int i = 0; i < (int)A.size(); ++i)
                    for (int j = 0; j < (int)A.size(); ++j) pairs.push_back({i, j});
            }
            if (ht_format == "csv") std::cout << "source,target,degree,dim\n";
            for (auto [i, j] : pairs) {
                auto t = hom_table(A[i], A[j], window);
                if (ht_format == "json") {
                    auto js = to_json(t);
                    js["pair"] = {i + 1, j + 1};
                    std::cout << js.dump() << "\n";
                } else {
                    for (auto [d, v] : t.dims) std::cout << i + 1 << "," << j + 1 << "," << d << "," << v << "\n";
                }
            }
            return 0;
        }

        if (*vf) {
            if (!choice.empty()) opt.choice = parse_choice(choice);
            std::vector<ArcSet> gens;
            bool all_of_size = from.empty();
            if (all_of_size) {
                if (n < 1 || n > kEnumerationCap)
                    throw UsageError("--n must lie in 1.." + std::to_string(kEnumerationCap));
                gens = enumerate_limit_generators(n, false);
            } else {
                gens = {generator_of(read_input(from))};
                n = gens[0].n;
            }
            std::vector<std::string> run = which == "all" ? kCheckNames : std::vector<std::string>{which};
            bool ok = true;
            for (auto &c : run) {
                auto r = run_check(c, n, gens, opt, all_of_size);
                for (auto &w : r.witnesses) std::cout << json{{"check", c}, {"witness", w}}.dump() << "\n";
                std::cout << r.summary().dump() << "\n";
                ok = ok && r.pass();
            }
            return ok ? 0 : 1;
        }

        if (*rd) {
            if (kind != "arc-diagram" && kind != "dissection" && kind != "quiver")
                throw UsageError("unknown figure kind " + kind);
            auto in = read_input(from);
            std::string text;
            if (kind == "arc-diagram") {
                ArcSet A = in.arcs ? *in.arcs : generator_of(in);
                if (rd_format == "svg")
                    text = arcs_svg(A);
                else if (rd_format == "tikz")
                    text = arcs_tikz(A);
            } else if (kind == "dissection") {
                auto D = dissection_of(in);
                if (rd_format == "svg")
                    text = dissection_svg(D);
                else if (rd_format == "tikz")
                    text = dissection_tikz(D);
            } else if (kind == "quiver") {
                auto P = piano_from_generator(generator_of(in));
                if (rd_format == "svg")
                    text = quiver_svg(P);
                else if (rd_format == "dot")
                    text = quiver_dot(P);
            } else {
                throw UsageError("unknown figure kind " + kind);
            }
            if (text.empty()) throw UsageError("rd_format " + rd_format + " is not available for " + kind);
            std::cout << text;
            return 0;
        }
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
