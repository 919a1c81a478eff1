#include "CLI11.hpp"

#include "tautpoly/census.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace tautpoly;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// census string, or @path to a gluing file in the plain text format
VeeringTriangulation load_input(const std::string& spec) {
    if (!spec.empty() && spec[0] == '@') return load_veering(slurp(spec.substr(1)), true);
    return load_veering(spec);
}

std::vector<DualCycle> read_cycles(const std::string& path, int num_faces) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open cycle file: " + path);
    std::vector<DualCycle> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        DualCycle c;
        std::string tok;
        while (ls >> tok) c.emplace_back(tok);
        if (c.empty()) continue;
        if ((int)c.size() != num_faces)
            throw parse_error("cycle line has " + std::to_string(c.size()) + " entries, need " +
                              std::to_string(num_faces));
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<Int> read_weights(const std::string& path, int num_faces) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open weights file: " + path);
    std::vector<Int> w;
    std::string tok;
    while (in >> tok) {
        if (tok[0] == '#') {
            std::string rest;
            std::getline(in, rest);
            continue;
        }
        w.emplace_back(tok);
    }
    if ((int)w.size() != num_faces)
        throw parse_error("weights file has " + std::to_string(w.size()) + " entries, need " +
                          std::to_string(num_faces));
    return w;
}

void print_poly(const LaurentPoly& p, bool pairs) {
    if (pairs)
        std::cout << p.to_pair_string();
    else
        std::cout << p.to_string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"taut, veering and Teichmueller polynomials of veering triangulations"};
    app.require_subcommand(1);
    int threads = 0;
    bool pairs = false;
    app.add_option("--threads", threads, "worker threads for parallel kernels (0 = hardware)");
    app.add_flag("--pairs", pairs, "print polynomials as exponent/coefficient pairs");

    std::string spec, cycles_file, weights_file, dot_file, out_file, fill_list, side = "lower";
    bool compare = false;

    auto* validate = app.add_subcommand("validate", "decode and check a census entry");
    validate->add_option("entry", spec)->required();

    auto* taut = app.add_subcommand("taut", "taut polynomial (optionally reduced by cycles)");
    taut->add_option("entry", spec)->required();
    taut->add_option("--cycles", cycles_file, "file with one face-coefficient vector per line");

    auto* veering = app.add_subcommand("veering", "lower/upper veering polynomial (exact)");
    veering->add_option("entry", spec)->required();
    veering->add_option("--side", side)->check(CLI::IsMember({"lower", "upper", "both"}));

    auto* flowgraph = app.add_subcommand("flowgraph", "flow graphs, DOT export, isomorphism");
    flowgraph->add_option("entry", spec)->required();
    flowgraph->add_option("--side", side)->check(CLI::IsMember({"lower", "upper", "both"}));
    flowgraph->add_option("--dot", dot_file, "write DOT to FILE (side 'both': two files .lower/.upper)");
    flowgraph->add_flag("--compare", compare, "test the two graphs for isomorphism");

    auto* teich = app.add_subcommand("teich", "Teichmueller polynomial of a fibred face");
    teich->add_option("entry", spec)->required();
    teich->add_option("--weights", weights_file, "file with one weight per face")->required();
    teich->add_option("--fill", fill_list, "comma-separated cusp indices to fill");

    auto* scan = app.add_subcommand("scan", "tabulate invariants for a census file");
    scan->add_option("file", spec)->required();
    scan->add_option("--out", out_file, "write CSV here (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    set_threads(threads);
    try {
        if (*validate) {
            VeeringTriangulation vt = load_input(spec);
            std::cout << "tetrahedra: " << vt.tri.n << "\n"
                      << "cusps:      " << vt.num_cusps << "\n"
                      << "rank:       " << rank_of_cover(vt, {}) << "\n"
                      << "veering:    ok\n";
        } else if (*taut) {
            VeeringTriangulation vt = load_input(spec);
            std::vector<DualCycle> C;
            if (!cycles_file.empty()) C = read_cycles(cycles_file, vt.num_faces);
            print_poly(taut_polynomial(vt, C), pairs);
        } else if (*veering) {
            VeeringTriangulation vt = load_input(spec);
            if (side == "lower" || side == "both") {
                if (side == "both") std::cout << "lower: ";
                print_poly(lower_veering_polynomial(vt), pairs);
            }
            if (side == "upper" || side == "both") {
                if (side == "both") std::cout << "upper: ";
                print_poly(upper_veering_polynomial(vt), pairs);
            }
        } else if (*flowgraph) {
            VeeringTriangulation vt = load_input(spec);
            FlowGraph lo = flow_graph(vt, Side::Lower);
            FlowGraph up = flow_graph(vt, Side::Upper);
            if (!dot_file.empty()) {
                if (side == "both") {
                    std::ofstream(dot_file + ".lower") << to_dot(lo);
                    std::ofstream(dot_file + ".upper") << to_dot(up);
                } else {
                    std::ofstream(dot_file) << to_dot(side == "lower" ? lo : up);
                }
            } else if (!compare) {
                if (side != "upper") std::cout << to_dot(lo);
                if (side != "lower") std::cout << to_dot(up);
            }
            if (compare)
                std::cout << (graphs_isomorphic(lo, up) ? "ISOMORPHIC" : "NON-ISOMORPHIC") << "\n";
        } else if (*teich) {
            VeeringTriangulation vt = load_input(spec);
            std::vector<Int> w = read_weights(weights_file, vt.num_faces);
            std::vector<int> fill;
            if (!fill_list.empty()) {
                std::istringstream ls(fill_list);
                std::string tok;
                while (std::getline(ls, tok, ',')) fill.push_back(std::stoi(tok));
            }
            print_poly(teichmueller_polynomial(vt, w, fill), pairs);
        } else if (*scan) {
            std::vector<std::string> entries = read_entry_file(spec);
            std::vector<ScanRow> rows = census_scan(entries);
            std::ostringstream csv;
            csv << scan_csv_header() << "\n";
            for (const auto& r : rows) csv << to_csv_row(r) << "\n";
            if (out_file.empty()) {
                std::cout << csv.str();
            } else {
                std::ofstream out(out_file);
                if (!out) throw parse_error("cannot write: " + out_file);
                out << csv.str();
            }
        }
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
