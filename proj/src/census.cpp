#include "tautpoly/census.hpp"

#include <omp.h>

#include <fstream>
#include <sstream>

namespace tautpoly {

namespace {

ScanRow scan_one(const std::string& entry) {
    ScanRow row;
    row.entry = entry;
    try {
        VeeringTriangulation vt = load_veering(entry);
        row.n = vt.tri.n;
        row.cusps = vt.num_cusps;
        FaceLaurents fl = triangulation_cover(vt, {});
        row.rank = fl.rank;
        LaurentPoly theta = taut_polynomial(vt);
        LaurentPoly vl = lower_veering_polynomial(vt);
        LaurentPoly vu = upper_veering_polynomial(vt);
        row.taut = theta.to_string();
        row.veering_lower = lp_normalize(vl).to_string();
        row.veering_upper = lp_normalize(vu).to_string();
        row.veering_asym = !lp_unit_equal(vl, vu);
        row.flowgraph_noniso =
            !graphs_isomorphic(flow_graph(vt, Side::Lower), flow_graph(vt, Side::Upper));
    } catch (const std::exception& e) {
        row.error = e.what();
        row.taut = row.veering_lower = row.veering_upper = "";
    }
    return row;
}

}  // namespace

std::vector<ScanRow> census_scan(const std::vector<std::string>& entries) {
    std::vector<ScanRow> rows(entries.size());
    const int nthreads = get_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nthreads) if (nthreads > 1)
    for (size_t i = 0; i < entries.size(); ++i) rows[i] = scan_one(entries[i]);
    return rows;
}

std::string scan_csv_header() {
    return "entry,n,cusps,rank,taut,veering_lower,veering_upper,veering_asym,flowgraph_noniso,error";
}

std::string to_csv_row(const ScanRow& r) {
    std::ostringstream os;
    if (!r.error.empty()) {
        std::string msg = r.error;
        for (char& c : msg)
            if (c == ',' || c == '\n') c = ';';
        os << r.entry << ",,,,,,,,," << msg;
        return os.str();
    }
    os << r.entry << "," << r.n << "," << r.cusps << "," << r.rank << "," << r.taut << ","
       << r.veering_lower << "," << r.veering_upper << "," << (r.veering_asym ? 1 : 0) << ","
       << (r.flowgraph_noniso ? 1 : 0) << ",";
    return os.str();
}

std::vector<std::string> read_entry_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open entry file: " + path);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string entry;
        if (ls >> entry) out.push_back(entry);
    }
    return out;
}

}  // namespace tautpoly
