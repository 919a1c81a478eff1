// Compares the serial and OpenMP paths of the heavy kernels on census
// entries: the maximal-minor batch behind the taut polynomial, the veering
// determinant, and a whole-file scan.

#include "tautpoly/census.hpp"

#include <omp.h>

#include <iomanip>
#include <iostream>

using namespace tautpoly;

namespace {

const std::vector<std::string> kEntries = {
    "cPcbbbiht_12",
    "gvLQQcdeffeffffaafa_201102",
    "hLMzMkbcdefggghhhqxqkc_1221002",
    "iLLLAQccdffgfhhhqgdatgqdm_21012210",
    "ivvPQQcfghghfhgfaddddaaaa_20000222",
    "lLLLAPAMcbcfeggihijkktshhxfpikaqj_20102220020",
};

template <typename F>
double time_best_of(int reps, F&& f) {
    double best = 1e100;
    for (int i = 0; i < reps; ++i) {
        double t0 = omp_get_wtime();
        f();
        best = std::min(best, omp_get_wtime() - t0);
    }
    return best;
}

void row(const std::string& name, double serial, double parallel) {
    std::cout << std::left << std::setw(44) << name << std::right << std::fixed
              << std::setprecision(1) << std::setw(10) << serial * 1e3 << " ms" << std::setw(10)
              << parallel * 1e3 << " ms" << std::setw(9) << std::setprecision(2)
              << serial / parallel << "x\n";
}

}  // namespace

int main(int argc, char** argv) {
    int threads = argc > 1 ? std::atoi(argv[1]) : omp_get_max_threads();
    std::cout << "threads for the parallel path: " << threads << "\n\n";
    std::cout << std::left << std::setw(44) << "kernel" << std::right << std::setw(13) << "serial"
              << std::setw(13) << "parallel" << std::setw(10) << "speedup\n";

    for (const auto& entry : kEntries) {
        VeeringTriangulation vt = load_veering(entry);
        FaceLaurents fl = triangulation_cover(vt, {});
        LaurentMatrix D = taut_matrix(vt, fl);
        std::vector<bool> in_tree(vt.num_faces, false);
        for (int f : fl.tree) in_tree[f] = true;
        std::vector<int> nontree;
        for (int f = 0; f < vt.num_faces; ++f)
            if (!in_tree[f]) nontree.push_back(f);
        LaurentMatrix DY = D.select_columns(nontree);

        LaurentPoly a, b;
        double ts = time_best_of(3, [&] { a = maximal_minors_gcd_serial(DY); });
        set_threads(threads);
        double tp = time_best_of(3, [&] { b = maximal_minors_gcd(DY); });
        set_threads(1);
        if (!(a == b)) {
            std::cerr << "mismatch between serial and parallel results on " << entry << "\n";
            return 1;
        }
        row("minors gcd  " + entry.substr(0, 24), ts, tp);
    }

    {
        std::vector<std::string> file;
        for (int i = 0; i < 2; ++i) file.insert(file.end(), kEntries.begin(), kEntries.end());
        set_threads(1);
        std::vector<ScanRow> r1;
        double ts = time_best_of(1, [&] { r1 = census_scan(file); });
        set_threads(threads);
        std::vector<ScanRow> r2;
        double tp = time_best_of(1, [&] { r2 = census_scan(file); });
        for (size_t i = 0; i < r1.size(); ++i)
            if (to_csv_row(r1[i]) != to_csv_row(r2[i])) {
                std::cerr << "scan rows differ between thread counts\n";
                return 1;
            }
        row("census scan (12 entries)", ts, tp);
    }
    return 0;
}
