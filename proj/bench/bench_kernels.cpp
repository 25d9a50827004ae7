// Serial reference kernels against their OpenMP versions.
//
//   bench_kernels [threads]
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <omp.h>

#include "sdcodes/codes.hpp"
#include "sdcodes/kernels.hpp"
#include "sdcodes/weights.hpp"

using namespace sdc;

namespace {

const char* kC112A = "1000010101101101111011011010";
const char* kC112B = "0010001110000110001010000001";

template <class F>
double seconds(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void row(const std::string& name, double serial, double parallel, bool same) {
    std::cout << std::left << std::setw(34) << name << std::right << std::fixed << std::setprecision(3)
              << std::setw(10) << serial << std::setw(10) << parallel << std::setw(9) << std::setprecision(2)
              << serial / parallel << "x" << std::setw(6) << (same ? "yes" : "NO") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) kernels::set_thread_limit(std::atoi(argv[1]));
    const int threads = kernels::thread_limit() > 0 ? kernels::thread_limit() : omp_get_max_threads();
    std::cout << "threads " << threads << "\n";
    std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(10) << "serial" << std::setw(10)
              << "parallel" << std::setw(10) << "speedup" << std::setw(6) << "same" << "\n";

    const Code c112 = four_circulant({BitWord::from_string(kC112A), BitWord::from_string(kC112B)});
    const auto sets = information_sets(c112);
    const auto& rows = sets.front().rows;

    {
        // Gray-code histogram over the first 24 rows of C_112.
        BitMatrix g(0, c112.n());
        for (std::size_t i = 0; i < 24; ++i) g.append_row(c112.generator().row(i));
        const kernels::PackedRows sub(g);
        const std::vector<std::uint64_t> zero(sub.stride(), 0);
        kernels::Histogram hs, hp;
        const double s = seconds([&] { hs = kernels::gray_histogram_serial(sub, zero); });
        const double p = seconds([&] { hp = kernels::gray_histogram_parallel(sub, zero); });
        row("gray histogram k=24 n=112", s, p, hs == hp);
    }
    for (std::size_t r : {5, 6}) {
        kernels::LevelScan ls, lp;
        const double s = seconds([&] { ls = kernels::scan_level_serial(rows, r); });
        const double p = seconds([&] { lp = kernels::scan_level_parallel(rows, r); });
        row("level scan r=" + std::to_string(r) + " k=56", s, p,
            ls.best_weight == lp.best_weight && ls.best_combo == lp.best_combo);
    }
    {
        std::vector<std::uint64_t> cs, cp;
        const double s = seconds([&] { cs = kernels::collect_level_serial(rows, 5, 18); });
        const double p = seconds([&] { cp = kernels::collect_level_parallel(rows, 5, 18); });
        row("collect r=5 w=18 k=56", s, p, cs == cp);
    }
    {
        MinWeightOptions serial, parallel;
        serial.parallel = false;
        serial.certify_at = parallel.certify_at = 16;
        MinWeightCertificate a, b;
        const double s = seconds([&] { a = min_weight(c112, serial); });
        const double p = seconds([&] { b = min_weight(c112, parallel); });
        row("min weight C_112 to d >= 16", s, p, a.value == b.value && a.visited == b.visited);
    }
    {
        LowWeightOptions serial, parallel;
        serial.parallel = false;
        serial.iterations = parallel.iterations = 3000;
        serial.seed = parallel.seed = 3;
        std::optional<BitWord> a, b;
        const double s = seconds([&] { a = find_low_weight(c112, 17, serial); });
        const double p = seconds([&] { b = find_low_weight(c112, 17, parallel); });
        row("low-weight search C_112 3000 its", s, p, a == b);
    }
    return 0;
}
