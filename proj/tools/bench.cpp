#include <chrono>
#include <cstdio>
#include <random>

#include "eisenfoil/counting.hpp"
#include "eisenfoil/foliation.hpp"

using namespace eisenfoil;

namespace {

template <class F>
double timed(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-28s serial %8.3fs  parallel %8.3fs  speedup %5.2fx\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
    {
        const std::uint64_t limit = 200000;
        std::vector<std::uint32_t> a, b;
        double ts = timed([&] { a = ideal_counts_upto(limit, false); });
        double tp = timed([&] { b = ideal_counts_upto(limit, true); });
        if (a != b) {
            std::fprintf(stderr, "ideal sieve mismatch\n");
            return 1;
        }
        report("ideal sieve (2e5)", ts, tp);
    }
    {
        CountReport a, b;
        double ts = timed([&] { a = enumerate_parameters(800, DegreeVariant::Corrected, false); });
        double tp = timed([&] { b = enumerate_parameters(800, DegreeVariant::Corrected, true); });
        if (a.count != b.count) {
            std::fprintf(stderr, "enumeration mismatch\n");
            return 1;
        }
        report("parameter enumeration (800)", ts, tp);
    }
    {
        Foliation f = Foliation::make(ExtEisRat(EisRat(EisInt{BigInt(2), BigInt(-1)})));
        PrimeField fp(certifier_primes(1)[0]);
        FpVectorField ff = reduce_field(f.field_spec(), fp);
        std::mt19937_64 rng(7);
        std::vector<std::pair<std::uint64_t, std::uint64_t>> pts;
        for (int i = 0; i < 8; ++i) pts.push_back({rng() % fp.p(), rng() % fp.p()});
        std::vector<std::uint64_t> a, b;
        double ts = timed([&] { a = extactic_determinants(ff, 6, pts, fp, false); });
        double tp = timed([&] { b = extactic_determinants(ff, 6, pts, fp, true); });
        if (a != b) {
            std::fprintf(stderr, "extactic mismatch\n");
            return 1;
        }
        report("extactic determinant (d=6)", ts, tp);
    }
    return 0;
}
