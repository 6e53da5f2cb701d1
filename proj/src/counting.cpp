#include "eisenfoil/counting.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace eisenfoil {

namespace {

using I64 = std::int64_t;

I64 norm64(I64 a, I64 b) { return a * a + b * b - a * b; }

// machine-word degree of the coprime pair alpha1 = (a,b), beta1 = (c,d)
I64 degree64(I64 a, I64 b, I64 c, I64 d, DegreeVariant v) {
    I64 last;
    if (v == DegreeVariant::Paper)
        last = norm64(c - b, d + a - b);  // beta1 + w*alpha1, w*(a+bw) = -b + (a-b)w
    else
        last = norm64(a - d, b + c - d);  // alpha1 + w*beta1
    return norm64(c, d) + norm64(a, b) + norm64(c - a, d - b) + last;
}

struct Hit {
    I64 deg, nb, na;
    I64 a, b, c, d;
};

bool hit_less(const Hit& x, const Hit& y) {
    return std::tie(x.deg, x.nb, x.na, x.a, x.b, x.c, x.d) <
           std::tie(y.deg, y.nb, y.na, y.a, y.b, y.c, y.d);
}

std::vector<std::pair<I64, I64>> canonical_betas(I64 nmax) {
    std::vector<std::pair<I64, I64>> betas;
    for (I64 c = 1; norm64(c, 0) <= nmax; ++c)
        for (I64 d = 0; d < c; ++d)
            if (norm64(c, d) <= nmax) betas.emplace_back(c, d);
    return betas;
}

void scan_beta(I64 c, I64 d, I64 n, DegreeVariant v, std::vector<Hit>& out) {
    I64 rem = n - norm64(c, d);
    auto bound = (I64)(2.0 * std::sqrt((double)rem / 3.0)) + 1;
    for (I64 a = -bound; a <= bound; ++a)
        for (I64 b = -bound; b <= bound; ++b) {
            if (norm64(a, b) > rem) continue;
            I64 deg = degree64(a, b, c, d, v);
            if (deg > n) continue;
            if (a == 0 && b == 0) {
                if (norm64(c, d) != 1) continue;  // alpha = 0 only as 0/1
            } else if (!coprime(EisInt64{a, b}, EisInt64{c, d})) {
                continue;
            }
            out.push_back({deg, norm64(c, d), norm64(a, b), a, b, c, d});
        }
}

}  // namespace

CountReport enumerate_parameters(std::uint64_t n, DegreeVariant variant, bool parallel) {
    if (n == 0) throw std::domain_error("counting: degree bound must be positive");
    auto t0 = std::chrono::steady_clock::now();
    I64 nn = (I64)n;
    auto betas = canonical_betas(nn);
    std::vector<Hit> hits;
#ifndef _OPENMP
    parallel = false;
#endif
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel
        {
            std::vector<Hit> local;
#pragma omp for schedule(dynamic, 8)
            for (std::size_t i = 0; i < betas.size(); ++i)
                scan_beta(betas[i].first, betas[i].second, nn, variant, local);
#pragma omp critical
            hits.insert(hits.end(), local.begin(), local.end());
        }
#endif
    } else {
        for (const auto& [c, d] : betas) scan_beta(c, d, nn, variant, hits);
    }
    // the infinity parameter, pair (1, 0) with beta1 = 0
    {
        I64 deg = degree64(1, 0, 0, 0, variant);
        if (deg <= nn) hits.push_back({deg, 0, 1, 1, 0, 0, 0});
    }
    std::sort(hits.begin(), hits.end(), hit_less);

    CountReport report;
    report.n = n;
    report.parameters.reserve(hits.size());
    for (const Hit& h : hits) {
        ExtEisRat alpha = h.c == 0 && h.d == 0
                              ? ExtEisRat::infinity()
                              : ExtEisRat(EisRat(EisInt{BigInt(h.a), BigInt(h.b)},
                                                 EisInt{BigInt(h.c), BigInt(h.d)}));
        report.parameters.push_back(DegreeRecord::make(PencilParam::from_alpha(alpha)));
    }
    report.count = report.parameters.size();
    report.ratio = (double)report.count / ((double)n * (double)n);
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

void write_csv(const CountReport& report, std::ostream& out) {
    out << "t,alpha,a,b,c,d,d_paper,d_corrected\n";
    for (const auto& rec : report.parameters) {
        out << format_eisrat(rec.param.t) << ',' << format_eisrat(rec.param.alpha) << ','
            << rec.qa.str() << ',' << rec.qb.str() << ',' << rec.qc.str() << ',' << rec.qd.str()
            << ',' << rec.d_paper.str() << ',' << rec.d_corrected.str() << '\n';
    }
}

std::int64_t ref_degree(std::int64_t p, std::int64_t q) {
    if (q < 1) throw std::domain_error("counting: q must be positive");
    if (std::gcd(p < 0 ? -p : p, q) != 1) throw std::domain_error("counting: pair not coprime");
    return p >= 0 ? std::max(p, q) : -p + q;
}

std::uint64_t ref_count(std::uint64_t n) {
    I64 nn = (I64)n;
    std::uint64_t count = nn >= 1 ? 1 : 0;  // the infinity parameter, integral x
    for (I64 q = 1; q <= nn; ++q)
        for (I64 p = -nn; p <= nn; ++p) {
            if (std::gcd(p < 0 ? -p : p, q) != 1) continue;
            I64 d = p >= 0 ? std::max(p, q) : -p + q;
            if (d <= nn) ++count;
        }
    return count;
}

std::uint64_t ref_count_stern_brocot(std::uint64_t n) {
    I64 nn = (I64)n;
    if (nn < 1) return 0;
    // positive coprime pairs form the Stern-Brocot tree rooted at (1,1)
    // with children (p+q, q) and (p, p+q)
    auto count_tree = [&](auto pred) {
        std::uint64_t total = 0;
        std::vector<std::pair<I64, I64>> stack{{1, 1}};
        while (!stack.empty()) {
            auto [p, q] = stack.back();
            stack.pop_back();
            if (!pred(p, q)) continue;
            ++total;
            stack.emplace_back(p + q, q);
            stack.emplace_back(p, p + q);
        }
        return total;
    };
    std::uint64_t pos = count_tree([&](I64 p, I64 q) { return std::max(p, q) <= nn; });
    std::uint64_t neg = count_tree([&](I64 p, I64 q) { return p + q <= nn; });
    // pos covers p >= 1; neg covers p < 0 via |p| >= 1; p = 0 contributes
    // the single pair (0, 1); plus infinity
    return pos + neg + 1 + 1;
}

std::uint64_t totient_sum(std::uint64_t n) {
    std::vector<std::uint32_t> phi(n + 1);
    std::iota(phi.begin(), phi.end(), 0);
    for (std::uint64_t i = 2; i <= n; ++i)
        if (phi[i] == i)  // i prime
            for (std::uint64_t j = i; j <= n; j += i) phi[j] -= phi[j] / i;
    std::uint64_t s = 0;
    for (std::uint64_t i = 1; i <= n; ++i) s += phi[i];
    return s;
}

std::uint64_t totient_formula(std::uint64_t n) { return 2 + 3 * totient_sum(n); }

GrowthReport growth_report(std::uint64_t n_max, DegreeVariant variant, bool parallel) {
    if (n_max < 10) throw std::domain_error("counting: growth grid needs n_max >= 10");
    std::vector<std::uint64_t> grid;
    for (std::uint64_t n = 10; n < n_max; n *= 2) grid.push_back(n);
    grid.push_back(n_max);
    // one enumeration at n_max; prefix counts give every smaller n
    CountReport full = enumerate_parameters(n_max, variant, parallel);
    std::vector<std::uint64_t> degrees;
    degrees.reserve(full.parameters.size());
    for (const auto& rec : full.parameters)
        degrees.push_back((variant == DegreeVariant::Paper ? rec.d_paper : rec.d_corrected)
                              .convert_to<std::uint64_t>());
    std::sort(degrees.begin(), degrees.end());
    auto ideal_counts = ideal_counts_upto(n_max, parallel);
    std::vector<std::uint64_t> hcum(n_max + 1, 0);
    for (std::uint64_t k = 1; k <= n_max; ++k) hcum[k] = hcum[k - 1] + ideal_counts[k];

    GrowthReport report;
    report.zeta2_bound = 1.0 / zeta_partial(2.0, 100000, parallel);
    for (std::uint64_t n : grid) {
        GrowthRow row;
        row.n = n;
        row.pi = (std::uint64_t)(std::upper_bound(degrees.begin(), degrees.end(), n) -
                                 degrees.begin());
        row.pi_over_n2 = (double)row.pi / ((double)n * n);
        row.h = hcum[n];
        row.pi_over_h2 = row.h ? (double)row.pi / ((double)row.h * row.h) : 0.0;
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace eisenfoil
