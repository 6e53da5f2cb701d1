#include "eisenfoil/lattice.hpp"

#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace eisenfoil {

Subtorus Subtorus::make(EisInt a, EisInt b) {
    if (a.is_zero() && b.is_zero())
        throw std::domain_error("lattice: subtorus pair must be nonzero");
    EisInt g = gcd(a, b);
    a = divide_exact(a, g);
    b = divide_exact(b, g);
    const EisInt& lead = a.is_zero() ? b : a;
    EisInt u = canonical_associate(lead).second;
    return {u * a, u * b};
}

BigInt IntMat4::det() const {
    // cofactor expansion along the first row
    auto minor3 = [&](int skip_col) {
        std::array<int, 3> cols;
        int c = 0;
        for (int j = 0; j < 4; ++j)
            if (j != skip_col) cols[c++] = j;
        const auto& a = m;
        return a[1][cols[0]] * (a[2][cols[1]] * a[3][cols[2]] - a[2][cols[2]] * a[3][cols[1]]) -
               a[1][cols[1]] * (a[2][cols[0]] * a[3][cols[2]] - a[2][cols[2]] * a[3][cols[0]]) +
               a[1][cols[2]] * (a[2][cols[0]] * a[3][cols[1]] - a[2][cols[1]] * a[3][cols[0]]);
    };
    BigInt d = 0;
    for (int j = 0; j < 4; ++j) {
        BigInt term = m[0][j] * minor3(j);
        d += (j % 2 == 0) ? term : -term;
    }
    return d;
}

IntMat2 mat_of(const EisInt& x) {
    return {{{{x.a, -x.b}, {x.b, x.a - x.b}}}};
}

BigInt intersection_oracle(const Subtorus& a, const Subtorus& b) {
    IntMat2 ma = mat_of(a.alpha), mg = mat_of(b.alpha);
    IntMat2 mb = mat_of(a.beta), md = mat_of(b.beta);
    IntMat4 block;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            block.m[i][j] = ma.m[i][j];
            block.m[i][j + 2] = -mg.m[i][j];
            block.m[i + 2][j] = mb.m[i][j];
            block.m[i + 2][j + 2] = -md.m[i][j];
        }
    BigInt d = block.det();
    return d < 0 ? BigInt(-d) : d;
}

BigInt intersection_number(const EisInt& alpha, const EisInt& beta, const EisInt& gamma,
                           const EisInt& delta) {
    if ((alpha.is_zero() && beta.is_zero()) || (gamma.is_zero() && delta.is_zero()))
        throw std::domain_error("lattice: intersection of a zero pair");
    EisInt g1 = gcd(alpha, beta), g2 = gcd(gamma, delta);
    EisInt a = divide_exact(alpha, g1), b = divide_exact(beta, g1);
    EisInt c = divide_exact(gamma, g2), d = divide_exact(delta, g2);
    return norm(a * d - b * c);
}

NormCount count_norm(std::uint64_t k) {
    if (k == 0) throw std::domain_error("lattice: norm 0 is the zero ideal");
    auto bound = (std::int64_t)std::ceil(2.0 * std::sqrt((double)k / 3.0)) + 1;
    std::uint64_t elements = 0;
    for (std::int64_t a = -bound; a <= bound; ++a)
        for (std::int64_t b = -bound; b <= bound; ++b)
            if ((std::uint64_t)(a * a + b * b - a * b) == k) ++elements;
    return {elements, elements / 6};
}

std::vector<std::uint32_t> ideal_counts_upto(std::uint64_t limit, bool parallel) {
    std::vector<std::uint32_t> elems(limit + 1, 0);
    auto bound = (std::int64_t)std::ceil(2.0 * std::sqrt((double)limit / 3.0)) + 1;
#ifndef _OPENMP
    parallel = false;
#endif
    if (parallel) {
#ifdef _OPENMP
        // rows a = const are disjoint; each thread fills a private
        // accumulator over its row range
#pragma omp parallel
        {
            std::vector<std::uint32_t> local(limit + 1, 0);
#pragma omp for schedule(static)
            for (std::int64_t a = -bound; a <= bound; ++a)
                for (std::int64_t b = -bound; b <= bound; ++b) {
                    std::int64_t n = a * a + b * b - a * b;
                    if (n >= 1 && (std::uint64_t)n <= limit) ++local[(std::size_t)n];
                }
#pragma omp critical
            for (std::size_t k = 1; k <= limit; ++k) elems[k] += local[k];
        }
#endif
    } else {
        for (std::int64_t a = -bound; a <= bound; ++a)
            for (std::int64_t b = -bound; b <= bound; ++b) {
                std::int64_t n = a * a + b * b - a * b;
                if (n >= 1 && (std::uint64_t)n <= limit) ++elems[(std::size_t)n];
            }
    }
    for (auto& e : elems) e /= 6;
    return elems;
}

std::uint64_t ideal_count_cumulative(std::uint64_t n, bool parallel) {
    auto counts = ideal_counts_upto(n, parallel);
    std::uint64_t h = 0;
    for (std::uint64_t k = 1; k <= n; ++k) h += counts[(std::size_t)k];
    return h;
}

double zeta_partial(double s, std::uint64_t terms, bool parallel) {
    if (terms < 1) throw std::domain_error("lattice: zeta needs at least one term");
    auto counts = ideal_counts_upto(terms, parallel);
    double acc = 0.0;
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : acc) if (parallel)
#endif
    for (std::int64_t k = 1; k <= (std::int64_t)terms; ++k)
        if (counts[(std::size_t)k]) acc += counts[(std::size_t)k] / std::pow((double)k, s);
    return acc;
}

double zeta2_reference() {
    // zeta(2) by direct series with the Euler-Maclaurin tail 1/N - 1/(2N^2).
    const std::int64_t n = 200000;
    double z2 = 0.0;
    for (std::int64_t k = n; k >= 1; --k) z2 += 1.0 / ((double)k * k);
    z2 += 1.0 / n - 1.0 / (2.0 * (double)n * n);
    // L(2, chi_{-3}) = sum 1/(3m+1)^2 - 1/(3m+2)^2, tail O(1/M^2).
    double l2 = 0.0;
    for (std::int64_t m = 2000000; m >= 0; --m) {
        double a = 3.0 * m + 1, b = 3.0 * m + 2;
        l2 += 1.0 / (a * a) - 1.0 / (b * b);
    }
    return z2 * l2;
}

double ideal_density() {
    const double pi = 3.14159265358979323846;
    return pi / (3.0 * std::sqrt(3.0));
}

}  // namespace eisenfoil
