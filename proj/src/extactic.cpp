#include "eisenfoil/extactic.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace eisenfoil {

namespace {

/// Dense bivariate polynomial over F_p; coeff of x^i y^j at [i*ny + j].
/// dx, dy track the current degree box so Lie steps only touch live
/// entries.
struct Dense2 {
    int nx = 0, ny = 0;
    int dx = -1, dy = -1;
    std::vector<std::uint64_t> c;

    Dense2(int nx_, int ny_) : nx(nx_), ny(ny_), c(std::size_t(nx_) * ny_, 0) {}
    std::uint64_t& at(int i, int j) { return c[std::size_t(i) * ny + j]; }
    std::uint64_t at(int i, int j) const { return c[std::size_t(i) * ny + j]; }
};

/// Q = A * dP/dx + B * dP/dy, written into `out` (cleared first).
void lie_step(const FpVectorField& f, const PrimeField& fp, const Dense2& p, Dense2& out) {
    const int hx = std::min(p.dx + f.max_degree, out.nx - 1);
    const int hy = std::min(p.dy + f.max_degree, out.ny - 1);
    for (int i = 0; i <= std::max(out.dx, hx); ++i)
        std::fill_n(&out.c[std::size_t(i) * out.ny], std::max(out.dy, hy) + 1, 0);
    out.dx = out.dy = -1;
    auto accumulate = [&](const std::vector<FpVectorField::Term>& terms, bool wrt_x) {
        for (const auto& [ti, tj, tc] : terms) {
            for (int i = wrt_x ? 1 : 0; i <= p.dx; ++i) {
                for (int j = wrt_x ? 0 : 1; j <= p.dy; ++j) {
                    std::uint64_t v = p.at(i, j);
                    if (v == 0) continue;
                    std::uint64_t mult = fp.mul(tc, (wrt_x ? i : j) % fp.p());
                    if (mult == 0) continue;
                    int oi = i + ti - (wrt_x ? 1 : 0);
                    int oj = j + tj - (wrt_x ? 0 : 1);
                    std::uint64_t& slot = out.at(oi, oj);
                    slot = fp.add(slot, fp.mul(mult, v));
                    if (slot != 0) {
                        out.dx = std::max(out.dx, oi);
                        out.dy = std::max(out.dy, oj);
                    }
                }
            }
        }
    };
    accumulate(f.A, true);
    accumulate(f.B, false);
}

std::uint64_t eval(const Dense2& p, std::uint64_t x, std::uint64_t y, const PrimeField& fp) {
    std::uint64_t r = 0;
    for (int i = p.dx; i >= 0; --i) {
        std::uint64_t row = 0;
        for (int j = p.dy; j >= 0; --j) row = fp.add(fp.mul(row, y), p.at(i, j));
        r = fp.add(fp.mul(r, x), row);
    }
    return r;
}

std::uint64_t det_mod_p(std::vector<std::uint64_t>& m, int n, const PrimeField& fp) {
    std::uint64_t det = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m[std::size_t(r) * n + col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != col) {
            for (int j = col; j < n; ++j)
                std::swap(m[std::size_t(piv) * n + j], m[std::size_t(col) * n + j]);
            det = fp.neg(det);
        }
        std::uint64_t pv = m[std::size_t(col) * n + col];
        det = fp.mul(det, pv);
        std::uint64_t pinv = fp.inv(pv);
        for (int r = col + 1; r < n; ++r) {
            std::uint64_t factor = fp.mul(m[std::size_t(r) * n + col], pinv);
            if (factor == 0) continue;
            for (int j = col; j < n; ++j) {
                std::uint64_t& slot = m[std::size_t(r) * n + j];
                slot = fp.sub(slot, fp.mul(factor, m[std::size_t(col) * n + j]));
            }
        }
    }
    return det;
}

}  // namespace

FpVectorField reduce_field(const VectorFieldSpec& f, const PrimeField& fp) {
    FpVectorField out;
    out.max_degree = f.max_degree;
    auto conv = [&](const std::vector<VectorFieldSpec::Term>& in,
                    std::vector<FpVectorField::Term>& dst) {
        for (const auto& [i, j, c] : in) {
            std::uint64_t v = fp.reduce(c);
            if (v != 0) dst.emplace_back(i, j, v);
        }
    };
    conv(f.A, out.A);
    conv(f.B, out.B);
    return out;
}

std::vector<std::uint64_t> extactic_determinants(
    const FpVectorField& f, int d,
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pts, const PrimeField& fp,
    bool parallel) {
    if (d < 1) throw std::invalid_argument("extactic: degree must be positive");
    const int n = (d + 1) * (d + 2) / 2;
    const int npts = int(pts.size());
    // Monomials x^a y^b with a + b <= d, in a fixed order.
    std::vector<std::pair<int, int>> mono;
    mono.reserve(n);
    for (int a = 0; a <= d; ++a)
        for (int b = 0; a + b <= d; ++b) mono.emplace_back(a, b);
    const int growth = std::max(0, f.max_degree - 1);
    const int dims = d + growth * (n - 1) + 1;

    // vals[(k * n + col) * npts + pt] = (X^k applied to monomial col)(pt)
    std::vector<std::uint64_t> vals(std::size_t(n) * n * npts, 0);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (int col = 0; col < n; ++col) {
        Dense2 cur(dims, dims), next(dims, dims);
        cur.at(mono[col].first, mono[col].second) = 1;
        cur.dx = mono[col].first;
        cur.dy = mono[col].second;
        next.dx = next.dy = dims - 1;  // force a full clear on first use
        for (int k = 0; k < n; ++k) {
            for (int pt = 0; pt < npts; ++pt)
                vals[(std::size_t(k) * n + col) * npts + pt] =
                    eval(cur, pts[pt].first, pts[pt].second, fp);
            if (k + 1 < n) {
                lie_step(f, fp, cur, next);
                std::swap(cur, next);
            }
        }
    }

    std::vector<std::uint64_t> dets(npts, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (int pt = 0; pt < npts; ++pt) {
        std::vector<std::uint64_t> m(std::size_t(n) * n);
        for (int k = 0; k < n; ++k)
            for (int col = 0; col < n; ++col)
                m[std::size_t(k) * n + col] = vals[(std::size_t(k) * n + col) * npts + pt];
        dets[pt] = det_mod_p(m, n, fp);
    }
    return dets;
}

CertifierReport certify_degree(const VectorFieldSpec& field, int d, int points, int nprimes,
                               std::uint64_t seed, bool parallel) {
    CertifierReport rep;
    rep.d = d;
    rep.points_per_prime = points;
    rep.seed = seed;
    rep.verdict = Verdict::ConsistentWithD;
    std::mt19937_64 rng(seed);
    // Over-provision the prime pool; denominator collisions skip a prime.
    std::vector<std::uint64_t> pool = certifier_primes(nprimes + 8);
    std::size_t next = 0;
    while (int(rep.primes.size()) < nprimes && next < pool.size()) {
        std::uint64_t p = pool[next++];
        PrimeField fp(p);
        FpVectorField f;
        try {
            f = reduce_field(field, fp);
        } catch (const PrimeField::BadPrime&) {
            continue;
        }
        rep.primes.push_back(p);
        std::uniform_int_distribution<std::uint64_t> dist(1, p - 1);
        std::vector<std::pair<std::uint64_t, std::uint64_t>> pts;
        pts.reserve(points);
        for (int i = 0; i < points; ++i) pts.emplace_back(dist(rng), dist(rng));
        auto dets = extactic_determinants(f, d, pts, fp, parallel);
        for (std::uint64_t v : dets)
            if (v != 0) rep.verdict = Verdict::NoIntegralLeqD;
    }
    if (int(rep.primes.size()) < nprimes)
        throw std::runtime_error("extactic: ran out of usable certifier primes");
    return rep;
}

int minimal_consistent_degree(const VectorFieldSpec& field, const std::vector<int>& candidates,
                              int points, int nprimes, std::uint64_t seed,
                              std::vector<CertifierReport>* trace) {
    std::vector<int> degs = candidates;
    std::sort(degs.begin(), degs.end());
    for (int d : degs) {
        CertifierReport rep = certify_degree(field, d, points, nprimes, seed + std::uint64_t(d));
        if (trace) trace->push_back(rep);
        if (rep.verdict == Verdict::ConsistentWithD) return d;
    }
    return -1;
}

std::string verdict_name(Verdict v) {
    return v == Verdict::NoIntegralLeqD ? "NO_INTEGRAL_LEQ_D" : "CONSISTENT_WITH_D";
}

}  // namespace eisenfoil
