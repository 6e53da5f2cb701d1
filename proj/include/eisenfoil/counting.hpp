#ifndef EISENFOIL_COUNTING_HPP
#define EISENFOIL_COUNTING_HPP

#include <cstdint>
#include <ostream>
#include <vector>

#include "eisenfoil/pencil.hpp"

namespace eisenfoil {

struct CountReport {
    std::uint64_t n = 0;
    std::uint64_t count = 0;
    std::vector<DegreeRecord> parameters;
    double ratio = 0.0;  // count / n^2
    double elapsed_seconds = 0.0;
};

/// All pencil parameters whose first integral has degree <= n under the
/// chosen variant.  Enumerates canonical coprime pairs (alpha1, beta1)
/// with norm(alpha1) + norm(beta1) <= n (every term of the degree is
/// nonnegative, so this prunes nothing valid).  Output order is
/// (degree, norm(beta1), norm(alpha1), formatted alpha), identical for
/// the parallel and serial paths.
CountReport enumerate_parameters(std::uint64_t n, DegreeVariant variant, bool parallel = true);

/// CSV emission: header "t,alpha,a,b,c,d,d_paper,d_corrected", LF endings.
void write_csv(const CountReport& report, std::ostream& out);

/// Degree of the first integral x^q / y^p of the reference pencil
/// alpha x dy - y dx at alpha = p/q: max{p,q} for p >= 0, |p|+q below.
std::int64_t ref_degree(std::int64_t p, std::int64_t q);

/// Ground-truth count of reference-pencil parameters of degree <= n
/// (coprime pairs plus the infinity parameter), by direct scan.
std::uint64_t ref_count(std::uint64_t n);

/// Same count by Stern-Brocot traversal of the coprime pairs; an
/// independent oracle for ref_count.
std::uint64_t ref_count_stern_brocot(std::uint64_t n);

/// 2 + 3 * sum_{j<=n} phi(j), the closed-form candidate for ref_count.
std::uint64_t totient_formula(std::uint64_t n);

std::uint64_t totient_sum(std::uint64_t n);

struct GrowthRow {
    std::uint64_t n;
    std::uint64_t pi;      // enumerated count
    double pi_over_n2;
    std::uint64_t h;       // ideals of norm <= n
    double pi_over_h2;
};

struct GrowthReport {
    std::vector<GrowthRow> rows;
    double zeta2_bound;  // 1 / zeta_K(2, large)
};

/// Log-spaced growth table up to n_max; demonstrates pi(n) = O(n^2).
GrowthReport growth_report(std::uint64_t n_max, DegreeVariant variant = DegreeVariant::Corrected,
                           bool parallel = true);

}  // namespace eisenfoil

#endif
