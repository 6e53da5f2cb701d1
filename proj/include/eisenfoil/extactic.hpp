#ifndef EISENFOIL_EXTACTIC_HPP
#define EISENFOIL_EXTACTIC_HPP

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "eisenfoil/modp.hpp"

namespace eisenfoil {

/// Sparse description of a polynomial vector field A d/dx + B d/dy with
/// exact Q(w) coefficients; reduced per prime by the certifier.
struct VectorFieldSpec {
    using Term = std::tuple<int, int, EisRat>;  // x-exp, y-exp, coeff
    std::vector<Term> A, B;
    int max_degree = 0;  // max total degree of A, B
};

/// Same field with coefficients already reduced into F_p.
struct FpVectorField {
    using Term = std::tuple<int, int, std::uint64_t>;
    std::vector<Term> A, B;
    int max_degree = 0;
};

FpVectorField reduce_field(const VectorFieldSpec& f, const PrimeField& fp);

/// Values of the order-N extactic determinant of the degree-d linear
/// system (N = (d+1)(d+2)/2 monomials, rows are iterated Lie
/// derivatives) at the given points.  `parallel` switches the
/// OpenMP kernel on; the serial path is the reference implementation.
std::vector<std::uint64_t> extactic_determinants(const FpVectorField& f, int d,
                                                 const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pts,
                                                 const PrimeField& fp, bool parallel = true);

enum class Verdict { NoIntegralLeqD, ConsistentWithD };

struct CertifierReport {
    int d = 0;
    Verdict verdict = Verdict::NoIntegralLeqD;
    std::vector<std::uint64_t> primes;
    int points_per_prime = 0;
    std::uint64_t seed = 0;
};

/// Schwartz-Zippel certifier: evaluates the extactic determinant at
/// `points` random points over `nprimes` primes == 1 (mod 3) above 2^31.
/// Any nonzero value soundly rejects a first integral of degree <= d;
/// all-zero is probabilistic acceptance.  Primes dividing a coefficient
/// denominator are skipped and replaced.
CertifierReport certify_degree(const VectorFieldSpec& field, int d, int points, int nprimes,
                               std::uint64_t seed, bool parallel = true);

/// Scans candidate degrees in increasing order and returns the first
/// one the certifier is consistent with (or -1 if none).
int minimal_consistent_degree(const VectorFieldSpec& field, const std::vector<int>& candidates,
                              int points, int nprimes, std::uint64_t seed,
                              std::vector<CertifierReport>* trace = nullptr);

std::string verdict_name(Verdict v);

}  // namespace eisenfoil

#endif
