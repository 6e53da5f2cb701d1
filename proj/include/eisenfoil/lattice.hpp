#ifndef EISENFOIL_LATTICE_HPP
#define EISENFOIL_LATTICE_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "eisenfoil/eisrat.hpp"

namespace eisenfoil {

/// Coprime pair (alpha, beta) for the subtorus E_{alpha,beta}, the image
/// of x -> (alpha x, beta x).  Normalized so the first nonzero entry is
/// a canonical associate.
struct Subtorus {
    EisInt alpha, beta;

    /// Normalizes an arbitrary nonzero pair: divides by the gcd and
    /// rotates by the unit making the first nonzero entry canonical.
    static Subtorus make(EisInt a, EisInt b);
};

/// 2x2 and 4x4 integer matrices with exact determinants.
struct IntMat2 {
    std::array<std::array<BigInt, 2>, 2> m;
    BigInt det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
};

struct IntMat4 {
    std::array<std::array<BigInt, 4>, 4> m;
    BigInt det() const;
};

/// Matrix of multiplication by a+bw on Z^2 in basis (1, w):
/// [[a, -b], [b, a-b]].  det = norm.
IntMat2 mat_of(const EisInt& x);

/// Lattice count of E_{alpha,beta} meeting E_{gamma,delta}: |det| of the
/// 4x4 block matrix [[M_alpha, -M_gamma], [M_beta, -M_delta]].
BigInt intersection_oracle(const Subtorus& a, const Subtorus& b);

/// N(alpha*delta - beta*gamma) / (N(gcd pair a) * N(gcd pair b)).
/// Pairs need not be coprime; the quotient is always integral.
BigInt intersection_number(const EisInt& alpha, const EisInt& beta, const EisInt& gamma,
                           const EisInt& delta);
inline BigInt intersection_number(const Subtorus& a, const Subtorus& b) {
    return intersection_number(a.alpha, a.beta, b.alpha, b.beta);
}

struct NormCount {
    std::uint64_t elements = 0;
    std::uint64_t ideals = 0;
};

/// Number of lattice points of norm exactly k, and ideals of norm k
/// (= elements/6, every ideal being principal with six generators).
NormCount count_norm(std::uint64_t k);

/// counts[k] = number of ideals of norm exactly k, for k in [0, limit].
/// Shell sieve over the whole disc; the OpenMP kernel and the serial
/// reference must agree entry for entry.
std::vector<std::uint32_t> ideal_counts_upto(std::uint64_t limit, bool parallel = true);

/// H(n) = number of ideals of norm <= n.
std::uint64_t ideal_count_cumulative(std::uint64_t n, bool parallel = true);

/// Partial sum of the Dedekind zeta series: sum_{k<=terms} ideals(k)/k^s.
double zeta_partial(double s, std::uint64_t terms, bool parallel = true);

/// Independent reference for zeta_K(2): zeta(2) * L(2, chi_{-3}), both
/// factors by their own series (with tail correction for zeta).
double zeta2_reference();

/// Lattice density constant pi / (3 sqrt 3), the limit of H(n)/n.
double ideal_density();

}  // namespace eisenfoil

#endif
