#ifndef EISENFOIL_FOLIATION_HPP
#define EISENFOIL_FOLIATION_HPP

#include <string>
#include <vector>

#include "eisenfoil/extactic.hpp"
#include "eisenfoil/pencil.hpp"
#include "eisenfoil/poly.hpp"

namespace eisenfoil {

/// Member of the degree-4 pencil as the dual vector field
/// X_t = A d/dx + B d/dy with A = (x^3-1)(x - t y^2) and
/// B = (y^3-1)(y - t x^2); at t = infinity A = (x^3-1)y^2,
/// B = (y^3-1)x^2.  The defining 1-form is checked to annihilate
/// the field at construction.
class Foliation {
  public:
    static Foliation make(const ExtEisRat& t);

    const ExtEisRat& t() const { return t_; }
    const Poly& a() const { return a_; }
    const Poly& b() const { return b_; }
    bool degenerate() const { return degenerate_; }

    /// Lie derivative A f_x + B f_y.
    Poly lie(const Poly& f) const;

    /// Sparse field description for the modular certifier.
    VectorFieldSpec field_spec() const;

  private:
    ExtEisRat t_;
    Poly a_, b_;
    bool degenerate_ = false;
};

/// Affine line xc*x + yc*y + cc = 0.
struct Line {
    EisRat xc, yc, cc;
    std::string name;
    Poly poly() const;
};

/// Singular point with its exact linearization data.  Points at
/// infinity carry chart coordinates (u, v) for x = 1/u, y = v/u (or the
/// y-chart, per `chart`).
struct SingularPoint {
    EisRat x, y;
    std::string chart;  // "affine", "x-infinity", "y-infinity"
    EisRat j11, j12, j21, j22;
    bool is_singular = false;
    bool radial = false;          // Jacobian a nonzero scalar multiple of I
    bool ratio_minus3 = false;    // 3 tr^2 + 4 det = 0 with tr != 0
};

struct SingularityReport {
    std::vector<SingularPoint> config;  // the 12 configuration points
    std::vector<SingularPoint> extra;   // the 9 points off the configuration
    bool degenerate_parameter = false;  // extra points suppressed
};

/// The nine invariant lines and the incidence structure they span with
/// the twelve configuration points.
class Configuration {
  public:
    Configuration();
    const std::vector<Line>& lines() const { return lines_; }

    /// Torus-side fixed points 0, 2/3 + w/3, 1/3 + 2w/3.
    static std::vector<EisRat> torus_fixed_points();

    /// Total line/point incidence count; 36 when each line carries 4
    /// points and each point lies on 3 lines.
    int incidence_count() const;
    bool incidences_ok() const;

  private:
    std::vector<Line> lines_;
};

/// Per-line invariance verdicts: X_t(l) divisible by l exactly.
std::vector<bool> check_line_invariance(const Foliation& f);

/// The 12 configuration points (with chart swaps at infinity) plus the
/// 9 extra singular points in closed form on the lines.
SingularityReport singular_points(const Foliation& f);

struct IntegralCertificate {
    bool found = false;
    int i = -1, j = -1;
    std::string name_i, name_j;
    Poly ci, cj;
    Poly bracket;  // X(ci) cj - ci X(cj); zero on success
};

/// Searches the invariant cubics (the three coordinate cubics plus the
/// nine line-triangles) for a pair with equal cofactors, certifying a
/// degree-3 rational first integral ci/cj.
IntegralCertificate degenerate_first_integral(const Foliation& f);

/// Names and polynomials of the candidate cubics used above.
std::vector<std::pair<std::string, Poly>> invariant_cubic_candidates();

/// Extactic certifier on a pencil member: verdicts per degree.
CertifierReport extactic_certifier(const Foliation& f, int d, int points, int nprimes,
                                   std::uint64_t seed);

/// Scans d over multiples of 3 up to d_max; returns the first
/// consistent degree (or -1).
int minimal_degree_scan(const Foliation& f, int d_max, int points, int nprimes,
                        std::uint64_t seed, std::vector<CertifierReport>* trace = nullptr);

/// Example pencil alpha x dy - y dx at alpha = p/q, as the dual field
/// p x d/dx + q y d/dy; certifier self-test target.
VectorFieldSpec reference_field(std::int64_t p, std::int64_t q);

}  // namespace eisenfoil

#endif
