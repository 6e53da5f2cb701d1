#ifndef EISENFOIL_PENCIL_HPP
#define EISENFOIL_PENCIL_HPP

#include "eisenfoil/eisrat.hpp"
#include "eisenfoil/lattice.hpp"

namespace eisenfoil {

/// Parameter maps between the pencil parameter t and the torus-side
/// slope alpha: lambda_map(alpha) = (w^2 - 1) alpha + 1 and its inverse
/// alpha_of(t) = (t - 1) / (-2 - w).  Both fix infinity.
ExtEisRat lambda_map(const ExtEisRat& alpha);
ExtEisRat alpha_of(const ExtEisRat& t);

enum class DegreeVariant { Paper, Corrected };
enum class LeafOrientation { AsWritten, LeafOfAlpha };

/// Pencil parameter with its canonical coprime pair alpha = alpha1/beta1.
/// Infinity is the pair (1, 0); alpha = 0 is (0, 1).
struct PencilParam {
    ExtEisRat t;
    ExtEisRat alpha;
    EisInt alpha1, beta1;
    bool degenerate = false;

    static PencilParam from_t(const ExtEisRat& t);
    static PencilParam from_alpha(const ExtEisRat& alpha);
};

/// Degree of the rational first integral from the four-norm formula.
/// Paper variant: N(b1) + N(a1) + N(b1-a1) + N(b1 + w a1).
/// Corrected variant swaps the pair in the last term: N(a1 + w b1).
BigInt degree(const PencilParam& p, DegreeVariant variant);

/// 3(a^2 - ab + b^2 - ac + c^2 + ad - bd - cd + d^2) for
/// alpha1 = a + wb, beta1 = c + wd; equals the Paper-variant degree.
BigInt quartic_form(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d);

/// Sum of intersection numbers of the leaf subtorus with the four
/// reference curves E_{1,0}, E_{0,1}, E_{1,1}, E_{1,-w}.  AsWritten
/// takes the leaf as (alpha1, beta1) and reproduces the Paper variant;
/// LeafOfAlpha takes (beta1, alpha1), the curve {(x, alpha x)}, and
/// reproduces the Corrected variant.
BigInt degree_via_intersections(const PencilParam& p, LeafOrientation orientation);

struct IntegrabilityResult {
    bool integrable = true;
    BigInt closure_multiple;  // minimal k >= 1 with k * lattice(alpha) inside Z[w]
};

/// Every exact parameter is integrable; the payload is the minimal k
/// with k*alpha integral (1 for alpha = 0 or infinity).
IntegrabilityResult is_integrable(const ExtEisRat& t);

struct DegreeRecord {
    PencilParam param;
    BigInt d_paper;
    BigInt d_corrected;
    BigInt d_intersection;
    BigInt qa, qb, qc, qd;  // quartic-form inputs: alpha1 = qa + w qb, beta1 = qc + w qd

    static DegreeRecord make(const PencilParam& p);
};

}  // namespace eisenfoil

#endif
