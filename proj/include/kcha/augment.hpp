#ifndef KCHA_AUGMENT_HPP
#define KCHA_AUGMENT_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kcha/dga.hpp"
#include "kcha/matrix.hpp"
#include "kcha/mpoly.hpp"
#include "kcha/ratfunc.hpp"

namespace kcha {

/// The two canonical one-parameter augmentation branches: M pins lambda and
/// Q to 1 with free parameter mu (knot complement filling); L pins mu and Q
/// with free parameter lambda (conormal filling).
struct Branch {
    enum Tag { M, L };
    Tag tag = M;

    static Branch m() { return {M}; }
    static Branch l() { return {L}; }

    /// Name of the free parameter ("mu" for M, "lambda" for L).
    const char* parameter() const { return tag == M ? "mu" : "lambda"; }
    int parameter_index() const { return tag == M ? SymTab::kMu : SymTab::kLambda; }
    /// The non-Q ring variable pinned to 1.
    int pinned_index() const { return tag == M ? SymTab::kLambda : SymTab::kMu; }
    const char* str() const { return tag == M ? "M" : "L"; }

    static Branch from_string(const std::string& s);
};

/// One-parameter family of augmentation values for the degree-0 chords.
struct AugFamily {
    Branch branch;
    std::map<std::string, RatFunc> values;  // chord -> value in the branch parameter
};

struct VerifyRow {
    std::string generator;
    RatFunc residual;
    bool ok = false;
};

struct VerifyReport {
    bool pass = false;
    std::vector<VerifyRow> rows;  // one per degree-1 generator, declaration order
};

/// Substitutes pinned ring variables and family values into every degree-1
/// differential; passes iff all residuals vanish identically.
VerifyReport verify_augmentation(const DGA& dga, const AugFamily& fam);

/// Best-effort solver: pins the branch, assembles the degree-1 system over
/// the field Q(parameter), takes a lex Groebner basis and back-substitutes
/// through univariate factors of degree <= 2 (quadratics only with perfect
/// square discriminant). Returns every family that verifies.
std::vector<AugFamily> solve_augmentation_family(const DGA& dga, Branch branch,
                                                 double timeout_seconds = 60.0);

/// Linearized differential: rows are chords of degree from_degree-1 and
/// columns chords of degree from_degree, identifiers in declaration order;
/// entry = d(differential of column)/d(row chord) under the augmentation.
Matrix<RatFunc> linearized_matrix(const DGA& dga, const AugFamily& fam, int from_degree);

/// Degree-1 cycle of the linearized differential, with its branch data.
struct Cycle {
    std::map<std::string, RatFunc> coords;  // degree-1 chord -> coefficient
    bool usable = false;                    // f_x not identically zero
    bool branch_identity_ok = true;         // branch L only: lambda*f_p == (lambda-1)*f_t
    RatFunc f_first;                        // d/dlambda (M) or d/dmu (L) at pinned = 1
    RatFunc f_t;                            // d/dQ at pinned = 1
};

/// Kernel basis of the degree-1 linearized differential (coset
/// representatives modulo the degree-2 image when that data exists), in
/// deterministic order, tagged usable iff the first derivative is nonzero.
std::vector<Cycle> find_generating_cycles(const DGA& dga, const AugFamily& fam);

/// Branch function F (branch M) or G (branch L): the differential of the
/// cycle with chords replaced by family values, keeping the two unpinned
/// ring variables symbolic. Stored as a Laurent polynomial in (sym, Q) with
/// rational-function coefficients in the branch parameter.
struct BranchFunction {
    Branch branch;
    std::map<std::pair<int, int>, RatFunc> terms;  // (exp of lambda|mu, exp of Q) -> coeff
    std::string dga_name;
};

BranchFunction compute_branch_function(const DGA& dga, const AugFamily& fam, const Cycle& y);

/// (f_x, f_t) for branch M; (f_p, f_t) for branch L: the two restricted
/// first derivatives at pinned variables = 1.
std::pair<RatFunc, RatFunc> branch_derivatives(const BranchFunction& bf);

/// The branch-L proposition identity lambda*f_p = (lambda-1)*f_t, exact.
bool branch_l_identity_holds(const RatFunc& f_p, const RatFunc& f_t);

} // namespace kcha

#endif
