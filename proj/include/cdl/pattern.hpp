#pragma once

// The C/G/F engine along a mutation word: recursions, separation formulas,
// tropical signs, duality checks, periodicity detection, Fock-Goncharov data.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdl/algebra.hpp"
#include "cdl/seed.hpp"

namespace cdl::pattern {

using alg::ExpVec;
using alg::FactoredSF;
using alg::LaurentMonomial;
using alg::MultiPoly;
using seed::IntMat;
using seed::Perm;

struct MutationWord {
    IntMat B0;
    std::vector<long> delta;   // from skew_decompose(B0) unless caller overrides
    std::vector<int> dirs;     // 0-based directions k_0 .. k_{P-1}
    // symbolic runs abort when the stored F-polynomial terms exceed this
    size_t term_budget = 1000000;
};

MutationWord make_word(const IntMat& B0, const std::vector<int>& dirs);

class TermBudgetExceeded : public std::runtime_error {
  public:
    explicit TermBudgetExceeded(const std::string& w) : std::runtime_error(w) {}
};

class DualityViolation : public std::runtime_error {
  public:
    explicit DualityViolation(const std::string& w) : std::runtime_error(w) {}
};

// Full trace of a mutation word: everything is stored per step because the
// dilogarithm identities consume the whole history.
struct PatternRun {
    int n = 0;
    long P = 0;
    std::vector<long> delta;
    std::vector<int> dirs;
    std::vector<IntMat> B;                    // steps 0..P
    std::vector<IntMat> C;                    // steps 0..P
    std::vector<IntMat> G;                    // steps 0..P
    std::vector<std::vector<MultiPoly>> F;    // steps 0..P, n polynomials each
    std::vector<int> eps;                     // steps 0..P-1, tropical signs
    std::vector<ExpVec> c_plus;               // steps 0..P-1, eps_s * c_{k_s}(s)

    int dir(long s) const { return dirs[static_cast<size_t>(s)]; }
};

PatternRun run_pattern(const MutationWord& w);

// y_i(s) = prod_j y_j^{c_ji(s)} * prod_j F_j(s)^{b_ji(s)} in factored form
FactoredSF separation_y(const PatternRun& run, long s, int i);

// 1 + y_{k_s}(s) in factored form via the F-mutation identity; needs step s+1
FactoredSF one_plus_mutating_y(const PatternRun& run, long s);

// tropical part prod_j x_j^{g_ji(s)} and the nontropical numerator F_i(s)
// read in the yhat variables (the caller's semifield owns the denominator)
std::pair<LaurentMonomial, MultiPoly> separation_x(const PatternRun& run, long s, int i);

// returns nu with C(P) = nu * C(0) if one exists; also asserts G(P) = nu G(0)
// and F(P) = nu F(0), and delta compatibility delta_{nu(i)} = delta_i
std::optional<Perm> detect_period(const PatternRun& run);

// throws DualityViolation on failure; returns the number of steps checked
long verify_dualities(const PatternRun& run);

struct DIWeights {
    long n_plus = 0;
    long n_minus = 0;
};

DIWeights di_weights(const PatternRun& run);

// tropical y-images y^{c_i(s)} plus the nontropical automorphism data
// (c_plus, eps, delta_k) of the step
struct FGImage {
    std::vector<LaurentMonomial> tropical;  // one monomial per index i
    ExpVec c_plus;
    int eps = 0;
    long delta_k = 0;
};

FGImage fg_tropical_image(const PatternRun& run, long s);

}  // namespace cdl::pattern
