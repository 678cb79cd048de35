#pragma once

// Dilogarithm numerics (Li2, Rogers L, modified Rogers) and the two
// verification routes for the identity attached to a period: numeric
// sampling and symbolic constancy (wedge condition, V-element).

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdl/pattern.hpp"

namespace cdl::dilog {

using pattern::PatternRun;
using seed::Perm;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kZeta2 = kPi * kPi / 6.0;

class DomainError : public std::runtime_error {
  public:
    explicit DomainError(const std::string& w) : std::runtime_error(w) {}
};
class ToleranceExceeded : public std::runtime_error {
  public:
    explicit ToleranceExceeded(const std::string& w) : std::runtime_error(w) {}
};

// Li2 on (-inf, 1]; series for small arguments plus reflection and inversion
double li2(double x);
// Rogers L on [0,1]
double rogers(double x);
// modified Rogers L(x/(1+x)) on [0, +inf); x = INFINITY gives pi^2/6
double mod_rogers(double x);

struct DIReport {
    pattern::DIWeights weights;
    long samples = 0;
    unsigned long long rng_seed = 0;
    double max_residual_di1 = 0;  // sum delta L(y) = N_- pi^2/6
    double max_residual_di2 = 0;  // sum delta L(1/y) = N_+ pi^2/6
    double max_residual_di3 = 0;  // signed sum = 0
    Rat constant_n_minus{0};      // exact multiple of pi^2/6 for DI1
    Rat constant_n_plus{0};
};

// samples log-uniform points in [1e-2, 1e2]^n with the given seed; throws
// ToleranceExceeded when a residual exceeds tol
DIReport verify_period_di(const PatternRun& run, const Perm& nu, long samples, double tol,
                          unsigned long long rng_seed);

// element of the wedge square of the multiplicative group generated by the
// y-generators and the interned F-polynomial atoms; keys use generator ids
// 0..n-1 and (n + atom id) for atoms, stored with first < second
class WedgeElement {
  public:
    explicit WedgeElement(int n = 0) : n_(n) {}

    void add(long a, long b, const Rat& coeff);  // a, b arbitrary ids
    void add_pair(const alg::FactoredSF& f, const alg::FactoredSF& g, const Rat& coeff);
    bool is_zero() const { return coeffs_.empty(); }
    size_t size() const { return coeffs_.size(); }
    const std::map<std::pair<long, long>, Rat>& coeffs() const { return coeffs_; }
    WedgeElement& operator+=(const WedgeElement& o);
    WedgeElement operator-(const WedgeElement& o) const;
    bool operator==(const WedgeElement& o) const { return coeffs_ == o.coeffs_; }
    std::string str() const;

  private:
    int n_;
    std::map<std::pair<long, long>, Rat> coeffs_;
};

class NonZeroWedge : public std::runtime_error {
  public:
    explicit NonZeroWedge(const std::string& w) : std::runtime_error(w) {}
};
class StepMismatch : public std::runtime_error {
  public:
    explicit StepMismatch(const std::string& w) : std::runtime_error(w) {}
};

// sum_s delta_{k_s} y_{k_s}(s) ^ (1 + y_{k_s}(s)); returns the element, which
// must be zero for a periodic run (throw-free; caller inspects is_zero)
WedgeElement wedge_check(const PatternRun& run);
// throwing form: NonZeroWedge names the surviving pairs
void require_zero_wedge(const PatternRun& run);

// V(s) = sum_i delta_i F_i(s) ^ [y_i(s)] + 1/2 sum_{ij} delta_i b_ji(s) F_i(s) ^ F_j(s)
WedgeElement v_element(const PatternRun& run, long s);

struct VtReport {
    long steps_checked = 0;
    bool periodic_equal = false;  // V(P) == V(0)
};

// checks V(s+1) - V(s) = delta_{k_s} y ^ (1+y) at every step (throws
// StepMismatch on failure) and reports whether V(P) = V(0)
VtReport vt_check(const PatternRun& run);

}  // namespace cdl::dilog
