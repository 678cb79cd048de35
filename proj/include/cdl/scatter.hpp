#pragma once

// Degree-truncated structure group of the N+-graded Lie algebra attached to a
// skew form, dilogarithm elements and the pentagon relation, rank-2 cluster
// scattering diagrams, path-ordered products, and loop identities.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdl/algebra.hpp"
#include "cdl/pattern.hpp"
#include "cdl/seed.hpp"

namespace cdl::scatter {

using alg::ExpVec;
using alg::GradedLex;

class SingularOmega : public std::runtime_error {
  public:
    explicit SingularOmega(const std::string& w) : std::runtime_error(w) {}
};
class MixedContext : public std::runtime_error {
  public:
    explicit MixedContext(const std::string& w) : std::runtime_error(w) {}
};
class NonFactorizable : public std::runtime_error {
  public:
    explicit NonFactorizable(const std::string& w) : std::runtime_error(w) {}
};
class RelationFails : public std::runtime_error {
  public:
    explicit RelationFails(const std::string& w) : std::runtime_error(w) {}
};
class NonZeroResidual : public std::runtime_error {
  public:
    explicit NonZeroResidual(const std::string& w) : std::runtime_error(w) {}
};

// skew-symmetric rational form; pairing {n, n'} = n^T Omega n'
struct SkewForm {
    std::vector<std::vector<Rat>> omega;
    int n() const { return static_cast<int>(omega.size()); }
    Rat pair(const ExpVec& a, const ExpVec& b) const;
    bool nonsingular() const;
    bool operator==(const SkewForm& o) const { return omega == o.omega; }
};

SkewForm skew_form(const std::vector<std::vector<Rat>>& omega);
SkewForm standard_rank2();  // [[0,-1],[1,0]]
SkewForm form_of(const seed::SkewDecomposition& dec);
// [[Omega, -Delta^{-1}], [Delta^{-1}, 0]]
SkewForm principal_extend(const SkewForm& omega, const std::vector<long>& delta);

// commutative power series truncated at total degree <= trunc
class TruncSeries {
  public:
    TruncSeries() = default;
    TruncSeries(int nvars, int trunc) : nvars_(nvars), trunc_(trunc) {}
    static TruncSeries one(int nvars, int trunc);

    int nvars() const { return nvars_; }
    int trunc() const { return trunc_; }
    const std::map<ExpVec, Rat, GradedLex>& terms() const { return terms_; }
    bool is_one() const;
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(const ExpVec& e) const;
    void add_term(const ExpVec& e, const Rat& c);

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries pow_int(long k) const;          // integer power (inverse via unit)
    TruncSeries pow_rat(const Rat& a) const;    // (unit series)^a, binomial series
    TruncSeries inv_unit() const;
    bool operator==(const TruncSeries& o) const;
    long lowest_degree() const;  // degree of the least nonzero term, -1 if zero
    std::string str() const;

  private:
    int nvars_ = 0, trunc_ = 0;
    std::map<ExpVec, Rat, GradedLex> terms_;
};

// (1 + y^n)^a truncated
TruncSeries one_plus_pow(int nvars, int trunc, const ExpVec& n, const Rat& a);

// formal sum of X_n over positive n with degree <= trunc
struct LieElement {
    int nvars = 0, trunc = 0;
    std::map<ExpVec, Rat, GradedLex> coeffs;
    bool is_zero() const { return coeffs.empty(); }
    void add(const ExpVec& e, const Rat& c);
};

// Element of the degree-truncated structure group, stored through its faithful
// action: the image of each generator y_i is y_i * images[i] with a unit
// series images[i].  Products compose actions; equality compares images.
class GroupElement {
  public:
    GroupElement() = default;
    GroupElement(const SkewForm& omega, int trunc);  // identity

    const SkewForm& omega() const { return omega_; }
    int trunc() const { return trunc_; }
    int nvars() const { return omega_.n(); }
    const TruncSeries& image(int i) const { return images_[static_cast<size_t>(i)]; }
    TruncSeries& image(int i) { return images_[static_cast<size_t>(i)]; }

    bool is_identity() const;
    bool operator==(const GroupElement& o) const;

    // action on a unit-coefficient monomial: y^m -> y^m * (returned series)
    TruncSeries act_unit(const ExpVec& m) const;
    // action on a series by substitution (relative part only)
    TruncSeries act(const TruncSeries& s) const;

    std::string str() const;

  private:
    SkewForm omega_;
    int trunc_ = 0;
    std::vector<TruncSeries> images_;
};

// Psi[n]^c: y^{n'} -> y^{n'} (1 + y^n)^{c {n,n'}}
GroupElement psi_element(const ExpVec& n, const Rat& c, const SkewForm& omega, int trunc);

GroupElement group_mul(const GroupElement& a, const GroupElement& b);  // a then b: acts as a(b(.))
GroupElement group_inverse(const GroupElement& a);
bool group_eq(const GroupElement& a, const GroupElement& b);

GroupElement exp_lie(const LieElement& x, const SkewForm& omega, int trunc);
LieElement log_group(const GroupElement& g);

// one Psi[n]^{exponent} factor; n = h * n0 with primitive n0
struct DilogFactor {
    ExpVec n;
    Rat exponent;
};

// normalization factor delta(n): smallest positive rational with
// delta(n) * n in the sublattice spanned by delta_i e_i
Rat normalization_factor(const ExpVec& n, const std::vector<long>& delta);

// Orders an element of the rank-2 group into a slope-sorted product of
// dilogarithm factors, degree by degree.  Factors are sorted by decreasing
// slope n1/n2 (so the left factor pairs nonpositively with everything to its
// right).  Round trips exactly at the truncation degree.
std::vector<DilogFactor> group_log_factorize(const GroupElement& g);

struct Wall {
    ExpVec ray;                       // primitive direction of the support ray
    ExpVec normal;                    // primitive normal vector n0
    std::vector<DilogFactor> factors; // powers of Psi[h n0], slope-parallel
    bool incoming = false;
};

struct Rank2Diagram {
    std::vector<long> delta;  // (delta_1, delta_2)
    int trunc = 0;
    SkewForm omega;           // the standard rank-2 form
    std::vector<Wall> walls;  // two incoming walls, then outgoing sorted by slope of normal
};

// builds the rank-2 cluster scattering diagram truncated at degree trunc by
// ordering Psi[e2]^{d2} Psi[e1]^{d1}
Rank2Diagram build_rank2_csd(long delta1, long delta2, int trunc);

// a crossing of one wall factor with an intersection sign
struct Crossing {
    size_t wall = 0;
    size_t factor = 0;
    int sign = 0;
};

GroupElement path_ordered_product(const Rank2Diagram& d, const std::vector<Crossing>& cs);

// crossing list of the full counterclockwise loop around the origin starting
// inside the positive orthant
std::vector<Crossing> full_ccw_loop(const Rank2Diagram& d);

// Pi_s Psi[c+_{k_s}(s)]^{eps_s delta_{k_s}} (right-to-left over s) == id; a
// singular form is principally extended automatically
bool period_relation_check(const pattern::PatternRun& run, int trunc);

// base series plus one series per generator multiplying log y_i
struct LogSeries {
    TruncSeries base;
    std::vector<TruncSeries> log_parts;
    bool is_zero() const;
};

// the modified Rogers expansion of a loop identity; zero iff the identity holds
LogSeries loop_di_formal(const Rank2Diagram& d, const std::vector<Crossing>& loop);

struct GFanCheck {
    std::vector<ExpVec> g_rays;        // primitive ray directions of the G-fan
    std::vector<ExpVec> wall_rays;     // primitive support rays of the diagram
    bool g_rays_in_support = false;
    bool equal = false;                // finite type: the two sets coincide
    std::optional<ExpVec> complement;  // the limit ray outside the G-fan, if any
};

GFanCheck g_fan_embedding_check(long delta1, long delta2, int trunc, int depth = 64);

}  // namespace cdl::scatter
