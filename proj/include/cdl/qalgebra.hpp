#pragma once

// Truncated q-commutative Laurent algebra: normalized monomials Y^n with
// Y^n Y^m = q^{{n,m}} Y^{n+m}, elements stored as a shift monomial times a
// cone-supported series with QCoeff coefficients.

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdl/algebra.hpp"
#include "cdl/qcoeff.hpp"

namespace cdl::qq {

using alg::ExpVec;
using alg::GradedLex;

class NonUnit : public std::runtime_error {
  public:
    explicit NonUnit(const std::string& w) : std::runtime_error(w) {}
};
class NonPositiveArgument : public std::runtime_error {
  public:
    explicit NonPositiveArgument(const std::string& w) : std::runtime_error(w) {}
};

// ambient data: the skew form, the root order d (t = q^{1/d}), the
// normalization integers delta_i, and the cone-degree truncation
struct QContext {
    int n = 0;
    std::vector<std::vector<Rat>> omega;
    std::vector<long> delta;
    long d = 1;
    int trunc = 8;

    Rat pair(const ExpVec& a, const ExpVec& b) const;
    // q^x as t^{x d}; x d must be an integer
    QCoeff qpow(const Rat& x) const;
    long qexp(const Rat& x) const;  // the integer x d
};

using Ctx = std::shared_ptr<const QContext>;

Ctx make_context(std::vector<std::vector<Rat>> omega, std::vector<long> delta, int trunc,
                 long extra_root = 1);
// the two-generator algebra Y1 Y2 = q^{2w} Y2 Y1
Ctx two_generator_context(const Rat& w, int trunc);

// value = Y^{shift} * sum_n series[n] Y^n with nonnegative n, deg n <= trunc;
// canonical form keeps the componentwise-minimal shift
class QLaurent {
  public:
    QLaurent() = default;
    explicit QLaurent(Ctx ctx);                       // zero
    static QLaurent one(Ctx ctx);
    static QLaurent monomial(Ctx ctx, const ExpVec& m, const QCoeff& c = QCoeff(Rat(1)));
    static QLaurent generator(Ctx ctx, int i);

    const Ctx& ctx() const { return ctx_; }
    bool is_zero() const { return series_.empty(); }
    bool is_one() const;
    const ExpVec& shift() const { return shift_; }
    const std::map<ExpVec, QCoeff, GradedLex>& series() const { return series_; }
    // coefficient of the absolute normalized monomial Y^m
    QCoeff abs_coeff(const ExpVec& m) const;

    QLaurent operator+(const QLaurent& o) const;
    QLaurent operator-(const QLaurent& o) const;
    QLaurent operator*(const QLaurent& o) const;
    QLaurent scal(const QCoeff& c) const;
    QLaurent inverse() const;  // needs an invertible lowest term
    QLaurent pow(long k) const;
    bool operator==(const QLaurent& o) const;

    // lowest-degree series term has exponent zero and this coefficient
    QCoeff unit_coeff() const;
    // substitutes q = 1 into every coefficient: (shift, rational series)
    std::pair<ExpVec, std::map<ExpVec, Rat, GradedLex>> classical_limit() const;

    std::string str() const;

  private:
    void canonicalize();
    void add_term_raw(const ExpVec& n, const QCoeff& c);
    Ctx ctx_;
    ExpVec shift_;
    std::map<ExpVec, QCoeff, GradedLex> series_;
    friend QLaurent rebased_sum(const QLaurent& a, const QLaurent& b, int sb);
};

// Psi_{q_base}(x) = sum_j (-q_base)^j / prod_{u=1..j} (1 - q_base^{2u}) x^j
// for an argument with strictly positive lowest degree; base given as the
// t-exponent e with q_base = t^e
QLaurent psi_q_series(const QLaurent& arg, long base_exp);
// e_{q_base}(x) = sum_j x^j / prod_{u=1..j}(1 - q_base^u)
QLaurent e_q_series(const QLaurent& arg, long base_exp);

// automorphism of the completed algebra through its generator images
class QGroupElement {
  public:
    QGroupElement() = default;
    explicit QGroupElement(Ctx ctx);  // identity

    const Ctx& ctx() const { return ctx_; }
    const QLaurent& image(int i) const { return images_[static_cast<size_t>(i)]; }
    QLaurent& image(int i) { return images_[static_cast<size_t>(i)]; }

    bool is_identity() const;
    bool operator==(const QGroupElement& o) const;

    QLaurent act_monomial(const ExpVec& m) const;  // m nonnegative
    QLaurent act(const QLaurent& x) const;         // x with nonnegative support

  private:
    Ctx ctx_;
    std::vector<QLaurent> images_;
};

QGroupElement qgroup_mul(const QGroupElement& a, const QGroupElement& b);

// quantum dilogarithm element Psi_{a,b}[n]^{power} under the y-representation
QGroupElement psi_q_element(Ctx ctx, const ExpVec& n, const Rat& a, const Rat& b,
                            int power = 1);

}  // namespace cdl::qq
