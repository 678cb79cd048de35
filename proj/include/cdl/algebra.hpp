#pragma once

// Exact multivariate polynomial arithmetic over big rationals, factored
// subtraction-free rational values, and tropicalization.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdl/numeric.hpp"

namespace cdl::alg {

// Lattice point of Z^n (exponent vector); entries may be negative for
// Laurent monomials, nonnegative inside polynomials.
using ExpVec = std::vector<int32_t>;

long degree(const ExpVec& v);
ExpVec ev_add(const ExpVec& a, const ExpVec& b);
ExpVec ev_sub(const ExpVec& a, const ExpVec& b);
ExpVec ev_neg(const ExpVec& a);
ExpVec ev_scale(const ExpVec& a, long k);
bool ev_is_zero(const ExpVec& v);
bool ev_leq(const ExpVec& a, const ExpVec& b);  // componentwise
ExpVec ev_min(const ExpVec& a, const ExpVec& b);
ExpVec ev_pos(const ExpVec& a);  // componentwise [.]_+
std::string ev_str(const ExpVec& v);

// graded lexicographic order: first by total degree, then lex
struct GradedLex {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

class NonDivisible : public std::runtime_error {
  public:
    explicit NonDivisible(const std::string& what) : std::runtime_error(what) {}
};

// Sparse polynomial with nonnegative exponents and rational coefficients.
// No zero coefficients are stored; the term map order is graded lex.
class MultiPoly {
  public:
    using TermMap = std::map<ExpVec, Rat, GradedLex>;

    MultiPoly() = default;
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, const Rat& c);
    static MultiPoly one(int nvars) { return constant(nvars, Rat(1)); }
    static MultiPoly variable(int nvars, int i);       // y_i
    static MultiPoly monomial(const ExpVec& e, const Rat& c);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    size_t term_count() const { return terms_.size(); }
    Rat constant_term() const;
    long total_degree() const;

    void add_term(const ExpVec& e, const Rat& c);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly pow(unsigned long k) const;
    bool operator==(const MultiPoly& o) const;

    // leading term in graded lex (largest)
    std::pair<ExpVec, Rat> leading() const;

    double eval(const std::vector<double>& point) const;

    std::string str(const std::vector<std::string>& vars = {}) const;
    std::string canonical_key() const;  // stable serialization, used for interning

  private:
    int nvars_ = 0;
    TermMap terms_;
};

// q * den == num or throws NonDivisible
MultiPoly exact_div(const MultiPoly& num, const MultiPoly& den);

// ---------------------------------------------------------------------------
// Atom intern table.  Atoms are polynomials with constant term exactly 1 and
// at least two terms; structurally equal polynomials share one id.

using AtomId = int32_t;

class AtomTable {
  public:
    static AtomTable& instance();

    AtomId intern(const MultiPoly& p);
    const MultiPoly& poly(AtomId id) const;
    size_t size() const;

  private:
    AtomTable() = default;
    mutable std::mutex mu_;
    std::map<std::string, AtomId> index_;
    std::vector<std::shared_ptr<const MultiPoly>> atoms_;
};

// Laurent monomial with implicit coefficient 1.
struct LaurentMonomial {
    ExpVec exponents;
    std::string str(const std::vector<std::string>& vars = {}) const;
    bool operator==(const LaurentMonomial& o) const { return exponents == o.exponents; }
};

// Subtraction-free rational value stored in factored form:
// monomial * prod_i atom_i^{e_i}, atoms interned, exponents nonzero integers.
class FactoredSF {
  public:
    FactoredSF() = default;
    explicit FactoredSF(int nvars) : mono_(nvars, 0) {}
    static FactoredSF monomial(const ExpVec& e);
    static FactoredSF generator(int nvars, int i);  // y_i

    int nvars() const { return static_cast<int>(mono_.size()); }
    const ExpVec& mono() const { return mono_; }
    const std::map<AtomId, long>& factors() const { return factors_; }

    void mul_monomial(const ExpVec& e);
    void mul_atom(AtomId id, long exp);
    // multiplies by poly^exp; poly is canonicalized into monomial content and
    // an interned constant-term-1 atom (poly == 1 is a no-op)
    void mul_poly(const MultiPoly& p, long exp);

    FactoredSF operator*(const FactoredSF& o) const;
    FactoredSF inverse() const;
    FactoredSF pow(long k) const;
    bool operator==(const FactoredSF& o) const;

    bool is_monomial() const { return factors_.empty(); }

    // Expands to a fraction (num, den) of polynomials; test and small-value use.
    std::pair<MultiPoly, MultiPoly> to_fraction() const;

    std::string str(const std::vector<std::string>& vars = {}) const;

  private:
    ExpVec mono_;
    std::map<AtomId, long> factors_;
};

// image under the semifield map fixing generators; by the constant-term-1
// atom convention this is just the monomial part
LaurentMonomial tropicalize(const FactoredSF& f);

class EvalOverflow : public std::runtime_error {
  public:
    explicit EvalOverflow(const std::string& what) : std::runtime_error(what) {}
};

// evaluation at a strictly positive point
double eval_positive(const FactoredSF& f, const std::vector<double>& point);

}  // namespace cdl::alg
