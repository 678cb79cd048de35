#pragma once

// Univariate rational-function coefficients in t = q^{1/d}, reduced with a
// monic denominator; exact arithmetic for the quantum kernels.

#include <stdexcept>
#include <string>
#include <vector>

#include "cdl/numeric.hpp"

namespace cdl::qq {

class QPoly {
  public:
    QPoly() = default;
    explicit QPoly(const Rat& c) { if (c != 0) c_.push_back(c); }
    static QPoly tpow(long k, const Rat& c = Rat(1));

    bool is_zero() const { return c_.empty(); }
    long deg() const { return static_cast<long>(c_.size()) - 1; }
    const Rat& lc() const;
    Rat coeff(long k) const;
    void set_coeff(long k, const Rat& c);

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly monic() const;
    // division with remainder
    std::pair<QPoly, QPoly> divrem(const QPoly& o) const;
    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    Rat eval(const Rat& x) const;
    std::string str() const;

  private:
    void trim();
    std::vector<Rat> c_;
};

QPoly qp_gcd(QPoly a, QPoly b);  // monic gcd

class QPole : public std::runtime_error {
  public:
    explicit QPole(const std::string& w) : std::runtime_error(w) {}
};

class QCoeff {
  public:
    QCoeff() : num_(), den_(Rat(1)) {}
    QCoeff(const Rat& c) : num_(c), den_(Rat(1)) {}  // NOLINT implicit by design
    QCoeff(const QPoly& num, const QPoly& den);
    static QCoeff tpow(long k);  // t^k, any sign

    bool is_zero() const { return num_.is_zero(); }
    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    QCoeff operator+(const QCoeff& o) const;
    QCoeff operator-(const QCoeff& o) const;
    QCoeff operator-() const;
    QCoeff operator*(const QCoeff& o) const;
    QCoeff operator/(const QCoeff& o) const;
    QCoeff& operator+=(const QCoeff& o) { return *this = *this + o; }
    QCoeff& operator*=(const QCoeff& o) { return *this = *this * o; }
    bool operator==(const QCoeff& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const QCoeff& o) const { return !(*this == o); }

    // cancels common (t-1) factors, then evaluates at t = 1; throws QPole on a
    // genuine pole
    Rat eval_q1() const;

    std::string str() const;

  private:
    void reduce();
    void reduce_light();
    QPoly num_, den_;
};

// q-number [a]_{q} = (q^a - q^{-a})/(q - q^{-1}) with q = t^d and integer a*d,
// returned as a QCoeff in t
QCoeff q_number(long ad, long d);

// q-binomial [n k] with base q = t^e
QCoeff q_binomial(int n, int k, long e);

}  // namespace cdl::qq
