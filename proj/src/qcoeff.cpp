#include "cdl/qcoeff.hpp"

#include <sstream>

namespace cdl::qq {

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::tpow(long k, const Rat& c) {
    QPoly p;
    if (c == 0) return p;
    if (k < 0) throw std::invalid_argument("QPoly::tpow needs k >= 0");
    p.c_.assign(static_cast<size_t>(k + 1), Rat(0));
    p.c_.back() = c;
    return p;
}

const Rat& QPoly::lc() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero");
    return c_.back();
}

Rat QPoly::coeff(long k) const {
    if (k < 0 || k >= static_cast<long>(c_.size())) return Rat(0);
    return c_[static_cast<size_t>(k)];
}

void QPoly::set_coeff(long k, const Rat& c) {
    if (k < 0) throw std::invalid_argument("negative exponent");
    if (k >= static_cast<long>(c_.size())) c_.resize(static_cast<size_t>(k + 1), Rat(0));
    c_[static_cast<size_t>(k)] = c;
    trim();
}

QPoly QPoly::operator+(const QPoly& o) const {
    QPoly out;
    out.c_.assign(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) out.c_[i] += o.c_[i];
    out.trim();
    return out;
}

QPoly QPoly::operator-(const QPoly& o) const {
    QPoly out;
    out.c_.assign(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) out.c_[i] -= o.c_[i];
    out.trim();
    return out;
}

QPoly QPoly::operator*(const QPoly& o) const {
    QPoly out;
    if (is_zero() || o.is_zero()) return out;
    out.c_.assign(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) out.c_[i + j] += c_[i] * o.c_[j];
    }
    out.trim();
    return out;
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    QPoly out(*this);
    Rat l = lc();
    for (auto& c : out.c_) c /= l;
    return out;
}

std::pair<QPoly, QPoly> QPoly::divrem(const QPoly& o) const {
    if (o.is_zero()) throw std::invalid_argument("division by zero polynomial");
    QPoly rem(*this), quot;
    if (deg() >= o.deg()) quot.c_.assign(static_cast<size_t>(deg() - o.deg() + 1), Rat(0));
    while (!rem.is_zero() && rem.deg() >= o.deg()) {
        long k = rem.deg() - o.deg();
        Rat f = rem.lc() / o.lc();
        quot.c_[static_cast<size_t>(k)] = f;
        for (long i = 0; i <= o.deg(); ++i)
            rem.c_[static_cast<size_t>(k + i)] -= f * o.c_[static_cast<size_t>(i)];
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

Rat QPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::string QPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[i].get_str();
        if (i > 0) os << "*t^" << i;
    }
    return os.str();
}

namespace {

// primitive integer coefficient vector of a rational polynomial
std::vector<Int> primitive_int(const QPoly& p) {
    Int l(1);
    for (long k = 0; k <= p.deg(); ++k) l = int_lcm(l, p.coeff(k).get_den());
    std::vector<Int> v(static_cast<size_t>(p.deg() + 1));
    Int g(0);
    for (long k = 0; k <= p.deg(); ++k) {
        Rat c = p.coeff(k) * Rat(l);
        v[static_cast<size_t>(k)] = c.get_num();
        g = int_gcd(g, v[static_cast<size_t>(k)]);
    }
    if (g != 0)
        for (auto& c : v) c /= g;
    return v;
}

void primitivize(std::vector<Int>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    Int g(0);
    for (auto& c : v) g = int_gcd(g, c);
    if (g > 1)
        for (auto& c : v) c /= g;
}

}  // namespace

QPoly qp_gcd(QPoly a, QPoly b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    // primitive pseudo-remainder sequence over the integers
    std::vector<Int> A = primitive_int(a), B = primitive_int(b);
    while (!B.empty()) {
        if (A.size() < B.size()) {
            std::swap(A, B);
            continue;
        }
        // R = lc(B)^{degA-degB+1} A mod B
        std::vector<Int> R = A;
        const Int& lb = B.back();
        long da = static_cast<long>(A.size()) - 1, db = static_cast<long>(B.size()) - 1;
        for (long k = da; k >= db; --k) {
            Int top = R[static_cast<size_t>(k)];
            if (top == 0) continue;
            for (size_t i = 0; i < R.size(); ++i) R[i] *= lb;
            for (long i = 0; i <= db; ++i)
                R[static_cast<size_t>(k - db + i)] -= top * B[static_cast<size_t>(i)];
        }
        R.resize(static_cast<size_t>(db));
        primitivize(R);
        A = std::move(B);
        B = std::move(R);
    }
    QPoly out;
    for (size_t k = 0; k < A.size(); ++k) out.set_coeff(static_cast<long>(k), Rat(A[k]));
    return out.monic();
}

QCoeff::QCoeff(const QPoly& num, const QPoly& den) : num_(num), den_(den) { reduce(); }

namespace {

long valuation(const QPoly& p) {
    if (p.is_zero()) return -1;
    for (long k = 0; k <= p.deg(); ++k)
        if (p.coeff(k) != 0) return k;
    return -1;
}

QPoly shift_down(const QPoly& p, long v) {
    QPoly out;
    for (long k = v; k <= p.deg(); ++k) out.set_coeff(k - v, p.coeff(k));
    return out;
}

}  // namespace

void QCoeff::reduce_light() {
    if (den_.is_zero()) throw std::invalid_argument("zero denominator");
    if (num_.is_zero()) {
        den_ = QPoly(Rat(1));
        return;
    }
    long v = std::min(valuation(num_), valuation(den_));
    if (v > 0) {
        num_ = shift_down(num_, v);
        den_ = shift_down(den_, v);
    }
    Rat l = den_.lc();
    if (l != 1) {
        QPoly inv(Rat(1) / l);
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

void QCoeff::reduce() {
    if (den_.is_zero()) throw std::invalid_argument("zero denominator");
    if (num_.is_zero()) {
        den_ = QPoly(Rat(1));
        return;
    }
    // strip common t powers first; pure q-power traffic never reaches the gcd
    long v = std::min(valuation(num_), valuation(den_));
    if (v > 0) {
        num_ = shift_down(num_, v);
        den_ = shift_down(den_, v);
    }
    if (den_.deg() > 0 && num_.deg() > 0) {
        QPoly g = qp_gcd(num_, den_);
        if (g.deg() > 0) {
            num_ = num_.divrem(g).first;
            den_ = den_.divrem(g).first;
        }
    }
    // monic denominator
    Rat l = den_.lc();
    if (l != 1) {
        QPoly inv(Rat(1) / l);
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

QCoeff QCoeff::tpow(long k) {
    QCoeff out;
    if (k >= 0) {
        out.num_ = QPoly::tpow(k);
        out.den_ = QPoly(Rat(1));
    } else {
        out.num_ = QPoly(Rat(1));
        out.den_ = QPoly::tpow(-k);
    }
    return out;
}

QCoeff QCoeff::operator+(const QCoeff& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return QCoeff(num_ + o.num_, den_);
    // divisible denominators are the common case in the series kernels
    if (den_.deg() >= o.den_.deg()) {
        auto [q, r] = den_.divrem(o.den_);
        if (r.is_zero()) return QCoeff(num_ + o.num_ * q, den_);
    } else {
        auto [q, r] = o.den_.divrem(den_);
        if (r.is_zero()) return QCoeff(num_ * q + o.num_, o.den_);
    }
    return QCoeff(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QCoeff QCoeff::operator-(const QCoeff& o) const { return *this + (-o); }

QCoeff QCoeff::operator-() const {
    QCoeff out(*this);
    out.num_ = QPoly(Rat(-1)) * out.num_;
    return out;
}

QCoeff QCoeff::operator*(const QCoeff& o) const {
    if (is_zero() || o.is_zero()) return QCoeff();
    // inputs are reduced, so only cross pairs can cancel
    QPoly n1 = num_, d2 = o.den_, n2 = o.num_, d1 = den_;
    if (n1.deg() > 0 && d2.deg() > 0) {
        QPoly g = qp_gcd(n1, d2);
        if (g.deg() > 0) {
            n1 = n1.divrem(g).first;
            d2 = d2.divrem(g).first;
        }
    }
    if (n2.deg() > 0 && d1.deg() > 0) {
        QPoly g = qp_gcd(n2, d1);
        if (g.deg() > 0) {
            n2 = n2.divrem(g).first;
            d1 = d1.divrem(g).first;
        }
    }
    QCoeff out;
    out.num_ = n1 * n2;
    out.den_ = d1 * d2;
    out.reduce_light();
    return out;
}

QCoeff QCoeff::operator/(const QCoeff& o) const {
    if (o.is_zero()) throw std::invalid_argument("division by zero coefficient");
    return QCoeff(num_ * o.den_, den_ * o.num_);
}

Rat QCoeff::eval_q1() const {
    QPoly n = num_, d = den_;
    QPoly tm1;
    tm1.set_coeff(0, Rat(-1));
    tm1.set_coeff(1, Rat(1));
    while (!n.is_zero() && n.eval(Rat(1)) == 0 && d.eval(Rat(1)) == 0) {
        n = n.divrem(tm1).first;
        d = d.divrem(tm1).first;
    }
    Rat dv = d.eval(Rat(1));
    if (dv == 0) throw QPole("pole at q = 1");
    return n.eval(Rat(1)) / dv;
}

std::string QCoeff::str() const {
    if (den_ == QPoly(Rat(1))) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

QCoeff q_number(long ad, long d) {
    // [a]_q with q = t^d and a = ad/d: (t^{ad} - t^{-ad}) / (t^d - t^{-d})
    long A = std::abs(ad);
    QCoeff num = QCoeff::tpow(ad) - QCoeff::tpow(-ad);
    QCoeff den = QCoeff::tpow(d) - QCoeff::tpow(-d);
    (void)A;
    return num / den;
}

QCoeff q_binomial(int n, int k, long e) {
    // (q)_n / ((q)_k (q)_{n-k}) with q = t^e
    auto poch = [&](int m) {
        QCoeff acc(Rat(1));
        for (int j = 1; j <= m; ++j)
            acc *= (QCoeff(Rat(1)) - QCoeff::tpow(e * j));
        return acc;
    };
    return poch(n) / (poch(k) * poch(n - k));
}

}  // namespace cdl::qq
