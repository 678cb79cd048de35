#include "cdl/qalgebra.hpp"

#include <algorithm>
#include <sstream>

namespace cdl::qq {

using alg::degree;
using alg::ev_add;
using alg::ev_is_zero;
using alg::ev_min;
using alg::ev_neg;
using alg::ev_scale;
using alg::ev_sub;

Rat QContext::pair(const ExpVec& a, const ExpVec& b) const {
    Rat acc(0);
    for (size_t i = 0; i < omega.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < omega.size(); ++j) {
            if (b[j] == 0) continue;
            acc += Rat(a[i]) * omega[i][j] * Rat(b[j]);
        }
    }
    return acc;
}

long QContext::qexp(const Rat& x) const {
    Rat e = x * Rat(d);
    if (e.get_den() != 1) throw std::invalid_argument("q-power outside the root lattice");
    return static_cast<long>(e.get_num().get_si());
}

QCoeff QContext::qpow(const Rat& x) const { return QCoeff::tpow(qexp(x)); }

Ctx make_context(std::vector<std::vector<Rat>> omega, std::vector<long> delta, int trunc,
                 long extra_root) {
    auto ctx = std::make_shared<QContext>();
    ctx->n = static_cast<int>(omega.size());
    ctx->omega = std::move(omega);
    ctx->delta = std::move(delta);
    Int l(extra_root);
    for (long dd : ctx->delta) l = int_lcm(l, Int(dd));
    // enlarge until all pairings land in (1/d) Z
    for (auto& row : ctx->omega)
        for (auto& w : row) l = int_lcm(l, w.get_den());
    ctx->d = static_cast<long>(l.get_si());
    ctx->trunc = trunc;
    return ctx;
}

Ctx two_generator_context(const Rat& w, int trunc) {
    Rat two_w = Rat(2) * w;
    long extra = static_cast<long>(two_w.get_den().get_si()) * 2;
    return make_context({{Rat(0), w}, {-w, Rat(0)}}, {1, 1}, trunc, extra);
}

QLaurent::QLaurent(Ctx ctx) : ctx_(std::move(ctx)) {
    shift_.assign(static_cast<size_t>(ctx_->n), 0);
}

QLaurent QLaurent::one(Ctx ctx) {
    QLaurent x(std::move(ctx));
    x.series_[ExpVec(static_cast<size_t>(x.ctx_->n), 0)] = QCoeff(Rat(1));
    return x;
}

QLaurent QLaurent::monomial(Ctx ctx, const ExpVec& m, const QCoeff& c) {
    QLaurent x(std::move(ctx));
    x.shift_ = m;
    if (!c.is_zero()) x.series_[ExpVec(static_cast<size_t>(x.ctx_->n), 0)] = c;
    if (x.series_.empty()) x.shift_.assign(static_cast<size_t>(x.ctx_->n), 0);
    return x;
}

QLaurent QLaurent::generator(Ctx ctx, int i) {
    ExpVec e(static_cast<size_t>(ctx->n), 0);
    e[static_cast<size_t>(i)] = 1;
    return monomial(std::move(ctx), e);
}

bool QLaurent::is_one() const {
    return series_.size() == 1 && ev_is_zero(shift_) && ev_is_zero(series_.begin()->first) &&
           series_.begin()->second == QCoeff(Rat(1));
}

QCoeff QLaurent::abs_coeff(const ExpVec& m) const {
    ExpVec rel = ev_sub(m, shift_);
    for (auto e : rel)
        if (e < 0) return QCoeff();
    auto it = series_.find(rel);
    if (it == series_.end()) return QCoeff();
    // Y^{shift} Y^{rel} = q^{{shift,rel}} Y^m
    return it->second * ctx_->qpow(ctx_->pair(shift_, rel));
}

void QLaurent::add_term_raw(const ExpVec& n, const QCoeff& c) {
    if (c.is_zero() || degree(n) > ctx_->trunc) return;
    auto [it, fresh] = series_.emplace(n, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) series_.erase(it);
    }
}

void QLaurent::canonicalize() {
    if (series_.empty()) {
        shift_.assign(static_cast<size_t>(ctx_->n), 0);
        return;
    }
    ExpVec m = series_.begin()->first;
    for (auto& [e, c] : series_) m = ev_min(m, e);
    if (ev_is_zero(m)) return;
    // Y^{shift} sum c_n Y^n = q^{{shift,m}} Y^{shift+m} sum c_n q^{-{m,n-m}} Y^{n-m}
    std::map<ExpVec, QCoeff, GradedLex> out;
    for (auto& [e, c] : series_) {
        ExpVec rel = ev_sub(e, m);
        out[rel] = c * ctx_->qpow(ctx_->pair(shift_, m) - ctx_->pair(m, rel));
    }
    shift_ = ev_add(shift_, m);
    series_ = std::move(out);
}

// rebases b onto the shift lattice of the sum and adds with sign sb
QLaurent rebased_sum(const QLaurent& a, const QLaurent& b, int sb) {
    if (a.ctx_ != b.ctx_) throw std::invalid_argument("mixed quantum contexts");
    QLaurent out(a.ctx_);
    if (a.is_zero() && b.is_zero()) return out;
    ExpVec m = a.is_zero() ? b.shift_ : (b.is_zero() ? a.shift_ : ev_min(a.shift_, b.shift_));
    out.shift_ = m;
    auto push = [&](const QLaurent& x, int sgn) {
        if (x.is_zero()) return;
        ExpVec off = ev_sub(x.shift_, m);  // nonnegative
        // Y^{x.shift} Y^n = q^{-{m,off}} Y^m (Y^{off} Y^n q^{{x.shift,n}-{off+...}}) —
        // done directly on absolute coefficients:
        for (auto& [n, c] : x.series_) {
            ExpVec rel = ev_add(off, n);
            // Y^{xs} Y^n = q^{{xs,n}} Y^{xs+n}; Y^m Y^rel = q^{{m,rel}} Y^{m+rel} = same abs
            QCoeff cc = c * x.ctx_->qpow(x.ctx_->pair(x.shift_, n) - x.ctx_->pair(m, rel));
            if (sgn < 0) cc = -cc;
            out.add_term_raw(rel, cc);
        }
    };
    push(a, 1);
    push(b, sb);
    out.canonicalize();
    return out;
}

QLaurent QLaurent::operator+(const QLaurent& o) const { return rebased_sum(*this, o, 1); }
QLaurent QLaurent::operator-(const QLaurent& o) const { return rebased_sum(*this, o, -1); }

QLaurent QLaurent::operator*(const QLaurent& o) const {
    if (ctx_ != o.ctx_) throw std::invalid_argument("mixed quantum contexts");
    QLaurent out(ctx_);
    if (is_zero() || o.is_zero()) return out;
    out.shift_ = ev_add(shift_, o.shift_);
    // (Y^s f)(Y^t g) = q^{{s,t}} Y^{s+t} (Y^{-t} f Y^t) g
    QCoeff front = ctx_->qpow(ctx_->pair(shift_, o.shift_));
    for (auto& [n, c] : series_) {
        QCoeff ctw = c * ctx_->qpow(Rat(-2) * ctx_->pair(o.shift_, n)) * front;
        long dn = degree(n);
        for (auto& [m, cm] : o.series_) {
            if (dn + degree(m) > ctx_->trunc) continue;
            out.add_term_raw(ev_add(n, m), ctw * cm * ctx_->qpow(ctx_->pair(n, m)));
        }
    }
    out.canonicalize();
    return out;
}

QLaurent QLaurent::scal(const QCoeff& c) const {
    QLaurent out(ctx_);
    out.shift_ = shift_;
    for (auto& [n, cc] : series_) {
        QCoeff v = cc * c;
        if (!v.is_zero()) out.series_[n] = v;
    }
    out.canonicalize();
    return out;
}

QCoeff QLaurent::unit_coeff() const {
    auto it = series_.find(ExpVec(static_cast<size_t>(ctx_->n), 0));
    return it == series_.end() ? QCoeff() : it->second;
}

QLaurent QLaurent::inverse() const {
    if (is_zero()) throw NonUnit("inverse of zero");
    QCoeff c0 = unit_coeff();
    if (c0.is_zero()) throw NonUnit("lowest term is not invertible");
    // f = series part; f^{-1} = (sum_k u^k) c0^{-1} with u = 1 - c0^{-1} f
    QLaurent f(ctx_);
    f.series_ = series_;
    QLaurent u = QLaurent::one(ctx_) - f.scal(QCoeff(Rat(1)) / c0);
    QLaurent acc = QLaurent::one(ctx_);
    QLaurent up = QLaurent::one(ctx_);
    for (int k = 1; k <= ctx_->trunc && !u.is_zero(); ++k) {
        up = up * u;
        if (up.is_zero()) break;
        acc = acc + up;
    }
    QLaurent finv = acc.scal(QCoeff(Rat(1)) / c0);
    // (Y^s f)^{-1} = f^{-1} Y^{-s} = Y^{-s} * (Y^s f^{-1} Y^{-s}); the conjugate
    // scales the absolute coefficient of Y^m by q^{2{s,m}}
    QLaurent conj(ctx_);
    conj.shift_ = finv.shift_;
    for (auto& [n, c] : finv.series_)
        conj.series_[n] =
            c * ctx_->qpow(Rat(2) * ctx_->pair(shift_, ev_add(finv.shift_, n)));
    return QLaurent::monomial(ctx_, ev_neg(shift_)) * conj;
}

QLaurent QLaurent::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    QLaurent out = QLaurent::one(ctx_);
    QLaurent base(*this);
    unsigned long kk = static_cast<unsigned long>(k);
    while (kk) {
        if (kk & 1) out = out * base;
        base = base * base;
        kk >>= 1;
    }
    return out;
}

bool QLaurent::operator==(const QLaurent& o) const {
    return shift_ == o.shift_ && series_ == o.series_;
}

std::pair<ExpVec, std::map<ExpVec, Rat, GradedLex>> QLaurent::classical_limit() const {
    std::map<ExpVec, Rat, GradedLex> out;
    for (auto& [n, c] : series_) {
        Rat v = c.eval_q1();
        if (v != 0) out[n] = v;
    }
    return {shift_, out};
}

std::string QLaurent::str() const {
    std::ostringstream os;
    os << "Y^" << alg::ev_str(shift_) << " * { ";
    for (auto& [n, c] : series_) os << "[" << alg::ev_str(n) << "] " << c.str() << " ; ";
    os << "}";
    return os.str();
}

namespace {

QLaurent exp_like_series(const QLaurent& arg, const std::vector<QCoeff>& coeffs) {
    // sum_j coeffs[j] arg^j with arg of positive lowest total degree
    const Ctx& ctx = arg.ctx();
    long low = degree(arg.shift());
    if (!arg.is_zero()) {
        long best = -1;
        for (auto& [n, c] : arg.series()) {
            long d = degree(ev_add(arg.shift(), n));
            if (best < 0 || d < best) best = d;
        }
        low = best;
    }
    if (arg.is_zero()) return QLaurent::one(ctx);
    if (low <= 0) throw NonPositiveArgument("series argument must have positive degree");
    QLaurent acc = QLaurent::one(ctx).scal(coeffs[0]);
    QLaurent p = QLaurent::one(ctx);
    for (long j = 1; j * low <= ctx->trunc && j < static_cast<long>(coeffs.size()); ++j) {
        p = p * arg;
        if (p.is_zero()) break;
        acc = acc + p.scal(coeffs[static_cast<size_t>(j)]);
    }
    return acc;
}

}  // namespace

QLaurent psi_q_series(const QLaurent& arg, long base_exp) {
    const Ctx& ctx = arg.ctx();
    long jmax = ctx->trunc + 1;
    std::vector<QCoeff> coeffs;
    coeffs.push_back(QCoeff(Rat(1)));
    QCoeff acc(Rat(1));
    for (long j = 1; j <= jmax; ++j) {
        // (-q)^j / (q^2)_j accumulated one factor at a time
        acc = acc * (QCoeff() - QCoeff::tpow(base_exp)) /
              (QCoeff(Rat(1)) - QCoeff::tpow(2 * base_exp * j));
        coeffs.push_back(acc);
    }
    return exp_like_series(arg, coeffs);
}

QLaurent e_q_series(const QLaurent& arg, long base_exp) {
    const Ctx& ctx = arg.ctx();
    long jmax = ctx->trunc + 1;
    std::vector<QCoeff> coeffs;
    coeffs.push_back(QCoeff(Rat(1)));
    QCoeff acc(Rat(1));
    for (long j = 1; j <= jmax; ++j) {
        acc = acc / (QCoeff(Rat(1)) - QCoeff::tpow(base_exp * j));
        coeffs.push_back(acc);
    }
    return exp_like_series(arg, coeffs);
}

QGroupElement::QGroupElement(Ctx ctx) : ctx_(std::move(ctx)) {
    for (int i = 0; i < ctx_->n; ++i) images_.push_back(QLaurent::generator(ctx_, i));
}

bool QGroupElement::is_identity() const {
    for (int i = 0; i < ctx_->n; ++i)
        if (!(images_[static_cast<size_t>(i)] == QLaurent::generator(ctx_, i))) return false;
    return true;
}

bool QGroupElement::operator==(const QGroupElement& o) const { return images_ == o.images_; }

QLaurent QGroupElement::act_monomial(const ExpVec& m) const {
    // Y^m = q^{-s(m)} Y_1^{m_1} ... Y_n^{m_n} with s(m) = sum_{i<j} m_i m_j {e_i, e_j}
    Rat sm(0);
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = i + 1; j < m.size(); ++j) {
            if (m[i] == 0 || m[j] == 0) continue;
            sm += Rat(m[i]) * Rat(m[j]) * ctx_->omega[i][j];
        }
    QLaurent acc = QLaurent::one(ctx_);
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (m[i] < 0) throw std::invalid_argument("act_monomial needs nonnegative exponents");
        acc = acc * images_[i].pow(m[i]);
    }
    return acc.scal(ctx_->qpow(-sm));
}

QLaurent QGroupElement::act(const QLaurent& x) const {
    QLaurent out(ctx_);
    for (auto& [n, c] : x.series()) {
        ExpVec m = ev_add(x.shift(), n);
        for (auto e : m)
            if (e < 0) throw std::invalid_argument("act needs nonnegative support");
        // absolute coefficient of Y^m
        QCoeff cc = c * ctx_->qpow(ctx_->pair(x.shift(), n));
        out = out + act_monomial(m).scal(cc);
    }
    return out;
}

QGroupElement qgroup_mul(const QGroupElement& a, const QGroupElement& b) {
    if (a.ctx() != b.ctx()) throw std::invalid_argument("mixed quantum contexts");
    QGroupElement out(a.ctx());
    for (int i = 0; i < a.ctx()->n; ++i) out.image(i) = a.act(b.image(i));
    return out;
}

QGroupElement psi_q_element(Ctx ctx, const ExpVec& n, const Rat& a, const Rat& b, int power) {
    for (auto e : n)
        if (e < 0) throw std::invalid_argument("quantum dilogarithm element needs positive n");
    QGroupElement g(ctx);
    long dn = degree(n);
    for (int i = 0; i < ctx->n; ++i) {
        ExpVec ei(static_cast<size_t>(ctx->n), 0);
        ei[static_cast<size_t>(i)] = 1;
        Rat pairing = ctx->pair(n, ei);
        // exp( power * sum_j (q^{2j{n,e_i}}-1)/(q^{2ja}-1) (-1)^{j+1}/j q^{j(a+b)} Y^{jn} )
        QLaurent expo(ctx);
        bool any = false;
        for (long j = 1; j * dn <= ctx->trunc; ++j) {
            QCoeff num = ctx->qpow(Rat(2 * j) * pairing) - QCoeff(Rat(1));
            QCoeff den = ctx->qpow(Rat(2 * j) * a) - QCoeff(Rat(1));
            QCoeff c = num / den;
            if (c.is_zero()) continue;
            Rat sgn = (j % 2) ? Rat(1) : Rat(-1);
            c = c * QCoeff(sgn * Rat(power) / Rat(j)) * ctx->qpow(Rat(j) * (a + b));
            expo = expo + QLaurent::monomial(ctx, ev_scale(n, j), c);
            any = true;
        }
        QLaurent factor = QLaurent::one(ctx);
        if (any) {
            // all terms sit on multiples of n, so the exponential is the plain one
            QLaurent p = QLaurent::one(ctx);
            Rat fact(1);
            for (long k = 1; k * dn <= ctx->trunc; ++k) {
                p = p * expo;
                if (p.is_zero()) break;
                fact *= Rat(k);
                factor = factor + p.scal(QCoeff(Rat(1) / fact));
            }
        }
        g.image(i) = QLaurent::generator(ctx, i) * factor;
    }
    return g;
}

}  // namespace cdl::qq
