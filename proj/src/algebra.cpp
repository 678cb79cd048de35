#include "cdl/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>

namespace cdl::alg {

long degree(const ExpVec& v) {
    long d = 0;
    for (auto e : v) d += e;
    return d;
}

ExpVec ev_add(const ExpVec& a, const ExpVec& b) {
    ExpVec out(a);
    for (size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

ExpVec ev_sub(const ExpVec& a, const ExpVec& b) {
    ExpVec out(a);
    for (size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

ExpVec ev_neg(const ExpVec& a) {
    ExpVec out(a);
    for (auto& e : out) e = -e;
    return out;
}

ExpVec ev_scale(const ExpVec& a, long k) {
    ExpVec out(a);
    for (auto& e : out) e = static_cast<int32_t>(e * k);
    return out;
}

bool ev_is_zero(const ExpVec& v) {
    return std::all_of(v.begin(), v.end(), [](int32_t e) { return e == 0; });
}

bool ev_leq(const ExpVec& a, const ExpVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

ExpVec ev_min(const ExpVec& a, const ExpVec& b) {
    ExpVec out(a);
    for (size_t i = 0; i < out.size(); ++i) out[i] = std::min(a[i], b[i]);
    return out;
}

ExpVec ev_pos(const ExpVec& a) {
    ExpVec out(a);
    for (auto& e : out) e = std::max(e, 0);
    return out;
}

std::string ev_str(const ExpVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

bool GradedLex::operator()(const ExpVec& a, const ExpVec& b) const {
    long da = degree(a), db = degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly MultiPoly::constant(int nvars, const Rat& c) {
    MultiPoly p(nvars);
    if (c != 0) p.terms_[ExpVec(nvars, 0)] = c;
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
    MultiPoly p(nvars);
    ExpVec e(nvars, 0);
    e[i] = 1;
    p.terms_[e] = Rat(1);
    return p;
}

MultiPoly MultiPoly::monomial(const ExpVec& e, const Rat& c) {
    MultiPoly p(static_cast<int>(e.size()));
    if (c != 0) p.terms_[e] = c;
    return p;
}

bool MultiPoly::is_one() const {
    return terms_.size() == 1 && ev_is_zero(terms_.begin()->first) &&
           terms_.begin()->second == 1;
}

Rat MultiPoly::constant_term() const {
    auto it = terms_.find(ExpVec(nvars_, 0));
    return it == terms_.end() ? Rat(0) : it->second;
}

long MultiPoly::total_degree() const {
    return terms_.empty() ? -1 : degree(terms_.rbegin()->first);
}

void MultiPoly::add_term(const ExpVec& e, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly out(*this);
    for (auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly out(*this);
    for (auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly out(nvars_);
    for (auto& [ea, ca] : terms_)
        for (auto& [eb, cb] : o.terms_) out.add_term(ev_add(ea, eb), ca * cb);
    return out;
}

MultiPoly MultiPoly::pow(unsigned long k) const {
    MultiPoly out = MultiPoly::one(nvars_);
    MultiPoly base(*this);
    while (k) {
        if (k & 1) out = out * base;
        base = base * base;
        k >>= 1;
    }
    return out;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

std::pair<ExpVec, Rat> MultiPoly::leading() const {
    if (terms_.empty()) throw std::logic_error("leading() of zero polynomial");
    auto it = terms_.rbegin();
    return {it->first, it->second};
}

double MultiPoly::eval(const std::vector<double>& point) const {
    double acc = 0;
    for (auto& [e, c] : terms_) {
        double t = c.get_d();
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) t *= std::pow(point[i], static_cast<double>(e[i]));
        acc += t;
    }
    return acc;
}

std::string MultiPoly::str(const std::vector<std::string>& vars) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        bool wrote = false;
        if (c != 1 || ev_is_zero(e)) {
            os << c.get_str();
            wrote = true;
        }
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (wrote) os << "*";
            if (i < vars.size())
                os << vars[i];
            else
                os << "y" << (i + 1);
            if (e[i] != 1) os << "^" << e[i];
            wrote = true;
        }
    }
    return os.str();
}

std::string MultiPoly::canonical_key() const {
    std::ostringstream os;
    os << nvars_ << ";";
    for (auto& [e, c] : terms_) {
        for (auto x : e) os << x << ",";
        os << ":" << c.get_str() << ";";
    }
    return os.str();
}

MultiPoly exact_div(const MultiPoly& num, const MultiPoly& den) {
    if (den.is_zero()) throw NonDivisible("division by zero polynomial");
    MultiPoly rem(num);
    MultiPoly quot(num.nvars());
    auto [lde, ldc] = den.leading();
    while (!rem.is_zero()) {
        auto [lre, lrc] = rem.leading();
        if (!ev_leq(lde, lre))
            throw NonDivisible("leading term not divisible; remainder nonzero");
        ExpVec qe = ev_sub(lre, lde);
        Rat qc = lrc / ldc;
        quot.add_term(qe, qc);
        MultiPoly t = MultiPoly::monomial(qe, qc) * den;
        rem = rem - t;
    }
    return quot;
}

AtomTable& AtomTable::instance() {
    static AtomTable table;
    return table;
}

AtomId AtomTable::intern(const MultiPoly& p) {
    if (p.constant_term() != 1)
        throw std::invalid_argument("atom must have constant term 1");
    if (p.term_count() < 2) throw std::invalid_argument("atom must have >= 2 terms");
    std::string key = p.canonical_key();
    std::lock_guard<std::mutex> lock(mu_);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    AtomId id = static_cast<AtomId>(atoms_.size());
    atoms_.push_back(std::make_shared<const MultiPoly>(p));
    index_.emplace(std::move(key), id);
    return id;
}

const MultiPoly& AtomTable::poly(AtomId id) const {
    std::lock_guard<std::mutex> lock(mu_);
    return *atoms_.at(static_cast<size_t>(id));
}

size_t AtomTable::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return atoms_.size();
}

std::string LaurentMonomial::str(const std::vector<std::string>& vars) const {
    bool wrote = false;
    std::ostringstream os;
    for (size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0) continue;
        if (wrote) os << "*";
        if (i < vars.size())
            os << vars[i];
        else
            os << "y" << (i + 1);
        if (exponents[i] != 1) os << "^" << exponents[i];
        wrote = true;
    }
    return wrote ? os.str() : "1";
}

FactoredSF FactoredSF::monomial(const ExpVec& e) {
    FactoredSF f;
    f.mono_ = e;
    return f;
}

FactoredSF FactoredSF::generator(int nvars, int i) {
    FactoredSF f(nvars);
    f.mono_[i] = 1;
    return f;
}

void FactoredSF::mul_monomial(const ExpVec& e) { mono_ = ev_add(mono_, e); }

void FactoredSF::mul_atom(AtomId id, long exp) {
    if (exp == 0) return;
    auto [it, fresh] = factors_.emplace(id, exp);
    if (!fresh) {
        it->second += exp;
        if (it->second == 0) factors_.erase(it);
    }
}

void FactoredSF::mul_poly(const MultiPoly& p, long exp) {
    if (exp == 0 || p.is_one()) return;
    if (p.is_zero()) throw std::invalid_argument("zero polynomial in FactoredSF");
    if (p.term_count() == 1) {
        auto [e, c] = p.leading();
        if (c != 1) throw std::invalid_argument("non-unit monomial coefficient");
        mul_monomial(ev_scale(e, exp));
        return;
    }
    mul_atom(AtomTable::instance().intern(p), exp);
}

FactoredSF FactoredSF::operator*(const FactoredSF& o) const {
    FactoredSF out(*this);
    out.mul_monomial(o.mono_);
    for (auto& [id, e] : o.factors_) out.mul_atom(id, e);
    return out;
}

FactoredSF FactoredSF::inverse() const {
    FactoredSF out;
    out.mono_ = ev_neg(mono_);
    for (auto& [id, e] : factors_) out.factors_[id] = -e;
    return out;
}

FactoredSF FactoredSF::pow(long k) const {
    FactoredSF out;
    out.mono_ = ev_scale(mono_, k);
    if (k != 0)
        for (auto& [id, e] : factors_) out.factors_[id] = e * k;
    return out;
}

bool FactoredSF::operator==(const FactoredSF& o) const {
    return mono_ == o.mono_ && factors_ == o.factors_;
}

std::pair<MultiPoly, MultiPoly> FactoredSF::to_fraction() const {
    int n = nvars();
    MultiPoly num = MultiPoly::monomial(ev_pos(mono_), Rat(1));
    MultiPoly den = MultiPoly::monomial(ev_pos(ev_neg(mono_)), Rat(1));
    for (auto& [id, e] : factors_) {
        const MultiPoly& a = AtomTable::instance().poly(id);
        if (e > 0)
            num = num * a.pow(static_cast<unsigned long>(e));
        else
            den = den * a.pow(static_cast<unsigned long>(-e));
    }
    (void)n;
    return {num, den};
}

std::string FactoredSF::str(const std::vector<std::string>& vars) const {
    std::ostringstream os;
    LaurentMonomial m{mono_};
    os << m.str(vars);
    for (auto& [id, e] : factors_) {
        os << "*(" << AtomTable::instance().poly(id).str(vars) << ")";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

LaurentMonomial tropicalize(const FactoredSF& f) { return LaurentMonomial{f.mono()}; }

double eval_positive(const FactoredSF& f, const std::vector<double>& point) {
    for (double x : point)
        if (!(x > 0)) throw std::invalid_argument("eval_positive needs positive point");
    double acc = 1;
    for (size_t i = 0; i < f.mono().size(); ++i)
        if (f.mono()[i] != 0)
            acc *= std::pow(point[i], static_cast<double>(f.mono()[i]));
    for (auto& [id, e] : f.factors()) {
        double v = AtomTable::instance().poly(id).eval(point);
        acc *= std::pow(v, static_cast<double>(e));
    }
    if (!std::isfinite(acc)) throw EvalOverflow("value exceeded double range");
    return acc;
}

}  // namespace cdl::alg
