#include "cdl/scatter.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace cdl::scatter {

using alg::degree;
using alg::ev_add;
using alg::ev_is_zero;
using alg::ev_scale;

Rat SkewForm::pair(const ExpVec& a, const ExpVec& b) const {
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

bool SkewForm::nonsingular() const {
    int m = n();
    std::vector<std::vector<Rat>> a(omega);
    for (int col = 0; col < m; ++col) {
        int piv = -1;
        for (int i = col; i < m; ++i)
            if (a[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) { piv = i; break; }
        if (piv < 0) return false;
        std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(col)]);
        for (int i = col + 1; i < m; ++i) {
            if (a[static_cast<size_t>(i)][static_cast<size_t>(col)] == 0) continue;
            Rat f = a[static_cast<size_t>(i)][static_cast<size_t>(col)] /
                    a[static_cast<size_t>(col)][static_cast<size_t>(col)];
            for (int j = col; j < m; ++j)
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                    f * a[static_cast<size_t>(col)][static_cast<size_t>(j)];
        }
    }
    return true;
}

SkewForm skew_form(const std::vector<std::vector<Rat>>& omega) {
    SkewForm f;
    f.omega = omega;
    for (size_t i = 0; i < omega.size(); ++i)
        for (size_t j = 0; j < omega.size(); ++j)
            if (omega[i][j] != -omega[j][i]) throw std::invalid_argument("form not skew");
    return f;
}

SkewForm standard_rank2() {
    return skew_form({{Rat(0), Rat(-1)}, {Rat(1), Rat(0)}});
}

SkewForm form_of(const seed::SkewDecomposition& dec) { return skew_form(dec.omega); }

SkewForm principal_extend(const SkewForm& omega, const std::vector<long>& delta) {
    int n = omega.n();
    std::vector<std::vector<Rat>> o(static_cast<size_t>(2 * n),
                                    std::vector<Rat>(static_cast<size_t>(2 * n), Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) o[static_cast<size_t>(i)][static_cast<size_t>(j)] = omega.omega[static_cast<size_t>(i)][static_cast<size_t>(j)];
    for (int i = 0; i < n; ++i) {
        o[static_cast<size_t>(i)][static_cast<size_t>(n + i)] = rat_of(-1, delta[static_cast<size_t>(i)]);
        o[static_cast<size_t>(n + i)][static_cast<size_t>(i)] = rat_of(1, delta[static_cast<size_t>(i)]);
    }
    return skew_form(o);
}

TruncSeries TruncSeries::one(int nvars, int trunc) {
    TruncSeries s(nvars, trunc);
    s.terms_[ExpVec(static_cast<size_t>(nvars), 0)] = Rat(1);
    return s;
}

bool TruncSeries::is_one() const {
    return terms_.size() == 1 && ev_is_zero(terms_.begin()->first) && terms_.begin()->second == 1;
}

Rat TruncSeries::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void TruncSeries::add_term(const ExpVec& e, const Rat& c) {
    if (c == 0 || degree(e) > trunc_) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    TruncSeries out(*this);
    for (auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    TruncSeries out(*this);
    for (auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    TruncSeries out(nvars_, trunc_);
    for (auto& [ea, ca] : terms_) {
        long da = degree(ea);
        for (auto& [eb, cb] : o.terms_) {
            if (da + degree(eb) > trunc_) continue;
            out.add_term(ev_add(ea, eb), ca * cb);
        }
    }
    return out;
}

TruncSeries TruncSeries::pow_int(long k) const {
    if (k < 0) return inv_unit().pow_int(-k);
    TruncSeries out = one(nvars_, trunc_);
    TruncSeries base(*this);
    unsigned long kk = static_cast<unsigned long>(k);
    while (kk) {
        if (kk & 1) out = out * base;
        base = base * base;
        kk >>= 1;
    }
    return out;
}

TruncSeries TruncSeries::pow_rat(const Rat& a) const {
    if (a.get_den() == 1) {
        long k = static_cast<long>(a.get_num().get_si());
        if (Rat(k) == a) return pow_int(k);
    }
    // (1 + u)^a with u of positive lowest degree
    TruncSeries u(*this);
    Rat c0 = u.coeff(ExpVec(static_cast<size_t>(nvars_), 0));
    if (c0 != 1) throw std::invalid_argument("rational power requires a unit series");
    u.add_term(ExpVec(static_cast<size_t>(nvars_), 0), Rat(-1));
    long low = u.lowest_degree();
    TruncSeries out = one(nvars_, trunc_);
    if (low < 0) return out;
    TruncSeries up = one(nvars_, trunc_);
    for (long k = 1; k * low <= trunc_; ++k) {
        up = up * u;
        if (up.is_zero()) break;
        Rat b = rat_binom(a, static_cast<unsigned long>(k));
        for (auto& [e, c] : up.terms()) out.add_term(e, b * c);
    }
    return out;
}

TruncSeries TruncSeries::inv_unit() const {
    Rat c0 = coeff(ExpVec(static_cast<size_t>(nvars_), 0));
    if (c0 == 0) throw std::invalid_argument("inverse of a non-unit series");
    // geometric series in u = 1 - s/c0
    TruncSeries u = one(nvars_, trunc_);
    for (auto& [e, c] : terms_) u.add_term(e, -c / c0);
    TruncSeries out = one(nvars_, trunc_);
    TruncSeries up = one(nvars_, trunc_);
    long low = u.lowest_degree();
    if (low <= 0) low = 1;
    for (long k = 1; k * low <= trunc_; ++k) {
        up = up * u;
        if (up.is_zero()) break;
        for (auto& [e, c] : up.terms()) out.add_term(e, c);
    }
    for (auto& [e, c] : out.terms_) c /= c0;
    return out;
}

bool TruncSeries::operator==(const TruncSeries& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

long TruncSeries::lowest_degree() const {
    long low = -1;
    for (auto& [e, c] : terms_) {
        long d = degree(e);
        if (d == 0) continue;
        if (low < 0 || d < low) low = d;
    }
    return low;
}

std::string TruncSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str() << "*y^" << alg::ev_str(e);
    }
    return first ? "0" : os.str();
}

TruncSeries one_plus_pow(int nvars, int trunc, const ExpVec& n, const Rat& a) {
    TruncSeries base = TruncSeries::one(nvars, trunc);
    base.add_term(n, Rat(1));
    return base.pow_rat(a);
}

void LieElement::add(const ExpVec& e, const Rat& c) {
    if (c == 0 || degree(e) > trunc) return;
    auto [it, fresh] = coeffs.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    }
}

GroupElement::GroupElement(const SkewForm& omega, int trunc)
    : omega_(omega), trunc_(trunc) {
    images_.assign(static_cast<size_t>(omega.n()), TruncSeries::one(omega.n(), trunc));
}

bool GroupElement::is_identity() const {
    for (auto& u : images_)
        if (!u.is_one()) return false;
    return true;
}

bool GroupElement::operator==(const GroupElement& o) const {
    return trunc_ == o.trunc_ && omega_ == o.omega_ && images_ == o.images_;
}

TruncSeries GroupElement::act_unit(const ExpVec& m) const {
    TruncSeries out = TruncSeries::one(nvars(), trunc_);
    for (size_t j = 0; j < m.size(); ++j) {
        if (m[j] == 0) continue;
        if (m[j] < 0) throw std::invalid_argument("act_unit needs a nonnegative exponent");
        out = out * images_[j].pow_int(m[j]);
    }
    return out;
}

TruncSeries GroupElement::act(const TruncSeries& s) const {
    // memoized generator powers; the per-term product is then cheap
    std::vector<std::vector<TruncSeries>> pows(static_cast<size_t>(nvars()));
    for (int j = 0; j < nvars(); ++j)
        pows[static_cast<size_t>(j)].push_back(TruncSeries::one(nvars(), trunc_));
    auto power = [&](int j, int k) -> const TruncSeries& {
        auto& col = pows[static_cast<size_t>(j)];
        while (static_cast<int>(col.size()) <= k)
            col.push_back(col.back() * images_[static_cast<size_t>(j)]);
        return col[static_cast<size_t>(k)];
    };
    TruncSeries out(nvars(), trunc_);
    for (auto& [m, c] : s.terms()) {
        TruncSeries u = TruncSeries::one(nvars(), trunc_);
        for (size_t j = 0; j < m.size(); ++j) {
            if (m[j] == 0) continue;
            if (m[j] < 0) throw std::invalid_argument("act needs nonnegative exponents");
            u = u * power(static_cast<int>(j), m[j]);
        }
        for (auto& [e, uc] : u.terms()) out.add_term(ev_add(m, e), c * uc);
    }
    return out;
}

std::string GroupElement::str() const {
    std::ostringstream os;
    for (int i = 0; i < nvars(); ++i)
        os << "y" << (i + 1) << " -> y" << (i + 1) << " * (" << images_[static_cast<size_t>(i)].str()
           << ")\n";
    return os.str();
}

GroupElement psi_element(const ExpVec& n, const Rat& c, const SkewForm& omega, int trunc) {
    for (auto e : n)
        if (e < 0) throw std::invalid_argument("dilogarithm element needs a positive vector");
    if (ev_is_zero(n)) throw std::invalid_argument("dilogarithm element needs a nonzero vector");
    GroupElement g(omega, trunc);
    for (int i = 0; i < omega.n(); ++i) {
        ExpVec ei(static_cast<size_t>(omega.n()), 0);
        ei[static_cast<size_t>(i)] = 1;
        Rat a = c * omega.pair(n, ei);
        g.image(i) = one_plus_pow(omega.n(), trunc, n, a);
    }
    return g;
}

GroupElement group_mul(const GroupElement& a, const GroupElement& b) {
    if (!(a.omega() == b.omega()) || a.trunc() != b.trunc())
        throw MixedContext("group elements from different contexts");
    GroupElement out(a.omega(), a.trunc());
    for (int i = 0; i < a.nvars(); ++i) out.image(i) = a.image(i) * a.act(b.image(i));
    return out;
}

GroupElement group_inverse(const GroupElement& a) {
    GroupElement h(a.omega(), a.trunc());
    for (int d = 1; d <= a.trunc(); ++d) {
        GroupElement r = group_mul(a, h);
        for (int i = 0; i < a.nvars(); ++i) {
            TruncSeries fix(a.nvars(), a.trunc());
            for (auto& [e, c] : r.image(i).terms())
                if (degree(e) == d) fix.add_term(e, -c);
            h.image(i) = h.image(i) + fix;
        }
    }
    return h;
}

bool group_eq(const GroupElement& a, const GroupElement& b) { return a == b; }

GroupElement exp_lie(const LieElement& x, const SkewForm& omega, int trunc) {
    int n = omega.n();
    GroupElement g(omega, trunc);
    for (int i = 0; i < n; ++i) {
        ExpVec ei(static_cast<size_t>(n), 0);
        ei[static_cast<size_t>(i)] = 1;
        // relative derivation: t -> r_i t + sum over terms of the graded action
        TruncSeries acc = TruncSeries::one(n, trunc);
        TruncSeries term = TruncSeries::one(n, trunc);
        Rat factorial(1);
        for (long k = 1; k <= trunc; ++k) {
            // term <- D_rel(term)
            TruncSeries next(n, trunc);
            for (auto& [m, c] : term.terms()) {
                for (auto& [nn, xn] : x.coeffs) {
                    Rat w = xn * omega.pair(nn, ev_add(m, ei));
                    if (w != 0) next.add_term(ev_add(m, nn), c * w);
                }
            }
            term = next;
            if (term.is_zero()) break;
            factorial *= Rat(k);
            for (auto& [e, c] : term.terms()) acc.add_term(e, c / factorial);
        }
        g.image(i) = acc;
    }
    return g;
}

namespace {

// degree-d coefficients of log(r) for r == id mod degrees < d
std::map<ExpVec, Rat, GradedLex> lowest_log_part(const GroupElement& r, int d) {
    std::map<ExpVec, Rat, GradedLex> out;
    int n = r.nvars();
    for (int i = 0; i < n; ++i) {
        ExpVec ei(static_cast<size_t>(n), 0);
        ei[static_cast<size_t>(i)] = 1;
        for (auto& [m, c] : r.image(i).terms()) {
            if (degree(m) != d) continue;
            Rat w = r.omega().pair(m, ei);
            if (w == 0) {
                if (c != 0) throw SingularOmega("lowest-degree term invisible to the form");
                continue;
            }
            Rat x = c / w;
            auto it = out.find(m);
            if (it == out.end())
                out.emplace(m, x);
            else if (it->second != x)
                throw NonFactorizable("inconsistent lowest-degree coefficients");
        }
    }
    return out;
}

}  // namespace

LieElement log_group(const GroupElement& g) {
    LieElement x;
    x.nvars = g.nvars();
    x.trunc = g.trunc();
    for (int d = 1; d <= g.trunc(); ++d) {
        GroupElement r = group_mul(group_inverse(exp_lie(x, g.omega(), g.trunc())), g);
        for (auto& [m, c] : lowest_log_part(r, d)) x.add(m, c);
    }
    return x;
}

Rat normalization_factor(const ExpVec& n, const std::vector<long>& delta) {
    Rat out(0);
    for (size_t i = 0; i < n.size(); ++i) {
        if (n[i] == 0) continue;
        Rat q = rat_of(delta[i], n[i]);
        out = (out == 0) ? q : rat_lcm(out, q);
    }
    if (out == 0) throw std::invalid_argument("zero vector has no normalization factor");
    return out;
}

namespace {

// positive cross product means a is steeper than b (larger n1/n2)
long long cross(const ExpVec& a, const ExpVec& b) {
    return static_cast<long long>(a[0]) * b[1] - static_cast<long long>(a[1]) * b[0];
}

GroupElement product_of(const std::vector<DilogFactor>& fs, const SkewForm& omega, int trunc,
                        bool inverted) {
    GroupElement acc(omega, trunc);
    if (!inverted) {
        for (auto& f : fs) acc = group_mul(acc, psi_element(f.n, f.exponent, omega, trunc));
    } else {
        for (auto it = fs.rbegin(); it != fs.rend(); ++it)
            acc = group_mul(acc, psi_element(it->n, -it->exponent, omega, trunc));
    }
    return acc;
}

}  // namespace

std::vector<DilogFactor> group_log_factorize(const GroupElement& g) {
    if (g.nvars() != 2) throw std::invalid_argument("slope ordering requires rank 2");
    int trunc = g.trunc();
    std::vector<DilogFactor> out;
    for (int d = 1; d <= trunc; ++d) {
        GroupElement pinv = product_of(out, g.omega(), trunc, true);
        GroupElement r = group_mul(pinv, g);
        for (auto& [m, c] : lowest_log_part(r, d)) {
            DilogFactor f{m, c};
            auto pos = std::find_if(out.begin(), out.end(), [&](const DilogFactor& o) {
                long long cr = cross(f.n, o.n);
                return cr > 0 || (cr == 0 && degree(f.n) < degree(o.n));
            });
            out.insert(pos, f);
        }
    }
    if (!(product_of(out, g.omega(), trunc, false) == g))
        throw NonFactorizable("ordered product does not reproduce the element");
    return out;
}

Rank2Diagram build_rank2_csd(long delta1, long delta2, int trunc) {
    if (delta1 < 1 || delta2 < 1) throw std::invalid_argument("delta must be positive");
    Rank2Diagram d;
    d.delta = {delta1, delta2};
    d.trunc = trunc;
    d.omega = standard_rank2();
    GroupElement g = group_mul(psi_element({0, 1}, Rat(delta2), d.omega, trunc),
                               psi_element({1, 0}, Rat(delta1), d.omega, trunc));
    std::vector<DilogFactor> fac = group_log_factorize(g);
    if (fac.size() < 2 || !(fac.front().n == ExpVec{1, 0}) || fac.front().exponent != Rat(delta1) ||
        !(fac.back().n == ExpVec{0, 1}) || fac.back().exponent != Rat(delta2))
        throw NonFactorizable("boundary factors of the consistency product are malformed");

    Wall in1{{0, 1}, {1, 0}, {DilogFactor{{1, 0}, Rat(delta1)}}, true};
    Wall in2{{1, 0}, {0, 1}, {DilogFactor{{0, 1}, Rat(delta2)}}, true};
    d.walls.push_back(in1);
    d.walls.push_back(in2);

    // group the interior factors by primitive normal direction
    std::map<std::pair<int, int>, Wall> outgoing;
    for (size_t i = 1; i + 1 < fac.size(); ++i) {
        const auto& f = fac[i];
        int g0 = std::gcd(f.n[0], f.n[1]);
        ExpVec n0{f.n[0] / g0, f.n[1] / g0};
        // positive realization: exponent = s * delta(n) with a positive integer s
        Rat nf = normalization_factor(f.n, d.delta);
        Rat s = f.exponent / nf;
        if (s.get_den() != 1 || s <= 0)
            throw NonFactorizable("wall exponent is not a positive multiple of delta(n)");
        auto key = std::make_pair(static_cast<int>(n0[0]), static_cast<int>(n0[1]));
        auto it = outgoing.find(key);
        if (it == outgoing.end()) {
            // support ray: -B n0 = (delta1 n0_2, -delta2 n0_1), made primitive
            long long rx = delta1 * n0[1], ry = -delta2 * n0[0];
            long long gg = std::gcd(std::llabs(rx), std::llabs(ry));
            Wall w{{static_cast<int32_t>(rx / gg), static_cast<int32_t>(ry / gg)}, n0, {}, false};
            it = outgoing.emplace(key, w).first;
        }
        it->second.factors.push_back(f);
    }
    // outgoing walls sorted by decreasing slope of the normal vector
    std::vector<Wall> ws;
    for (auto& [k, w] : outgoing) ws.push_back(w);
    std::sort(ws.begin(), ws.end(),
              [](const Wall& a, const Wall& b) { return cross(a.normal, b.normal) > 0; });
    for (auto& w : ws) {
        std::sort(w.factors.begin(), w.factors.end(),
                  [](const DilogFactor& a, const DilogFactor& b) { return degree(a.n) < degree(b.n); });
        d.walls.push_back(w);
    }
    return d;
}

GroupElement path_ordered_product(const Rank2Diagram& d, const std::vector<Crossing>& cs) {
    GroupElement acc(d.omega, d.trunc);
    for (auto& c : cs) {
        const DilogFactor& f = d.walls.at(c.wall).factors.at(c.factor);
        acc = group_mul(psi_element(f.n, Rat(c.sign) * f.exponent, d.omega, d.trunc), acc);
    }
    return acc;
}

std::vector<Crossing> full_ccw_loop(const Rank2Diagram& d) {
    std::vector<Crossing> cs;
    // upper half of e1-perp, left half of e2-perp, lower half of e1-perp,
    // outgoing walls in decreasing normal slope, right half of e2-perp
    cs.push_back({0, 0, 1});
    cs.push_back({1, 0, 1});
    cs.push_back({0, 0, -1});
    for (size_t w = 2; w < d.walls.size(); ++w)
        for (size_t f = 0; f < d.walls[w].factors.size(); ++f) cs.push_back({w, f, -1});
    cs.push_back({1, 0, -1});
    return cs;
}

bool period_relation_check(const pattern::PatternRun& run, int trunc) {
    seed::SkewDecomposition dec;
    dec.delta = run.delta;
    int n = run.n;
    dec.omega.assign(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            dec.omega[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                rat_of(run.B.front().at(i, j), run.delta[static_cast<size_t>(i)]);
    SkewForm omega = form_of(dec);
    bool extended = false;
    if (!omega.nonsingular()) {
        omega = principal_extend(omega, run.delta);
        extended = true;
    }
    int nn = omega.n();
    GroupElement acc(omega, trunc);
    for (long s = 0; s < run.P; ++s) {
        ExpVec cp = run.c_plus[static_cast<size_t>(s)];
        if (extended) cp.resize(static_cast<size_t>(nn), 0);
        Rat e = Rat(run.eps[static_cast<size_t>(s)]) *
                Rat(run.delta[static_cast<size_t>(run.dir(s))]);
        acc = group_mul(psi_element(cp, e, omega, trunc), acc);
    }
    return acc.is_identity();
}

bool LogSeries::is_zero() const {
    if (!base.is_zero()) return false;
    for (auto& s : log_parts)
        if (!s.is_zero()) return false;
    return true;
}

LogSeries loop_di_formal(const Rank2Diagram& d, const std::vector<Crossing>& loop) {
    int n = 2, trunc = d.trunc;
    LogSeries out;
    out.base = TruncSeries(n, trunc);
    out.log_parts.assign(2, TruncSeries(n, trunc));
    GroupElement upstream(d.omega, trunc);  // product of inverse crossings back to C+
    for (auto& c : loop) {
        const DilogFactor& f = d.walls.at(c.wall).factors.at(c.factor);
        // y-value at this crossing: y^{n} * u with u from the partial product
        TruncSeries u = upstream.act_unit(f.n);
        long dn = degree(f.n);
        // S2 = sum_j (-1)^{j+1}/j^2 x^j and S1 = sum_j (-1)^{j+1}/j x^j, x = y^n u
        TruncSeries S1(n, trunc), S2(n, trunc);
        TruncSeries xj = TruncSeries::one(n, trunc);
        for (long j = 1; j * dn <= trunc; ++j) {
            xj = xj * u;  // now u^j, shifted below by y^{jn}
            Rat sgn = (j % 2) ? Rat(1) : Rat(-1);
            for (auto& [e, cc] : xj.terms()) {
                ExpVec shifted = ev_add(e, ev_scale(f.n, j));
                if (degree(shifted) > trunc) continue;
                S1.add_term(shifted, sgn * cc / Rat(j));
                S2.add_term(shifted, sgn * cc / (Rat(j) * Rat(j)));
            }
        }
        // log u = log of a unit series
        TruncSeries logu(n, trunc);
        {
            TruncSeries w(u);
            w.add_term(ExpVec(static_cast<size_t>(n), 0), Rat(-1));
            TruncSeries wp = TruncSeries::one(n, trunc);
            long low = std::max<long>(1, w.lowest_degree());
            for (long k = 1; k * low <= trunc && !w.is_zero(); ++k) {
                wp = wp * w;
                if (wp.is_zero()) break;
                Rat sgn = (k % 2) ? Rat(1) : Rat(-1);
                for (auto& [e, cc] : wp.terms()) logu.add_term(e, sgn * cc / Rat(k));
            }
        }
        Rat weight = Rat(c.sign) * f.exponent;
        auto add_scaled = [&](TruncSeries& dst, const TruncSeries& src, const Rat& w) {
            for (auto& [e, cc] : src.terms()) dst.add_term(e, w * cc);
        };
        add_scaled(out.base, S2, weight);
        add_scaled(out.base, logu * S1, -weight / 2);
        for (int i = 0; i < 2; ++i)
            if (f.n[static_cast<size_t>(i)] != 0)
                add_scaled(out.log_parts[static_cast<size_t>(i)], S1,
                           -weight * Rat(f.n[static_cast<size_t>(i)]) / 2);
        // extend the upstream product by the inverse of this crossing
        upstream = group_mul(upstream,
                             psi_element(f.n, Rat(-c.sign) * f.exponent, d.omega, trunc));
    }
    return out;
}

GFanCheck g_fan_embedding_check(long delta1, long delta2, int trunc, int depth) {
    GFanCheck out;
    Rank2Diagram d = build_rank2_csd(delta1, delta2, trunc);
    auto primitive = [](long long x, long long y) {
        long long g = std::gcd(std::llabs(x), std::llabs(y));
        if (g == 0) g = 1;
        return ExpVec{static_cast<int32_t>(x / g), static_cast<int32_t>(y / g)};
    };
    std::set<std::pair<int, int>> wall_rays;
    wall_rays.insert({0, 1});
    wall_rays.insert({0, -1});
    wall_rays.insert({1, 0});
    wall_rays.insert({-1, 0});
    for (size_t w = 2; w < d.walls.size(); ++w)
        wall_rays.insert({d.walls[w].ray[0], d.walls[w].ray[1]});

    // exhaustive rank-2 seed walk in both directions; tropical data only
    seed::IntMat B0(2, 2);
    B0.at(0, 1) = -delta1;
    B0.at(1, 0) = delta2;
    std::set<std::pair<int, int>> g_rays;
    for (int first : {0, 1}) {
        seed::IntMat B = B0, C = seed::IntMat::identity(2), G = seed::IntMat::identity(2);
        int k = first;
        for (int t = 0; t < depth; ++t) {
            for (int j = 0; j < 2; ++j)
                g_rays.insert({static_cast<int>(G.at(0, j)), static_cast<int>(G.at(1, j))});
            seed::IntMat Cn(2, 2), Gn(2, 2);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    if (j == k)
                        Cn.at(i, j) = -C.at(i, k);
                    else
                        Cn.at(i, j) = C.at(i, j) + C.at(i, k) * pos_part(B.at(k, j)) +
                                      pos_part(-C.at(i, k)) * B.at(k, j);
                    if (j == k) {
                        long long v = -G.at(i, k);
                        for (int l = 0; l < 2; ++l) v += G.at(i, l) * pos_part(-B.at(l, k));
                        for (int l = 0; l < 2; ++l) v -= B0.at(i, l) * pos_part(-C.at(l, k));
                        Gn.at(i, j) = v;
                    } else {
                        Gn.at(i, j) = G.at(i, j);
                    }
                }
            C = Cn;
            G = Gn;
            B = seed::mutate_matrix(B, k);
            k = 1 - k;
            if (G == seed::IntMat::identity(2) && C == seed::IntMat::identity(2)) break;
            for (int j = 0; j < 2; ++j)
                g_rays.insert({static_cast<int>(G.at(0, j)), static_cast<int>(G.at(1, j))});
        }
    }
    std::set<std::pair<int, int>> g_prim;
    for (auto& [x, y] : g_rays) {
        ExpVec p = primitive(x, y);
        g_prim.insert({p[0], p[1]});
    }
    out.g_rays.assign(g_prim.size(), ExpVec{});
    size_t idx = 0;
    for (auto& [x, y] : g_prim) out.g_rays[idx++] = ExpVec{x, y};
    for (auto& [x, y] : wall_rays) out.wall_rays.push_back(ExpVec{x, y});

    // A ray beyond the truncation has no wall to land on; it is skipped via the
    // degree of its normal vector n with ray = -B n.
    auto within_truncation = [&](const std::pair<int, int>& rxy) {
        auto [rx, ry] = rxy;
        if ((rx == 0) != (ry == 0) && (rx == 0 || ry == 0)) return true;  // axis ray
        if (!(rx > 0 && ry < 0)) return true;  // outside the outgoing sector
        ExpVec nv = primitive(-static_cast<long long>(ry) * delta1,
                              static_cast<long long>(rx) * delta2);
        return degree(nv) <= trunc;
    };
    out.g_rays_in_support = std::all_of(g_prim.begin(), g_prim.end(), [&](auto& rxy) {
        return !within_truncation(rxy) || wall_rays.count(rxy) > 0;
    });
    out.equal = out.g_rays_in_support && g_prim.size() == wall_rays.size();
    if (!out.equal) {
        for (auto& rxy : wall_rays)
            if (!g_prim.count(rxy)) {
                out.complement = ExpVec{rxy.first, rxy.second};
                break;
            }
    }
    return out;
}

}  // namespace cdl::scatter
