#include "cdl/dilog.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace cdl::dilog {

using alg::FactoredSF;

namespace {

// convergent for |x| <= 1/2
double li2_series(double x) {
    double term = x, sum = x;
    for (int n = 2; n < 200; ++n) {
        term *= x;
        double add = term / (static_cast<double>(n) * n);
        sum += add;
        if (std::fabs(add) < 1e-18 * (1 + std::fabs(sum))) break;
    }
    return sum;
}

}  // namespace

double li2(double x) {
    if (x > 1.0) throw DomainError("li2 defined on (-inf, 1]");
    if (x == 1.0) return kZeta2;
    if (x == 0.0) return 0.0;
    if (x < -1.0) {
        // Li2(x) + Li2(1/x) = -pi^2/6 - log^2(-x)/2 for x < 0
        double lx = std::log(-x);
        return -kZeta2 - 0.5 * lx * lx - li2(1.0 / x);
    }
    if (x < -0.5) {
        // Landen: Li2(x) = -Li2(x/(x-1)) - log^2(1-x)/2
        double l = std::log1p(-x);
        return -li2(x / (x - 1.0)) - 0.5 * l * l;
    }
    if (x <= 0.5) return li2_series(x);
    // 0.5 < x < 1: Euler reflection
    return kZeta2 - std::log(x) * std::log1p(-x) - li2_series(1.0 - x);
}

double rogers(double x) {
    if (x < 0.0 || x > 1.0) throw DomainError("rogers L defined on [0,1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return kZeta2;
    return li2(x) + 0.5 * std::log(x) * std::log1p(-x);
}

double mod_rogers(double x) {
    if (std::isinf(x) && x > 0) return kZeta2;
    if (x < 0.0) throw DomainError("modified Rogers defined on [0, inf)");
    if (x == 0.0) return 0.0;
    if (x > 1.0) return kZeta2 - mod_rogers(1.0 / x);
    return rogers(x / (1.0 + x));
}

DIReport verify_period_di(const PatternRun& run, const Perm& nu, long samples, double tol,
                          unsigned long long rng_seed) {
    (void)nu;
    DIReport rep;
    rep.weights = pattern::di_weights(run);
    rep.samples = samples;
    rep.rng_seed = rng_seed;
    rep.constant_n_minus = Rat(static_cast<long>(rep.weights.n_minus));
    rep.constant_n_plus = Rat(static_cast<long>(rep.weights.n_plus));

    std::vector<FactoredSF> ys;
    std::vector<long> ds;
    for (long s = 0; s < run.P; ++s) {
        ys.push_back(pattern::separation_y(run, s, run.dir(s)));
        ds.push_back(run.delta[static_cast<size_t>(run.dir(s))]);
    }
    std::mt19937_64 rng(rng_seed);
    std::uniform_real_distribution<double> du(-2.0, 2.0);  // log10-uniform on [1e-2, 1e2]
    for (long t = 0; t < samples; ++t) {
        std::vector<double> pt(static_cast<size_t>(run.n));
        for (auto& v : pt) v = std::pow(10.0, du(rng));
        double sum1 = 0, sum2 = 0, sum3 = 0;
        for (long s = 0; s < run.P; ++s) {
            double v = alg::eval_positive(ys[static_cast<size_t>(s)], pt);
            double d = static_cast<double>(ds[static_cast<size_t>(s)]);
            sum1 += d * mod_rogers(v);
            sum2 += d * mod_rogers(1.0 / v);
            int eps = run.eps[static_cast<size_t>(s)];
            sum3 += eps * d * mod_rogers(eps > 0 ? v : 1.0 / v);
        }
        double r1 = std::fabs(sum1 - static_cast<double>(rep.weights.n_minus) * kZeta2);
        double r2 = std::fabs(sum2 - static_cast<double>(rep.weights.n_plus) * kZeta2);
        double r3 = std::fabs(sum3);
        rep.max_residual_di1 = std::max(rep.max_residual_di1, r1);
        rep.max_residual_di2 = std::max(rep.max_residual_di2, r2);
        rep.max_residual_di3 = std::max(rep.max_residual_di3, r3);
        if (r1 > tol || r2 > tol || r3 > tol) {
            std::ostringstream os;
            os << "dilogarithm identity residual (" << r1 << ", " << r2 << ", " << r3
               << ") above tolerance " << tol << " at sample " << t;
            throw ToleranceExceeded(os.str());
        }
    }
    return rep;
}

void WedgeElement::add(long a, long b, const Rat& coeff) {
    if (a == b || coeff == 0) return;
    Rat c = coeff;
    if (a > b) {
        std::swap(a, b);
        c = -c;
    }
    auto [it, fresh] = coeffs_.emplace(std::make_pair(a, b), c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

void WedgeElement::add_pair(const FactoredSF& f, const FactoredSF& g, const Rat& coeff) {
    // bilinear expansion over monomial generators and atoms
    std::vector<std::pair<long, long>> lf, lg;
    for (int i = 0; i < f.nvars(); ++i)
        if (f.mono()[static_cast<size_t>(i)] != 0)
            lf.push_back({i, f.mono()[static_cast<size_t>(i)]});
    for (auto& [id, e] : f.factors()) lf.push_back({n_ + id, e});
    for (int i = 0; i < g.nvars(); ++i)
        if (g.mono()[static_cast<size_t>(i)] != 0)
            lg.push_back({i, g.mono()[static_cast<size_t>(i)]});
    for (auto& [id, e] : g.factors()) lg.push_back({n_ + id, e});
    for (auto& [ida, ea] : lf)
        for (auto& [idb, eb] : lg) add(ida, idb, coeff * Rat(ea) * Rat(eb));
}

WedgeElement& WedgeElement::operator+=(const WedgeElement& o) {
    for (auto& [k, c] : o.coeffs_) add(k.first, k.second, c);
    return *this;
}

WedgeElement WedgeElement::operator-(const WedgeElement& o) const {
    WedgeElement out(*this);
    for (auto& [k, c] : o.coeffs_) out.add(k.first, k.second, -c);
    return out;
}

std::string WedgeElement::str() const {
    std::ostringstream os;
    for (auto& [k, c] : coeffs_)
        os << c.get_str() << "*<" << k.first << "^" << k.second << "> ";
    return coeffs_.empty() ? "0" : os.str();
}

WedgeElement wedge_check(const PatternRun& run) {
    WedgeElement acc(run.n);
    for (long s = 0; s < run.P; ++s) {
        FactoredSF y = pattern::separation_y(run, s, run.dir(s));
        FactoredSF opy = pattern::one_plus_mutating_y(run, s);
        acc.add_pair(y, opy, Rat(run.delta[static_cast<size_t>(run.dir(s))]));
    }
    return acc;
}

void require_zero_wedge(const PatternRun& run) {
    WedgeElement el = wedge_check(run);
    if (!el.is_zero())
        throw NonZeroWedge("wedge element has " + std::to_string(el.size()) +
                           " surviving pairs: " + el.str());
}

WedgeElement v_element(const PatternRun& run, long s) {
    int n = run.n;
    WedgeElement v(n);
    std::vector<FactoredSF> F(static_cast<size_t>(n), FactoredSF(n));
    for (int i = 0; i < n; ++i)
        F[static_cast<size_t>(i)].mul_poly(run.F[static_cast<size_t>(s)][static_cast<size_t>(i)], 1);
    for (int i = 0; i < n; ++i) {
        alg::ExpVec c(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j)
            c[static_cast<size_t>(j)] = static_cast<int32_t>(run.C[static_cast<size_t>(s)].at(j, i));
        v.add_pair(F[static_cast<size_t>(i)], FactoredSF::monomial(c),
                   Rat(run.delta[static_cast<size_t>(i)]));
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long bji = run.B[static_cast<size_t>(s)].at(j, i);
            if (bji == 0) continue;
            Rat coeff = rat_of(run.delta[static_cast<size_t>(i)] * bji, 2);
            v.add_pair(F[static_cast<size_t>(i)], F[static_cast<size_t>(j)], coeff);
        }
    return v;
}

VtReport vt_check(const PatternRun& run) {
    VtReport rep;
    WedgeElement prev = v_element(run, 0);
    for (long s = 0; s < run.P; ++s) {
        WedgeElement next = v_element(run, s + 1);
        WedgeElement step(run.n);
        step.add_pair(pattern::separation_y(run, s, run.dir(s)),
                      pattern::one_plus_mutating_y(run, s),
                      Rat(run.delta[static_cast<size_t>(run.dir(s))]));
        if (!((next - prev) == step))
            throw StepMismatch("V-element step mismatch at s = " + std::to_string(s));
        prev = next;
        ++rep.steps_checked;
    }
    rep.periodic_equal = (v_element(run, run.P) - v_element(run, 0)).is_zero();
    return rep;
}

}  // namespace cdl::dilog
