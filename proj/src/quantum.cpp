#include "cdl/quantum.hpp"

#include <sstream>

#include "cdl/scatter.hpp"

namespace cdl::quantum {

using alg::ExpVec;
using alg::degree;
using alg::ev_is_zero;
using alg::ev_scale;
using qq::QCoeff;
using qq::QContext;

Ctx context_for(const IntMat& B, int trunc) {
    seed::SkewDecomposition dec = seed::skew_decompose(B);
    return qq::make_context(dec.omega, dec.delta, trunc);
}

QYState initial_state(Ctx ctx, const IntMat& B) {
    QYState st;
    st.ctx = ctx;
    st.B = B;
    st.C = IntMat::identity(B.rows());
    for (int i = 0; i < B.rows(); ++i) st.Y.push_back(QLaurent::generator(ctx, i));
    return st;
}

long qk_exponent(const Ctx& ctx, long delta_k) {
    if (ctx->d % delta_k != 0) throw std::logic_error("root order misses a delta");
    return ctx->d / delta_k;
}

namespace {

int tropical_sign(const IntMat& C, int k) {
    int sgn = 0;
    for (int i = 0; i < C.rows(); ++i) {
        long long v = C.at(i, k);
        if (v == 0) continue;
        int s = v > 0 ? 1 : -1;
        if (sgn == 0) sgn = s;
        else if (sgn != s)
            throw std::logic_error("sign-coherence violated");
    }
    if (sgn == 0) throw std::logic_error("zero c-vector");
    return sgn;
}

std::vector<QLaurent> mutate_with_eps(const QYState& st, int k, int eps) {
    const Ctx& ctx = st.ctx;
    int n = st.B.rows();
    long dk = ctx->delta[static_cast<size_t>(k)];
    std::vector<QLaurent> out;
    for (int i = 0; i < n; ++i) {
        if (i == k) {
            out.push_back(st.Y[static_cast<size_t>(k)].inverse());
            continue;
        }
        long b = st.B.at(k, i);
        long m = pos_part(eps * b);
        // q^{omega_ki [eps b]_+} Y_i Y_k^{[eps b]_+} prod_u (1 + q_k^{...} Y_k^eps)^{-sgn b}
        QLaurent val = st.Y[static_cast<size_t>(i)];
        if (m > 0) {
            val = val * st.Y[static_cast<size_t>(k)].pow(m);
            val = val.scal(ctx->qpow(rat_of(b * m, dk)));
        }
        if (b != 0) {
            int sb = sign_of(b);
            QLaurent yke = st.Y[static_cast<size_t>(k)].pow(eps);
            for (long u = 1; u <= std::abs(b); ++u) {
                QLaurent factor =
                    QLaurent::one(ctx) +
                    yke.scal(ctx->qpow(rat_of(eps * sb * (2 * u - 1), dk)));
                val = val * factor.pow(-sb);
            }
        }
        out.push_back(val);
    }
    return out;
}

}  // namespace

QYState quantum_mutate(const QYState& st, int k) {
    if (st.Y[static_cast<size_t>(k)].is_zero())
        throw TruncationLoss("mutating variable fell outside the cone budget");
    int eps = tropical_sign(st.C, k);
    std::vector<QLaurent> a = mutate_with_eps(st, k, eps);
    std::vector<QLaurent> b = mutate_with_eps(st, k, -eps);
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i]))
            throw IdentityFails("eps-expressions of the quantum mutation disagree");
    QYState out;
    out.ctx = st.ctx;
    out.Y = std::move(a);
    int n = st.B.rows();
    out.C = IntMat(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (j == k)
                out.C.at(i, j) = -st.C.at(i, k);
            else
                out.C.at(i, j) = st.C.at(i, j) + st.C.at(i, k) * pos_part(st.B.at(k, j)) +
                                 pos_part(-st.C.at(i, k)) * st.B.at(k, j);
        }
    out.B = seed::mutate_matrix(st.B, k);
    return out;
}

std::vector<QYState> quantum_run(Ctx ctx, const IntMat& B, const std::vector<int>& dirs) {
    std::vector<QYState> states{initial_state(std::move(ctx), B)};
    for (int k : dirs) states.push_back(quantum_mutate(states.back(), k));
    return states;
}

QReport verify_qdi_tropical(const PatternRun& run, int trunc) {
    Ctx ctx = context_for(run.B.front(), trunc);
    QLaurent acc = QLaurent::one(ctx);
    for (long s = 0; s < run.P; ++s) {
        long dk = run.delta[static_cast<size_t>(run.dir(s))];
        QLaurent arg = QLaurent::monomial(ctx, run.c_plus[static_cast<size_t>(s)]);
        if (degree(run.c_plus[static_cast<size_t>(s)]) > trunc) continue;
        QLaurent f = qq::psi_q_series(arg, qk_exponent(ctx, dk));
        if (run.eps[static_cast<size_t>(s)] < 0) f = f.inverse();
        acc = f * acc;
    }
    QReport rep;
    rep.ok = acc.is_one();
    if (!rep.ok) rep.detail = "tropical product differs from 1: " + acc.str();
    return rep;
}

QReport verify_qdi_universal(const PatternRun& run, int trunc) {
    Ctx ctx = context_for(run.B.front(), trunc);
    std::vector<int> dirs(run.dirs.begin(), run.dirs.end());
    std::vector<QYState> states = quantum_run(ctx, run.B.front(), dirs);
    QLaurent univ = QLaurent::one(ctx);
    QLaurent trop = QLaurent::one(ctx);
    for (long s = 0; s < run.P; ++s) {
        int k = run.dir(s);
        int eps = run.eps[static_cast<size_t>(s)];
        long dk = run.delta[static_cast<size_t>(k)];
        long qe = qk_exponent(ctx, dk);
        QLaurent ytil = states[static_cast<size_t>(s)].Y[static_cast<size_t>(k)].pow(eps);
        QLaurent fu = qq::psi_q_series(ytil, qe);
        if (eps < 0) fu = fu.inverse();
        univ = univ * fu;
        QLaurent ft = qq::psi_q_series(QLaurent::monomial(ctx, run.c_plus[static_cast<size_t>(s)]), qe);
        if (eps < 0) ft = ft.inverse();
        trop = ft * trop;
        if (!(trop == univ))
            return {false, "shuffle formula fails at step " + std::to_string(s)};
    }
    QReport rep;
    rep.ok = univ.is_one();
    if (!rep.ok) rep.detail = "universal product differs from 1";
    return rep;
}

QReport verify_q_pentagon(int trunc) {
    using qq::QLaurent;
    // (i) difference relation Psi_q(q^2 x) = (1+qx) Psi_q(x) in one variable
    {
        Ctx c1 = qq::make_context({{Rat(0)}}, {1}, trunc);
        QLaurent x = QLaurent::generator(c1, 0);
        QLaurent lhs = qq::psi_q_series(x.scal(c1->qpow(Rat(2))), c1->d);
        QLaurent rhs =
            (QLaurent::one(c1) + x.scal(c1->qpow(Rat(1)))) * qq::psi_q_series(x, c1->d);
        if (!(lhs == rhs)) return {false, "quantum difference relation fails"};
        if (!qq::psi_q_series(QLaurent(c1), c1->d).is_one())
            return {false, "empty-argument quantum dilogarithm is not 1"};
    }
    // (ii) q-binomial theorem for ab = qba, n <= 8
    {
        Ctx c2 = qq::two_generator_context(rat_of(1, 2), trunc);
        QLaurent a = QLaurent::generator(c2, 0), b = QLaurent::generator(c2, 1);
        if (!(a * b == (b * a).scal(c2->qpow(Rat(1)))))
            return {false, "two-generator relation ab = qba fails"};
        for (int n = 0; n <= 8; ++n) {
            QLaurent lhs = (a + b).pow(n);
            QLaurent rhs(c2);
            for (int k = 0; k <= n; ++k)
                rhs = rhs + (b.pow(k) * a.pow(n - k)).scal(qq::q_binomial(n, k, c2->d));
            if (!(lhs == rhs)) return {false, "q-binomial theorem fails at n = " + std::to_string(n)};
        }
    }
    // (iii) q-exponential identities
    {
        Ctx c2 = qq::two_generator_context(rat_of(1, 2), trunc);
        long e = c2->d;  // q = t^d
        QLaurent a = QLaurent::generator(c2, 0), b = QLaurent::generator(c2, 1);
        if (!(qq::e_q_series(b, e) * qq::e_q_series(a, e) == qq::e_q_series(a + b, e)))
            return {false, "e_q(b) e_q(a) = e_q(a+b) fails"};
        QLaurent bma = b - b * a;
        if (!(qq::e_q_series(a, e) * qq::e_q_series(b, e) ==
              qq::e_q_series(bma, e) * qq::e_q_series(a, e)))
            return {false, "e_q(a) e_q(b) = e_q(b-ba) e_q(a) fails"};
        QLaurent mba = QLaurent(c2) - b * a;
        QLaurent lhs = qq::e_q_series(a, e) * qq::e_q_series(b, e);
        if (!(lhs == qq::e_q_series(b, e) * qq::e_q_series(mba, e) * qq::e_q_series(a, e)))
            return {false, "q-exponential pentagon fails"};
        if (!(lhs == qq::e_q_series(bma + a, e)))
            return {false, "e_q(a) e_q(b) = e_q(b-ba+a) fails"};
    }
    // (iv) quantum dilogarithm pentagon for uv = q^2 vu
    {
        Ctx c = qq::two_generator_context(Rat(1), trunc);
        long e = c->d;
        QLaurent u = QLaurent::generator(c, 0), v = QLaurent::generator(c, 1);
        QLaurent qvu = (v * u).scal(c->qpow(Rat(1)));
        QLaurent lhs = qq::psi_q_series(u, e) * qq::psi_q_series(v, e);
        QLaurent rhs = qq::psi_q_series(v, e) * qq::psi_q_series(qvu, e) * qq::psi_q_series(u, e);
        if (!(lhs == rhs)) return {false, "quantum pentagon for Psi_q fails"};
    }
    // (v) element-level pentagon at integer and fractional intervals
    {
        Ctx c = qq::make_context({{Rat(0), Rat(-1)}, {Rat(1), Rat(0)}}, {1, 1}, trunc);
        auto P = [&](const ExpVec& n, const Rat& aa, const Rat& bb) {
            return qq::psi_q_element(c, n, aa, bb);
        };
        QGroupElement lhs = qq::qgroup_mul(P({0, 1}, Rat(1), Rat(0)), P({1, 0}, Rat(1), Rat(0)));
        QGroupElement rhs = qq::qgroup_mul(
            P({1, 0}, Rat(1), Rat(0)),
            qq::qgroup_mul(P({1, 1}, Rat(1), Rat(0)), P({0, 1}, Rat(1), Rat(0))));
        if (!(lhs == rhs)) return {false, "element pentagon (c=1) fails"};
    }
    {
        Ctx c = qq::make_context({{Rat(0), rat_of(-1, 2)}, {rat_of(1, 2), Rat(0)}}, {1, 1},
                                 trunc, 2);
        Rat cc = rat_of(1, 2), b1 = rat_of(1, 2), b2 = rat_of(-1, 2);
        auto P = [&](const ExpVec& n, const Rat& aa, const Rat& bb) {
            return qq::psi_q_element(c, n, aa, bb);
        };
        QGroupElement lhs = qq::qgroup_mul(P({0, 1}, cc, b2), P({1, 0}, cc, b1));
        QGroupElement rhs = qq::qgroup_mul(
            P({1, 0}, cc, b1), qq::qgroup_mul(P({1, 1}, cc, b1 + b2), P({0, 1}, cc, b2)));
        if (!(lhs == rhs)) return {false, "element pentagon (c=1/2) fails"};
    }
    // (vi) fission-fusion
    {
        Ctx c = qq::make_context({{Rat(0), Rat(-1)}, {Rat(1), Rat(0)}}, {1, 2}, trunc, 2);
        for (auto [aa, bb, p] : std::vector<std::tuple<Rat, Rat, int>>{
                 {Rat(1), Rat(0), 2}, {rat_of(1, 2), rat_of(1, 2), 2}, {Rat(1), Rat(0), 3}}) {
            ExpVec n{1, 1};
            QGroupElement lhs = qq::psi_q_element(c, n, aa, bb);
            QGroupElement rhs(c);
            for (int t = 1; t <= p; ++t)
                rhs = qq::qgroup_mul(
                    rhs, qq::psi_q_element(c, n, Rat(p) * aa, bb + Rat(2 * t - p - 1) * aa));
            if (!(lhs == rhs)) return {false, "fission-fusion fails"};
        }
    }
    return {true, ""};
}

QReport qcsd_wall_identity(QcsdCase which, int trunc) {
    struct QF {
        ExpVec n;
        Rat a, b;
    };
    std::vector<QF> rhs;
    Ctx ctx;
    QGroupElement lhs;
    if (which == QcsdCase::A1Affine) {
        ctx = qq::make_context({{Rat(0), Rat(-1)}, {Rat(1), Rat(0)}}, {2, 2}, trunc, 2);
        lhs = qq::qgroup_mul(qq::psi_q_element(ctx, {0, 1}, rat_of(1, 2), Rat(0)),
                             qq::psi_q_element(ctx, {1, 0}, rat_of(1, 2), Rat(0)));
        rhs.push_back({{1, 0}, rat_of(1, 2), Rat(0)});
        for (int p = 1; 2 * p + 1 <= trunc; ++p)
            rhs.push_back({{static_cast<int32_t>(p + 1), static_cast<int32_t>(p)},
                           rat_of(1, 2), Rat(0)});
        for (int j = 0; (1 << (j + 1)) <= trunc; ++j) {
            Rat aa = rat_pow(Rat(2), j - 1);
            ExpVec n{static_cast<int32_t>(1 << j), static_cast<int32_t>(1 << j)};
            rhs.push_back({n, aa, -aa});
            rhs.push_back({n, aa, aa});
        }
        for (int p = static_cast<int>(trunc); p >= 1; --p)
            if (2 * p + 1 <= trunc)
                rhs.push_back({{static_cast<int32_t>(p), static_cast<int32_t>(p + 1)},
                               rat_of(1, 2), Rat(0)});
        rhs.push_back({{0, 1}, rat_of(1, 2), Rat(0)});
    } else {
        ctx = qq::make_context({{Rat(0), Rat(-1)}, {Rat(1), Rat(0)}}, {1, 4}, trunc, 2);
        lhs = qq::qgroup_mul(qq::psi_q_element(ctx, {0, 1}, rat_of(1, 4), Rat(0)),
                             qq::psi_q_element(ctx, {1, 0}, Rat(1), Rat(0)));
        std::vector<QF> all;
        all.push_back({{1, 0}, Rat(1), Rat(0)});
        for (int p = 1; 6 * p + 1 <= trunc * 3; ++p) {
            if (2 * p + 1 + 4 * p <= trunc)
                all.push_back({{static_cast<int32_t>(2 * p + 1), static_cast<int32_t>(4 * p)},
                               Rat(1), Rat(0)});
            if (3 * p - 1 <= trunc)
                all.push_back({{static_cast<int32_t>(p), static_cast<int32_t>(2 * p - 1)},
                               rat_of(1, 4), Rat(0)});
            if (2 * p - 1 + 4 * p <= trunc)
                all.push_back({{static_cast<int32_t>(2 * p - 1), static_cast<int32_t>(4 * p)},
                               Rat(1), Rat(0)});
            if (3 * p + 1 <= trunc)
                all.push_back({{static_cast<int32_t>(p), static_cast<int32_t>(2 * p + 1)},
                               rat_of(1, 4), Rat(0)});
        }
        if (3 <= trunc) all.push_back({{1, 2}, rat_of(1, 2), Rat(0)});
        for (int j = 0; 3 * (1 << j) <= trunc; ++j) {
            Rat aa = rat_pow(Rat(2), j - 1);
            ExpVec n{static_cast<int32_t>(1 << j), static_cast<int32_t>(1 << (j + 1))};
            all.push_back({n, aa, -aa});
            all.push_back({n, aa, aa});
        }
        all.push_back({{0, 1}, rat_of(1, 4), Rat(0)});
        // slope-sorted, decreasing n1/n2; the boundary factors stay at the ends
        std::stable_sort(all.begin(), all.end(), [](const QF& x, const QF& y) {
            return static_cast<long long>(x.n[0]) * y.n[1] -
                       static_cast<long long>(x.n[1]) * y.n[0] > 0;
        });
        rhs = std::move(all);
    }
    QGroupElement acc(ctx);
    for (auto& f : rhs) acc = qq::qgroup_mul(acc, qq::psi_q_element(ctx, f.n, f.a, f.b));
    QReport rep;
    rep.ok = lhs == acc;
    if (!rep.ok) rep.detail = "quantum wall identity sides differ";
    return rep;
}

QReport classical_limit_check(const PatternRun& run, int trunc) {
    // q-number limits
    for (long j = 1; j <= 10; ++j) {
        QCoeff v = QCoeff(Rat(j)) * qq::q_number(j, 1);
        if (v.eval_q1() != Rat(j) * Rat(j)) return {false, "j [j]_q limit fails"};
    }
    // quantum dilogarithm element log-coefficients at a = 1, b = 0
    for (long j = 1; j <= 8; ++j) {
        QCoeff c = QCoeff(Rat((j % 2) ? 1 : -1)) / (QCoeff(Rat(j)) * qq::q_number(j, 1));
        Rat want = Rat((j % 2) ? 1 : -1) / (Rat(j) * Rat(j));
        if (c.eval_q1() != want) return {false, "log coefficient limit fails"};
    }
    // quantum run against the classical separation formulas
    Ctx ctx = context_for(run.B.front(), trunc);
    std::vector<int> dirs(run.dirs.begin(), run.dirs.end());
    std::vector<QYState> states = quantum_run(ctx, run.B.front(), dirs);
    for (long s = 0; s <= run.P; ++s)
        for (int i = 0; i < run.n; ++i) {
            auto [shift, series] = states[static_cast<size_t>(s)].Y[static_cast<size_t>(i)]
                                       .classical_limit();
            alg::FactoredSF y = pattern::separation_y(run, s, i);
            ExpVec cshift(y.mono().begin(), y.mono().end());
            scatter::TruncSeries cl(run.n, trunc);
            cl = scatter::TruncSeries::one(run.n, trunc);
            for (auto& [id, e] : y.factors()) {
                const alg::MultiPoly& p = alg::AtomTable::instance().poly(id);
                scatter::TruncSeries ts(run.n, trunc);
                for (auto& [ee, cc] : p.terms()) ts.add_term(ee, cc);
                cl = cl * ts.pow_int(e);
            }
            // classical canonical shift equals the c-vector by sign-coherence;
            // compare shift and coefficients
            if (!(shift == cshift)) return {false, "classical limit shift mismatch"};
            for (auto& [e, c] : cl.terms())
                if (series.count(e) == 0 || series.at(e) != c)
                    return {false, "classical limit coefficient mismatch"};
            for (auto& [e, c] : series)
                if (cl.coeff(e) != c) return {false, "extra quantum coefficient survives q=1"};
        }
    // the quantum B2 ordering against the classical one, coefficientwise
    {
        Ctx c2 = qq::make_context({{Rat(0), Rat(-1)}, {Rat(1), Rat(0)}}, {1, 2}, trunc, 2);
        QGroupElement qlhs = qq::qgroup_mul(qq::psi_q_element(c2, {0, 1}, rat_of(1, 2), Rat(0)),
                                            qq::psi_q_element(c2, {1, 0}, Rat(1), Rat(0)));
        QGroupElement qrhs = qq::qgroup_mul(
            qq::qgroup_mul(qq::psi_q_element(c2, {1, 0}, Rat(1), Rat(0)),
                           qq::psi_q_element(c2, {1, 1}, rat_of(1, 2), Rat(0))),
            qq::qgroup_mul(qq::psi_q_element(c2, {1, 2}, Rat(1), Rat(0)),
                           qq::psi_q_element(c2, {0, 1}, rat_of(1, 2), Rat(0))));
        if (!(qlhs == qrhs)) return {false, "quantum B2 ordering identity fails"};
        scatter::SkewForm om = scatter::standard_rank2();
        scatter::GroupElement clhs =
            scatter::group_mul(scatter::psi_element({0, 1}, Rat(2), om, trunc),
                               scatter::psi_element({1, 0}, Rat(1), om, trunc));
        scatter::GroupElement crhs = scatter::group_mul(
            scatter::group_mul(scatter::psi_element({1, 0}, Rat(1), om, trunc),
                               scatter::psi_element({1, 1}, Rat(2), om, trunc)),
            scatter::group_mul(scatter::psi_element({1, 2}, Rat(1), om, trunc),
                               scatter::psi_element({0, 1}, Rat(2), om, trunc)));
        for (auto side : {std::pair{&qlhs, &clhs}, std::pair{&qrhs, &crhs}}) {
            for (int i = 0; i < 2; ++i) {
                auto [shift, series] = side.first->image(i).classical_limit();
                ExpVec ei(2, 0);
                ei[static_cast<size_t>(i)] = 1;
                if (!(shift == ei)) return {false, "B2 ordering limit shift mismatch"};
                const scatter::TruncSeries& want = side.second->image(i);
                for (auto& [e, c] : want.terms())
                    if (series.count(e) == 0 || series.at(e) != c)
                        return {false, "B2 ordering limit coefficient mismatch"};
                for (auto& [e, c] : series)
                    if (want.coeff(e) != c)
                        return {false, "B2 ordering limit extra coefficient"};
            }
        }
    }
    return {true, ""};
}

}  // namespace cdl::quantum
