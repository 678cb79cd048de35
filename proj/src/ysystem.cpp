#include "cdl/ysystem.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "cdl/dilog.hpp"

namespace cdl::ysys {

std::string Diagram::name() const {
    static const char* fam = "ABCDEFG";
    return std::string(1, fam[static_cast<int>(family)]) + std::to_string(rank);
}

Diagram make_diagram(Family f, int r) {
    Diagram d;
    d.family = f;
    d.rank = r;
    d.adj.assign(static_cast<size_t>(r), {});
    auto edge = [&](int i, int j) {
        d.adj[static_cast<size_t>(i)].push_back(j);
        d.adj[static_cast<size_t>(j)].push_back(i);
    };
    switch (f) {
        case Family::A:
            if (r < 1) throw NotSimplyLaced("A rank must be >= 1");
            for (int i = 0; i + 1 < r; ++i) edge(i, i + 1);
            d.coxeter_number = r + 1;
            break;
        case Family::D:
            if (r < 4) throw NotSimplyLaced("D rank must be >= 4");
            for (int i = 0; i + 1 < r - 2; ++i) edge(i, i + 1);
            edge(r - 3, r - 2);
            edge(r - 3, r - 1);
            d.coxeter_number = 2 * r - 2;
            break;
        case Family::E: {
            if (r < 6 || r > 8) throw NotSimplyLaced("E rank must be 6, 7, or 8");
            // labels follow the text: a chain with one vertex hanging off the
            // branch node (E6: off vertex 3; E7: off 3; E8: off 5; 1-based)
            if (r == 6) {
                edge(0, 1); edge(1, 2); edge(2, 4); edge(4, 5); edge(2, 3);
                d.coxeter_number = 12;
            } else if (r == 7) {
                for (int i = 0; i + 1 < 6; ++i) edge(i, i + 1);
                edge(6, 2);
                d.coxeter_number = 18;
            } else {
                for (int i = 0; i + 1 < 7; ++i) edge(i, i + 1);
                edge(7, 4);
                d.coxeter_number = 30;
            }
            break;
        }
        default:
            throw NotSimplyLaced("only simply-laced types A, D, E are allowed");
    }
    d.omega.resize(static_cast<size_t>(r));
    std::iota(d.omega.begin(), d.omega.end(), 0);
    if (f == Family::A) {
        for (int i = 0; i < r; ++i) d.omega[static_cast<size_t>(i)] = r - 1 - i;
    } else if (f == Family::D && r % 2 == 1) {
        std::swap(d.omega[static_cast<size_t>(r - 2)], d.omega[static_cast<size_t>(r - 1)]);
    } else if (f == Family::E && r == 6) {
        d.omega = {5, 4, 2, 3, 1, 0};
    }
    // kappa: +1 at vertex 1, alternating along the bipartite diagram
    d.kappa.assign(static_cast<size_t>(r), 0);
    d.kappa[0] = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j : d.adj[static_cast<size_t>(i)])
            if (d.kappa[static_cast<size_t>(j)] == 0) {
                d.kappa[static_cast<size_t>(j)] = -d.kappa[static_cast<size_t>(i)];
                stack.push_back(j);
            }
    }
    return d;
}

Diagram make_diagram(const std::string& name) {
    if (name.size() < 2) throw NotSimplyLaced("bad diagram name: " + name);
    Family f;
    switch (name[0]) {
        case 'A': f = Family::A; break;
        case 'D': f = Family::D; break;
        case 'E': f = Family::E; break;
        default: throw NotSimplyLaced("bad diagram family: " + name);
    }
    return make_diagram(f, std::stoi(name.substr(1)));
}

namespace {

// pairing (alpha_b, v) in the simple-root basis with (alpha_a, alpha_a) = 2
int pairing(const Diagram& X, int b, const RootVector& v) {
    int acc = 2 * v[static_cast<size_t>(b)];
    for (int c : X.adj[static_cast<size_t>(b)]) acc -= v[static_cast<size_t>(c)];
    return acc;
}

// apply s_sign = product of the simple reflections with kappa = sign
RootVector apply_half_reflection(const Diagram& X, int sign, const RootVector& v) {
    RootVector w(v);
    for (int b = 0; b < X.rank; ++b)
        if (X.kappa[static_cast<size_t>(b)] == sign)
            w[static_cast<size_t>(b)] -= pairing(X, b, v);
    return w;
}

bool is_positive_root(const RootVector& v) {
    bool nonzero = false;
    for (int x : v) {
        if (x < 0) return false;
        if (x > 0) nonzero = true;
    }
    return nonzero;
}

}  // namespace

CoxeterOrbit coxeter_orbit(const Diagram& X, int a) {
    int r = X.rank, h = X.coxeter_number;
    // route 1: alternating half reflections starting with s_{-kappa_a}
    CoxeterOrbit orb;
    RootVector minus(static_cast<size_t>(r), 0), start(static_cast<size_t>(r), 0);
    minus[static_cast<size_t>(a)] = -1;
    start[static_cast<size_t>(a)] = 1;
    orb.roots.push_back(minus);
    orb.roots.push_back(start);
    int sign = -X.kappa[static_cast<size_t>(a)];
    for (int k = 0; k < h; ++k) {
        orb.roots.push_back(apply_half_reflection(X, sign, orb.roots.back()));
        sign = -sign;
    }
    // route 2: the adjacency recursion over all start vertices at once
    std::vector<RootVector> prev(static_cast<size_t>(r)), cur(static_cast<size_t>(r));
    for (int b = 0; b < r; ++b) {
        prev[static_cast<size_t>(b)].assign(static_cast<size_t>(r), 0);
        prev[static_cast<size_t>(b)][static_cast<size_t>(b)] = -1;
        cur[static_cast<size_t>(b)].assign(static_cast<size_t>(r), 0);
        cur[static_cast<size_t>(b)][static_cast<size_t>(b)] = 1;
    }
    for (int k = 0; k < h; ++k) {
        std::vector<RootVector> next(static_cast<size_t>(r));
        for (int b = 0; b < r; ++b) {
            RootVector v(static_cast<size_t>(r), 0);
            for (int c : X.adj[static_cast<size_t>(b)])
                for (int i = 0; i < r; ++i)
                    v[static_cast<size_t>(i)] += cur[static_cast<size_t>(c)][static_cast<size_t>(i)];
            for (int i = 0; i < r; ++i)
                v[static_cast<size_t>(i)] -= prev[static_cast<size_t>(b)][static_cast<size_t>(i)];
            next[static_cast<size_t>(b)] = v;
        }
        if (!(next[static_cast<size_t>(a)] == orb.roots[static_cast<size_t>(k + 2)]))
            throw std::logic_error("reflection and recursion routes disagree at step " +
                                   std::to_string(k + 1));
        prev = std::move(cur);
        cur = std::move(next);
    }
    // positivity inside the window and the boundary values
    for (int k = 0; k <= h - 1; ++k)
        if (!is_positive_root(orb.at(k)))
            throw std::logic_error("orbit left the positive roots at k = " + std::to_string(k));
    RootVector wa(static_cast<size_t>(r), 0);
    wa[static_cast<size_t>(X.omega[static_cast<size_t>(a)])] = 1;
    if (!(orb.at(h - 1) == wa)) throw std::logic_error("alpha(a;h-1) != alpha_{omega(a)}");
    RootVector mwa(static_cast<size_t>(r), 0);
    mwa[static_cast<size_t>(X.omega[static_cast<size_t>(a)])] = -1;
    if (!(orb.at(h) == mwa)) throw std::logic_error("alpha(a;h) != -alpha_{omega(a)}");
    return orb;
}

BipartiteQuiver build_bipartite_quiver(const Diagram& X, const Diagram& Xp) {
    BipartiteQuiver Q;
    Q.X = X;
    Q.Xp = Xp;
    int r = X.rank, rp = Xp.rank;
    int n = r * rp;
    Q.B = IntMat(n, n);
    auto kv = [&](int a, int ap) {
        return X.kappa[static_cast<size_t>(a)] * Xp.kappa[static_cast<size_t>(ap)];
    };
    for (int a = 0; a < r; ++a)
        for (int ap = 0; ap < rp; ++ap) {
            int v = Q.index(a, ap);
            // horizontal arrows run from sign - to sign +
            for (int b : X.adj[static_cast<size_t>(a)]) {
                int w = Q.index(b, ap);
                if (kv(a, ap) == -1 && kv(b, ap) == 1) {
                    Q.B.at(v, w) = 1;
                    Q.B.at(w, v) = -1;
                }
            }
            // vertical arrows run from sign + to sign -
            for (int bp : Xp.adj[static_cast<size_t>(ap)]) {
                int w = Q.index(a, bp);
                if (kv(a, ap) == 1 && kv(a, bp) == -1) {
                    Q.B.at(v, w) = 1;
                    Q.B.at(w, v) = -1;
                }
            }
            if (kv(a, ap) == 1)
                Q.vplus.push_back(v);
            else
                Q.vminus.push_back(v);
        }
    std::sort(Q.vplus.begin(), Q.vplus.end());
    std::sort(Q.vminus.begin(), Q.vminus.end());
    // no arrows inside a sign class (the composite mutations commute)
    for (auto& cls : {Q.vplus, Q.vminus})
        for (int v : cls)
            for (int w : cls)
                if (Q.B.at(v, w) != 0)
                    throw std::logic_error("arrow inside one sign class of Q(X,X')");
    return Q;
}

pattern::MutationWord build_bipartite_word(const BipartiteQuiver& Q, int halfsteps) {
    std::vector<int> dirs;
    for (int s = 0; s < halfsteps; ++s) {
        const auto& cls = (s % 2 == 0) ? Q.vplus : Q.vminus;
        dirs.insert(dirs.end(), cls.begin(), cls.end());
    }
    return pattern::make_word(Q.B, dirs);
}

pattern::MutationWord build_bipartite_word(const Diagram& X, const Diagram& Xp) {
    BipartiteQuiver Q = build_bipartite_quiver(X, Xp);
    return build_bipartite_word(Q, 2 * (X.coxeter_number + Xp.coxeter_number));
}

Perm omega_perm(const BipartiteQuiver& Q) {
    int n = Q.B.rows();
    Perm nu(static_cast<size_t>(n));
    for (int a = 0; a < Q.X.rank; ++a)
        for (int ap = 0; ap < Q.Xp.rank; ++ap)
            nu[static_cast<size_t>(Q.index(a, ap))] =
                Q.index(Q.X.omega[static_cast<size_t>(a)], Q.Xp.omega[static_cast<size_t>(ap)]);
    return nu;
}

TropicalRunResult tropical_run(const Diagram& X, const Diagram& Xp) {
    BipartiteQuiver Q = build_bipartite_quiver(X, Xp);
    int n = Q.B.rows();
    int h = X.coxeter_number, hp = Xp.coxeter_number;
    int period = h + hp;
    TropicalRunResult out;
    out.period = period;

    IntMat B = Q.B, C = IntMat::identity(n);
    out.C.push_back(C);
    for (int s = 0; s < period; ++s) {
        const auto& cls = (s % 2 == 0) ? Q.vplus : Q.vminus;
        for (int k : cls) {
            int eps = 0;
            auto [a, ap] = Q.coords(k);
            for (int i = 0; i < n; ++i) {
                long long v = C.at(i, k);
                if (v == 0) continue;
                int sg = v > 0 ? 1 : -1;
                if (eps == 0) eps = sg;
                else if (eps != sg)
                    throw std::logic_error("sign-coherence violated in tropical run");
                auto [bi, bpi] = Q.coords(i);
                if (s <= hp - 1) {
                    if (bi != a)
                        throw std::logic_error("factorization property: vertical support violated");
                } else {
                    if (bpi != Xp.omega[static_cast<size_t>(ap)])
                        throw std::logic_error("factorization property: horizontal support violated");
                }
            }
            if (eps == 0) throw std::logic_error("zero c-vector in tropical run");
            if (s <= hp - 1 && eps != 1)
                throw std::logic_error("positive region produced a negative c-vector");
            if (s > hp - 1 && eps != -1)
                throw std::logic_error("negative region produced a positive c-vector");
            if (eps > 0) ++out.n_plus; else ++out.n_minus;

            IntMat Cn(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (j == k)
                        Cn.at(i, j) = -C.at(i, k);
                    else
                        Cn.at(i, j) = C.at(i, j) + C.at(i, k) * pos_part(B.at(k, j)) +
                                      pos_part(-C.at(i, k)) * B.at(k, j);
                }
            C = Cn;
            B = seed::mutate_matrix(B, k);
        }
        out.C.push_back(C);
    }
    // final C-matrix: columns are unit vectors permuted by (omega, omega')
    Perm w = omega_perm(Q);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < n; ++i)
            if (C.at(i, v) != (i == w[static_cast<size_t>(v)] ? 1 : 0))
                throw std::logic_error("tropical run did not close at h+h'");
    out.omega_pair_used = !seed::perm_is_identity(w);
    return out;
}

ConstantYSolution constant_ysystem_solve(const Diagram& X, int level, double tol, long max_iter) {
    if (level < 2) throw std::invalid_argument("level must be >= 2");
    int r = X.rank, m = level - 1;
    ConstantYSolution sol;
    sol.y.assign(static_cast<size_t>(m), std::vector<double>(static_cast<size_t>(r), 1.0));
    auto rhs_of = [&](int mi, int a) {
        double num = 1.0;
        for (int b : X.adj[static_cast<size_t>(a)])
            num *= 1.0 + sol.y[static_cast<size_t>(mi)][static_cast<size_t>(b)];
        double den = 1.0;
        if (mi > 0) den *= 1.0 + 1.0 / sol.y[static_cast<size_t>(mi - 1)][static_cast<size_t>(a)];
        if (mi < m - 1) den *= 1.0 + 1.0 / sol.y[static_cast<size_t>(mi + 1)][static_cast<size_t>(a)];
        return num / den;
    };
    double res = 1;
    long it = 0;
    for (; it < max_iter && res > tol; ++it) {
        res = 0;
        for (int mi = 0; mi < m; ++mi)
            for (int a = 0; a < r; ++a) {
                double target = std::sqrt(rhs_of(mi, a));
                double cur = sol.y[static_cast<size_t>(mi)][static_cast<size_t>(a)];
                double next = std::sqrt(cur * target);  // damped geometric step
                res = std::max(res, std::fabs(next - cur));
                sol.y[static_cast<size_t>(mi)][static_cast<size_t>(a)] = next;
            }
    }
    if (res > tol) throw NoConvergence("constant Y-system iteration did not converge");
    sol.iterations = it;
    sol.residual = res;
    for (int mi = 0; mi < m; ++mi)
        for (int a = 0; a < r; ++a)
            sol.lhs_sum += dilog::mod_rogers(sol.y[static_cast<size_t>(mi)][static_cast<size_t>(a)]);
    int h = X.coxeter_number;
    sol.rhs = static_cast<double>(r) * (level - 1) * h / (h + level) * dilog::kZeta2;
    return sol;
}

}  // namespace cdl::ysys
