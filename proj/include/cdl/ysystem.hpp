#pragma once

// Y-systems via bipartite product quivers, tropical Y-system dynamics,
// the root-system/Coxeter oracle, and the constant Y-system solver.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdl/pattern.hpp"
#include "cdl/seed.hpp"

namespace cdl::ysys {

using seed::Family;
using seed::IntMat;
using seed::Perm;

class NotSimplyLaced : public std::runtime_error {
  public:
    explicit NotSimplyLaced(const std::string& w) : std::runtime_error(w) {}
};
class NoConvergence : public std::runtime_error {
  public:
    explicit NoConvergence(const std::string& w) : std::runtime_error(w) {}
};

// simply-laced Dynkin diagram with the text's vertex labels
struct Diagram {
    Family family;
    int rank;
    std::vector<std::vector<int>> adj;  // 0-based adjacency lists
    int coxeter_number;
    std::vector<int> omega;   // 0-based diagram automorphism
    std::vector<int> kappa;   // +-1 per vertex, kappa[0] = +1, alternating
    std::string name() const;
};

// accepts "A3", "D5", "E7"; throws NotSimplyLaced otherwise
Diagram make_diagram(const std::string& name);
Diagram make_diagram(Family f, int rank);

// root in the simple-root basis
using RootVector = std::vector<int>;

// orbit alpha(a; -1..h) computed by the alternating reflection route and
// independently by the adjacency recursion; both must agree
struct CoxeterOrbit {
    std::vector<RootVector> roots;  // indices 0..h+1 represent k = -1..h
    const RootVector& at(int k) const { return roots.at(static_cast<size_t>(k + 1)); }
};

CoxeterOrbit coxeter_orbit(const Diagram& X, int a);

// product quiver Q(X, X') on rr' vertices; vertex (a, a') with 0-based a, a'
// has index (r'-1-a')*r + a, so the top row a' = r'-1 comes first
struct BipartiteQuiver {
    Diagram X, Xp;
    IntMat B;                     // the exchange matrix of Q(X, X')
    std::vector<int> vplus;       // vertex set with product sign +
    std::vector<int> vminus;
    int index(int a, int ap) const { return (Xp.rank - 1 - ap) * X.rank + a; }
    std::pair<int, int> coords(int v) const {
        return {v % X.rank, Xp.rank - 1 - v / X.rank};
    }
};

BipartiteQuiver build_bipartite_quiver(const Diagram& X, const Diagram& Xp);

// word for `halfsteps` composite mutations mu+ mu- mu+ ...; each composite
// block keeps index order (order-independence is guaranteed and asserted)
pattern::MutationWord build_bipartite_word(const BipartiteQuiver& Q, int halfsteps);
// the full period 2(h+h') of alternating composite mutations
pattern::MutationWord build_bipartite_word(const Diagram& X, const Diagram& Xp);

// permutation induced by (omega, omega') on the vertex indexing
Perm omega_perm(const BipartiteQuiver& Q);

struct TropicalRunResult {
    int period = 0;              // h + h'
    bool omega_pair_used = false;  // the permutation (omega, omega') is nontrivial
    long n_plus = 0;             // active-sign counts over the half period
    long n_minus = 0;
    std::vector<IntMat> C;       // C-matrix after each composite step 0..h+h'
};

// runs the tropical (C-matrix) dynamics for h+h' composite steps; asserts the
// factorization property, the sign pattern of the active c-vectors, and the
// final permuted-unit-vector form
TropicalRunResult tropical_run(const Diagram& X, const Diagram& Xp);

struct ConstantYSolution {
    std::vector<std::vector<double>> y;  // y[m-1][a] for m = 1..level-1
    long iterations = 0;
    double residual = 0;
    double lhs_sum = 0;   // sum of modified Rogers values
    double rhs = 0;       // r (level-1) h / (h + level) * pi^2/6
};

ConstantYSolution constant_ysystem_solve(const Diagram& X, int level, double tol = 1e-13,
                                         long max_iter = 200000);

}  // namespace cdl::ysys
