#pragma once

// Exchange matrices, skew-symmetrizers, quivers, finite type classification,
// permutation action, principal extension.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdl/numeric.hpp"

namespace cdl::seed {

// dense square integer matrix, row-major
class IntMat {
  public:
    IntMat() = default;
    IntMat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}
    static IntMat identity(int n);

    int rows() const { return r_; }
    int cols() const { return c_; }
    long long& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    long long at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    bool operator==(const IntMat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

    IntMat transpose() const;
    IntMat operator*(const IntMat& o) const;
    std::vector<long long> col(int j) const;

    Rat det() const;  // fraction-free not needed; exact over Q
    std::string str() const;

  private:
    int r_ = 0, c_ = 0;
    std::vector<long long> a_;
};

class BadMatrix : public std::runtime_error {
  public:
    explicit BadMatrix(const std::string& w) : std::runtime_error(w) {}
};
class BadDirection : public std::runtime_error {
  public:
    explicit BadDirection(const std::string& w) : std::runtime_error(w) {}
};
class Decomposable : public std::runtime_error {
  public:
    explicit Decomposable(const std::string& w) : std::runtime_error(w) {}
};

// B with positive diagonal Delta and skew-symmetric rational Omega = Delta^{-1} B,
// so B = Delta * Omega and D = Delta^{-1} is a skew-symmetrizer of the form
// diag(1/delta_i) with minimal positive integers delta_i per indecomposable block.
struct SkewDecomposition {
    std::vector<long> delta;
    // omega(i,j) = b_ij / delta_i as exact rationals
    std::vector<std::vector<Rat>> omega;
};

bool is_skew_symmetrizable(const IntMat& B);
SkewDecomposition skew_decompose(const IntMat& B);

// mutation in direction k (0-based); eps-expression, result independent of eps
IntMat mutate_matrix(const IntMat& B, int k, int eps = 1);

// quiver for a skew-symmetric matrix: arrows (i,j) -> multiplicity, b_ij > 0
struct Quiver {
    int n = 0;
    std::map<std::pair<int, int>, int> arrows;
    bool operator==(const Quiver& o) const { return n == o.n && arrows == o.arrows; }
    Quiver opposite() const;
};

Quiver quiver_of(const IntMat& B);   // requires skew-symmetric
IntMat matrix_of(const Quiver& Q);
Quiver mutate_quiver(const Quiver& Q, int k);

enum class Family { A, B, C, D, E, F, G };

struct DynkinType {
    Family family;
    int rank;
    int coxeter_number;
    std::vector<int> diagram_automorphism;  // 0-based index map, involution
    std::string name() const;
};

// Cartan counterpart test; B must be indecomposable (throws Decomposable).
// Returns the type when A(B) is a finite type Cartan matrix, otherwise nullopt.
std::optional<DynkinType> classify_finite_type(const IntMat& B);

// permutation of {0..n-1}; serialized 1-indexed one-line
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_inverse(const Perm& p);
bool perm_is_identity(const Perm& p);

// nu acting on an exchange matrix: b'_{ij} = b_{nu^{-1}(i), nu^{-1}(j)}
IntMat sn_act(const IntMat& B, const Perm& nu);

// relabels a tuple of per-index values: out[i] = in[nu^{-1}(i)]
template <typename T>
std::vector<T> sn_act(const std::vector<T>& xs, const Perm& nu) {
    Perm inv = perm_inverse(nu);
    std::vector<T> out;
    out.reserve(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) out.push_back(xs[inv[i]]);
    return out;
}

// [[B, -I], [I, O]], size 2n x 2n; nonsingular for any B
IntMat principal_extension(const IntMat& B);

}  // namespace cdl::seed
