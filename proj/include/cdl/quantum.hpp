#pragma once

// Quantum mutations, quantum dilogarithm identities in tropical and universal
// form, rank-2 quantum scattering identities, and classical-limit checks.

#include <string>
#include <vector>

#include "cdl/pattern.hpp"
#include "cdl/qalgebra.hpp"

namespace cdl::quantum {

using pattern::PatternRun;
using qq::Ctx;
using qq::QGroupElement;
using qq::QLaurent;
using seed::IntMat;
using seed::Perm;

class IdentityFails : public std::runtime_error {
  public:
    explicit IdentityFails(const std::string& w) : std::runtime_error(w) {}
};
class LimitMismatch : public std::runtime_error {
  public:
    explicit LimitMismatch(const std::string& w) : std::runtime_error(w) {}
};
class TruncationLoss : public std::runtime_error {
  public:
    explicit TruncationLoss(const std::string& w) : std::runtime_error(w) {}
};

// quantum Y-seed along a mutation sequence, with every Y_i(s) expressed in
// the initial variables
struct QYState {
    Ctx ctx;
    IntMat B, C;
    std::vector<QLaurent> Y;
};

Ctx context_for(const IntMat& B, int trunc);
QYState initial_state(Ctx ctx, const IntMat& B);

// one quantum mutation; both eps-expressions are evaluated and must agree
QYState quantum_mutate(const QYState& st, int k);

// runs the whole word and returns the per-step states 0..P
std::vector<QYState> quantum_run(Ctx ctx, const IntMat& B, const std::vector<int>& dirs);

// q_k as a t-exponent for direction k
long qk_exponent(const Ctx& ctx, long delta_k);

struct QReport {
    bool ok = false;
    std::string detail;
};

// Pi_s Psi_{q_{k_s}}(Y^{c+_{k_s}(s)})^{eps_s}, right-to-left, equals 1
QReport verify_qdi_tropical(const PatternRun& run, int trunc);
// Pi_s Psi_{q_{k_s}}(Ytilde_{k_s}(s)^{eps_s})^{eps_s}, left-to-right, equals 1;
// cross-checked against the shuffle of the tropical product at every step
QReport verify_qdi_universal(const PatternRun& run, int trunc);

// q-exponential and quantum dilogarithm functional identities at the given
// truncation: the difference relation, the q-binomial theorem, the
// q-exponential product identities, the quantum pentagon, the element-level
// pentagon, and the fission-fusion formula
QReport verify_q_pentagon(int trunc);

enum class QcsdCase { A1Affine, A2Twisted };

// wall-element identity of the affine rank-2 quantum scattering diagram
QReport qcsd_wall_identity(QcsdCase which, int trunc);

// q -> 1 specializations: quantum mutation data against the classical
// separation formulas, and the quantum element products against the classical
// group elements
QReport classical_limit_check(const PatternRun& run, int trunc);

}  // namespace cdl::quantum
