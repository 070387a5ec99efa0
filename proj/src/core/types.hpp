#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace jmoment {

using CNum = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

// Moment problem flavor: A = J-self-adjoint, B = J-skew-self-adjoint,
// C = J-unitary.
enum class ProblemKind { A, B, C };

inline char kind_letter(ProblemKind k) {
    switch (k) {
    case ProblemKind::A: return 'A';
    case ProblemKind::B: return 'B';
    default: return 'C';
    }
}

// Error taxonomy shared by the C++ core, the C API status codes and the
// CLI exit-code mapping.
enum class Status {
    ok = 0,
    invalid_argument,
    dimension_mismatch,
    decomposition_failure,
    not_symmetric,
    invalid_basis,
    kernel_inclusion_failed,
    inconsistent_input,
    invalid_parameter,
    precondition_failed,
    not_invertible,
    unsupported_defect,
    no_root,
    necessity_failed,
    undecided,
    unsolvable,
    generation_failure,
    internal_error,
};

class Error : public std::runtime_error {
public:
    Error(Status s, const std::string& msg) : std::runtime_error(msg), status_(s) {}
    Status status() const noexcept { return status_; }

private:
    Status status_;
};

[[noreturn]] inline void fail(Status s, const std::string& msg) { throw Error(s, msg); }

inline bool all_finite(const CMat& m) { return m.allFinite(); }

inline void require_finite(const CMat& m, const char* what) {
    if (!m.allFinite())
        fail(Status::invalid_argument, std::string(what) + ": non-finite entries");
}

inline void require(bool cond, Status s, const std::string& msg) {
    if (!cond) fail(s, msg);
}

// Default kernel-level tolerances. Structural predicates default to 1e-9
// (one factorization plus one pseudoinverse of headroom over the 1e-12
// decomposition kernels); solver verification defaults to 1e-8.
inline constexpr double kRankCutoffFactor = 1e-12;
inline constexpr double kPredicateTol = 1e-9;
inline constexpr double kVerifyTol = 1e-8;

inline double default_rank_cutoff(Eigen::Index rows, Eigen::Index cols, double sigma_max) {
    return static_cast<double>(std::max(rows, cols)) * sigma_max * kRankCutoffFactor;
}

}  // namespace jmoment
