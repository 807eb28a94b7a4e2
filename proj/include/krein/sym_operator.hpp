#pragma once

#include "krein/common.hpp"

namespace krein {

/// Dense real symmetric matrix model of a bounded self-adjoint operator.
/// Construction validates squareness and symmetry (relative to the max
/// entry) and then symmetrizes exactly, so downstream eigensolvers always
/// see a bitwise-symmetric matrix.
class SymOperator {
public:
    explicit SymOperator(Matrix entries, double tol = kDefaultTol);

    const Matrix& matrix() const { return mat_; }
    double tol() const { return tol_; }
    Index dim() const { return mat_.rows(); }

    static SymOperator identity(Index dim, double tol = kDefaultTol);
    static SymOperator zero(Index dim, double tol = kDefaultTol);

private:
    Matrix mat_;
    double tol_;
};

/// Orthonormal bases of the subspaces M and N realizing H = M (+) N.
/// basisM is dim x m, basisN is dim x d, columns orthonormal, the two
/// column spans mutually orthogonal, m + d == dim, d >= 1. m == 0 (the
/// fully degenerate restriction) is allowed.
class OrthoSplit {
public:
    OrthoSplit(Matrix basisM, Matrix basisN, double tol = kDefaultTol);

    const Matrix& basisM() const { return basisM_; }
    const Matrix& basisN() const { return basisN_; }
    Index dim() const { return basisN_.rows(); }
    Index m() const { return basisM_.cols(); }
    Index d() const { return basisN_.cols(); }

    /// M = span{e_1..e_m}, N = span{e_{m+1}..e_dim}.
    static OrthoSplit coordinate(Index dim, Index m, double tol = kDefaultTol);

    /// Compressions B^T S B for the two blocks.
    Matrix compressM(const Matrix& s) const;   // m x m
    Matrix compressN(const Matrix& s) const;   // d x d
    Matrix compressNM(const Matrix& s) const;  // d x m

private:
    Matrix basisM_;
    Matrix basisN_;
};

/// Geometric schedule for the eps -> 0 limits: eps_j = eps0 * ratio^j.
struct EpsSchedule {
    double eps0 = 1e-2;
    double ratio = 0.5;
    int steps = 30;
    double convergence_tol = 1e-8;

    void validate() const;
};

}  // namespace krein
