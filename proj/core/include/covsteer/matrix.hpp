#pragma once

#include <Eigen/Dense>

#include "covsteer/errors.hpp"

namespace covsteer {

using Index = Eigen::Index;

/// Dense real square matrix. Construction rejects non-square shapes and
/// non-finite entries, so numeric code downstream can assume clean inputs.
class SquareMatrix {
 public:
  explicit SquareMatrix(Eigen::MatrixXd m);

  static SquareMatrix zero(Index n);
  static SquareMatrix identity(Index n);

  Index dim() const noexcept { return m_.rows(); }
  double operator()(Index i, Index j) const { return m_(i, j); }
  const Eigen::MatrixXd& mat() const noexcept { return m_; }

 private:
  Eigen::MatrixXd m_;
};

/// Dense real rows-by-cols matrix with finite entries.
class RectMatrix {
 public:
  explicit RectMatrix(Eigen::MatrixXd m);

  Index rows() const noexcept { return m_.rows(); }
  Index cols() const noexcept { return m_.cols(); }
  double operator()(Index i, Index j) const { return m_(i, j); }
  const Eigen::MatrixXd& mat() const noexcept { return m_; }

 private:
  Eigen::MatrixXd m_;
};

/// Square matrix that is symmetric to the last bit: M(i,j) == M(j,i) holds
/// exactly, not merely within a tolerance. Construct from an already
/// symmetric matrix, or through symmetrize() for general input.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(Eigen::MatrixXd m);

  static SymmetricMatrix zero(Index n);
  static SymmetricMatrix identity(Index n);

  Index dim() const noexcept { return m_.rows(); }
  double operator()(Index i, Index j) const { return m_(i, j); }
  const Eigen::MatrixXd& mat() const noexcept { return m_; }

 private:
  Eigen::MatrixXd m_;
};

/// (M + Mᵀ)/2. Each mirrored pair is written from one computed value, so the
/// result is exactly symmetric. Symmetric input comes back unchanged.
SymmetricMatrix symmetrize(const SquareMatrix& m);
SymmetricMatrix symmetrize(const Eigen::MatrixXd& m);

/// Largest eigenvalue magnitude, from a dense QR eigenvalue solve.
/// Throws EigenvalueFailure if the iteration does not converge.
double spectral_radius(const SquareMatrix& m);

/// True iff spectral_radius(m) < 1 - margin. Requires 0 <= margin < 1.
bool is_schur_stable(const SquareMatrix& m, double margin = 0.0);

/// Pivot-based positive-definiteness test: true iff the LDLᵀ factorization
/// succeeds with every pivot > tol. Returns false rather than throwing when
/// the factorization fails.
bool is_positive_definite(const SymmetricMatrix& m, double tol);

/// Same test with the scale-aware default tolerance.
bool is_positive_definite(const SymmetricMatrix& m);

/// Default PD tolerance: 1e-12 * trace(M)/n, floored at zero.
double default_pd_tolerance(const SymmetricMatrix& m);

double frobenius_norm(const Eigen::MatrixXd& m);
double entrywise_l1_norm(const Eigen::MatrixXd& m);

/// tr(M1ᵀ M2). Throws InvalidArgument when the shapes differ.
double frobenius_inner(const Eigen::MatrixXd& m1, const Eigen::MatrixXd& m2);

}  // namespace covsteer
