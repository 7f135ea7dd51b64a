// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <memory>
#include <string>
#include <string_view>

#include "opsim/types.hpp"

namespace opsim {

enum class BasisKind { identity, dsft, wht, dps2d };

BasisKind basis_kind_from_name(std::string_view name);  // "none"|"dsft"|"wht"|"dps2d"
std::string basis_kind_name(BasisKind kind);

/// Discrete prolate spheroidal (Slepian) sequences for a band W=[nu1,nu2]
/// and index set {0..L-1}: eigenvectors of the band-limiting kernel
/// C_k(W) = int_W exp(j 2 pi k nu) d nu, eigenvalues descending.
struct DpsBasis {
    double band_lo = 0.0;
    double band_hi = 0.0;
    Eigen::MatrixXcd sequences;   ///< L x L, column i = u_i
    Eigen::VectorXd eigenvalues;  ///< descending, in (0,1)
};

/// Dense kernel eigensolve; sequences orthonormal, phase fixed so the
/// first significant component of each is real positive.
DpsBasis dps_sequences(double band_lo, double band_hi, int length);

/// One of the orthonormal 2D precoding bases (or identity), acting on the
/// vectorized N' x M' data grid. Fast transform paths where they exist;
/// dense() materializes the matrix from the defining formulas for oracles.
class PrecodingBasis {
  public:
    /// No precoding, S = I.
    static PrecodingBasis identity(int size);
    /// s^{p,n}_{q,m} = exp(j2pi(mn/M' - qp/N')) / sqrt(M'N'); FFT fast path.
    static PrecodingBasis dsft(int n_freq, int n_time);
    /// Sylvester-construction Walsh-Hadamard; size must be a power of two.
    static PrecodingBasis wht(int size);
    /// Constant-modulus WHT extension for size = 2^k * R with R odd:
    /// Kronecker product of the 2^k WHT with the unitary R-point DFT.
    /// Reduces to wht() when R = 1.
    static PrecodingBasis wht_mixed(int size);
    /// 2D DPS products u_{n,m}([-nu_D,nu_D], M') * u_{p,q}([0,theta_P], N').
    static PrecodingBasis dps2d(int n_freq, int n_time, double nu_doppler, double theta_delay);

    /// Factory used by configuration: kind by name at the frame's data-grid
    /// dimensions ("wht" picks wht_mixed when the size is not a power of two).
    static PrecodingBasis make(BasisKind kind, int n_freq, int n_time, double nu_doppler = 0.0,
                               double theta_delay = 0.0);

    BasisKind kind() const { return kind_; }
    int size() const { return size_; }
    bool constant_modulus() const { return constant_modulus_; }

    /// d = S b
    Eigen::VectorXcd apply(const Eigen::VectorXcd& b) const;
    /// S^H d
    Eigen::VectorXcd adjoint(const Eigen::VectorXcd& d) const;

    /// y = |S|^2^T x, i.e. y_col = sum_row |S(row,col)|^2 x_row. This is the
    /// per-sequence energy-weighting used by the effective channel
    /// coefficient gamma.
    Eigen::VectorXd squared_magnitude_adjoint(const Eigen::VectorXd& x) const;

    /// Materialized S from the defining formulas (test oracle; O(size^2)).
    Eigen::MatrixXcd dense() const;

  private:
    PrecodingBasis() = default;
    struct FftPlans;

    BasisKind kind_ = BasisKind::identity;
    int size_ = 0;
    int n_freq_ = 0;  // N'
    int n_time_ = 0;  // M'
    bool constant_modulus_ = false;
    // dsft
    std::shared_ptr<const FftPlans> fft_;
    // wht / wht_mixed: size = wht_len * dft_len
    int wht_len_ = 0;
    int dft_len_ = 1;
    Eigen::MatrixXcd dft_factor_;  // unitary dft_len-point DFT
    // dps2d factors (S = U_t kron U_f)
    Eigen::MatrixXcd time_factor_;  // M' x M'
    Eigen::MatrixXcd freq_factor_;  // N' x N'
};

}  // namespace opsim
