#pragma once

#include <utility>
#include <vector>

#include "latlag/model.hpp"
#include "latlag/simulate.hpp"

namespace latlag {

/// Lagged covariances Sigma_{X_0} .. Sigma_{X_max_lag}.
struct LagCovSeq {
    int p = 0;
    int max_lag = 0;
    std::vector<Matrix> sigmas;

    const Matrix& at(int lag) const { return sigmas.at(static_cast<std::size_t>(lag)); }
    /// Sigma_{X_{-i}} = Sigma_{X_i}^T.
    Matrix at_signed(int lag) const {
        return lag >= 0 ? sigmas.at(static_cast<std::size_t>(lag))
                        : Matrix(sigmas.at(static_cast<std::size_t>(-lag)).transpose());
    }
};

/// Sigma_hat_{X_i} = (1/T) sum_{t=i+1}^{T} x_t x_{t-i}^T, lag-0 symmetrized.
LagCovSeq sample_lag_covariances(const Trajectory& traj, int max_lag);
LagCovSeq sample_lag_covariances(const Matrix& x, int max_lag);

/// Pooled estimate over contiguous row ranges [begin, end); cross products are
/// only accumulated when both endpoints fall inside one segment.
LagCovSeq sample_lag_covariances_segmented(const Matrix& x,
                                           const std::vector<std::pair<long, long>>& segments,
                                           int max_lag);

/// vec(s1 * r * s2); a test oracle checks it against (s2^T kron s1) vec(r).
Vector vec_kron_apply(const Matrix& s1, const Matrix& r, const Matrix& s2);

/// Noise/observation cross covariances Sigma_{VX_{-i}}, i = 0..depth, from the
/// recursion with base cases Sigma_{VX_0} = q_0 Sigma_V, Sigma_{VZ_0} = Sigma_V.
std::vector<Matrix> noise_cross_covariances(const SystemParams& params, int depth);

/// Stationary covariance oracle: assembles the dense p^2(4*theta_max+3) linear
/// system in the vectorized unknowns, solves it, and extends past theta_max via
/// Sigma_{X_{i+1}} = (A+D) Sigma_{X_i} - AD Sigma_{X_{i-1}} + B sum_th q_th Sigma_{X_{i-th}}.
/// Throws SingularSystemError when the assembled matrix is numerically singular.
LagCovSeq exact_lag_covariances(const SystemParams& params, int max_lag);

}  // namespace latlag
