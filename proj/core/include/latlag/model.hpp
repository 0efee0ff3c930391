#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latlag/common.hpp"

namespace latlag {

/// Ground-truth parameters of the latent-lag model
///   z_t = A z_{t-1} + B x_{t-1} + v_t
///   x_t = z_{t - Theta_t} + D x_{t-1} + w_t
/// with per-coordinate delays Theta_t(i) drawn i.i.d. from the pmf q on
/// [0, theta_max].
struct SystemParams {
    int p = 0;
    int theta_max = 0;
    Matrix A, B, D;
    Matrix sigma_v, sigma_w;
    Vector q;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

constexpr double kDefaultStabilityBound = 0.95;

/// Companion matrix [[A, B], [A, B+D]] of the zero-delay system.
Matrix companion_matrix(const SystemParams& params);

/// Largest eigenvalue magnitude. Dense eigensolver for n <= 64, power
/// iteration above (10k iteration cap).
double spectral_radius(const Matrix& m);

ValidationReport validate_params(const SystemParams& params,
                                 double stability_bound = kDefaultStabilityBound);

enum class SystemStructure {
    a_sparse_bd_diagonal,
    general,
};

struct RandomSystemOptions {
    double stability_bound = kDefaultStabilityBound;
    bool zero_d = false;           // force D = 0 (a_sparse_bd_diagonal only)
    bool uniform_q = false;        // uniform pmf instead of random simplex point
    double a_min_magnitude = 0.4;  // |A_ij| ~ U[a_min_magnitude, 1]
    double b_min = 0.8;            // B diagonal ~ U[b_min, b_max]
    double b_max = 1.2;
    double a_target_radius = -1.0; // if > 0, scale A alone to this spectral radius first
};

/// Draws a random stable system. Deterministic given seed.
SystemParams random_sparse_system(int p, int nonzeros_per_row, int theta_max,
                                  SystemStructure structure, std::uint64_t seed,
                                  const RandomSystemOptions& opts = {});

/// Entries in {-1, 0, +1}.
struct SignPattern {
    IntMatrix entries;

    int rows() const { return static_cast<int>(entries.rows()); }
    int cols() const { return static_cast<int>(entries.cols()); }
};

/// entry = sign(m_ij) where |m_ij| > threshold, else 0.
SignPattern sign_pattern_of(const Matrix& m, double threshold);

struct SupportMetrics {
    double tpr = 0.0;
    double fpr = 0.0;
    double f1 = 0.0;
};

/// TPR counts sign-exact matches on the nonzero support of `truth`; FPR counts
/// spurious nonzeros on its zero set. Diagonal entries are excluded by default.
SupportMetrics support_metrics(const SignPattern& estimated, const SignPattern& truth,
                               bool offdiag_only = true);

}  // namespace latlag
