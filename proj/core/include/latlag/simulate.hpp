#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>

#include "latlag/model.hpp"

namespace latlag {

struct SimConfig {
    long T = 0;
    long burn_in = -1;  // -1 selects the default burn-in
    std::uint64_t seed = 0;
    bool record_latent = false;
    bool record_delays = false;
};

/// Row t holds x_t (and optionally z_t, Theta_t) for the retained samples.
struct Trajectory {
    int p = 0;
    long T = 0;
    Matrix x;
    std::optional<Matrix> z;
    std::optional<IntMatrix> delays;
};

long default_burn_in(int theta_max);

/// Simulates the model from the origin, discarding the burn-in prefix.
/// Throws NotStationaryError if any |x_t(i)| exceeds 1e6.
Trajectory simulate(const SystemParams& params, const SimConfig& cfg);

/// CSV schema: header "t,x1,...,xp", one row per retained step.
void write_trajectory_csv(const Trajectory& traj, std::ostream& out);
void write_trajectory_csv(const Trajectory& traj, const std::string& path);
void write_latent_csv(const Trajectory& traj, const std::string& path);
void write_delays_csv(const Trajectory& traj, const std::string& path);

}  // namespace latlag
