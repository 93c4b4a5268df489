#ifndef ARONBERNER_BATTERY_HPP
#define ARONBERNER_BATTERY_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "aronberner/tensor.hpp"

namespace aronberner {

struct IdentityTally {
    std::string name;
    std::size_t passed = 0;
    std::size_t total = 0;

    bool ok() const { return passed == total; }
};

struct BatteryResult {
    std::vector<IdentityTally> tallies;

    bool ok() const;
};

inline constexpr std::size_t max_battery_dim = 16;

/// Throws std::invalid_argument("invalid dims ...") unless every dim is in 1..16.
void validate_battery_dims(const std::array<std::size_t, 4>& dims);

/// Runs the finite-dimensional identity battery on `trials` seeded random
/// tensors of shape `dims` (entries uniform in [-1, 1]):
///   duality pairing at every level of the adjoint chain,
///   the six canonical words returning the tensor,
///   the three word equalities between extensions,
///   the three extension factorizations of g(m(., .), .),
///   the two mixed-word identities.
BatteryResult run_identity_battery(const std::array<std::size_t, 4>& dims, std::uint64_t seed, std::size_t trials);

/// The tensor-level identities on one fixed tensor, with `trials` random probe
/// vectors for the duality checks.
BatteryResult run_identity_battery(const TrilinearTensor& t, std::uint64_t seed, std::size_t trials);

/// The factorization identities with `m` fixed and random partners g.
BatteryResult run_identity_battery(const BilinearTensor& m, std::uint64_t seed, std::size_t trials);

/// <adjoint(U)(d, a, b), c> against <d, U(a, b, c)>, relative to the sum of
/// absolute contributions.
bool duality_holds(const TrilinearTensor& u, std::span<const double> d, std::span<const double> a,
                   std::span<const double> b, std::span<const double> c);

}  // namespace aronberner

#endif  // ARONBERNER_BATTERY_HPP
