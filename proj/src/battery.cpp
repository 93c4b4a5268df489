#include "aronberner/battery.hpp"

#include <algorithm>
#include <random>

namespace aronberner {

namespace {

std::vector<double> random_coords(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> v(n);
    for (auto& x : v) x = dist(rng);
    return v;
}

std::vector<double> absolute(std::span<const double> v) {
    std::vector<double> out(v.begin(), v.end());
    for (auto& x : out) x = std::abs(x);
    return out;
}

const Signature& mg_sig() {
    static const Signature sig = Signature::bilinear(Role::S, Role::Z, Role::W);
    return sig;
}

const Signature& mm_sig() {
    static const Signature sig = Signature::bilinear(Role::X, Role::Y, Role::S);
    return sig;
}

struct Battery {
    IdentityTally duality{"duality-pairing"};
    IdentityTally reflexive{"six-canonical-words"};
    IdentityTally i_equals_s{"i****i=s****t"};
    IdentityTally j_equals_plain{"j****j=****"};
    IdentityTally r_equals_t{"r****r=t****s"};
    IdentityTally i_factor{"i****i=g***(m^r***r)"};
    IdentityTally r_factor{"r****r=g^r***r(m^r***r)"};
    IdentityTally j_factor{"j****j=g***(m***)"};
    IdentityTally mixed{"mixed-words"};

    static void tally(IdentityTally& t, bool ok) {
        ++t.total;
        if (ok) ++t.passed;
    }

    void tensor_identities(const TrilinearTensor& t, std::mt19937_64& rng) {
        bool dual_ok = true;
        TrilinearTensor u = t;
        for (int level = 0; level < 4; ++level) {
            const auto& d = u.dims();
            const auto a = random_coords(d[0], rng), b = random_coords(d[1], rng), c = random_coords(d[2], rng),
                       w = random_coords(d[3], rng);
            dual_ok = dual_ok && duality_holds(u, w, a, b, c);
            u = adjoint(u);
        }
        tally(duality, dual_ok);

        bool six_ok = true;
        for (const auto& order : all_extension_orders()) {
            const auto ext = apply_word(t, canonical_word(order));
            six_ok = six_ok && ext.same_entries(t) && ext.sig() == word_signature(t.sig(), canonical_word(order));
        }
        tally(reflexive, six_ok);

        const auto same = [&](const char* a, const char* b) {
            return apply_word(t, Word(a)).same_entries(apply_word(t, Word(b)));
        };
        tally(i_equals_s, same("i****i", "s****t"));
        tally(j_equals_plain, same("j****j", "****"));
        tally(r_equals_t, same("r****r", "t****s"));
        tally(mixed, check_mixed_word_identities(t));
    }

    void factorizations(const BilinearTensor& g, const BilinearTensor& m) {
        tally(i_factor, check_i_extension_factorization(g, m));
        tally(r_factor, check_r_extension_factorization(g, m));
        tally(j_factor, check_j_extension_factorization(g, m));
    }

    BatteryResult result(bool with_tensor, bool with_factorizations) const {
        BatteryResult out;
        if (with_tensor) out.tallies = {duality, reflexive, i_equals_s, j_equals_plain, r_equals_t};
        if (with_factorizations) {
            out.tallies.push_back(i_factor);
            out.tallies.push_back(r_factor);
            out.tallies.push_back(j_factor);
        }
        if (with_tensor) out.tallies.push_back(mixed);
        return out;
    }
};

}  // namespace

bool BatteryResult::ok() const {
    return std::all_of(tallies.begin(), tallies.end(), [](const IdentityTally& t) { return t.ok(); });
}

void validate_battery_dims(const std::array<std::size_t, 4>& dims) {
    for (auto d : dims) {
        if (d < 1 || d > max_battery_dim) {
            throw std::invalid_argument("invalid dims: each dimension must be in 1.." + std::to_string(max_battery_dim));
        }
    }
}

bool duality_holds(const TrilinearTensor& u, std::span<const double> d, std::span<const double> a,
                   std::span<const double> b, std::span<const double> c) {
    const double lhs = pairing(contract(adjoint(u), d, a, b), c);
    const double rhs = pairing(d, contract(u, a, b, c));
    const TrilinearTensor abs_u(u.dims(), absolute(u.entries()), u.sig());
    const double scale = pairing(absolute(d), contract(abs_u, absolute(a), absolute(b), absolute(c)));
    return std::abs(lhs - rhs) <= contraction_tolerance * scale;
}

BatteryResult run_identity_battery(const std::array<std::size_t, 4>& dims, std::uint64_t seed, std::size_t trials) {
    validate_battery_dims(dims);
    std::mt19937_64 rng(seed);
    Battery battery;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const auto t = TrilinearTensor::random(dims, Signature::trilinear(), rng);
        battery.tensor_identities(t, rng);
        const std::size_t inner = 1 + trial % 3;
        const auto m = BilinearTensor::random({dims[0], dims[1], inner}, mm_sig(), rng);
        const auto g = BilinearTensor::random({inner, dims[2], dims[3]}, mg_sig(), rng);
        battery.factorizations(g, m);
    }
    return battery.result(true, true);
}

BatteryResult run_identity_battery(const TrilinearTensor& t, std::uint64_t seed, std::size_t trials) {
    std::mt19937_64 rng(seed);
    Battery battery;
    for (std::size_t trial = 0; trial < trials; ++trial) battery.tensor_identities(t, rng);
    return battery.result(true, false);
}

BatteryResult run_identity_battery(const BilinearTensor& m, std::uint64_t seed, std::size_t trials) {
    std::mt19937_64 rng(seed);
    Battery battery;
    const BilinearTensor as_m(m.dims(), std::vector<double>(m.entries().begin(), m.entries().end()), mm_sig());
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const auto g = BilinearTensor::random({m.dims()[2], 1 + trial % 3, 1 + (trial / 3) % 3}, mg_sig(), rng);
        battery.factorizations(g, as_m);
    }
    return battery.result(false, true);
}

}  // namespace aronberner
