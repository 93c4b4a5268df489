#include "aronberner/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aronberner {

namespace {

double term(const SequenceFn& seq, std::size_t n) {
    const double v = seq(n);
    if (!std::isfinite(v)) throw std::domain_error("sequence term " + std::to_string(n) + " is not finite");
    return v;
}

double pair_with(const SequenceFn& seq, std::span<const double> x) {
    double acc = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k] != 0.0) acc += term(seq, k + 1) * x[k];
    }
    return acc;
}

// sum_{p <= q <= r} u_p v_q w_r in O(N).
double ordered_triple_sum(std::span<const double> u, std::span<const double> v, std::span<const double> w) {
    double prefix_u = 0.0, prefix_uv = 0.0, acc = 0.0;
    for (std::size_t k = 0; k < u.size(); ++k) {
        prefix_u += u[k];
        prefix_uv += prefix_u * v[k];
        acc += prefix_uv * w[k];
    }
    return acc;
}

double ordered_pair_sum(std::span<const double> u, std::span<const double> v) {
    double prefix = 0.0, acc = 0.0;
    for (std::size_t k = 0; k < u.size(); ++k) {
        prefix += u[k];
        acc += prefix * v[k];
    }
    return acc;
}

}  // namespace

SequenceFn sequence_from(std::vector<double> terms) {
    return [terms = std::move(terms)](std::size_t n) { return n >= 1 && n <= terms.size() ? terms[n - 1] : 0.0; };
}

BilinearSpec bilinear_rank_one(SequenceFn phi, SequenceFn psi) {
    BilinearSpec spec;
    spec.name = "rank-one";
    spec.formula = [phi, psi](std::span<const double> x, std::span<const double> y) {
        return std::vector<double>{pair_with(phi, x) * pair_with(psi, y)};
    };
    spec.finite_dim_instance = [phi, psi](std::size_t n, const Signature& sig) {
        std::vector<double> e(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) e[i * n + j] = term(phi, i + 1) * term(psi, j + 1);
        }
        return BilinearTensor({n, n, 1}, std::move(e), sig);
    };
    return spec;
}

BilinearSpec bilinear_triangular() {
    BilinearSpec spec;
    spec.name = "triangular";
    spec.formula = [](std::span<const double> x, std::span<const double> y) {
        return std::vector<double>{ordered_pair_sum(x, y)};
    };
    spec.finite_dim_instance = [](std::size_t n, const Signature& sig) {
        std::vector<double> e(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) e[i * n + j] = i <= j ? 1.0 : 0.0;
        }
        return BilinearTensor({n, n, 1}, std::move(e), sig);
    };
    return spec;
}

BilinearSpec scalar_multiplication() {
    BilinearSpec spec;
    spec.name = "scalar-multiplication";
    spec.slots = {SlotKind::Scalar, SlotKind::Sequence};
    spec.codomain = CodomainKind::Sequence;
    spec.formula = [](std::span<const double> s, std::span<const double> z) {
        std::vector<double> out(z.begin(), z.end());
        for (auto& v : out) v *= s[0];
        return out;
    };
    spec.finite_dim_instance = [](std::size_t n, const Signature& sig) {
        std::vector<double> e(n * n, 0.0);
        for (std::size_t k = 0; k < n; ++k) e[k * n + k] = 1.0;
        return BilinearTensor({1, n, n}, std::move(e), sig);
    };
    return spec;
}

BilinearSpec scalar_times_functional(SequenceFn chi) {
    BilinearSpec spec;
    spec.name = "scalar-times-functional";
    spec.slots = {SlotKind::Scalar, SlotKind::Sequence};
    spec.formula = [chi](std::span<const double> s, std::span<const double> z) {
        return std::vector<double>{s[0] * pair_with(chi, z)};
    };
    spec.finite_dim_instance = [chi](std::size_t n, const Signature& sig) {
        std::vector<double> e(n);
        for (std::size_t k = 0; k < n; ++k) e[k] = term(chi, k + 1);
        return BilinearTensor({1, n, 1}, std::move(e), sig);
    };
    return spec;
}

NetTriple ExampleSpec::primary_nets() const {
    const auto net = [&](std::size_t s) {
        return sequence_instance.slots[s] == SlotKind::Sequence ? NetFamily::unit_vector()
                                                                : NetFamily::constant({1.0}, "1");
    };
    return NetTriple{{net(0), net(1), net(2)}};
}

std::vector<NetTriple> ExampleSpec::probe_nets() const {
    std::vector<std::size_t> sequence_slots;
    for (std::size_t s = 0; s < 3; ++s) {
        if (sequence_instance.slots[s] == SlotKind::Sequence) sequence_slots.push_back(s);
    }
    std::vector<NetTriple> out;
    const NetTriple primary = primary_nets();
    for (std::size_t mask = 0; mask < (std::size_t{1} << sequence_slots.size()); ++mask) {
        NetTriple probe = primary;
        for (std::size_t b = 0; b < sequence_slots.size(); ++b) {
            if (mask & (std::size_t{1} << (sequence_slots.size() - 1 - b))) {
                probe.nets[sequence_slots[b]] = NetFamily::constant({1.0}, "e1");
            }
        }
        out.push_back(std::move(probe));
    }
    return out;
}

ExampleSpec triangular(std::string_view pattern) {
    std::string sorted(pattern);
    std::sort(sorted.begin(), sorted.end());
    if (pattern.size() != 3 || sorted != "ijk") {
        throw std::invalid_argument("triangular pattern must be an ordering of ijk, got '" + std::string(pattern) + "'");
    }
    const std::array<std::size_t, 3> chain{static_cast<std::size_t>(pattern[0] - 'i'),
                                           static_cast<std::size_t>(pattern[1] - 'i'),
                                           static_cast<std::size_t>(pattern[2] - 'i')};
    ExampleSpec spec;
    spec.name = "triangular-" + std::string(pattern);
    spec.construction = std::string("triangular(") + pattern[0] + "<=" + pattern[1] + "<=" + pattern[2] + ")";
    spec.sequence_instance.name = spec.name;
    spec.sequence_instance.formula = [chain](std::span<const double> x, std::span<const double> y,
                                             std::span<const double> z) {
        const std::array<std::span<const double>, 3> v{x, y, z};
        return std::vector<double>{ordered_triple_sum(v[chain[0]], v[chain[1]], v[chain[2]])};
    };
    spec.finite_dim_instance = [chain](std::size_t n) {
        std::vector<double> e(n * n * n);
        std::size_t off = 0;
        for_each_index<4>({n, n, n, 1}, [&](const TrilinearTensor::Index& idx) {
            e[off++] = idx[chain[0]] <= idx[chain[1]] && idx[chain[1]] <= idx[chain[2]] ? 1.0 : 0.0;
        });
        return TrilinearTensor({n, n, n, 1}, std::move(e), Signature::trilinear());
    };
    return spec;
}

ExampleSpec rank_one(SequenceFn phi, SequenceFn psi) {
    ExampleSpec spec;
    spec.name = "rank-one";
    spec.construction = "rank-one(phi,psi)";
    spec.sequence_instance.name = spec.name;
    spec.sequence_instance.codomain = CodomainKind::Sequence;
    spec.sequence_instance.formula = [phi, psi](std::span<const double> x, std::span<const double> y,
                                                std::span<const double> z) {
        const double scale = pair_with(phi, x) * pair_with(psi, y);
        std::vector<double> out(z.begin(), z.end());
        for (auto& v : out) v = scale * v;
        return out;
    };
    spec.finite_dim_instance = [phi, psi](std::size_t n) {
        std::vector<double> e(n * n * n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const double w = term(phi, i + 1) * term(psi, j + 1);
                for (std::size_t k = 0; k < n; ++k) e[((i * n + j) * n + k) * n + k] = w;
            }
        }
        return TrilinearTensor({n, n, n, n}, std::move(e), Signature::trilinear());
    };
    return spec;
}

ExampleSpec composed(const BilinearSpec& g, const BilinearSpec& m) {
    const bool inner_scalar = m.codomain == CodomainKind::Scalar;
    if (inner_scalar != (g.slots[0] == SlotKind::Scalar)) {
        throw std::invalid_argument("dimension mismatch: codomain of " + m.name + " does not fit the first slot of " +
                                    g.name);
    }
    ExampleSpec spec;
    spec.name = "composed(" + g.name + "," + m.name + ")";
    spec.construction = "g(m(x,y),z) with g=" + g.name + ", m=" + m.name;
    spec.sequence_instance.name = spec.name;
    spec.sequence_instance.slots = {m.slots[0], m.slots[1], g.slots[1]};
    spec.sequence_instance.codomain = g.codomain;
    spec.sequence_instance.formula = [gf = g.formula, mf = m.formula](std::span<const double> x,
                                                                       std::span<const double> y,
                                                                       std::span<const double> z) {
        const auto s = mf(x, y);
        return gf(s, z);
    };
    spec.finite_dim_instance = [g, m](std::size_t n) {
        const auto mt = m.finite_dim_instance(n, Signature::bilinear(Role::X, Role::Y, Role::S));
        const auto gt = g.finite_dim_instance(n, Signature::bilinear(Role::S, Role::Z, Role::W));
        return compose_bilinear(gt, mt);
    };
    return spec;
}

ExampleSpec reflexive_middle() {
    ExampleSpec spec;
    spec.name = "reflexive-middle";
    spec.construction = "lambda*sum(i<=k) x_i z_k, middle space R";
    spec.sequence_instance.name = spec.name;
    spec.sequence_instance.slots = {SlotKind::Sequence, SlotKind::Scalar, SlotKind::Sequence};
    spec.sequence_instance.formula = [](std::span<const double> x, std::span<const double> y,
                                        std::span<const double> z) {
        return std::vector<double>{y[0] * ordered_pair_sum(x, z)};
    };
    spec.finite_dim_instance = [](std::size_t n) {
        std::vector<double> e(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) e[i * n + k] = i <= k ? 1.0 : 0.0;
        }
        return TrilinearTensor({n, 1, n, 1}, std::move(e), Signature::trilinear());
    };
    return spec;
}

namespace {

constexpr std::array<const char*, 6> triangular_patterns{"ijk", "ikj", "jik", "jki", "kij", "kji"};

SequenceFn one_minus_reciprocal() {
    return [](std::size_t n) { return 1.0 - 1.0 / static_cast<double>(n); };
}

}  // namespace

std::vector<std::string> example_names() {
    std::vector<std::string> names;
    for (const char* p : triangular_patterns) names.push_back(std::string("triangular-") + p);
    for (const char* n : {"rank-one", "composed-regular", "composed-irregular", "reflexive-middle"}) names.emplace_back(n);
    return names;
}

ExampleSpec example_by_name(std::string_view name) {
    if (name.starts_with("triangular-")) {
        const auto pattern = name.substr(std::string_view("triangular-").size());
        if (std::find(triangular_patterns.begin(), triangular_patterns.end(), pattern) != triangular_patterns.end()) {
            return triangular(pattern);
        }
    }
    if (name == "rank-one") {
        auto spec = rank_one(one_minus_reciprocal(), [](std::size_t) { return 1.0; });
        spec.construction = "rank-one(phi_n=1-1/n, psi_n=1)";
        return spec;
    }
    if (name == "composed-regular") {
        auto spec = composed(scalar_times_functional([](std::size_t) { return 2.0; }),
                             bilinear_rank_one(one_minus_reciprocal(),
                                               [](std::size_t n) { return 1.0 + 1.0 / static_cast<double>(n); }));
        spec.name = "composed-regular";
        spec.sequence_instance.name = spec.name;
        spec.construction = "g(s,z)=s<chi,z> chi_n=2; m(x,y)=<phi,x><psi,y> phi_n=1-1/n, psi_n=1+1/n";
        return spec;
    }
    if (name == "composed-irregular") {
        auto spec = composed(scalar_multiplication(), bilinear_triangular());
        spec.name = "composed-irregular";
        spec.sequence_instance.name = spec.name;
        spec.construction = "g(s,z)=s*z; m(x,y)=sum(i<=j) x_i y_j";
        return spec;
    }
    if (name == "reflexive-middle") return reflexive_middle();
    throw std::invalid_argument("unknown example '" + std::string(name) + "'");
}

}  // namespace aronberner
