#ifndef ARONBERNER_CATALOG_HPP
#define ARONBERNER_CATALOG_HPP

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "aronberner/limits.hpp"
#include "aronberner/tensor.hpp"

namespace aronberner {

/// A real sequence indexed from 1.
using SequenceFn = std::function<double(std::size_t)>;

/// Zero-padded sequence from its first terms.
SequenceFn sequence_from(std::vector<double> terms);

using BilinearFormula = std::function<std::vector<double>(std::span<const double>, std::span<const double>)>;

/// A bilinear building block for composed examples, usable in both backends.
struct BilinearSpec {
    std::string name;
    std::array<SlotKind, 2> slots{SlotKind::Sequence, SlotKind::Sequence};
    CodomainKind codomain = CodomainKind::Scalar;
    BilinearFormula formula;
    /// Coordinate tensor with sequence slots truncated to n.
    std::function<BilinearTensor(std::size_t n, const Signature& sig)> finite_dim_instance;
};

/// m(x, y) = <phi, x> <psi, y>
BilinearSpec bilinear_rank_one(SequenceFn phi, SequenceFn psi);
/// m(x, y) = sum_{i <= j} x_i y_j
BilinearSpec bilinear_triangular();
/// g(s, z) = s z
BilinearSpec scalar_multiplication();
/// g(s, z) = s <chi, z>
BilinearSpec scalar_times_functional(SequenceFn chi);

struct ExampleSpec {
    std::string name;
    std::string construction;
    /// Sequence slots of dimension n, scalar slots of dimension 1.
    std::function<TrilinearTensor(std::size_t n)> finite_dim_instance;
    SequenceModelMap sequence_instance;

    /// Unit-vector nets on sequence slots, the constant 1 on scalar slots.
    NetTriple primary_nets() const;
    /// The primary triple first, then every variant with some sequence slots
    /// replaced by the constant net e_1.
    std::vector<NetTriple> probe_nets() const;
};

/// `pattern` is an ordering of "ijk": "ijk" is sum_{i<=j<=k} x_i y_j z_k.
ExampleSpec triangular(std::string_view pattern);

/// f(x1, x2, x3) = <phi, x1> <psi, x2> x3
ExampleSpec rank_one(SequenceFn phi, SequenceFn psi);

/// f(x, y, z) = g(m(x, y), z)
ExampleSpec composed(const BilinearSpec& g, const BilinearSpec& m);

/// f(x, lambda, z) = lambda sum_{i<=k} x_i z_k with a one-dimensional middle space.
ExampleSpec reflexive_middle();

/// triangular-ijk (and the five sibling patterns), rank-one, composed-regular,
/// composed-irregular, reflexive-middle.
std::vector<std::string> example_names();

/// Throws std::invalid_argument("unknown example ...").
ExampleSpec example_by_name(std::string_view name);

}  // namespace aronberner

#endif  // ARONBERNER_CATALOG_HPP
