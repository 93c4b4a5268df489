#ifndef ARONBERNER_TENSOR_HPP
#define ARONBERNER_TENSOR_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "aronberner/signatures.hpp"

namespace aronberner {

/// Dense coordinate array of an `Arity`-linear map on finite-dimensional
/// spaces in fixed bases. Axes are (arg0, ..., arg{Arity-1}, codomain), stored
/// row-major with the codomain axis fastest: for a tri-linear map
/// entry(i, j, k, l) is the l-th coordinate of f(e_i, e_j, e_k).
///
/// In this model a space, its dual and its bidual share one coordinate array,
/// so dual levels in `sig` only matter modulo 2 when vectors are checked.
template <std::size_t Arity>
class MultilinearTensor {
public:
    static constexpr std::size_t rank = Arity + 1;
    using Shape = std::array<std::size_t, rank>;
    using Index = std::array<std::size_t, rank>;

    MultilinearTensor(Shape dims, std::vector<double> entries, Signature sig)
        : dims_(dims), entries_(std::move(entries)), sig_(std::move(sig)) {
        if (sig_.arity() != Arity) throw std::invalid_argument("signature arity does not match tensor arity");
        for (auto d : dims_) {
            if (d == 0) throw std::invalid_argument("tensor dimensions must be positive");
        }
        if (entries_.size() != size_of(dims_)) throw std::invalid_argument("entry count does not match dims");
        for (double v : entries_) {
            if (!std::isfinite(v)) throw std::invalid_argument("tensor entries must be finite");
        }
    }

    static MultilinearTensor zeros(Shape dims, Signature sig) {
        return MultilinearTensor(dims, std::vector<double>(size_of(dims), 0.0), std::move(sig));
    }

    /// Entries drawn uniformly from [-1, 1].
    template <typename Rng>
    static MultilinearTensor random(Shape dims, Signature sig, Rng& rng) {
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        std::vector<double> entries(size_of(dims));
        for (auto& v : entries) v = dist(rng);
        return MultilinearTensor(dims, std::move(entries), std::move(sig));
    }

    const Shape& dims() const { return dims_; }
    std::span<const double> entries() const { return entries_; }
    const Signature& sig() const { return sig_; }

    std::size_t offset(const Index& idx) const {
        std::size_t off = 0;
        for (std::size_t a = 0; a < rank; ++a) off = off * dims_[a] + idx[a];
        return off;
    }

    double at(const Index& idx) const { return entries_[offset(idx)]; }

    /// Bitwise equality of shape and entries; signatures are not compared.
    bool same_entries(const MultilinearTensor& other) const {
        return dims_ == other.dims_ && entries_ == other.entries_;
    }

    static std::size_t size_of(const Shape& dims) {
        return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
    }

private:
    Shape dims_;
    std::vector<double> entries_;
    Signature sig_;
};

using TrilinearTensor = MultilinearTensor<3>;
using BilinearTensor = MultilinearTensor<2>;

/// Coordinates of an element of a finite-dimensional space.
struct Vector {
    std::vector<double> coords;
    Space space;
};

/// Visits every multi-index of `dims` in row-major order (last axis fastest).
template <std::size_t Rank, typename Fn>
void for_each_index(const std::array<std::size_t, Rank>& dims, Fn&& fn) {
    std::array<std::size_t, Rank> idx{};
    const std::size_t total = std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
    for (std::size_t n = 0; n < total; ++n) {
        fn(idx);
        for (std::size_t a = Rank; a-- > 0;) {
            if (++idx[a] < dims[a]) break;
            idx[a] = 0;
        }
    }
}

/// result axis a takes original axis `axes[a]`.
template <std::size_t Arity>
MultilinearTensor<Arity> permute_axes(const MultilinearTensor<Arity>& t,
                                      const std::array<std::uint8_t, Arity + 1>& axes, Signature sig) {
    constexpr std::size_t rank = Arity + 1;
    typename MultilinearTensor<Arity>::Shape dims{};
    for (std::size_t a = 0; a < rank; ++a) dims[a] = t.dims()[axes[a]];
    std::vector<double> out(MultilinearTensor<Arity>::size_of(dims));
    std::size_t n = 0;
    for_each_index(dims, [&](const auto& idx) {
        typename MultilinearTensor<Arity>::Index src{};
        for (std::size_t a = 0; a < rank; ++a) src[axes[a]] = idx[a];
        out[n++] = t.at(src);
    });
    return MultilinearTensor<Arity>(dims, std::move(out), std::move(sig));
}

/// f(a, b, c). Per codomain coordinate l the sum runs i (slot 0) outermost and
/// k (slot 2) innermost, each term formed as ((T[i][j][k][l] * a_i) * b_j) * c_k.
/// Vector spaces must match the signature's base roles, with dual levels
/// agreeing modulo 2; a dimension mismatch names the slot.
Vector evaluate(const TrilinearTensor& t, const Vector& a, const Vector& b, const Vector& c);

/// m(a, b), same contraction convention as the tri-linear overload.
Vector evaluate(const BilinearTensor& m, const Vector& a, const Vector& b);

/// Unchecked contraction on raw coordinates.
std::vector<double> contract(const TrilinearTensor& t, std::span<const double> a, std::span<const double> b,
                             std::span<const double> c);
std::vector<double> contract(const BilinearTensor& m, std::span<const double> a, std::span<const double> b);

/// <u, v> = sum_l u_l v_l, l ascending.
double pairing(std::span<const double> u, std::span<const double> v);

/// S[p][i][j][k] = T[i][j][k][p].
TrilinearTensor adjoint(const TrilinearTensor& t);
/// S[p][i][j] = M[i][j][p].
BilinearTensor adjoint(const BilinearTensor& m);

TrilinearTensor flip(const TrilinearTensor& t, const Flip& f);
/// m^r(y, x) = m(x, y).
BilinearTensor transpose(const BilinearTensor& m);

/// Folds adjoint / flip over the letters of `w`, left to right.
TrilinearTensor apply_word(const TrilinearTensor& t, const Word& w);
/// Bilinear words use `*` and `r` only.
BilinearTensor apply_word(const BilinearTensor& m, const Word& w);

/// F[i][j][k][l] = sum_p M[i][j][p] * G[p][k][l], i.e. f(x, y, z) = g(m(x, y), z).
TrilinearTensor compose_bilinear(const BilinearTensor& g, const BilinearTensor& m);

/// ||a - b||_F / max(||a||_F, ||b||_F), zero when both vanish.
template <std::size_t Arity>
double relative_frobenius_distance(const MultilinearTensor<Arity>& a, const MultilinearTensor<Arity>& b) {
    if (a.dims() != b.dims()) throw std::invalid_argument("tensor shapes differ");
    double diff = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t n = 0; n < a.entries().size(); ++n) {
        const double x = a.entries()[n], y = b.entries()[n];
        diff += (x - y) * (x - y);
        na += x * x;
        nb += y * y;
    }
    const double scale = std::sqrt(std::max(na, nb));
    return scale == 0.0 ? std::sqrt(diff) : std::sqrt(diff) / scale;
}

inline constexpr double contraction_tolerance = 1e-12;

/// The three extension factorizations of f = g(m(., .), .):
///   f^{i****i} = g^{***}(m^{r***r}(., .), .)
///   f^{r****r} = g^{r***r}(m^{r***r}(., .), .)
///   f^{j****j} = g^{***}(m^{***}(., .), .)
/// Each compares signatures exactly and entries within 1e-12 relative
/// Frobenius distance. Inner-dimension mismatches throw.
bool check_i_extension_factorization(const BilinearTensor& g, const BilinearTensor& m);
bool check_r_extension_factorization(const BilinearTensor& g, const BilinearTensor& m);
bool check_j_extension_factorization(const BilinearTensor& g, const BilinearTensor& m);

/// f^{****s**t} = f^{s**t****} and f^{t**s****} = f^{****t**s}, bitwise.
bool check_mixed_word_identities(const TrilinearTensor& t);

}  // namespace aronberner

#endif  // ARONBERNER_TENSOR_HPP
