// Independent reference implementations used by the tests. Nothing here calls
// the library's permutation, contraction or limit code.
#ifndef ARONBERNER_TESTS_ORACLES_HPP
#define ARONBERNER_TESTS_ORACLES_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

/// A 4-index array addressed by explicit (i, j, k, l) loops.
struct Quad {
    std::array<std::size_t, 4> d{};
    std::vector<double> v;

    Quad(std::array<std::size_t, 4> dims) : d(dims), v(dims[0] * dims[1] * dims[2] * dims[3], 0.0) {}

    double& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        return v[((i * d[1] + j) * d[2] + k) * d[3] + l];
    }
    double operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return v[((i * d[1] + j) * d[2] + k) * d[3] + l];
    }
};

/// A 3-index array for bilinear maps.
struct Triple {
    std::array<std::size_t, 3> d{};
    std::vector<double> v;

    Triple(std::array<std::size_t, 3> dims) : d(dims), v(dims[0] * dims[1] * dims[2], 0.0) {}

    double& operator()(std::size_t i, std::size_t j, std::size_t k) { return v[(i * d[1] + j) * d[2] + k]; }
    double operator()(std::size_t i, std::size_t j, std::size_t k) const { return v[(i * d[1] + j) * d[2] + k]; }
};

template <typename Rng>
Quad random_quad(std::array<std::size_t, 4> dims, Rng& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Quad q(dims);
    for (auto& x : q.v) x = u(rng);
    return q;
}

// S(p, i, j, k) = T(i, j, k, p)
inline Quad star(const Quad& t) {
    Quad s({t.d[3], t.d[0], t.d[1], t.d[2]});
    for (std::size_t i = 0; i < t.d[0]; ++i)
        for (std::size_t j = 0; j < t.d[1]; ++j)
            for (std::size_t k = 0; k < t.d[2]; ++k)
                for (std::size_t p = 0; p < t.d[3]; ++p) s(p, i, j, k) = t(i, j, k, p);
    return s;
}

// Flips written out from their defining identities, e.g. f^s(y, z, x) = f(x, y, z).
inline Quad flip(const Quad& t, char name) {
    const auto [dx, dy, dz, dw] = t.d;
    std::array<std::size_t, 4> dims{};
    switch (name) {
    case 'i': dims = {dy, dx, dz, dw}; break;
    case 'j': dims = {dx, dz, dy, dw}; break;
    case 'r': dims = {dz, dy, dx, dw}; break;
    case 't': dims = {dz, dx, dy, dw}; break;
    case 's': dims = {dy, dz, dx, dw}; break;
    default: throw std::invalid_argument("bad flip");
    }
    Quad f(dims);
    for (std::size_t x = 0; x < dx; ++x)
        for (std::size_t y = 0; y < dy; ++y)
            for (std::size_t z = 0; z < dz; ++z)
                for (std::size_t w = 0; w < dw; ++w) {
                    const double value = t(x, y, z, w);
                    switch (name) {
                    case 'i': f(y, x, z, w) = value; break;
                    case 'j': f(x, z, y, w) = value; break;
                    case 'r': f(z, y, x, w) = value; break;
                    case 't': f(z, x, y, w) = value; break;
                    case 's': f(y, z, x, w) = value; break;
                    }
                }
    return f;
}

inline Quad apply_word(Quad t, const std::string& word) {
    for (char c : word) t = c == '*' ? star(t) : flip(t, c);
    return t;
}

// Bilinear adjoint: M*(w, x)_y = M(x, y)_w, stored with axes (w, x, y).
inline Triple star(const Triple& m) {
    Triple s({m.d[2], m.d[0], m.d[1]});
    for (std::size_t x = 0; x < m.d[0]; ++x)
        for (std::size_t y = 0; y < m.d[1]; ++y)
            for (std::size_t w = 0; w < m.d[2]; ++w) s(w, x, y) = m(x, y, w);
    return s;
}

inline Triple swap_args(const Triple& m) {
    Triple s({m.d[1], m.d[0], m.d[2]});
    for (std::size_t x = 0; x < m.d[0]; ++x)
        for (std::size_t y = 0; y < m.d[1]; ++y)
            for (std::size_t w = 0; w < m.d[2]; ++w) s(y, x, w) = m(x, y, w);
    return s;
}

inline Triple apply_word(Triple m, const std::string& word) {
    for (char c : word) m = c == '*' ? star(m) : swap_args(m);
    return m;
}

// F(i, j, k, l) = sum_p M(i, j, p) G(p, k, l)
inline Quad compose(const Triple& g, const Triple& m) {
    Quad f({m.d[0], m.d[1], g.d[1], g.d[2]});
    for (std::size_t i = 0; i < m.d[0]; ++i)
        for (std::size_t j = 0; j < m.d[1]; ++j)
            for (std::size_t k = 0; k < g.d[1]; ++k)
                for (std::size_t l = 0; l < g.d[2]; ++l) {
                    double acc = 0.0;
                    for (std::size_t p = 0; p < m.d[2]; ++p) acc += m(i, j, p) * g(p, k, l);
                    f(i, j, k, l) = acc;
                }
    return f;
}

// f(a, b, c)_l with the i-outer, k-inner loop order.
inline std::vector<double> evaluate(const Quad& t, const std::vector<double>& a, const std::vector<double>& b,
                                    const std::vector<double>& c) {
    std::vector<double> out(t.d[3], 0.0);
    for (std::size_t l = 0; l < t.d[3]; ++l)
        for (std::size_t i = 0; i < t.d[0]; ++i)
            for (std::size_t j = 0; j < t.d[1]; ++j)
                for (std::size_t k = 0; k < t.d[2]; ++k) out[l] += ((t(i, j, k, l) * a[i]) * b[j]) * c[k];
    return out;
}

/// Slot k of the flipped map holds original slot arrangement[k], read off by
/// probing a symbolic (x, y, z) triple.
inline std::array<int, 3> arrangement(char flip_name) {
    Quad probe({3, 3, 3, 1});
    // Mark f(e_0, e_1, e_2) so the flipped tensor reveals where each slot went.
    probe(0, 1, 2, 0) = 1.0;
    const Quad f = oracle::flip(probe, flip_name);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                if (f(a, b, c, 0) == 1.0) return {a, b, c};
    throw std::logic_error("unreachable");
}

/// Brute-force iterated limit of an index function: the innermost index runs
/// to a far larger scale than the middle, which runs far past the outer.
/// `outer_first` lists the slot indices (0 = alpha) from outermost to innermost.
inline double iterated_limit(const std::function<double(std::size_t, std::size_t, std::size_t)>& f,
                             std::array<int, 3> outer_first, std::array<std::size_t, 3> scales = {1000, 1000000,
                                                                                                  1000000000}) {
    std::array<std::size_t, 3> idx{};
    for (int layer = 0; layer < 3; ++layer) idx[outer_first[layer]] = scales[layer];
    return f(idx[0], idx[1], idx[2]);
}

/// [i <= j <= k] for the triangular pattern: `pattern` names which slot carries
/// the smallest, middle and largest index ("ikj": x_i y_j z_k with i <= k <= j).
inline double triangular_indicator(const std::string& pattern, std::size_t a, std::size_t b, std::size_t c) {
    const std::array<std::size_t, 3> by_letter{a, b, c};
    const std::size_t first = by_letter[pattern[0] - 'i'];
    const std::size_t second = by_letter[pattern[1] - 'i'];
    const std::size_t third = by_letter[pattern[2] - 'i'];
    return first <= second && second <= third ? 1.0 : 0.0;
}

/// The six orders in display order as slot lists.
inline const std::array<std::array<int, 3>, 6>& display_orders() {
    static const std::array<std::array<int, 3>, 6> orders{{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}}};
    return orders;
}

}  // namespace oracle

#endif  // ARONBERNER_TESTS_ORACLES_HPP
