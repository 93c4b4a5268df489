#include "aronberner/tensor.hpp"

namespace aronberner {

namespace {

void check_slot(const Signature& sig, std::size_t slot, std::size_t dim, const Vector& v) {
    const Space& expected = sig.args[slot];
    if (v.space.base != expected.base || (v.space.dual_level + expected.dual_level) % 2 != 0) {
        throw std::invalid_argument("space mismatch in slot " + std::to_string(slot + 1) + ": expected " +
                                    to_string(expected) + ", got " + to_string(v.space));
    }
    if (v.coords.size() != dim) {
        throw std::invalid_argument("dimension mismatch in slot " + std::to_string(slot + 1) + ": expected " +
                                    std::to_string(dim) + ", got " + std::to_string(v.coords.size()));
    }
}

void check_length(std::size_t slot, std::size_t dim, std::size_t got) {
    if (got != dim) {
        throw std::invalid_argument("dimension mismatch in slot " + std::to_string(slot + 1) + ": expected " +
                                    std::to_string(dim) + ", got " + std::to_string(got));
    }
}

bool same_space_mod2(const Space& a, const Space& b) {
    return a.base == b.base && (a.dual_level + b.dual_level) % 2 == 0;
}

}  // namespace

std::vector<double> contract(const TrilinearTensor& t, std::span<const double> a, std::span<const double> b,
                             std::span<const double> c) {
    const auto& d = t.dims();
    check_length(0, d[0], a.size());
    check_length(1, d[1], b.size());
    check_length(2, d[2], c.size());
    const auto e = t.entries();
    std::vector<double> out(d[3], 0.0);
    for (std::size_t l = 0; l < d[3]; ++l) {
        double acc = 0.0;
        for (std::size_t i = 0; i < d[0]; ++i) {
            for (std::size_t j = 0; j < d[1]; ++j) {
                for (std::size_t k = 0; k < d[2]; ++k) {
                    acc += e[((i * d[1] + j) * d[2] + k) * d[3] + l] * a[i] * b[j] * c[k];
                }
            }
        }
        out[l] = acc;
    }
    return out;
}

std::vector<double> contract(const BilinearTensor& m, std::span<const double> a, std::span<const double> b) {
    const auto& d = m.dims();
    check_length(0, d[0], a.size());
    check_length(1, d[1], b.size());
    const auto e = m.entries();
    std::vector<double> out(d[2], 0.0);
    for (std::size_t p = 0; p < d[2]; ++p) {
        double acc = 0.0;
        for (std::size_t i = 0; i < d[0]; ++i) {
            for (std::size_t j = 0; j < d[1]; ++j) acc += e[(i * d[1] + j) * d[2] + p] * a[i] * b[j];
        }
        out[p] = acc;
    }
    return out;
}

double pairing(std::span<const double> u, std::span<const double> v) {
    if (u.size() != v.size()) throw std::invalid_argument("pairing of vectors with different lengths");
    double acc = 0.0;
    for (std::size_t l = 0; l < u.size(); ++l) acc += u[l] * v[l];
    return acc;
}

Vector evaluate(const TrilinearTensor& t, const Vector& a, const Vector& b, const Vector& c) {
    check_slot(t.sig(), 0, t.dims()[0], a);
    check_slot(t.sig(), 1, t.dims()[1], b);
    check_slot(t.sig(), 2, t.dims()[2], c);
    return Vector{contract(t, a.coords, b.coords, c.coords), t.sig().codomain};
}

Vector evaluate(const BilinearTensor& m, const Vector& a, const Vector& b) {
    check_slot(m.sig(), 0, m.dims()[0], a);
    check_slot(m.sig(), 1, m.dims()[1], b);
    return Vector{contract(m, a.coords, b.coords), m.sig().codomain};
}

TrilinearTensor adjoint(const TrilinearTensor& t) {
    return permute_axes<3>(t, AxisPermutation::star().axes, star_signature(t.sig()));
}

BilinearTensor adjoint(const BilinearTensor& m) { return permute_axes<2>(m, {2, 0, 1}, star_signature(m.sig())); }

TrilinearTensor flip(const TrilinearTensor& t, const Flip& f) {
    return permute_axes<3>(t, AxisPermutation::of_flip(f).axes, flip_signature(t.sig(), f));
}

BilinearTensor transpose(const BilinearTensor& m) { return permute_axes<2>(m, {1, 0, 2}, transpose_signature(m.sig())); }

TrilinearTensor apply_word(const TrilinearTensor& t, const Word& w) {
    TrilinearTensor out = t;
    for (char letter : w.letters()) out = letter == '*' ? adjoint(out) : flip(out, Flip::from_letter(letter));
    return out;
}

BilinearTensor apply_word(const BilinearTensor& m, const Word& w) {
    BilinearTensor out = m;
    for (char letter : w.letters()) {
        if (letter == '*') {
            out = adjoint(out);
        } else if (letter == 'r') {
            out = transpose(out);
        } else {
            throw std::invalid_argument("flip undefined for arity 2");
        }
    }
    return out;
}

TrilinearTensor compose_bilinear(const BilinearTensor& g, const BilinearTensor& m) {
    const auto& dm = m.dims();
    const auto& dg = g.dims();
    if (dm[2] != dg[0]) {
        throw std::invalid_argument("inner dimension mismatch: m has codomain dimension " + std::to_string(dm[2]) +
                                    ", g has first-argument dimension " + std::to_string(dg[0]));
    }
    if (!same_space_mod2(m.sig().codomain, g.sig().args[0])) {
        throw std::invalid_argument("inner space mismatch: " + to_string(m.sig().codomain) + " vs " +
                                    to_string(g.sig().args[0]));
    }
    const TrilinearTensor::Shape dims{dm[0], dm[1], dg[1], dg[2]};
    std::vector<double> out(TrilinearTensor::size_of(dims), 0.0);
    const auto me = m.entries();
    const auto ge = g.entries();
    std::size_t n = 0;
    for_each_index(dims, [&](const TrilinearTensor::Index& idx) {
        double acc = 0.0;
        for (std::size_t p = 0; p < dm[2]; ++p) {
            acc += me[(idx[0] * dm[1] + idx[1]) * dm[2] + p] * ge[(p * dg[1] + idx[2]) * dg[2] + idx[3]];
        }
        out[n++] = acc;
    });
    Signature sig{{m.sig().args[0], m.sig().args[1], g.sig().args[1]}, g.sig().codomain};
    return TrilinearTensor(dims, std::move(out), std::move(sig));
}

namespace {

bool factorization_holds(const BilinearTensor& g, const BilinearTensor& m, const char* f_word, const char* g_word,
                         const char* m_word) {
    const TrilinearTensor lhs = apply_word(compose_bilinear(g, m), Word(f_word));
    const TrilinearTensor rhs = compose_bilinear(apply_word(g, Word(g_word)), apply_word(m, Word(m_word)));
    if (lhs.sig() != rhs.sig() || lhs.dims() != rhs.dims()) return false;
    return relative_frobenius_distance(lhs, rhs) <= contraction_tolerance;
}

}  // namespace

bool check_i_extension_factorization(const BilinearTensor& g, const BilinearTensor& m) {
    return factorization_holds(g, m, "i****i", "***", "r***r");
}

bool check_r_extension_factorization(const BilinearTensor& g, const BilinearTensor& m) {
    return factorization_holds(g, m, "r****r", "r***r", "r***r");
}

bool check_j_extension_factorization(const BilinearTensor& g, const BilinearTensor& m) {
    return factorization_holds(g, m, "j****j", "***", "***");
}

bool check_mixed_word_identities(const TrilinearTensor& t) {
    const auto same = [&](const char* a, const char* b) {
        const TrilinearTensor lhs = apply_word(t, Word(a));
        const TrilinearTensor rhs = apply_word(t, Word(b));
        return lhs.sig() == rhs.sig() && lhs.same_entries(rhs);
    };
    return same("****s**t", "s**t****") && same("t**s****", "****t**s");
}

}  // namespace aronberner
