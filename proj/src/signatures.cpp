#include "aronberner/signatures.hpp"

#include <algorithm>

namespace aronberner {

char role_name(Role role) {
    switch (role) {
    case Role::X: return 'X';
    case Role::Y: return 'Y';
    case Role::Z: return 'Z';
    case Role::W: return 'W';
    case Role::S: return 'S';
    }
    return '?';
}

std::string to_string(const Space& space) {
    std::string out(1, role_name(space.base));
    out.append(space.dual_level, '*');
    return out;
}

Signature Signature::trilinear() {
    return Signature{{Space{Role::X}, Space{Role::Y}, Space{Role::Z}}, Space{Role::W}};
}

Signature Signature::bilinear(Role first, Role second, Role codomain) {
    return Signature{{Space{first}, Space{second}}, Space{codomain}};
}

bool Signature::is_canonical_trilinear() const { return *this == trilinear(); }

bool Signature::is_bidual_trilinear() const {
    return *this == Signature{{Space{Role::X, 2}, Space{Role::Y, 2}, Space{Role::Z, 2}}, Space{Role::W, 2}};
}

std::string to_string(const Signature& sig) {
    std::string out;
    for (std::size_t k = 0; k < sig.args.size(); ++k) {
        if (k > 0) out += " x ";
        out += to_string(sig.args[k]);
    }
    out += " -> ";
    out += to_string(sig.codomain);
    return out;
}

// Arrangements are read off the defining lines f^i(y,x,z) = f(x,y,z), etc.
Flip Flip::i() { return {'i', {1, 0, 2}}; }
Flip Flip::j() { return {'j', {0, 2, 1}}; }
Flip Flip::r() { return {'r', {2, 1, 0}}; }
Flip Flip::t() { return {'t', {2, 0, 1}}; }
Flip Flip::s() { return {'s', {1, 2, 0}}; }

const std::array<Flip, 5>& all_flips() {
    static const std::array<Flip, 5> flips{Flip::i(), Flip::j(), Flip::r(), Flip::t(), Flip::s()};
    return flips;
}

Flip Flip::from_letter(char letter) {
    for (const auto& f : all_flips()) {
        if (f.name == letter) return f;
    }
    throw std::invalid_argument(std::string("not a flip letter: ") + letter);
}

std::optional<Flip> Flip::from_arrangement(const Arrangement& arrangement) {
    if (arrangement == identity_arrangement) return std::nullopt;
    for (const auto& f : all_flips()) {
        if (f.arrangement == arrangement) return f;
    }
    throw std::invalid_argument("not a permutation of three slots");
}

namespace {

Arrangement arrangement_of(const FlipOrIdentity& f) { return f ? f->arrangement : identity_arrangement; }

}  // namespace

FlipOrIdentity flip_compose(const FlipOrIdentity& a, const FlipOrIdentity& b) {
    // After a, slot k holds original slot a[k]; after b, slot k holds a[b[k]].
    const Arrangement first = arrangement_of(a);
    const Arrangement second = arrangement_of(b);
    Arrangement composed{};
    for (std::size_t k = 0; k < 3; ++k) composed[k] = first[second[k]];
    return Flip::from_arrangement(composed);
}

Signature star_signature(const Signature& sig) {
    if (sig.arity() == 3) {
        // (A, B, C -> D) |-> (D*, A, B -> C*)
        return Signature{{sig.codomain.raised(), sig.args[0], sig.args[1]}, sig.args[2].raised()};
    }
    if (sig.arity() == 2) {
        // (A, B -> D) |-> (D*, A -> B*)
        return Signature{{sig.codomain.raised(), sig.args[0]}, sig.args[1].raised()};
    }
    throw std::invalid_argument("signature arity must be 2 or 3");
}

Signature flip_signature(const Signature& sig, const Flip& flip) {
    if (sig.arity() == 2) throw std::invalid_argument("flip undefined for arity 2");
    if (sig.arity() != 3) throw std::invalid_argument("signature arity must be 2 or 3");
    Signature out{sig.args, sig.codomain};
    for (std::size_t k = 0; k < 3; ++k) out.args[k] = sig.args[flip.arrangement[k]];
    return out;
}

Signature transpose_signature(const Signature& sig) {
    if (sig.arity() != 2) throw std::invalid_argument("transpose requires a bilinear signature");
    return Signature{{sig.args[1], sig.args[0]}, sig.codomain};
}

Word::Word(std::string letters) : letters_(std::move(letters)) {
    for (std::size_t k = 0; k < letters_.size(); ++k) {
        if (std::string_view("*ijrts").find(letters_[k]) == std::string_view::npos) {
            throw ParseError("unexpected character '" + std::string(1, letters_[k]) + "' at column " +
                                 std::to_string(k + 1),
                             k + 1);
        }
    }
}

Word Word::parse(std::string_view text) { return Word(std::string(text)); }

std::vector<Word> enumerate_words(std::size_t max_length) {
    static constexpr std::string_view alphabet = "*ijrts";
    std::vector<Word> out{Word()};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_length; ++len) {
        const std::size_t end = out.size();
        for (std::size_t k = begin; k < end; ++k) {
            for (char letter : alphabet) out.push_back(Word(out[k].letters() + letter));
        }
        begin = end;
    }
    return out;
}

Signature word_signature(const Signature& base, const Word& w) {
    Signature sig = base;
    for (char letter : w.letters()) {
        sig = letter == '*' ? star_signature(sig) : flip_signature(sig, Flip::from_letter(letter));
    }
    return sig;
}

Signature bilinear_word_signature(const Signature& base, const Word& w) {
    if (base.arity() != 2) throw std::invalid_argument("bilinear word requires a bilinear signature");
    Signature sig = base;
    for (char letter : w.letters()) {
        if (letter == '*') {
            sig = star_signature(sig);
        } else if (letter == 'r') {
            sig = transpose_signature(sig);
        } else {
            throw std::invalid_argument("flip undefined for arity 2");
        }
    }
    return sig;
}

AxisPermutation AxisPermutation::star() { return AxisPermutation{{3, 0, 1, 2}, 1}; }

AxisPermutation AxisPermutation::of_flip(const Flip& flip) {
    const auto& a = flip.arrangement;
    return AxisPermutation{{a[0], a[1], a[2], 3}, 0};
}

AxisPermutation AxisPermutation::then(const AxisPermutation& next) const {
    AxisPermutation out;
    for (std::size_t a = 0; a < 4; ++a) out.axes[a] = axes[next.axes[a]];
    out.star_count = star_count + next.star_count;
    return out;
}

AxisPermutation word_to_axis_permutation(const Word& w) {
    AxisPermutation perm;
    for (char letter : w.letters()) {
        perm = perm.then(letter == '*' ? AxisPermutation::star()
                                       : AxisPermutation::of_flip(Flip::from_letter(letter)));
    }
    return perm;
}

std::string to_string(const AxisPermutation& perm) {
    static constexpr std::array<const char*, 4> names{"X", "Y", "Z", "W"};
    std::string out = "(";
    for (std::size_t a = 0; a < 4; ++a) {
        if (a > 0) out += ",";
        out += names[perm.axes[a]];
    }
    out += ")";
    return out;
}

std::string ExtensionOrder::letters() const {
    std::string out;
    for (auto idx : outer_first) out += static_cast<char>('a' + idx);
    return out;
}

std::string ExtensionOrder::greek() const {
    static constexpr std::array<const char*, 3> names{"α", "β", "γ"};
    std::string out;
    for (auto idx : outer_first) out += names[idx];
    return out;
}

ExtensionOrder ExtensionOrder::from_letters(std::string_view letters) {
    for (const auto& order : all_extension_orders()) {
        if (order.letters() == letters) return order;
    }
    throw std::invalid_argument("not an extension order: " + std::string(letters));
}

const std::array<ExtensionOrder, 6>& all_extension_orders() {
    static const std::array<ExtensionOrder, 6> orders{
        ExtensionOrder{{0, 1, 2}}, ExtensionOrder{{1, 0, 2}}, ExtensionOrder{{0, 2, 1}},
        ExtensionOrder{{2, 1, 0}}, ExtensionOrder{{2, 0, 1}}, ExtensionOrder{{1, 2, 0}},
    };
    return orders;
}

namespace {

// The extension f^{u****v} of a canonical word is the plain extension of the
// flipped map f^u, so its limit order is u's arrangement of the net indices.
char inverse_letter(const Flip& f) {
    for (const auto& g : all_flips()) {
        if (!flip_compose(f, g)) return g.name;
    }
    throw std::logic_error("flip without inverse");
}

}  // namespace

Word canonical_word(const ExtensionOrder& order) {
    const auto flip = Flip::from_arrangement(order.outer_first);
    if (!flip) return Word("****");
    return Word(std::string(1, flip->name) + "****" + inverse_letter(*flip));
}

bool is_canonical_extension_word(const Word& w) {
    return std::any_of(all_extension_orders().begin(), all_extension_orders().end(),
                       [&](const ExtensionOrder& o) { return canonical_word(o) == w; });
}

ExtensionOrder extension_order(const Word& w) {
    for (const auto& order : all_extension_orders()) {
        if (canonical_word(order) == w) return order;
    }
    throw std::invalid_argument("not a canonical extension word");
}

}  // namespace aronberner
