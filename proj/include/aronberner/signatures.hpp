#ifndef ARONBERNER_SIGNATURES_HPP
#define ARONBERNER_SIGNATURES_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace aronberner {

/// Base-space roles. X, Y, Z are the tri-linear argument spaces, W its
/// codomain; S is the intermediate space of a bilinear factorization.
enum class Role : std::uint8_t { X, Y, Z, W, S };

char role_name(Role role);

struct Space {
    Role base = Role::X;
    unsigned dual_level = 0;

    /// The dual (`levels` = 1) or higher dual of this space.
    Space raised(unsigned levels = 1) const { return Space{base, dual_level + levels}; }

    friend bool operator==(const Space&, const Space&) = default;
};

/// "X", "W*", "Z**", ...
std::string to_string(const Space& space);

struct Signature {
    std::vector<Space> args;
    Space codomain;

    std::size_t arity() const { return args.size(); }

    /// X x Y x Z -> W
    static Signature trilinear();
    static Signature bilinear(Role first, Role second, Role codomain);

    bool is_canonical_trilinear() const;
    bool is_bidual_trilinear() const;

    friend bool operator==(const Signature&, const Signature&) = default;
};

/// "X x Y x Z -> W" with one `*` per dual level.
std::string to_string(const Signature& sig);

/// Argument arrangement of a flip: slot k of the flipped map receives the
/// argument that occupied slot `arrangement[k]` of the original map. For t the
/// arrangement is (Z, X, Y), i.e. {2, 0, 1}.
using Arrangement = std::array<std::uint8_t, 3>;

inline constexpr Arrangement identity_arrangement{0, 1, 2};

struct Flip {
    char name;  // one of i, j, r, t, s
    Arrangement arrangement;

    static Flip i();
    static Flip j();
    static Flip r();
    static Flip t();
    static Flip s();
    static Flip from_letter(char letter);
    /// Flip realising `arrangement`; nullopt for the identity arrangement.
    static std::optional<Flip> from_arrangement(const Arrangement& arrangement);

    friend bool operator==(const Flip& a, const Flip& b) { return a.name == b.name; }
};

/// The five flips in the order i, j, r, t, s.
const std::array<Flip, 5>& all_flips();

/// An element of the flip group: nullopt is the identity.
using FlipOrIdentity = std::optional<Flip>;

/// The group element acting as "apply `a`, then apply `b`", i.e. f^{ab} = (f^a)^b.
FlipOrIdentity flip_compose(const FlipOrIdentity& a, const FlipOrIdentity& b);

Signature star_signature(const Signature& sig);

/// Throws std::invalid_argument("flip undefined for arity 2") on bilinear input.
Signature flip_signature(const Signature& sig, const Flip& flip);

/// Argument swap m^r(y, x) = m(x, y) of a bilinear signature.
Signature transpose_signature(const Signature& sig);

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t column)
        : std::invalid_argument(what), column_(column) {}

    /// 1-based column of the offending character.
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

/// A word over {*, i, j, r, t, s}, applied left to right:
/// f^{t****s} = ((f^t)^{****})^s.
class Word {
public:
    Word() = default;
    explicit Word(std::string letters);

    /// Throws ParseError on any character outside `*ijrts`.
    static Word parse(std::string_view text);

    const std::string& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::string letters_;
};

/// Every word over {*, i, j, r, t, s} of length <= max_length, shortest first.
std::vector<Word> enumerate_words(std::size_t max_length);

/// Folds star_signature / flip_signature over the letters of `w`.
Signature word_signature(const Signature& base, const Word& w);

/// Bilinear words use `*` and the argument swap `r` only.
Signature bilinear_word_signature(const Signature& base, const Word& w);

/// Finite-dimensional meaning of a word on a tri-linear coordinate tensor with
/// axes (arg0, arg1, arg2, codomain). `axes[a]` is the axis of the original
/// tensor that ends up at axis `a` of the result.
struct AxisPermutation {
    std::array<std::uint8_t, 4> axes{0, 1, 2, 3};
    unsigned star_count = 0;

    static AxisPermutation identity() { return {}; }
    /// The rotation S[p][i][j][k] = T[i][j][k][p].
    static AxisPermutation star();
    static AxisPermutation of_flip(const Flip& flip);

    /// `this` applied first, then `next`.
    AxisPermutation then(const AxisPermutation& next) const;

    bool is_identity() const { return axes == std::array<std::uint8_t, 4>{0, 1, 2, 3}; }
    bool same_rearrangement(const AxisPermutation& other) const { return axes == other.axes; }

    friend bool operator==(const AxisPermutation&, const AxisPermutation&) = default;
};

AxisPermutation word_to_axis_permutation(const Word& w);

std::string to_string(const AxisPermutation& perm);

/// Order of the three iterated limits over the net indices alpha (0),
/// beta (1), gamma (2), listed outermost first.
struct ExtensionOrder {
    std::array<std::uint8_t, 3> outer_first{0, 1, 2};

    /// "abc", "bac", ... in Latin transliteration.
    std::string letters() const;
    /// "αβγ", ...
    std::string greek() const;

    static ExtensionOrder from_letters(std::string_view letters);

    friend bool operator==(const ExtensionOrder&, const ExtensionOrder&) = default;
};

/// The six orders in the order f^{****}, f^{i****i}, f^{j****j}, f^{r****r},
/// f^{t****s}, f^{s****t}.
const std::array<ExtensionOrder, 6>& all_extension_orders();

/// The canonical word (****, i****i, ...) whose extension is `order`.
Word canonical_word(const ExtensionOrder& order);

bool is_canonical_extension_word(const Word& w);

/// Throws std::invalid_argument("not a canonical extension word") unless `w`
/// is one of the six canonical words.
ExtensionOrder extension_order(const Word& w);

}  // namespace aronberner

#endif  // ARONBERNER_SIGNATURES_HPP
