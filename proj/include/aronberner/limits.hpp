#ifndef ARONBERNER_LIMITS_HPP
#define ARONBERNER_LIMITS_HPP

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aronberner/signatures.hpp"

namespace aronberner {

/// A slot of a sequence-space map is either a truncated sequence space or the
/// one-dimensional space of scalars.
enum class SlotKind { Sequence, Scalar };
enum class CodomainKind { Sequence, Scalar };

using TrilinearFormula =
    std::function<std::vector<double>(std::span<const double>, std::span<const double>, std::span<const double>)>;

/// A tri-linear map given by a formula on truncated sequences. The formula
/// receives vectors of length slot_dims(N) and returns the codomain
/// coordinates (length 1 for a scalar codomain).
struct SequenceModelMap {
    std::string name;
    std::array<SlotKind, 3> slots{SlotKind::Sequence, SlotKind::Sequence, SlotKind::Sequence};
    CodomainKind codomain = CodomainKind::Scalar;
    TrilinearFormula formula;

    std::array<std::size_t, 3> slot_dims(std::size_t truncation) const;
    std::size_t codomain_dim(std::size_t truncation) const;

    /// Evaluates the formula; throws if a value is not finite.
    std::vector<double> operator()(std::span<const double> x, std::span<const double> y,
                                   std::span<const double> z) const;
};

/// Index-parameterized vectors standing in for a weak*-convergent net.
/// Indices are 1-based.
class NetFamily {
public:
    enum class Kind { UnitVector, Cesaro, Constant, CustomTable };

    /// n |-> e_n
    static NetFamily unit_vector();
    /// n |-> (1/n) sum_{k<=n} e_k
    static NetFamily cesaro();
    /// n |-> v (zero-padded or truncated to the slot dimension)
    static NetFamily constant(std::vector<double> v, std::string label = "");
    /// n |-> rows[n-1]; indices beyond the table repeat the last row.
    static NetFamily custom_table(std::vector<std::vector<double>> rows, std::string label = "table");

    Kind kind() const { return kind_; }
    const std::string& label() const { return label_; }

    std::vector<double> generate(std::size_t n, std::size_t dim) const;

private:
    NetFamily(Kind kind, std::string label, std::vector<std::vector<double>> rows = {})
        : kind_(kind), label_(std::move(label)), rows_(std::move(rows)) {}

    Kind kind_;
    std::string label_;
    std::vector<std::vector<double>> rows_;
};

/// Nets for the alpha, beta and gamma indices, i.e. for slots X, Y, Z.
struct NetTriple {
    std::array<NetFamily, 3> nets;

    std::string label() const;
};

struct LimitParams {
    std::size_t truncation = 50;
    std::size_t horizon = 10;
    double tol = 1e-9;

    /// Throws std::invalid_argument unless N >= 3H, H >= 2 and tol > 0.
    void validate() const;

    /// Scan length of a limit layer, 0 = outermost: N/3, 2N/3, N. Every inner
    /// scan has at least N/3 >= H samples past any fixed outer index.
    std::size_t layer_length(std::size_t layer) const;
};

/// A finite stand-in for weak* convergence in the codomain.
struct TestFunctional {
    std::string label;
    std::optional<std::size_t> coordinate;  // 0-based coordinate; nullopt = summing functional

    double apply(std::span<const double> v) const;
};

/// Scalar codomain: the value itself. Sequence codomain: coordinates
/// 1..(N/3 - H), the ones whose support every layer scans past, plus the
/// summing functional.
std::vector<TestFunctional> default_test_functionals(CodomainKind codomain, const LimitParams& params);

enum class LimitStatus { Stabilized, ConvergedWithinTol, Failed };

std::string to_string(LimitStatus status);

struct LimitResult {
    /// One entry per test functional; absent iff status == Failed.
    std::optional<std::vector<double>> value;
    LimitStatus status = LimitStatus::Failed;
    /// Per layer (outermost first), the 1-based index from which the scanned
    /// sequence settled, taken along the path that fixes each outer index at
    /// its own settling index.
    std::array<std::size_t, 3> stabilization_index{};
    std::string failure;
};

/// <phi_q, f(x_a, y_b, z_c)> for every index triple up to N and every test
/// functional q.
class ValueTable {
public:
    ValueTable(const SequenceModelMap& f, const NetTriple& nets, const LimitParams& params,
               std::vector<TestFunctional> functionals);

    std::span<const double> at(std::size_t a, std::size_t b, std::size_t c) const;
    std::size_t functional_count() const { return functionals_.size(); }
    const std::vector<TestFunctional>& functionals() const { return functionals_; }
    const LimitParams& params() const { return params_; }

private:
    LimitParams params_;
    std::vector<TestFunctional> functionals_;
    std::vector<double> values_;
};

LimitResult iterated_limit(const ValueTable& table, const ExtensionOrder& order);

LimitResult iterated_limit(const SequenceModelMap& f, const NetTriple& nets, const ExtensionOrder& order,
                           const LimitParams& params);

enum class Classification { AronBernerRegularEvidence, CloseToRegularEvidence, Irregular, Inconclusive };

std::string to_string(Classification c);

/// Six limits on one net triple, indexed like all_extension_orders().
struct ProbeResult {
    std::string nets;
    std::array<LimitResult, 6> by_order;
};

struct Witness {
    ExtensionOrder first;
    ExtensionOrder second;
    std::size_t probe = 0;
};

struct Verdict {
    Classification classification = Classification::Inconclusive;
    std::optional<Witness> witness;
};

struct ExtensionReport {
    std::string map_name;
    LimitParams params;
    std::vector<std::string> functionals;
    /// probes[0] is the primary net triple.
    std::vector<ProbeResult> probes;
    Verdict verdict;

    const LimitResult& primary(const ExtensionOrder& order) const;
    bool all_succeeded() const;
};

/// Two orders agree when, on every probe, both limits exist and match on every
/// test functional within tol. nullopt when a failure leaves it undecided and
/// no probe shows a difference.
std::optional<bool> orders_agree(const std::vector<ProbeResult>& probes, const ExtensionOrder& a,
                                 const ExtensionOrder& b, double tol);

/// aron-berner-regular-evidence if all six agree; else close-to-regular-evidence
/// if the (γ,α,β) and (β,γ,α) orders agree; else irregular, witnessed by the
/// first pair of orders (display order) and probe showing a difference.
Verdict classify(const std::vector<ProbeResult>& probes, double tol);

/// Runs all six orders on every probe (the first one is primary) and classifies.
ExtensionReport six_extensions(const SequenceModelMap& f, const std::vector<NetTriple>& probes,
                               const LimitParams& params);
ExtensionReport six_extensions(const SequenceModelMap& f, const NetTriple& nets, const LimitParams& params);

/// Both triple criteria for regularity give the same answer as the six-way
/// comparison: {(γ,α,β),(α,β,γ),(β,γ,α)} all agree iff all six agree, and
/// likewise for {(β,α,γ),(α,γ,β),(γ,β,α)}. Throws if any limit failed.
bool extension_triples_consistent(const ExtensionReport& report);

/// f^flip: slot k receives the argument (and net) of original slot
/// flip.arrangement[k].
SequenceModelMap flipped(const SequenceModelMap& f, const Flip& flip);
NetTriple flipped(const NetTriple& nets, const Flip& flip);

/// The pair of orders of the original map that the close-to-regularity of
/// f^flip compares, i.e. the images of (γ,α,β) and (β,γ,α).
std::array<ExtensionOrder, 2> close_to_regular_orders(const FlipOrIdentity& flip);

struct FlipVerdict {
    /// nullopt when a failed limit leaves the comparison undecided.
    std::optional<bool> close_to_regular;
    std::array<ExtensionOrder, 2> original_orders;
    std::vector<std::array<LimitResult, 2>> per_probe;
};

/// Tests (γ,α,β) = (β,γ,α) for the flipped map on the flipped nets.
FlipVerdict close_to_regular_of_flip(const SequenceModelMap& f, const Flip& flip,
                                     const std::vector<NetTriple>& probes, const LimitParams& params);

}  // namespace aronberner

#endif  // ARONBERNER_LIMITS_HPP
