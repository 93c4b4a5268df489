#include "aronberner/limits.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace aronberner {

std::array<std::size_t, 3> SequenceModelMap::slot_dims(std::size_t truncation) const {
    std::array<std::size_t, 3> dims{};
    for (std::size_t s = 0; s < 3; ++s) dims[s] = slots[s] == SlotKind::Sequence ? truncation : 1;
    return dims;
}

std::size_t SequenceModelMap::codomain_dim(std::size_t truncation) const {
    return codomain == CodomainKind::Sequence ? truncation : 1;
}

std::vector<double> SequenceModelMap::operator()(std::span<const double> x, std::span<const double> y,
                                                 std::span<const double> z) const {
    auto out = formula(x, y, z);
    for (double v : out) {
        if (!std::isfinite(v)) throw std::domain_error(name + ": non-finite value");
    }
    return out;
}

NetFamily NetFamily::unit_vector() { return NetFamily(Kind::UnitVector, "unit"); }

NetFamily NetFamily::cesaro() { return NetFamily(Kind::Cesaro, "cesaro"); }

NetFamily NetFamily::constant(std::vector<double> v, std::string label) {
    if (label.empty()) {
        label = "const(";
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (k > 0) label += ";";
            char buf[32];
            std::snprintf(buf, sizeof buf, "%g", v[k]);
            label += buf;
        }
        label += ")";
    }
    return NetFamily(Kind::Constant, std::move(label), {std::move(v)});
}

NetFamily NetFamily::custom_table(std::vector<std::vector<double>> rows, std::string label) {
    if (rows.empty()) throw std::invalid_argument("custom net table is empty");
    return NetFamily(Kind::CustomTable, std::move(label), std::move(rows));
}

std::vector<double> NetFamily::generate(std::size_t n, std::size_t dim) const {
    if (n == 0) throw std::invalid_argument("net indices are 1-based");
    std::vector<double> out(dim, 0.0);
    switch (kind_) {
    case Kind::UnitVector:
        if (n > dim) throw std::invalid_argument("unit-vector net index " + std::to_string(n) + " exceeds dimension " +
                                                 std::to_string(dim));
        out[n - 1] = 1.0;
        break;
    case Kind::Cesaro:
        for (std::size_t k = 0; k < std::min(n, dim); ++k) out[k] = 1.0 / static_cast<double>(n);
        break;
    case Kind::Constant:
    case Kind::CustomTable: {
        const auto& row = rows_[std::min(n, rows_.size()) - 1];
        std::copy_n(row.begin(), std::min(row.size(), dim), out.begin());
        break;
    }
    }
    return out;
}

std::string NetTriple::label() const { return nets[0].label() + "," + nets[1].label() + "," + nets[2].label(); }

void LimitParams::validate() const {
    if (horizon < 2) throw std::invalid_argument("horizon must be at least 2");
    if (truncation < 3 * horizon) throw std::invalid_argument("truncation must be at least 3 * horizon");
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
}

std::size_t LimitParams::layer_length(std::size_t layer) const { return truncation * (layer + 1) / 3; }

double TestFunctional::apply(std::span<const double> v) const {
    if (coordinate) return *coordinate < v.size() ? v[*coordinate] : 0.0;
    double acc = 0.0;
    for (double x : v) acc += x;
    return acc;
}

std::vector<TestFunctional> default_test_functionals(CodomainKind codomain, const LimitParams& params) {
    if (codomain == CodomainKind::Scalar) return {TestFunctional{"value", 0}};
    std::vector<TestFunctional> out;
    const std::size_t outer = params.layer_length(0);
    const std::size_t count = outer > params.horizon ? outer - params.horizon : 0;
    for (std::size_t q = 0; q < count; ++q) out.push_back(TestFunctional{"e" + std::to_string(q + 1), q});
    out.push_back(TestFunctional{"sum", std::nullopt});
    return out;
}

std::string to_string(LimitStatus status) {
    switch (status) {
    case LimitStatus::Stabilized: return "stabilized";
    case LimitStatus::ConvergedWithinTol: return "converged-within-tol";
    case LimitStatus::Failed: return "failed";
    }
    return "?";
}

ValueTable::ValueTable(const SequenceModelMap& f, const NetTriple& nets, const LimitParams& params,
                       std::vector<TestFunctional> functionals)
    : params_(params), functionals_(std::move(functionals)) {
    params_.validate();
    const std::size_t n_max = params_.truncation;
    const auto dims = f.slot_dims(n_max);
    std::array<std::vector<std::vector<double>>, 3> vectors;
    for (std::size_t s = 0; s < 3; ++s) {
        vectors[s].reserve(n_max);
        for (std::size_t n = 1; n <= n_max; ++n) vectors[s].push_back(nets.nets[s].generate(n, dims[s]));
    }
    const std::size_t nf = functionals_.size();
    values_.resize(n_max * n_max * n_max * nf);
    auto out = values_.begin();
    for (std::size_t a = 0; a < n_max; ++a) {
        for (std::size_t b = 0; b < n_max; ++b) {
            for (std::size_t c = 0; c < n_max; ++c) {
                const auto v = f(vectors[0][a], vectors[1][b], vectors[2][c]);
                for (const auto& q : functionals_) *out++ = q.apply(v);
            }
        }
    }
}

std::span<const double> ValueTable::at(std::size_t a, std::size_t b, std::size_t c) const {
    const std::size_t n = params_.truncation;
    const std::size_t nf = functionals_.size();
    return std::span<const double>(values_).subspan((((a - 1) * n + (b - 1)) * n + (c - 1)) * nf, nf);
}

namespace {

using Sample = std::vector<double>;

struct Settled {
    bool ok = false;
    bool exact = false;
    Sample value;
    std::size_t index = 0;
};

double max_abs_diff(const Sample& u, const Sample& v) {
    double d = 0.0;
    for (std::size_t q = 0; q < u.size(); ++q) d = std::max(d, std::abs(u[q] - v[q]));
    return d;
}

// First 1-based index s >= first such that seq[s..L] all satisfy `close` to the
// last sample.
template <typename Close>
std::size_t tail_start(const std::vector<Sample>& seq, std::size_t first, Close close) {
    std::size_t s = seq.size();
    while (s > first && close(seq[s - 2], seq.back())) --s;
    return s;
}

// Exact stabilization over the last H samples, then a Cauchy tail within tol,
// then a Cauchy tail of the first-order Richardson transform
// n s_n - (n-1) s_{n-1}, which settles sequences of the form L + c/n.
Settled settle(const std::vector<Sample>& seq, std::size_t horizon, double tol) {
    const std::size_t len = seq.size();
    Settled out;
    std::size_t s = tail_start(seq, 1, [](const Sample& u, const Sample& v) { return u == v; });
    if (len - s + 1 >= horizon) return {true, true, seq.back(), s};

    const auto within = [tol](const Sample& u, const Sample& v) { return max_abs_diff(u, v) <= tol; };
    s = tail_start(seq, 1, within);
    if (len - s + 1 >= horizon) return {true, false, seq.back(), s};

    if (len < horizon + 1) return out;
    std::vector<Sample> transformed(len);
    for (std::size_t n = 2; n <= len; ++n) {
        Sample r(seq[n - 1].size());
        const double w = static_cast<double>(n);
        for (std::size_t q = 0; q < r.size(); ++q) r[q] = w * seq[n - 1][q] - (w - 1.0) * seq[n - 2][q];
        transformed[n - 1] = std::move(r);
    }
    s = tail_start(transformed, 2, within);
    if (len - s + 1 >= horizon) return {true, false, transformed.back(), s};
    return out;
}

constexpr std::array<const char*, 3> index_names{"alpha", "beta", "gamma"};

struct LayerOutcome {
    bool ok = false;
    bool exact = true;
    Sample value;
    std::size_t index = 0;
    std::string failure;
};

class LimitEngine {
public:
    LimitEngine(const ValueTable& table, const ExtensionOrder& order) : table_(table), order_(order) {}

    LayerOutcome run(std::size_t layer, std::array<std::size_t, 3> idx) const {
        const auto& params = table_.params();
        const std::size_t len = params.layer_length(layer);
        const std::size_t net = order_.outer_first[layer];
        std::vector<Sample> seq;
        seq.reserve(len);
        bool exact = true;
        for (std::size_t n = 1; n <= len; ++n) {
            idx[net] = n;
            if (layer == 2) {
                const auto v = table_.at(idx[0], idx[1], idx[2]);
                seq.emplace_back(v.begin(), v.end());
            } else {
                LayerOutcome child = run(layer + 1, idx);
                if (!child.ok) return child;
                exact = exact && child.exact;
                seq.push_back(std::move(child.value));
            }
        }
        const Settled settled = settle(seq, params.horizon, params.tol);
        if (!settled.ok) {
            LayerOutcome fail;
            fail.failure = "no stabilization at layer " + std::to_string(layer + 1) + " (" + describe(layer, idx) + ")";
            return fail;
        }
        return LayerOutcome{true, exact && settled.exact, settled.value, settled.index, {}};
    }

private:
    std::string describe(std::size_t layer, const std::array<std::size_t, 3>& idx) const {
        if (layer == 0) return "no fixed indices";
        std::string out;
        for (std::size_t k = 0; k < layer; ++k) {
            if (k > 0) out += ", ";
            const std::size_t net = order_.outer_first[k];
            out += std::string(index_names[net]) + "=" + std::to_string(idx[net]);
        }
        return out;
    }

    const ValueTable& table_;
    ExtensionOrder order_;
};

std::size_t order_index(const ExtensionOrder& order) {
    const auto& all = all_extension_orders();
    return static_cast<std::size_t>(std::find(all.begin(), all.end(), order) - all.begin());
}

}  // namespace

LimitResult iterated_limit(const ValueTable& table, const ExtensionOrder& order) {
    const LimitEngine engine(table, order);
    LimitResult result;
    const LayerOutcome top = engine.run(0, {1, 1, 1});
    if (!top.ok) {
        result.failure = top.failure;
        return result;
    }
    result.value = top.value;
    result.status = top.exact ? LimitStatus::Stabilized : LimitStatus::ConvergedWithinTol;

    std::array<std::size_t, 3> path{1, 1, 1};
    result.stabilization_index[0] = top.index;
    path[order.outer_first[0]] = top.index;
    for (std::size_t layer = 1; layer < 3; ++layer) {
        const LayerOutcome step = engine.run(layer, path);
        result.stabilization_index[layer] = step.index;
        path[order.outer_first[layer]] = step.index;
    }
    return result;
}

LimitResult iterated_limit(const SequenceModelMap& f, const NetTriple& nets, const ExtensionOrder& order,
                           const LimitParams& params) {
    const ValueTable table(f, nets, params, default_test_functionals(f.codomain, params));
    return iterated_limit(table, order);
}

std::string to_string(Classification c) {
    switch (c) {
    case Classification::AronBernerRegularEvidence: return "aron-berner-regular-evidence";
    case Classification::CloseToRegularEvidence: return "close-to-regular-evidence";
    case Classification::Irregular: return "irregular";
    case Classification::Inconclusive: return "inconclusive";
    }
    return "?";
}

const LimitResult& ExtensionReport::primary(const ExtensionOrder& order) const {
    return probes.at(0).by_order[order_index(order)];
}

bool ExtensionReport::all_succeeded() const {
    return std::all_of(probes.begin(), probes.end(), [](const ProbeResult& p) {
        return std::all_of(p.by_order.begin(), p.by_order.end(),
                           [](const LimitResult& r) { return r.status != LimitStatus::Failed; });
    });
}

namespace {

// nullopt if either failed.
std::optional<bool> results_agree(const LimitResult& a, const LimitResult& b, double tol) {
    if (!a.value || !b.value) return std::nullopt;
    for (std::size_t q = 0; q < a.value->size(); ++q) {
        if (std::abs((*a.value)[q] - (*b.value)[q]) > tol) return false;
    }
    return true;
}

}  // namespace

std::optional<bool> orders_agree(const std::vector<ProbeResult>& probes, const ExtensionOrder& a,
                                 const ExtensionOrder& b, double tol) {
    bool undecided = false;
    for (const auto& probe : probes) {
        const auto agree = results_agree(probe.by_order[order_index(a)], probe.by_order[order_index(b)], tol);
        if (agree == false) return false;
        if (!agree) undecided = true;
    }
    if (undecided) return std::nullopt;
    return true;
}

Verdict classify(const std::vector<ProbeResult>& probes, double tol) {
    const auto& orders = all_extension_orders();
    bool all_equal = true;
    for (std::size_t p = 0; p < orders.size() && all_equal; ++p) {
        for (std::size_t q = p + 1; q < orders.size() && all_equal; ++q) {
            all_equal = orders_agree(probes, orders[p], orders[q], tol) == true;
        }
    }
    if (all_equal) return {Classification::AronBernerRegularEvidence, std::nullopt};

    const auto t_then_s = ExtensionOrder{{2, 0, 1}};
    const auto s_then_t = ExtensionOrder{{1, 2, 0}};
    if (orders_agree(probes, t_then_s, s_then_t, tol) == true) return {Classification::CloseToRegularEvidence, std::nullopt};

    for (std::size_t p = 0; p < orders.size(); ++p) {
        for (std::size_t q = p + 1; q < orders.size(); ++q) {
            for (std::size_t k = 0; k < probes.size(); ++k) {
                if (results_agree(probes[k].by_order[p], probes[k].by_order[q], tol) == false) {
                    return {Classification::Irregular, Witness{orders[p], orders[q], k}};
                }
            }
        }
    }
    return {Classification::Inconclusive, std::nullopt};
}

ExtensionReport six_extensions(const SequenceModelMap& f, const std::vector<NetTriple>& probes,
                               const LimitParams& params) {
    params.validate();
    if (probes.empty()) throw std::invalid_argument("at least one net triple is required");
    ExtensionReport report;
    report.map_name = f.name;
    report.params = params;
    const auto functionals = default_test_functionals(f.codomain, params);
    for (const auto& q : functionals) report.functionals.push_back(q.label);
    for (const auto& nets : probes) {
        const ValueTable table(f, nets, params, functionals);
        ProbeResult probe{nets.label(), {}};
        for (std::size_t k = 0; k < 6; ++k) probe.by_order[k] = iterated_limit(table, all_extension_orders()[k]);
        report.probes.push_back(std::move(probe));
    }
    report.verdict = classify(report.probes, params.tol);
    return report;
}

ExtensionReport six_extensions(const SequenceModelMap& f, const NetTriple& nets, const LimitParams& params) {
    return six_extensions(f, std::vector<NetTriple>{nets}, params);
}

bool extension_triples_consistent(const ExtensionReport& report) {
    if (!report.all_succeeded()) throw std::invalid_argument("extension_triples_consistent requires every limit to exist");
    const double tol = report.params.tol;
    const auto all_agree = [&](std::initializer_list<const char*> names) {
        std::vector<ExtensionOrder> group;
        for (const char* n : names) group.push_back(ExtensionOrder::from_letters(n));
        for (std::size_t p = 0; p < group.size(); ++p) {
            for (std::size_t q = p + 1; q < group.size(); ++q) {
                if (orders_agree(report.probes, group[p], group[q], tol) != true) return false;
            }
        }
        return true;
    };
    const bool six = all_agree({"abc", "bac", "acb", "cba", "cab", "bca"});
    const bool first = all_agree({"cab", "abc", "bca"});
    const bool second = all_agree({"bac", "acb", "cba"});
    return first == six && second == six;
}

SequenceModelMap flipped(const SequenceModelMap& f, const Flip& flip) {
    SequenceModelMap out;
    out.name = f.name + "^" + flip.name;
    out.codomain = f.codomain;
    const auto arr = flip.arrangement;
    for (std::size_t k = 0; k < 3; ++k) out.slots[k] = f.slots[arr[k]];
    out.formula = [inner = f.formula, arr](std::span<const double> v0, std::span<const double> v1,
                                           std::span<const double> v2) {
        std::array<std::span<const double>, 3> orig;
        orig[arr[0]] = v0;
        orig[arr[1]] = v1;
        orig[arr[2]] = v2;
        return inner(orig[0], orig[1], orig[2]);
    };
    return out;
}

NetTriple flipped(const NetTriple& nets, const Flip& flip) {
    const auto arr = flip.arrangement;
    return NetTriple{{nets.nets[arr[0]], nets.nets[arr[1]], nets.nets[arr[2]]}};
}

std::array<ExtensionOrder, 2> close_to_regular_orders(const FlipOrIdentity& flip) {
    const Arrangement arr = flip ? flip->arrangement : identity_arrangement;
    const auto image = [&](std::array<std::uint8_t, 3> o) {
        return ExtensionOrder{{arr[o[0]], arr[o[1]], arr[o[2]]}};
    };
    return {image({2, 0, 1}), image({1, 2, 0})};
}

FlipVerdict close_to_regular_of_flip(const SequenceModelMap& f, const Flip& flip,
                                     const std::vector<NetTriple>& probes, const LimitParams& params) {
    params.validate();
    const SequenceModelMap g = flipped(f, flip);
    const auto functionals = default_test_functionals(g.codomain, params);
    FlipVerdict verdict{true, close_to_regular_orders(flip), {}};
    bool undecided = false;
    for (const auto& nets : probes) {
        const ValueTable table(g, flipped(nets, flip), params, functionals);
        std::array<LimitResult, 2> pair{iterated_limit(table, ExtensionOrder{{2, 0, 1}}),
                                        iterated_limit(table, ExtensionOrder{{1, 2, 0}})};
        const auto agree = results_agree(pair[0], pair[1], params.tol);
        if (agree == false) verdict.close_to_regular = false;
        if (!agree) undecided = true;
        verdict.per_probe.push_back(std::move(pair));
    }
    if (verdict.close_to_regular == true && undecided) verdict.close_to_regular = std::nullopt;
    return verdict;
}

}  // namespace aronberner
