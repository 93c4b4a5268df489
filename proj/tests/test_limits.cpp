#include <doctest.h>

#include <cmath>
#include <sstream>

#include "aronberner/catalog.hpp"
#include "aronberner/limits.hpp"
#include "oracles.hpp"

using namespace aronberner;

namespace {

std::vector<std::string> split_label(const std::string& label) {
    std::vector<std::string> out;
    std::stringstream in(label);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(item);
    return out;
}

using IndexFn = std::function<double(std::size_t, std::size_t, std::size_t)>;

// A net pinned to e1 contributes index 1 whatever the limit index is.
IndexFn pin(const IndexFn& f, const std::string& label) {
    const auto parts = split_label(label);
    return [f, parts](std::size_t a, std::size_t b, std::size_t c) {
        return f(parts[0] == "e1" ? 1 : a, parts[1] == "e1" ? 1 : b, parts[2] == "e1" ? 1 : c);
    };
}

// Scalar-valued brute-force limit of a triangular pattern on one probe.
double triangular_oracle(const std::string& pattern, const std::string& label, const std::array<int, 3>& order) {
    const IndexFn f = [pattern](std::size_t a, std::size_t b, std::size_t c) {
        return oracle::triangular_indicator(pattern, a, b, c);
    };
    return oracle::iterated_limit(pin(f, label), order);
}

ExtensionReport report_for(const std::string& name, LimitParams params = {}) {
    const auto spec = example_by_name(name);
    return six_extensions(spec.sequence_instance, spec.probe_nets(), params);
}

std::array<int, 3> slots(const ExtensionOrder& o) { return {o.outer_first[0], o.outer_first[1], o.outer_first[2]}; }

// <u,x><v,y><w,z> with eventually constant u, v, w.
SequenceModelMap product_map() {
    SequenceModelMap f;
    f.name = "product";
    f.formula = [](std::span<const double> x, std::span<const double> y, std::span<const double> z) {
        const auto pair = [](std::span<const double> v, auto seq) {
            double acc = 0.0;
            for (std::size_t n = 0; n < v.size(); ++n) acc += seq(n + 1) * v[n];
            return acc;
        };
        const double u = pair(x, [](std::size_t n) { return n < 4 ? static_cast<double>(n) : 2.0; });
        const double v = pair(y, [](std::size_t n) { return n < 7 ? 0.5 * n : -1.5; });
        const double w = pair(z, [](std::size_t n) { return n < 3 ? 1.0 : 0.25; });
        return std::vector<double>{u * v * w};
    };
    return f;
}

NetTriple unit_nets() { return NetTriple{{NetFamily::unit_vector(), NetFamily::unit_vector(), NetFamily::unit_vector()}}; }

}  // namespace

TEST_CASE("net families") {
    CHECK(NetFamily::unit_vector().generate(3, 5) == std::vector<double>{0, 0, 1, 0, 0});
    CHECK(NetFamily::cesaro().generate(2, 4) == std::vector<double>{0.5, 0.5, 0, 0});
    CHECK(NetFamily::constant({1.0, 2.0}).generate(9, 3) == std::vector<double>{1, 2, 0});
    const auto table = NetFamily::custom_table({{1.0}, {0.0, 2.0}});
    CHECK(table.generate(1, 2) == std::vector<double>{1, 0});
    CHECK(table.generate(5, 2) == std::vector<double>{0, 2});
    CHECK_THROWS(NetFamily::unit_vector().generate(6, 5));
    CHECK_THROWS(NetFamily::unit_vector().generate(0, 5));
}

TEST_CASE("limit parameters") {
    CHECK_NOTHROW(LimitParams{}.validate());
    CHECK_THROWS_WITH(LimitParams({29, 10, 1e-9}).validate(), "truncation must be at least 3 * horizon");
    CHECK_THROWS(LimitParams({30, 1, 1e-9}).validate());
    CHECK_THROWS(LimitParams({30, 10, 0.0}).validate());
    CHECK(LimitParams{}.layer_length(0) == 16);
    CHECK(LimitParams{}.layer_length(2) == 50);
}

TEST_CASE("test functionals") {
    const auto scalar = default_test_functionals(CodomainKind::Scalar, LimitParams{});
    REQUIRE(scalar.size() == 1);
    CHECK(scalar[0].label == "value");
    const auto seq = default_test_functionals(CodomainKind::Sequence, LimitParams{});
    REQUIRE(seq.size() == 7);
    CHECK(seq.front().label == "e1");
    CHECK(seq.back().label == "sum");
    const std::vector<double> v{1, 2, 3};
    CHECK(seq[1].apply(v) == 2.0);
    CHECK(seq.back().apply(v) == 6.0);
}

TEST_CASE("triangular limits match the brute-force oracle on every probe") {
    for (const std::string pattern : {"ijk", "ikj", "jik", "jki", "kij", "kji"}) {
        const auto report = report_for("triangular-" + pattern);
        REQUIRE(report.all_succeeded());
        for (const auto& probe : report.probes) {
            for (std::size_t k = 0; k < 6; ++k) {
                const auto& order = all_extension_orders()[k];
                CAPTURE(pattern);
                CAPTURE(probe.nets);
                CAPTURE(order.letters());
                const auto& r = probe.by_order[k];
                CHECK(r.status == LimitStatus::Stabilized);
                CHECK(r.value->front() == triangular_oracle(pattern, probe.nets, slots(order)));
            }
        }
    }
}

TEST_CASE("triangular-ijk separates the first order from the rest") {
    const auto report = report_for("triangular-ijk");
    CHECK(report.primary(ExtensionOrder::from_letters("abc")).value->front() == 1.0);
    for (const auto* o : {"bac", "acb", "cba", "cab", "bca"}) CHECK(report.primary(ExtensionOrder::from_letters(o)).value->front() == 0.0);
    CHECK(report.verdict.classification == Classification::Irregular);
    REQUIRE(report.verdict.witness);
    CHECK(report.verdict.witness->first.letters() == "abc");
    CHECK(report.verdict.witness->second.letters() == "bac");
    CHECK(report.verdict.witness->probe == 0);
    CHECK(extension_triples_consistent(report));
}

TEST_CASE("separation holds across truncations and horizons") {
    const auto spec = example_by_name("triangular-ijk");
    for (const auto& params : {LimitParams{6, 2, 1e-9}, LimitParams{30, 10, 1e-9}, LimitParams{45, 15, 1e-9},
                               LimitParams{64, 7, 1e-9}}) {
        CAPTURE(params.truncation);
        const auto report = six_extensions(spec.sequence_instance, spec.primary_nets(), params);
        for (const auto& order : all_extension_orders()) {
            const auto& r = report.primary(order);
            REQUIRE(r.value);
            CHECK(r.value->front() == (order.letters() == "abc" ? 1.0 : 0.0));
        }
    }
}

TEST_CASE("stabilization soundness under a larger truncation") {
    const auto base = report_for("triangular-jki");
    for (std::size_t n : {60, 90}) {
        const auto larger = report_for("triangular-jki", LimitParams{n, 10, 1e-9});
        for (std::size_t p = 0; p < base.probes.size(); ++p) {
            for (std::size_t k = 0; k < 6; ++k) {
                const auto& a = base.probes[p].by_order[k];
                const auto& b = larger.probes[p].by_order[k];
                REQUIRE(a.status == LimitStatus::Stabilized);
                CHECK(b.value == a.value);
                for (std::size_t layer = 0; layer < 3; ++layer) CHECK(b.stabilization_index[layer] <= a.stabilization_index[layer]);
            }
        }
    }
}

TEST_CASE("constant nets give the value of the map") {
    const auto spec = example_by_name("triangular-ijk");
    const std::vector<double> v{1, 2}, w{0, 1}, u{3, 1};
    double expected = 0.0;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = i; j < 2; ++j)
            for (std::size_t k = j; k < 2; ++k) expected += v[i] * w[j] * u[k];
    const NetTriple nets{{NetFamily::constant(v), NetFamily::constant(w), NetFamily::constant(u)}};
    for (const auto& order : all_extension_orders()) {
        const auto r = iterated_limit(spec.sequence_instance, nets, order, LimitParams{});
        CHECK(r.status == LimitStatus::Stabilized);
        CHECK(r.value->front() == expected);
    }
}

TEST_CASE("orders agree on product evaluators") {
    // Limits of the factors: 2, -1.5, 0.25.
    const auto report = six_extensions(product_map(), unit_nets(), LimitParams{});
    for (const auto& order : all_extension_orders()) {
        const auto& r = report.primary(order);
        CHECK(r.status == LimitStatus::Stabilized);
        CHECK(r.value->front() == 2.0 * -1.5 * 0.25);
    }
    CHECK(report.verdict.classification == Classification::AronBernerRegularEvidence);
}

TEST_CASE("rank-one map matches the product of limits") {
    const auto report = report_for("rank-one");
    REQUIRE(report.all_succeeded());
    // lim phi = 1, lim psi = 1, and the unit-vector net in the codomain tends
    // weak* to 0 coordinatewise while the sum functional sees 1.
    const double phi_limit = 1.0, psi_limit = 1.0;
    for (const auto& probe : report.probes) {
        const auto parts = split_label(probe.nets);
        // On e1, phi contributes phi_1 = 0 and psi contributes psi_1 = 1.
        const double u = parts[0] == "e1" ? 0.0 : phi_limit;
        const double v = parts[1] == "e1" ? 1.0 : psi_limit;
        for (const auto& r : probe.by_order) {
            const auto& values = *r.value;
            for (std::size_t q = 0; q + 1 < values.size(); ++q) {
                const double coordinate = parts[2] == "e1" && q == 0 ? 1.0 : 0.0;
                CHECK(std::abs(values[q] - u * v * coordinate) <= 1e-9);
            }
            CHECK(std::abs(values.back() - u * v) <= 1e-9);
        }
    }
    CHECK(report.verdict.classification == Classification::AronBernerRegularEvidence);
    CHECK(extension_triples_consistent(report));
}

TEST_CASE("reflexive middle is close to regular but not regular") {
    const auto report = report_for("reflexive-middle");
    const auto value = [&](const char* o) { return report.primary(ExtensionOrder::from_letters(o)).value->front(); };
    CHECK(value("abc") == 1.0);
    CHECK(value("cab") == 0.0);
    CHECK(value("bca") == 0.0);
    const IndexFn f = [](std::size_t a, std::size_t, std::size_t c) { return a <= c ? 1.0 : 0.0; };
    for (const auto& probe : report.probes) {
        for (std::size_t k = 0; k < 6; ++k) {
            CHECK(probe.by_order[k].value->front() ==
                  oracle::iterated_limit(pin(f, probe.nets), slots(all_extension_orders()[k])));
        }
    }
    CHECK(report.verdict.classification == Classification::CloseToRegularEvidence);
}

TEST_CASE("composed examples") {
    const auto regular = report_for("composed-regular");
    CHECK(regular.verdict.classification == Classification::AronBernerRegularEvidence);
    for (const auto& order : all_extension_orders()) CHECK(std::abs(regular.primary(order).value->front() - 2.0) <= 1e-9);

    const auto irregular = report_for("composed-irregular");
    CHECK(irregular.verdict.classification == Classification::Irregular);
    CHECK(irregular.primary(ExtensionOrder::from_letters("abc")).value->back() == 1.0);
    CHECK(irregular.primary(ExtensionOrder::from_letters("bac")).value->back() == 0.0);
}

TEST_CASE("extension triples are consistent on the whole catalog") {
    for (const auto& name : example_names()) {
        CAPTURE(name);
        CHECK(extension_triples_consistent(report_for(name)));
    }
}

TEST_CASE("classification is a pure function of the stored results") {
    for (const auto* name : {"triangular-kij", "rank-one", "reflexive-middle"}) {
        const auto report = report_for(name);
        const auto again = classify(report.probes, report.params.tol);
        CHECK(again.classification == report.verdict.classification);
        CHECK(again.witness.has_value() == report.verdict.witness.has_value());
    }
}

TEST_CASE("oscillating limits fail with the offending indices") {
    SequenceModelMap f;
    f.name = "oscillating";
    f.formula = [](std::span<const double> x, std::span<const double>, std::span<const double> z) {
        double sign = 0.0;
        for (std::size_t n = 0; n < z.size(); ++n) sign += (n % 2 ? -1.0 : 1.0) * z[n];
        return std::vector<double>{x[0] + sign};
    };
    const auto r = iterated_limit(f, unit_nets(), ExtensionOrder::from_letters("abc"), LimitParams{});
    CHECK(r.status == LimitStatus::Failed);
    CHECK_FALSE(r.value);
    CHECK(r.failure.find("no stabilization at layer") != std::string::npos);
    const auto report = six_extensions(f, unit_nets(), LimitParams{});
    CHECK_FALSE(report.all_succeeded());
    CHECK_THROWS(extension_triples_consistent(report));
    CHECK(report.verdict.classification == Classification::Inconclusive);
}

TEST_CASE("slow convergence settles within tolerance") {
    // phi_n = 1 - 1/n only converges at rate 1/n.
    SequenceModelMap f;
    f.name = "harmonic";
    f.formula = [](std::span<const double> x, std::span<const double>, std::span<const double>) {
        double acc = 0.0;
        for (std::size_t n = 0; n < x.size(); ++n) acc += (1.0 - 1.0 / static_cast<double>(n + 1)) * x[n];
        return std::vector<double>{acc};
    };
    const auto r = iterated_limit(f, unit_nets(), ExtensionOrder::from_letters("cba"), LimitParams{});
    CHECK(r.status == LimitStatus::ConvergedWithinTol);
    CHECK(std::abs(r.value->front() - 1.0) <= 1e-9);
}

TEST_CASE("close-to-regularity of flipped maps") {
    const auto rank = example_by_name("rank-one");
    CHECK(close_to_regular_of_flip(rank.sequence_instance, Flip::t(), rank.probe_nets(), LimitParams{}).close_to_regular == true);

    const auto tri = example_by_name("triangular-ijk");
    const auto verdict = [&](const ExampleSpec& spec, const Flip& flip) {
        return close_to_regular_of_flip(spec.sequence_instance, flip, spec.probe_nets(), LimitParams{}).close_to_regular;
    };
    // Under i the compared pair is (acb, cba), both 0 on every probe.
    CHECK(verdict(tri, Flip::i()) == true);
    CHECK(verdict(tri, Flip::j()) == false);
    CHECK(verdict(tri, Flip::r()) == false);
    CHECK(verdict(tri, Flip::t()) == false);
    CHECK(verdict(tri, Flip::s()) == false);
    CHECK(verdict(example_by_name("triangular-ikj"), Flip::i()) == false);
}

TEST_CASE("flip verdicts match brute-force scans of the flipped index function") {
    for (const std::string pattern : {"ijk", "kji", "jik"}) {
        const auto spec = example_by_name("triangular-" + pattern);
        for (const auto& flip : all_flips()) {
            CAPTURE(pattern);
            CAPTURE(flip.name);
            const auto arr = oracle::arrangement(flip.name);
            bool expected = true;
            for (const auto& probe : spec.probe_nets()) {
                const auto original = pin(
                    [&](std::size_t a, std::size_t b, std::size_t c) { return oracle::triangular_indicator(pattern, a, b, c); },
                    probe.label());
                // Slot k of the flipped map carries original slot arr[k].
                const IndexFn flipped_fn = [&](std::size_t a, std::size_t b, std::size_t c) {
                    std::array<std::size_t, 3> orig{};
                    const std::array<std::size_t, 3> idx{a, b, c};
                    for (int k = 0; k < 3; ++k) orig[arr[k]] = idx[k];
                    return original(orig[0], orig[1], orig[2]);
                };
                expected = expected && oracle::iterated_limit(flipped_fn, {2, 0, 1}) ==
                                           oracle::iterated_limit(flipped_fn, {1, 2, 0});
            }
            CHECK(close_to_regular_of_flip(spec.sequence_instance, flip, spec.probe_nets(), LimitParams{}).close_to_regular ==
                  expected);
        }
    }
}

TEST_CASE("flip coherence with the corresponding pair of original orders") {
    const auto pair = close_to_regular_orders(Flip::r());
    CHECK(pair[0].letters() == "acb");
    CHECK(pair[1].letters() == "bac");
    for (const auto& name : example_names()) {
        const auto spec = example_by_name(name);
        const auto report = six_extensions(spec.sequence_instance, spec.probe_nets(), LimitParams{});
        for (const auto& flip : all_flips()) {
            CAPTURE(name);
            CAPTURE(flip.name);
            const auto v = close_to_regular_of_flip(spec.sequence_instance, flip, spec.probe_nets(), LimitParams{});
            const auto orders = close_to_regular_orders(flip);
            CHECK(v.close_to_regular == orders_agree(report.probes, orders[0], orders[1], LimitParams{}.tol));
        }
    }
}

TEST_CASE("flipping twice by i returns the original verdict") {
    const auto spec = example_by_name("reflexive-middle");
    const auto twice = flipped(spec.sequence_instance, Flip::i());
    std::vector<NetTriple> nets;
    for (const auto& p : spec.probe_nets()) nets.push_back(flipped(p, Flip::i()));
    const auto via_twice = close_to_regular_of_flip(twice, Flip::i(), nets, LimitParams{});
    const auto direct = six_extensions(spec.sequence_instance, spec.probe_nets(), LimitParams{});
    CHECK(via_twice.close_to_regular == orders_agree(direct.probes, ExtensionOrder::from_letters("cab"),
                                                     ExtensionOrder::from_letters("bca"), LimitParams{}.tol));
}
