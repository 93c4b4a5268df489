#include "aronberner/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include <json.hpp>

#include "aronberner/catalog.hpp"
#include "aronberner/tensor.hpp"

namespace aronberner {

using Json = nlohmann::ordered_json;

namespace {

Json order_json(const ExtensionOrder& order, const LimitResult& r) {
    Json j;
    j["order"] = order.letters();
    j["greek"] = order.greek();
    j["word"] = canonical_word(order).letters();
    j["values"] = r.value ? Json(*r.value) : Json(nullptr);
    j["status"] = to_string(r.status);
    j["stabilization"] = r.stabilization_index;
    if (r.status == LimitStatus::Failed) j["failure"] = r.failure;
    return j;
}

Json report_json(const ExtensionReport& report, const std::string& construction) {
    Json doc;
    doc["example"] = report.map_name;
    doc["construction"] = construction;
    doc["params"] = {{"truncation", report.params.truncation},
                     {"horizon", report.params.horizon},
                     {"tol", report.params.tol}};
    doc["functionals"] = report.functionals;
    Json probes = Json::array();
    for (const auto& probe : report.probes) {
        Json p;
        p["nets"] = probe.nets;
        Json orders = Json::array();
        for (std::size_t k = 0; k < 6; ++k) orders.push_back(order_json(all_extension_orders()[k], probe.by_order[k]));
        p["orders"] = std::move(orders);
        probes.push_back(std::move(p));
    }
    doc["probes"] = std::move(probes);
    doc["classification"] = to_string(report.verdict.classification);
    if (const auto& w = report.verdict.witness) {
        doc["witness"] = {{"orders", {w->first.letters(), w->second.letters()}},
                          {"probe", w->probe},
                          {"nets", report.probes[w->probe].nets}};
    } else {
        doc["witness"] = nullptr;
    }
    doc["extension_triples_consistent"] =
        report.all_succeeded() ? Json(extension_triples_consistent(report)) : Json(nullptr);
    return doc;
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

}  // namespace

std::string render_report_structured(const ExtensionReport& report, const std::string& construction) {
    return report_json(report, construction).dump(2) + "\n";
}

std::string render_report_human(const ExtensionReport& report, const std::string& construction) {
    const Json doc = report_json(report, construction);
    std::ostringstream out;
    out << "example: " << doc["example"].get<std::string>() << "\n";
    out << "construction: " << doc["construction"].get<std::string>() << "\n";
    out << "params: N=" << doc["params"]["truncation"].get<std::size_t>()
        << " H=" << doc["params"]["horizon"].get<std::size_t>()
        << " tol=" << format_number(doc["params"]["tol"].get<double>()) << "\n";
    std::string functionals;
    for (const auto& f : doc["functionals"]) functionals += (functionals.empty() ? "" : " ") + f.get<std::string>();
    out << "functionals: " << functionals << "\n";

    std::size_t index = 0;
    for (const auto& probe : doc["probes"]) {
        out << "\nprobe " << index++ << " [" << probe["nets"].get<std::string>() << "]\n";
        for (const auto& o : probe["orders"]) {
            out << "  " << o["greek"].get<std::string>() << "  " << o["word"].get<std::string>();
            out << std::string(8 - o["word"].get<std::string>().size(), ' ');
            if (o["values"].is_null()) {
                out << "failed: " << o["failure"].get<std::string>() << "\n";
                continue;
            }
            std::string values;
            for (const auto& v : o["values"]) values += (values.empty() ? "" : " ") + format_number(v.get<double>());
            const auto& st = o["stabilization"];
            out << values << "  (" << o["status"].get<std::string>() << " at " << st[0].get<std::size_t>() << ","
                << st[1].get<std::size_t>() << "," << st[2].get<std::size_t>() << ")\n";
        }
    }

    out << "\nclassification: " << doc["classification"].get<std::string>() << "\n";
    if (!doc["witness"].is_null()) {
        const auto& w = doc["witness"];
        out << "witness: " << w["orders"][0].get<std::string>() << " != " << w["orders"][1].get<std::string>()
            << " on probe " << w["probe"].get<std::size_t>() << " [" << w["nets"].get<std::string>() << "]\n";
    }
    const auto& consistent = doc["extension_triples_consistent"];
    out << "extension triples consistent: "
        << (consistent.is_null() ? "undecided" : consistent.get<bool>() ? "yes" : "no") << "\n";
    return out.str();
}

std::string render_battery(const BatteryResult& result) {
    std::ostringstream out;
    for (const auto& t : result.tallies) {
        out << (t.ok() ? "ok   " : "FAIL ") << t.name << "  " << t.passed << "/" << t.total << "\n";
    }
    out << (result.ok() ? "all identities hold" : "identity failures") << "\n";
    return out.str();
}

namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
CriterionOutcome timed(int id, std::string title, double budget, Fn&& body) {
    CriterionOutcome out;
    out.id = id;
    out.title = std::move(title);
    out.budget_seconds = budget;
    const auto start = Clock::now();
    try {
        out.passed = body(out.detail);
    } catch (const std::exception& e) {
        out.passed = false;
        out.detail = std::string("exception: ") + e.what();
    }
    out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (out.seconds > budget) {
        out.passed = false;
        out.detail += (out.detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    return out;
}

std::array<std::size_t, 4> random_dims(std::mt19937_64& rng, std::size_t max_dim) {
    std::uniform_int_distribution<std::size_t> dist(1, max_dim);
    return {dist(rng), dist(rng), dist(rng), dist(rng)};
}

ExtensionReport run_example(const std::string& name) {
    const auto spec = example_by_name(name);
    return six_extensions(spec.sequence_instance, spec.probe_nets(), LimitParams{});
}

std::string primary_summary(const ExtensionReport& report) {
    std::string out;
    for (const auto& order : all_extension_orders()) {
        const auto& r = report.primary(order);
        out += (out.empty() ? "" : " ") + order.letters() + "=";
        out += r.value ? format_number(r.value->back()) : std::string("failed");
    }
    return out + " " + to_string(report.verdict.classification);
}

}  // namespace

std::vector<CriterionOutcome> run_acceptance_battery(std::uint64_t seed) {
    std::vector<CriterionOutcome> out;
    std::mt19937_64 rng(seed);

    out.push_back(timed(1, "signature chain", 1.0, [](std::string& detail) {
        const std::array<const char*, 4> expected{"W* x X x Y -> Z*", "Z** x W* x X -> Y*", "Y** x Z** x W* -> X*",
                                                  "X** x Y** x Z** -> W**"};
        bool ok = true;
        for (std::size_t k = 0; k < 4; ++k) {
            const auto got = to_string(word_signature(Signature::trilinear(), Word(std::string(k + 1, '*'))));
            if (got != expected[k]) {
                ok = false;
                detail += "level " + std::to_string(k + 1) + ": " + got + "; ";
            }
        }
        return ok;
    }));

    out.push_back(timed(2, "flip group", 1.0, [](std::string& detail) {
        std::vector<FlipOrIdentity> group{std::nullopt};
        for (const auto& f : all_flips()) group.emplace_back(f);
        for (const auto& a : group) {
            for (const auto& b : group) {
                for (const auto& c : group) {
                    if (flip_compose(flip_compose(a, b), c) != flip_compose(a, flip_compose(b, c))) return false;
                }
                flip_compose(a, b);  // throws if the product leaves the group
            }
        }
        for (const auto& a : group) {
            const bool has_inverse = std::any_of(group.begin(), group.end(),
                                                 [&](const FlipOrIdentity& b) { return !flip_compose(a, b); });
            if (!has_inverse) return false;
        }
        const auto letter = [](const FlipOrIdentity& f) { return f ? f->name : '1'; };
        const std::string products{letter(flip_compose(Flip::r(), Flip::t())), letter(flip_compose(Flip::s(), Flip::r())),
                                   letter(flip_compose(Flip::r(), Flip::s())), letter(flip_compose(Flip::t(), Flip::r()))};
        detail = "order 6; r.t s.r r.s t.r = " + products;
        return products == "jjii";
    }));

    out.push_back(timed(3, "word-permutation soundness", 30.0, [&](std::string& detail) {
        const auto words = enumerate_words(6);
        std::size_t checked = 0;
        for (int trial = 0; trial < 10; ++trial) {
            const auto t = TrilinearTensor::random({2, 3, 2, 2}, Signature::trilinear(), rng);
            for (const auto& w : words) {
                const auto got = apply_word(t, w);
                const auto perm = word_to_axis_permutation(w);
                const auto predicted = permute_axes<3>(t, perm.axes, word_signature(t.sig(), w));
                if (!got.same_entries(predicted) || got.sig() != predicted.sig()) {
                    detail = "mismatch on word '" + w.letters() + "'";
                    return false;
                }
                ++checked;
            }
        }
        detail = std::to_string(words.size()) + " words, " + std::to_string(checked) + " checks";
        return true;
    }));

    out.push_back(timed(4, "canonical words return the tensor", 10.0, [&](std::string& detail) {
        for (int trial = 0; trial < 100; ++trial) {
            const auto t = TrilinearTensor::random(random_dims(rng, 5), Signature::trilinear(), rng);
            for (const auto& order : all_extension_orders()) {
                const auto w = canonical_word(order);
                const auto back = apply_word(t, w);
                if (!back.same_entries(t) || !back.sig().is_bidual_trilinear()) {
                    detail = "word " + w.letters() + " on trial " + std::to_string(trial);
                    return false;
                }
            }
        }
        return true;
    }));

    out.push_back(timed(5, "extension word pairs", 10.0, [&](std::string& detail) {
        const std::array<std::pair<const char*, const char*>, 3> pairs{
            {{"i****i", "s****t"}, {"j****j", "****"}, {"r****r", "t****s"}}};
        for (int trial = 0; trial < 100; ++trial) {
            const auto t = TrilinearTensor::random(random_dims(rng, 5), Signature::trilinear(), rng);
            for (const auto& [a, b] : pairs) {
                const auto ta = apply_word(t, Word(a));
                const auto tb = apply_word(t, Word(b));
                if (!ta.same_entries(tb) || ta.sig() != tb.sig()) {
                    detail = std::string(a) + " vs " + b + " on trial " + std::to_string(trial);
                    return false;
                }
            }
        }
        return true;
    }));

    out.push_back(timed(6, "composed-map factorizations", 20.0, [&](std::string& detail) {
        std::uniform_int_distribution<std::size_t> dim(1, 3);
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t x = dim(rng), y = dim(rng), s = dim(rng), z = dim(rng), w = dim(rng);
            const auto m = BilinearTensor::random({x, y, s}, Signature::bilinear(Role::X, Role::Y, Role::S), rng);
            const auto g = BilinearTensor::random({s, z, w}, Signature::bilinear(Role::S, Role::Z, Role::W), rng);
            if (!check_i_extension_factorization(g, m) || !check_r_extension_factorization(g, m) ||
                !check_j_extension_factorization(g, m)) {
                detail = "trial " + std::to_string(trial);
                return false;
            }
        }
        return true;
    }));

    out.push_back(timed(7, "mixed words", 10.0, [&](std::string& detail) {
        for (int trial = 0; trial < 100; ++trial) {
            const auto t = TrilinearTensor::random(random_dims(rng, 5), Signature::trilinear(), rng);
            if (!check_mixed_word_identities(t)) {
                detail = "trial " + std::to_string(trial);
                return false;
            }
        }
        return true;
    }));

    out.push_back(timed(8, "limit separation (triangular-ijk)", 5.0, [](std::string& detail) {
        const auto report = run_example("triangular-ijk");
        detail = primary_summary(report);
        bool ok = report.verdict.classification == Classification::Irregular;
        for (const auto& order : all_extension_orders()) {
            const auto& r = report.primary(order);
            const double expected = order == ExtensionOrder{{0, 1, 2}} ? 1.0 : 0.0;
            ok = ok && r.status == LimitStatus::Stabilized && r.value && r.value->front() == expected;
        }
        return ok;
    }));

    out.push_back(timed(9, "rank-one regularity", 5.0, [](std::string& detail) {
        const auto report = run_example("rank-one");
        detail = primary_summary(report);
        if (report.verdict.classification != Classification::AronBernerRegularEvidence) return false;
        const auto& first = report.primary(all_extension_orders()[0]);
        for (const auto& order : all_extension_orders()) {
            const auto& r = report.primary(order);
            for (std::size_t q = 0; q < r.value->size(); ++q) {
                if (std::abs((*r.value)[q] - (*first.value)[q]) > 1e-9) return false;
            }
        }
        return true;
    }));

    out.push_back(timed(10, "reflexive-middle", 5.0, [](std::string& detail) {
        const auto report = run_example("reflexive-middle");
        detail = primary_summary(report);
        const auto value = [&](const char* letters) {
            const auto& r = report.primary(ExtensionOrder::from_letters(letters));
            return r.value ? r.value->front() : std::nan("");
        };
        return report.verdict.classification == Classification::CloseToRegularEvidence && value("cab") == 0.0 &&
               value("bca") == 0.0 && value("abc") == 1.0;
    }));

    out.push_back(timed(11, "extension triples consistency", 5.0, [](std::string& detail) {
        bool ok = true;
        for (const auto& name : example_names()) {
            if (!extension_triples_consistent(run_example(name))) {
                ok = false;
                detail += name + " ";
            }
        }
        if (ok) detail = std::to_string(example_names().size()) + " examples";
        return ok;
    }));

    out.push_back(timed(12, "composed examples", 10.0, [](std::string& detail) {
        const auto regular = run_example("composed-regular");
        const auto irregular = run_example("composed-irregular");
        detail = "regular: " + to_string(regular.verdict.classification) +
                 ", irregular: " + to_string(irregular.verdict.classification);
        return regular.verdict.classification == Classification::AronBernerRegularEvidence &&
               irregular.verdict.classification == Classification::Irregular;
    }));

    return out;
}

std::string render_acceptance(const std::vector<CriterionOutcome>& outcomes) {
    std::ostringstream out;
    std::size_t passed = 0;
    for (const auto& c : outcomes) {
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.3f s / %.0f s", c.seconds, c.budget_seconds);
        out << (c.passed ? "PASS " : "FAIL ") << c.id << ". " << c.title << "  (" << timing << ")";
        if (!c.detail.empty()) out << "  " << c.detail;
        out << "\n";
        passed += c.passed ? 1 : 0;
    }
    out << passed << "/" << outcomes.size() << " criteria passed\n";
    return out.str();
}

}  // namespace aronberner
