#include "aronberner/tensor_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace aronberner {

using nlohmann::ordered_json;

namespace {

Space parse_space(std::string_view token) {
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token.empty()) throw std::invalid_argument("empty space in signature");
    Space space;
    switch (token.front()) {
    case 'X': space.base = Role::X; break;
    case 'Y': space.base = Role::Y; break;
    case 'Z': space.base = Role::Z; break;
    case 'W': space.base = Role::W; break;
    case 'S': space.base = Role::S; break;
    default: throw std::invalid_argument("unknown space '" + std::string(token) + "'");
    }
    for (char c : token.substr(1)) {
        if (c != '*') throw std::invalid_argument("unknown space '" + std::string(token) + "'");
        ++space.dual_level;
    }
    return space;
}

template <std::size_t Arity>
std::string dump(const MultilinearTensor<Arity>& t) {
    ordered_json doc;
    doc["arity"] = Arity;
    doc["dims"] = t.dims();
    doc["entries"] = std::vector<double>(t.entries().begin(), t.entries().end());
    doc["sig"] = to_string(t.sig());
    return doc.dump(2) + "\n";
}

template <std::size_t Arity>
MultilinearTensor<Arity> load(const ordered_json& doc, Signature sig) {
    const auto dims_vec = doc.at("dims").get<std::vector<std::size_t>>();
    if (dims_vec.size() != Arity + 1) throw std::invalid_argument("dims length does not match arity");
    typename MultilinearTensor<Arity>::Shape dims{};
    std::copy(dims_vec.begin(), dims_vec.end(), dims.begin());
    return MultilinearTensor<Arity>(dims, doc.at("entries").get<std::vector<double>>(), std::move(sig));
}

}  // namespace

Signature parse_signature(std::string_view text) {
    const auto arrow = text.find("->");
    if (arrow == std::string_view::npos) throw std::invalid_argument("signature without '->'");
    Signature sig;
    std::string_view args = text.substr(0, arrow);
    while (true) {
        const auto sep = args.find(" x ");
        sig.args.push_back(parse_space(args.substr(0, sep)));
        if (sep == std::string_view::npos) break;
        args.remove_prefix(sep + 3);
    }
    sig.codomain = parse_space(text.substr(arrow + 2));
    return sig;
}

std::string to_json(const TrilinearTensor& t) { return dump(t); }
std::string to_json(const BilinearTensor& m) { return dump(m); }
std::string to_json(const AnyTensor& t) {
    return std::visit([](const auto& v) { return to_json(v); }, t);
}

AnyTensor tensor_from_json(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
        const int arity = doc.at("arity").get<int>();
        Signature sig = parse_signature(doc.at("sig").get<std::string>());
        if (arity == 3) return load<3>(doc, std::move(sig));
        if (arity == 2) return load<2>(doc, std::move(sig));
    } catch (const ordered_json::exception& e) {
        throw std::invalid_argument(std::string("malformed tensor document: ") + e.what());
    }
    throw std::invalid_argument("arity must be 2 or 3");
}

AnyTensor read_tensor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return tensor_from_json(buffer.str());
}

void write_tensor_file(const std::string& path, const AnyTensor& t) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << to_json(t);
}

}  // namespace aronberner
