#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "aronberner/cli.hpp"
#include "aronberner/tensor_io.hpp"

using namespace aronberner;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string last_line(const std::string& text, std::size_t from_end = 0) {
    std::vector<std::string> lines;
    std::stringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines.at(lines.size() - 1 - from_end);
}

}  // namespace

TEST_CASE("signature command") {
    const auto r = run({"signature", "***"});
    CHECK(r.code == 0);
    CHECK(r.out.find("f^*** = (f^**)^* : Y** x Z** x W* -> X*") != std::string::npos);

    const auto t = run({"signature", "t****s"});
    CHECK(t.code == 0);
    CHECK(last_line(t.out) == "order: γαβ");
    CHECK(last_line(t.out, 2) == "f^t****s = (f^t****)^s : X** x Y** x Z** -> W**");

    const auto q = run({"signature", "q"});
    CHECK(q.code == 2);
    CHECK(q.err.find("column 1") != std::string::npos);
}

TEST_CASE("word-check command") {
    CHECK(run({"word-check", "****s**t", "s**t****"}).code == 0);
    CHECK(run({"word-check", "****", "i****i"}).code == 0);
    const auto r = run({"word-check", "*", "**"});
    CHECK(r.code == 1);
    CHECK(r.out.find("signatures: mismatch") != std::string::npos);
    CHECK(run({"word-check", "*x", "*"}).code == 2);
}

TEST_CASE("limits command") {
    const auto r = run({"limits", "--example", "triangular-ijk", "--format", "structured"});
    CHECK(r.code == 0);
    CHECK(r.out == read_file(std::string(GOLDEN_DIR) + "/triangular-ijk.json"));
    CHECK(run({"limits", "--example", "triangular-ijk", "--format", "structured"}).out == r.out);

    const auto human = run({"limits", "--example", "reflexive-middle"});
    CHECK(human.code == 0);
    CHECK(human.out.find("classification: close-to-regular-evidence") != std::string::npos);

    const auto rank = run({"limits", "--example", "rank-one", "--format", "structured"});
    CHECK(rank.out.find("\"classification\": \"aron-berner-regular-evidence\"") != std::string::npos);

    CHECK(run({"limits", "--example", "nope"}).code == 2);
    CHECK(run({"limits", "--example", "rank-one", "--trunc", "20"}).code == 2);
    CHECK(run({"limits", "--example", "rank-one", "--format", "xml"}).code == 2);
    CHECK(run({"limits"}).code == 2);
}

TEST_CASE("tensor-test command") {
    const auto r = run({"tensor-test", "--dims", "2,2,2,2", "--seed", "4", "--trials", "100"});
    CHECK(r.code == 0);
    CHECK(last_line(r.out) == "all identities hold");
    CHECK(run({"tensor-test", "--dims", "1,1,1,1", "--trials", "5"}).code == 0);
    const auto bad = run({"tensor-test", "--dims", "17,1,1,1"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("invalid dims") != std::string::npos);
    CHECK(run({"tensor-test", "--dims", "2,2,2"}).code == 2);
    CHECK(run({"tensor-test", "--dims", "a,2,2,2"}).code == 2);
}

TEST_CASE("tensor files through the command line") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto in = (dir / "aronberner_cli_in.json").string();
    const auto out = (dir / "aronberner_cli_out.json").string();
    {
        std::ofstream f(in);
        f << R"({"arity": 3, "dims": [1, 2, 1, 1], "entries": [1, 2], "sig": "X x Y x Z -> W"})";
    }
    CHECK(run({"apply-word", "--input", in, "--word", "*", "--output", out}).code == 0);
    const auto starred = std::get<TrilinearTensor>(read_tensor_file(out));
    CHECK(starred.dims() == TrilinearTensor::Shape{1, 1, 2, 1});
    CHECK(to_string(starred.sig()) == "W* x X x Y -> Z*");
    CHECK(run({"tensor-test", "--input", in, "--trials", "10"}).code == 0);
    CHECK(run({"apply-word", "--input", (dir / "missing.json").string(), "--word", "*"}).code != 0);
    std::filesystem::remove(in);
    std::filesystem::remove(out);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
