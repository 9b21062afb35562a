#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "../tools/app.hpp"
#include "cohid/catalogue.hpp"
#include "cohid/json_io.hpp"

using namespace cohid;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result cli(std::vector<std::string> args) {
    args.insert(args.begin(), "cohid");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = app::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path(std::filesystem::temp_directory_path() / name) {
        std::ofstream(path) << content;
    }
    ~TempFile() { std::filesystem::remove(path); }
    std::string ref() const { return "@" + path.string(); }
};

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("barcode") {
    CHECK(cli({"barcode", "--model", "m:1", "--k", "0"}).out == "[0,7) [3,4)\n");
    CHECK(cli({"barcode", "--model", "cp:4:1", "--k", "0"}).out == "[0,5)\n");
    CHECK(cli({"barcode", "--model", "pt", "--k", "1"}).out == "(empty)\n");
    auto j = io::json::parse(cli({"--format", "json", "barcode", "--model", "m:0", "--k", "1"}).out);
    CHECK(j["barcode"] == io::json::parse(R"([["1","5"],["1","5"]])"));
}

TEST_CASE("dist") {
    CHECK(cli({"dist", "m:0", "m:1"}).out == "d0=3 d1=0 d=3\n");
    CHECK(cli({"dist", "pt", "cp:1:1"}).out.find("d=1\n") != std::string::npos);
    CHECK(cli({"dist", "m:1", "m:1"}).out == "d0=0 d1=0 d=0\n");
    CHECK(cli({"dist", "x_a:1", "loop:2"}).out.find("d=inf") != std::string::npos);
    CHECK(cli({"--field", "fp:5", "dist", "m:0", "m:1"}).out == "d0=3 d1=0 d=3\n");
}

TEST_CASE("files as inputs") {
    TempFile model("cohid_cli_model.json", io::to_json(m_model(0)).dump());
    TempFile module("cohid_cli_module.json", io::to_json(to_dgku(m_model(1))).dump());
    CHECK(cli({"dist", model.ref(), module.ref()}).out == "d0=3 d1=0 d=3\n");
    TempFile a("cohid_cli_a.json", R"([["0","4"],["3","7"]])");
    TempFile b("cohid_cli_b.json", R"({"barcode": [["0","7"],["3","4"]]})");
    auto r = cli({"bottleneck", a.ref(), b.ref()});
    CHECK(r.code == 0);
    CHECK(r.out == "3\n");
}

TEST_CASE("undeclared tail is flagged") {
    auto j = io::to_json(m_model(1));
    j.erase("tail");
    TempFile model("cohid_cli_notail.json", j.dump());
    auto r = cli({"barcode", "--model", model.ref(), "--k", "0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[0,7) [3,4)") != std::string::npos);
}

TEST_CASE("tables") {
    auto t = cli({"table", "tetra"});
    CHECK(t.code == 0);
    CHECK(t.out.find(" no") == std::string::npos);
    auto m = cli({"table", "mcp", "--n", "6"});
    CHECK(m.out.find("M1     6  1/2  1/2") != std::string::npos);
    CHECK(cli({"table", "cp", "--n", "4", "--m", "4", "--j", "0"}).out.find("4  4  0  0   0         yes") !=
          std::string::npos);
    CHECK(cli({"table", "cp", "--j", "1"}).code == 0);
    CHECK(cli({"table", "bogus"}).code != 0);
}

TEST_CASE("totalize") {
    auto a = builtin("m:1");
    TempFile f("cohid_cli_filtered.json", io::to_json(u_exponent_filtration(a, 0)).dump());
    auto r = cli({"totalize", f.path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("[0,7) [3,4)") != std::string::npos);
}

TEST_CASE("verify") {
    auto r = cli({"verify", "fast"});
    CHECK(r.code == 0);
    CHECK(r.out.find("0 failed") != std::string::npos);
    for (const char* m : {"ground", "ku2", "cup"}) {
        auto bad = cli({"verify", "fast", "--mutate", m});
        CHECK(bad.code == 1);
        CHECK(bad.out.find("FAIL") != std::string::npos);
    }
    CHECK(cli({"--seed", "7", "verify", "fast"}).out == cli({"--seed", "7", "verify", "fast"}).out);
}

TEST_CASE("errors") {
    auto r = cli({"barcode", "--model", "nope"});
    CHECK(r.code == 1);
    CHECK(r.err == "error: unknown catalogue reference: nope\n");
    CHECK(cli({"barcode", "--model", "m:1", "--trunc", "10"}).code == 1);
    CHECK(cli({"--field", "fp:4", "dist", "pt", "pt"}).code == 1);
    CHECK(cli({"dist", "pt"}).code != 0);
    CHECK(cli({}).code != 0);
    CHECK(cli({"dist", "@/nonexistent.json", "pt"}).code == 1);
}

TEST_SUITE_END();
