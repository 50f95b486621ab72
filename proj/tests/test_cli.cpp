#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

std::string data(const std::string& name) { return std::string(SKM_TEST_DATA) + "/" + name; }

RunResult run(const std::string& args)
{
    const auto out_path = std::filesystem::temp_directory_path() / "skm_cli_test_out.txt";
    const std::string cmd = std::string(SKM_BINARY) + " " + args + " > " + out_path.string() + " 2>/dev/null";
    const int raw = std::system(cmd.c_str());
    RunResult r;
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::ifstream in(out_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    r.out = buf.str();
    std::filesystem::remove(out_path);
    return r;
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("support resonance with annihilator")
    {
        const auto r = run("resonance --complex " + data("path4.txt") + " --i 1 --kind support --annihilator --format json");
        REQUIRE(r.status == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["kind"] == "support");
        CHECK(j["components"] == nlohmann::json::parse("[[1,2,4],[1,3,4]]"));
        CHECK(j["annihilator"]["generators"] == nlohmann::json::parse("[[2,3]]"));
    }

    TEST_CASE("single-graded Hilbert function")
    {
        const auto r = run("koszul --complex " + data("c4.txt") + " --i 1 --hilbert single --max-degree 4 --format json");
        REQUIRE(r.status == 0);
        CHECK(nlohmann::json::parse(r.out)["hilbert_single"] == nlohmann::json::parse("[0,0,2,4,6]"));
    }

    TEST_CASE("json output is stable")
    {
        const std::string args = "betti --complex " + data("two_edges.json") + " --i 1 --format json";
        const auto a = run(args), b = run(args + " --jobs 3");
        CHECK(a.status == 0);
        CHECK(a.out == b.out);
    }

    TEST_CASE("other subcommands")
    {
        const auto h = run("homology --complex " + data("c4.txt") + " --sub 1,3 --format json");
        REQUIRE(h.status == 0);
        CHECK(nlohmann::json::parse(h.out)["profiles"][0]["reduced_homology"][1]["dim"] == 1);
        const auto c = run("chen --complex " + data("c4.txt") + " --max-degree 3 --format json");
        REQUIRE(c.status == 0);
        CHECK(nlohmann::json::parse(c.out)["hilbert"] == nlohmann::json::parse("[2,4,6,8]"));
        CHECK(run("examples --name path4").status == 0);
        CHECK(run("verify examples").status == 0);
    }

    TEST_CASE("exit codes")
    {
        CHECK(run("").status == 2);
        CHECK(run("resonance --i 1").status == 2);
        CHECK(run("koszul --complex " + data("c4.txt") + " --i 1 --format yaml").status == 2);
        CHECK(run("verify no-such-suite").status == 2);
        CHECK(run("homology --complex " + data("bad_vertex.txt")).status == 2);
        CHECK(run("homology --complex " + data("missing.txt")).status == 2);
        CHECK(run("koszul --complex " + data("big.txt") + " --i 1 --max-n 10").status == 3);
        CHECK(run("koszul --complex " + data("big.txt") + " --i 1").status == 3);
    }
}
