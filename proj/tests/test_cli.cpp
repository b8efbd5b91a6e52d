#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run cli(const std::string& args) {
    const std::string cmd = std::string(FANOCERT_CLI) + " " + args + " 2>&1";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("verify --all --format json") {
    auto r = cli("verify --all --format json");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["suites"].size() == 10);
    CHECK(j["failed"] == 0);
}

TEST_CASE("verify with an extra specialization") {
    auto r = cli("verify stabilizers --param v=7/3");
    CHECK(r.code == 0);
    CHECK(r.out.find("upsilon-T.v=7/3") != std::string::npos);
    CHECK(r.out.find(" passed, 0 failed") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(cli("verify no-such-suite").code == 2);
    CHECK(cli("verify").code == 2);
    CHECK(cli("verify stabilizers --param v=abc").code == 2);
    CHECK(cli("verify stabilizers --param w=1").code == 2);
    CHECK(cli("verify --all --format yaml").code == 2);
    CHECK(cli("frobnicate").code == 2);
}

TEST_CASE("verify --list") {
    auto r = cli("verify --list");
    CHECK(r.code == 0);
    CHECK(r.out.find("quadric-involution") != std::string::npos);
}

TEST_CASE("eval") {
    auto key = cli(R"(eval "4*x0*P - (x1+a*x0)^4" --def P="a*x1^3+(3/2)*a^2*x0*x1^2+a^3*x0^2*x1+(1/4)*a^4*x0^3")");
    CHECK(key.code == 0);
    CHECK(key.out == "-x1^4\n");

    auto zero = cli(R"(eval "0+0")");
    CHECK(zero.code == 0);
    CHECK(zero.out == "0\n");

    auto bad = cli(R"(eval "x^")");
    CHECK(bad.code == 2);
    CHECK(bad.out.find("position") != std::string::npos);

    auto sub = cli(R"(eval "w0*w2 - w1^2" --subst w0="t^4" --subst w1="t^3*s" --subst w2="t^2*s^2")");
    CHECK(sub.code == 0);
    CHECK(sub.out == "0\n");

    CHECK(cli(R"(eval "P" --def P="Q" --def Q="P")").code == 2);
}
