#include <array>
#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "test_util.hpp"

namespace {

struct CliRun {
    int status;
    std::string out;
};

// Runs the CLI with the given arguments; stdout and stderr are captured together.
CliRun run(const std::string& args) {
    const std::string cmd = std::string(SUPERCONF_CLI) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    const int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

}  // namespace

TEST(Cli, QuadricOfANullCurve) {
    const CliRun r = run("quadric --curve '(z, i*z, 0, 0)'");
    EXPECT_EQ(r.status, 0) << r.out;
    EXPECT_NE(r.out.find("Q0"), std::string::npos) << r.out;
}

TEST(Cli, ParseErrorExitsTwoWithPosition) {
    const CliRun r = run("certify --curve '(z, '");
    EXPECT_EQ(r.status, 2) << r.out;
    const auto j = nlohmann::json::parse(r.out.substr(r.out.find('{')));
    EXPECT_EQ(j.at("error"), "parse");
    EXPECT_EQ(j.at("column"), 5);
}

TEST(Cli, UnknownCatalogEntryExitsTwo) {
    const CliRun r = run("catalog show no-such-entry");
    EXPECT_EQ(r.status, 2) << r.out;
}

TEST(Cli, CatalogListNamesEntries) {
    const CliRun r = run("catalog list");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("catenoid-helicoid"), std::string::npos);
}

TEST(Cli, ConstructWritesFiles) {
    const auto dir = std::filesystem::temp_directory_path() / "superconf_cli_test";
    std::filesystem::remove_all(dir);
    const CliRun r = run("construct --curve enneper-r3 --grid 6,6 --sign plus --out " + dir.string());
    ASSERT_EQ(r.status, 0) << r.out;
    EXPECT_TRUE(std::filesystem::exists(dir / "enneper-r3_plus.csv")) << r.out;
    std::filesystem::remove_all(dir);
}

TEST(Cli, UnwritableOutputExitsFour) {
    const CliRun r = run("construct --curve enneper-r3 --grid 4,4 --out /proc/superconf-no");
    EXPECT_EQ(r.status, 4) << r.out;
}
