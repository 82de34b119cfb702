// Drives the installed CLI end to end: generator output feeds the string,
// complex, and homology subcommands, and the staged pipeline must reproduce
// the direct run byte for byte. Takes the CLI path as argv[1].

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cerr << "[FAIL] " << what << '\n';
    } else {
        std::cout << "[ok] " << what << '\n';
    }
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_pipeline_test <path-to-cli>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const auto dir = std::filesystem::temp_directory_path() / "stringcx-pipeline";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    const std::string d = dir.string();

    auto run = [&](const std::string& args) {
        const std::string cmd = cli + " " + args + " > " + d + "/stdout.txt 2>" + d + "/stderr.txt";
        const int rc = std::system(cmd.c_str());
        return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    };

    // Stage the pipeline on the circle-arc fixture.
    expect(run("generate circle-arc --positions 0,2,6,8 --circumference 12 -o " + d +
               "/space.json") == 0,
           "generate circle-arc");
    expect(run("strings -i " + d + "/space.json -e 0 --check-oracle -o " + d + "/strings.json") ==
               0,
           "strings with oracle cross-check");
    expect(run("complex --strings " + d + "/strings.json -o " + d + "/complex.json") == 0,
           "complex from the strings file");
    expect(run("homology --complex " + d + "/complex.json -o " + d + "/h_staged.json") == 0,
           "homology from the complex file");
    expect(run("homology -i " + d + "/space.json -e 0 -o " + d + "/h_direct.json") == 0,
           "homology directly from the space");
    expect(slurp(d + "/h_staged.json") == slurp(d + "/h_direct.json"),
           "staged pipeline reproduces the direct run");

    // Determinism: a repeated run writes identical bytes.
    expect(run("strings -i " + d + "/space.json -e 0 -o " + d + "/strings2.json") == 0,
           "second strings run");
    expect(slurp(d + "/strings.json") == slurp(d + "/strings2.json"),
           "byte-identical output on a repeated run");

    // Exit codes: domain error 1, input error 2.
    {
        std::ofstream bad(dir / "bad.csv");
        bad << "a,b,c\n0,1,3\n1,0,1\n3,1,0\n";
    }
    expect(run("validate -i " + d + "/bad.csv") == 1, "triangle violation exits 1");
    expect(run("validate -i " + d + "/nosuchfile.json") == 2, "missing input exits 2");
    expect(run("strings") == 2, "missing required flag exits 2");

    // Realize + barcode smoke.
    expect(run("realize --surface sphere -o " + d + "/sphere.json") == 0, "realize sphere");
    expect(run("barcode -i " + d + "/space.json -o " + d + "/bars.json --text-out " + d +
               "/bars.txt") == 0,
           "barcode");
    expect(slurp(d + "/bars.txt") == "0 0 inf\n2 0 4\n", "barcode text diagram");
    expect(run("endpoint -i " + d + "/space.json -x 0 -y 2 -o " + d + "/sub.json") == 0,
           "endpoint subcomplex");
    expect(run("paper-examples -o " + d + "/report.json") == 0, "example suite");

    std::filesystem::remove_all(dir);
    if (failures) {
        std::cerr << failures << " pipeline check(s) failed\n";
        return 1;
    }
    std::cout << "pipeline checks passed\n";
    return 0;
}
