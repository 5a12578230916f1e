#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include "dubrovnik/laurent.hpp"
#include "dubrovnik/tangle.hpp"

#include "fixture.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined

    std::vector<std::string> lines() const {
        std::vector<std::string> out;
        std::istringstream in(output);
        std::string line;
        while (std::getline(in, line)) out.push_back(line);
        return out;
    }
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(DUBROVNIK_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) throw std::runtime_error("popen failed");
    RunResult result;
    char buffer[4096];
    size_t got = 0;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
        result.output.append(buffer, got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("single tuple evaluation prints the golden polynomial") {
    const std::string expected = dubrovnik::poly_format(load_fixture_poly());
    for (const std::string engine : {"skein", "reduce", "closed"}) {
        const RunResult r = run_cli("compute --tuple '[4,3,5]' --engine " + engine);
        CHECK(r.exit_code == 0);
        REQUIRE(r.lines().size() == 1);
        CHECK(r.lines()[0] == expected);
    }
}

TEST_CASE("engine all prints the same line plus the agreement note") {
    const RunResult all = run_cli("compute --tuple '[4,3,5]' --engine all");
    const RunResult one = run_cli("compute --tuple '[4,3,5]' --engine skein");
    CHECK(all.exit_code == 0);
    REQUIRE(all.lines().size() == 2);
    CHECK(all.lines()[0] == one.lines()[0]);
    CHECK(all.lines()[1] == "engines: 3/3 agree");
}

TEST_CASE("fraction input matches the expanded tuple") {
    const RunResult by_fraction = run_cli("compute --fraction 69/16 --engine skein");
    const RunResult by_tuple = run_cli("compute --tuple '[4,3,5]' --engine skein");
    CHECK(by_fraction.exit_code == 0);
    CHECK(by_fraction.output == by_tuple.output);
}

TEST_CASE("fractions with large q are folded modulo p") {
    const RunResult folded = run_cli("compute --fraction 7/9 --engine reduce");
    const RunResult direct = run_cli("compute --fraction 7/2 --engine reduce");
    CHECK(folded.exit_code == 0);
    CHECK(folded.output == direct.output);
}

TEST_CASE("invalid input exits with code 1") {
    const RunResult zero = run_cli("compute --tuple '[0,2]'");
    CHECK(zero.exit_code == 1);
    CHECK(zero.output.find("entry 1 is zero") != std::string::npos);

    const RunResult mixed = run_cli("compute --tuple '[2,-3]'");
    CHECK(mixed.exit_code == 1);
    CHECK(mixed.output.find("--canonicalize") != std::string::npos);

    const RunResult flag = run_cli("compute --tuple '[3]' --engine bogus");
    CHECK(flag.exit_code == 1);

    const RunResult none = run_cli("compute");
    CHECK(none.exit_code == 1);
}

TEST_CASE("canonicalize rewrites mixed-sign tuples through the fraction") {
    // [2,-3] has continued fraction 2 - 1/3 = 5/3, the same as [1,1,2].
    const RunResult mixed = run_cli("compute --tuple '[2,-3]' --canonicalize");
    const RunResult plain = run_cli("compute --tuple '[1,1,2]'");
    CHECK(mixed.exit_code == 0);
    CHECK(mixed.output == plain.output);
}

TEST_CASE("mirror flag matches the negated tuple") {
    const RunResult mirrored = run_cli("compute --tuple '[4,3,5]' --mirror --engine skein");
    const RunResult negative = run_cli("compute --tuple '[-4,-3,-5]' --engine skein");
    CHECK(mirrored.exit_code == 0);
    CHECK(mirrored.output == negative.output);
}

TEST_CASE("normalize agrees across presentations of one knot") {
    const RunResult a = run_cli("compute --tuple '[2,2]' --normalize --engine skein");
    const RunResult b = run_cli("compute --tuple '[2,1,1]' --normalize --engine skein");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);

    // The closure of [2] is a two-component link, whose writhe depends on
    // the orientation choice.
    const RunResult link = run_cli("compute --tuple '[2]' --normalize");
    CHECK(link.exit_code == 1);
}

TEST_CASE("json output carries metadata and the exact term list") {
    const RunResult r = run_cli("compute --tuple '[4,3,5]' --format json --normalize");
    CHECK(r.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.output);
    CHECK(doc.at("tuple") == nlohmann::json({4, 3, 5}));
    CHECK(doc.at("fraction") == "69/16");
    CHECK(doc.at("type") == "knot");
    CHECK(doc.at("engines").size() == 3);
    CHECK(doc.at("engines_agree") == true);
    const int writhe = dubrovnik::tuple_writhe({4, 3, 5});
    CHECK(doc.at("writhe") == writhe);

    const dubrovnik::LaurentPoly2 expected =
        dubrovnik::poly_monomial(1, -writhe, 0) * load_fixture_poly();
    CHECK(doc.at("polynomial") == dubrovnik::poly_format(expected));
    REQUIRE(doc.at("terms").size() == expected.terms().size());
    for (size_t i = 0; i < expected.terms().size(); ++i) {
        const nlohmann::json& term = doc.at("terms").at(i);
        CHECK(term.at("a_exp") == expected.terms()[i].a_exp);
        CHECK(term.at("z_exp") == expected.terms()[i].z_exp);
        CHECK(term.at("coeff") == expected.terms()[i].coeff.str());
    }
}

TEST_CASE("latex output braces exponents") {
    const RunResult r = run_cli("compute --tuple '[4,3,5]' --format latex --engine skein");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("a^{-4}") != std::string::npos);
    CHECK(r.output.find("z^{11}") != std::string::npos);
}

TEST_CASE("batch mode keeps line count and isolates per-line errors") {
    const std::string path = "/tmp/dubrovnik_cli_batch_test.txt";
    {
        std::ofstream out(path);
        out << "# header comment\n"
            << "[4,3,5]\n"
            << "\n"
            << "69/16\n"
            << "[0,2]\n"
            << "7/9\n";
    }
    const RunResult r = run_cli("compute --batch " + path);
    CHECK(r.exit_code == 1);  // one invalid line
    const std::vector<std::string> lines = r.lines();
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == "# header comment");
    CHECK(lines[1].rfind("[4,3,5] -> ", 0) == 0);
    CHECK(lines[2].empty());
    CHECK(lines[3].rfind("69/16 -> ", 0) == 0);
    CHECK(lines[4].rfind("[0,2] -> error: ", 0) == 0);
    CHECK(lines[5].rfind("7/9 -> ", 0) == 0);

    const std::string golden =
        run_cli("compute --tuple '[4,3,5]' --engine all").lines()[0];
    CHECK(lines[1] == "[4,3,5] -> " + golden);
    CHECK(lines[3] == "69/16 -> " + golden);

    {
        std::ofstream out(path);
        out << "[3]\n5/2\n";
    }
    const RunResult clean = run_cli("compute --batch " + path);
    CHECK(clean.exit_code == 0);
    CHECK(clean.lines().size() == 2);
    std::remove(path.c_str());
}

TEST_CASE("batch json emits one object per input line") {
    const std::string path = "/tmp/dubrovnik_cli_batch_json_test.txt";
    {
        std::ofstream out(path);
        out << "[3]\n[0]\n";
    }
    const RunResult r = run_cli("compute --batch " + path + " --format json");
    const std::vector<std::string> lines = r.lines();
    REQUIRE(lines.size() == 2);
    CHECK(nlohmann::json::parse(lines[0]).at("fraction") == "3/1");
    CHECK(nlohmann::json::parse(lines[1]).contains("error"));
    std::remove(path.c_str());
}

TEST_CASE("check-equiv reports the classification criterion") {
    const RunResult yes = run_cli("compute --check-equiv 7/2 7/4");
    CHECK(yes.exit_code == 0);
    CHECK(yes.output.find("equivalent: yes") != std::string::npos);
    CHECK(yes.output.find("normalized polynomials agree: yes") != std::string::npos);

    const RunResult also = run_cli("compute --check-equiv 5/2 5/3");
    CHECK(also.exit_code == 0);
    CHECK(also.output.find("equivalent: yes") != std::string::npos);

    const RunResult no = run_cli("compute --check-equiv 3/1 5/1");
    CHECK(no.exit_code == 0);
    CHECK(no.output.find("equivalent: no") != std::string::npos);
    CHECK(no.output.find("agree") == std::string::npos);
}

TEST_CASE("selftest validates every engine against the fixture") {
    const RunResult r =
        run_cli(std::string("selftest --fixture ") + DUBROVNIK_FIXTURE_PATH);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("skein: ok") != std::string::npos);
    CHECK(r.output.find("reduce: ok") != std::string::npos);
    CHECK(r.output.find("closed: ok") != std::string::npos);
    CHECK(r.output.find("selftest passed") != std::string::npos);

    const RunResult missing = run_cli("selftest --fixture /nonexistent/fixture.txt");
    CHECK(missing.exit_code == 1);
}
