#include "doctest.h"

#include "support/fixtures.hpp"
#include "tropnull/cli.hpp"
#include "tropnull/error.hpp"
#include "tropnull/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace tropnull;
using nlohmann::json;
using testing::fn;

namespace {

const std::string kData = TROPNULL_DATA_DIR;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "tropnull");
    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::size_t syntax_line(const std::string& text) {
    try {
        io::parse_instance(text);
    } catch (const SyntaxError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST_CASE("instance parsing") {
    const io::Instance inst = io::read_instance_file(kData + "/ex1.trop");
    CHECK(inst.n == 1);
    CHECK(inst.f == fn(1, "0:2 ; 1:1 ; 2:0"));
    REQUIRE(inst.gens.size() == 1);
    CHECK(inst.gen_names == std::vector<std::string>{"G1"});
    CHECK(io::default_ideal_flavor(inst) == IdealFlavor::Standard);
    CHECK(io::default_ideal_flavor(io::read_instance_file(kData + "/extended.trop")) == IdealFlavor::Extended);
    CHECK(io::default_ideal_flavor(io::read_instance_file(kData + "/pl.trop")) == IdealFlavor::Pl);
    CHECK(&io::function_named(inst, "G1") == &inst.gens[0]);
    CHECK_THROWS_AS(io::function_named(inst, "G7"), Error);
}

TEST_CASE("serialization round trip") {
    const io::Instance a = io::read_instance_file(kData + "/twodim.trop");
    const io::Instance b = io::parse_instance(io::serialize_instance(a));
    CHECK(a.f == b.f);
    CHECK(a.gens == b.gens);
    CHECK(a.gen_names == b.gen_names);
}

TEST_CASE("syntax errors report their line") {
    CHECK(syntax_line("n=1 flavor=poly semiring=R\nF: 0:1 2\n") == 2);
    CHECK(syntax_line("n=1 flavor=poly\nF: 0:1\n") == 1);
    CHECK(syntax_line("n=1 flavor=poly semiring=R\nF: 0:1\nG1: 1/0:1\n") == 3);
    CHECK(syntax_line("n=1 flavor=poly semiring=R\nF: 0:1\nF: 0:2\n") == 3);
    CHECK(syntax_line("n=1 flavor=poly semiring=R\nF: \n") == 2);
    CHECK_THROWS_AS(io::parse_instance("n=1 flavor=poly semiring=R\nF: 0v:1\n"), Error);
    CHECK_THROWS_AS(io::parse_instance("n=1 flavor=poly semiring=R\nG1: 0:1\n"), Error);
}

TEST_CASE("certificate JSON round trip") {
    const io::Instance inst = io::read_instance_file(kData + "/ex1.trop");
    const Certificate c = synthesize(inst.f, inst.gens, check_standard(inst.f, inst.gens));
    const json j = io::to_json(c);
    CHECK(j["m"] == 2);
    CHECK(j["J"] == json::array({1}));
    CHECK(j["cofactors"][0]["terms"][0]["coefficient"] == "3");
    const Certificate back = io::certificate_from_json(j, 1, Semiring::R, IdealFlavor::Standard);
    CHECK(back.m == c.m);
    CHECK(back.J == c.J);
    CHECK(back.cofactors == c.cofactors);
    CHECK(io::certificate_from_json(json{{"certificate", j}}, 1, Semiring::R, IdealFlavor::Standard).m == 2);
}

TEST_CASE("failure labels") {
    CHECK(io::failure_label(Failure{std::nullopt, FailureReason::DilationFitFailed, std::size_t{1}}) ==
          "DilationFitFailed(2)");
    CHECK(io::failure_label(Failure{std::size_t{0}, FailureReason::NoLinearGenerator, std::nullopt}) ==
          "NoLinearGenerator");
}

TEST_CASE("cli exit codes") {
    CHECK(run({"check", "-i", kData + "/ex1.trop"}).code == 0);
    CHECK(run({"check", "-i", kData + "/nonmember.trop"}).code == 1);
    CHECK(run({"check", "-i", kData + "/restricted_gap.trop", "--flavor", "restricted"}).code == 1);
    CHECK(run({"check", "-i", kData + "/missing.trop"}).code == 2);
    CHECK(run({"check", "-i", kData + "/ex1.trop", "--flavor", "bogus"}).code == 2);
    CHECK(run({"check", "-i", kData + "/ex1.trop", "--flavor", "extended"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("cli check JSON") {
    const Run r = run({"check", "-i", kData + "/restricted_gap.trop", "--flavor", "restricted", "--json"});
    const json j = json::parse(r.out);
    CHECK(j["member"] == false);
    CHECK(j["failures"][0]["label"] == "DilationFitFailed(2)");
}

TEST_CASE("cli certify then verify") {
    const std::filesystem::path dir = std::filesystem::temp_directory_path();
    const std::string cert = (dir / "tropnull_unit_cert.json").string();
    CHECK(run({"certify", "-i", kData + "/laurent.trop", "-o", cert}).code == 0);
    CHECK(run({"verify", "-i", kData + "/laurent.trop", "-c", cert}).code == 0);

    // Tamper with the power: max(x2, 0)^2 is not h ⊙ x1 for the same h.
    std::ifstream in(cert);
    json j = json::parse(in);
    in.close();
    json& c = j.contains("certificate") ? j["certificate"] : j;
    c["m"] = 2;
    std::ofstream(cert) << j.dump();
    CHECK(run({"verify", "-i", kData + "/laurent.trop", "-c", cert}).code == 1);
    CHECK(run({"certify", "-i", kData + "/nonmember.trop"}).code == 1);
    std::filesystem::remove(cert);
}

TEST_CASE("cli eval, regions, newton, amoeba") {
    const Run e = run({"eval", "-i", kData + "/ex1.trop", "--point", "3"});
    CHECK(e.code == 0);
    CHECK(e.out.find('6') != std::string::npos);
    CHECK(run({"regions", "-i", kData + "/twodim.trop", "--json"}).code == 0);
    CHECK(run({"newton", "-i", kData + "/twodim.trop", "--function", "G1"}).code == 0);
    const Run a = run({"amoeba", "-i", kData + "/twodim.trop"});
    CHECK(a.code == 0);
    CHECK(a.out.find("<svg") != std::string::npos);
    CHECK(a.out.find("polyline") != std::string::npos);
    CHECK(run({"amoeba", "-i", kData + "/ex1.trop"}).code == 2);
}
