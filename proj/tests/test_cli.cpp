#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"
#include "skolem/certificate_io.hpp"

namespace fs = std::filesystem;
using namespace skolem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> quad(long a1, long a2, long u0, long u1) {
    return {"--a1", std::to_string(a1), "--a2", std::to_string(a2), "--u0", std::to_string(u0),
            "--u1", std::to_string(u1)};
}

std::vector<std::string> cmd(const std::string& name, std::vector<std::string> rest) {
    rest.insert(rest.begin(), name);
    return rest;
}

std::vector<std::string> with(std::vector<std::string> args, std::initializer_list<std::string> extra) {
    args.insert(args.end(), extra);
    return args;
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "skolem-cli-tests";
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

void spit(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("classify") {
    const Run a = run(cmd("classify", quad(3, -2, -2, -1)));
    CHECK(a.code == cli::exit_ok);
    CHECK(contains(a.out, "Case3 Rank2(p'=2, q'=3, d=1)"));

    const Run b = run({"classify", "--B", "-1", "--C", "1"});
    CHECK(b.code == cli::exit_ok);
    CHECK(contains(b.out, "case: Case2"));

    const Run c = run(cmd("classify", quad(4, -4, 1, 6)));
    CHECK(c.code == cli::exit_invalid_input);
    CHECK(contains(c.err, "repeated root"));

    const Run d = run(cmd("classify", quad(3, -2, 3, 4)));
    CHECK(contains(d.out, "relation: B^1 C^-1 = -1"));

    const Run j = run(with(cmd("classify", quad(3, -2, -2, -1)), {"--json"}));
    CHECK(j.code == cli::exit_ok);
    CHECK(contains(j.out, "\"case\": \"Case3\""));
}

TEST_CASE("certify, round trip and verify") {
    const fs::path path = scratch("instance1.json");
    const Run a = run(with(cmd("certify", quad(3, -2, -2, -1)), {"--mode", "theorem", "--out", path.string()}));
    REQUIRE(a.code == cli::exit_ok);
    const std::string text = slurp(path);
    CHECK(contains(text, "\"m\": \"31\""));
    CHECK(serialize(parse_certificate(text)) == text);

    const Run v = run({"verify", path.string()});
    CHECK(v.code == cli::exit_ok);
    CHECK(contains(v.out, "accepted"));

    // stdout and --out carry the same bytes
    const Run s = run(with(cmd("certify", quad(3, -2, -2, -1)), {"--mode", "theorem"}));
    CHECK(s.out == text);

    std::string tampered = text;
    const auto at = tampered.find("\"m\": \"31\"");
    tampered.replace(at, 9, "\"m\": \"5\"");
    const fs::path bad = scratch("tampered.json");
    spit(bad, tampered);
    const Run r = run({"verify", bad.string()});
    CHECK(r.code == cli::exit_rejected);
    CHECK(contains(r.out, "zero residue at index 3"));

    const fs::path cut = scratch("truncated.json");
    spit(cut, text.substr(0, text.size() / 2));
    CHECK(run({"verify", cut.string()}).code == cli::exit_invalid_input);
    CHECK(run({"verify", scratch("missing.json").string()}).code == cli::exit_invalid_input);
}

TEST_CASE("certify outcomes and exit codes") {
    const Run zero = run(cmd("certify", quad(3, -2, -7, -6)));
    CHECK(zero.code == cli::exit_ok);
    CHECK(contains(zero.out, "\"claim\": \"zero-term\""));
    CHECK(contains(zero.out, "\"n\": 3"));

    const Run nc = run(with(cmd("certify", quad(3, -2, 3, 4)), {"--mode", "theorem"}));
    CHECK(nc.code == cli::exit_not_covered);

    const Run au = run(with(cmd("certify", quad(3, -2, 3, 4)), {"--mode", "auto"}));
    CHECK(au.code == cli::exit_ok);
    CHECK(contains(au.out, "\"m\": \"7\""));

    const Run ex = run(with(cmd("certify", quad(3, -2, -2, -1)), {"--mode", "theorem", "--bound", "20"}));
    CHECK(ex.code == cli::exit_search_exhausted);

    const Run cubic = run({"certify", "--cubic", "--b1", "1", "--b2", "-5", "--b3", "1", "--c1", "3", "--c2", "2",
                           "--mode", "fallback"});
    CHECK(cubic.code == cli::exit_ok);
    CHECK(contains(cubic.out, "\"m\": \"5\""));

    CHECK(run(with(cmd("certify", quad(3, -2, -2, -1)), {"--mode", "bogus"})).code == cli::exit_invalid_input);
    CHECK(run({"certify", "--a1", "3"}).code == cli::exit_invalid_input);
    CHECK(run({"certify", "--a1", "x", "--a2", "1", "--u0", "1", "--u1", "1"}).code == cli::exit_invalid_input);
    CHECK(run({"frobnicate"}).code == cli::exit_invalid_input);
    CHECK(run({}).code == cli::exit_invalid_input);
    CHECK(run({"--help"}).code == cli::exit_ok);
}

TEST_CASE("bound from the environment") {
    ::setenv("SKOLEM_SEARCH_BOUND", "20", 1);
    const Run ex = run(with(cmd("certify", quad(3, -2, -2, -1)), {"--mode", "theorem"}));
    ::unsetenv("SKOLEM_SEARCH_BOUND");
    CHECK(ex.code == cli::exit_search_exhausted);
}

TEST_CASE("density, scan and zero") {
    const Run d = run(with(cmd("density", quad(3, -2, -2, -1)), {"--max", "31", "--max", "2"}));
    CHECK(d.code == cli::exit_ok);
    CHECK(contains(d.out, "max 31: qualifying 1 of 4"));
    CHECK(contains(d.out, "max 2: qualifying 0 of 0"));

    const Run csv = run(with(cmd("density", quad(3, -2, -2, -1)), {"--max", "31", "--csv"}));
    CHECK(csv.out == "max,n,qualifying,class_primes,fraction\n31,3,1,4,0.250000\n");

    const Run s = run(with(cmd("scan", quad(3, -2, -2, -1)), {"--modulus", "31"}));
    CHECK(s.code == cli::exit_ok);
    CHECK(contains(s.out, "period: 5"));
    CHECK(contains(s.out, "residues: 29 30 1 5 13"));

    const Run f = run(cmd("scan", quad(5, -6, 2, 5)));
    CHECK(contains(f.out, "certificate prime: 19"));

    const Run z = run(cmd("zero", quad(3, -2, -7, -6)));
    CHECK(contains(z.out, "zero index: 3"));
    const Run nz = run(cmd("zero", quad(3, -2, -2, -1)));
    CHECK(contains(nz.out, "no zero term"));
}

TEST_CASE("exit-code contract is total on random argument soup") {
    std::mt19937_64 rng(3);
    const std::vector<std::string> words{"classify", "certify", "verify", "density", "scan", "zero",
                                         "--a1", "--a2", "--u0", "--u1", "--b", "--B", "--C", "--max",
                                         "--mode", "theorem", "auto", "--cubic", "--b1", "--c2", "--json",
                                         "3", "-2", "1/0", "0", "7/3", "-1", "abc", "--bound", "5"};
    for (int i = 0; i < 300; ++i) {
        std::vector<std::string> args;
        const std::size_t len = rng() % 9;
        for (std::size_t k = 0; k < len; ++k) {
            args.push_back(words[rng() % words.size()]);
        }
        const int code = run(args).code;
        REQUIRE(code >= 0);
        REQUIRE(code <= 4);
    }
}

TEST_CASE("emitted certificates round-trip byte for byte") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 40; ++i) {
        const long c1 = static_cast<long>(rng() % 11) - 5;
        const long c2 = static_cast<long>(rng() % 11) - 5;
        const long u0 = static_cast<long>(rng() % 11) - 5;
        const long u1 = static_cast<long>(rng() % 11) - 5;
        if (c1 == 0 || c2 == 0 || c1 == c2) {
            continue;
        }
        const Run r = run(cmd("certify", quad(c1 + c2, -c1 * c2, u0, u1)));
        if (r.code != cli::exit_ok) {
            continue;
        }
        REQUIRE(serialize(parse_certificate(r.out)) == r.out);
        const fs::path p = scratch("random.json");
        spit(p, r.out);
        REQUIRE(run({"verify", p.string()}).code == cli::exit_ok);
    }
}
