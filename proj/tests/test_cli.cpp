#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "etau/io.hpp"

using namespace etau;

namespace {

struct Run {
    int code = -1;
    std::string out;
    json report() const { return json::parse(out); }
};

Run run(const std::string& args) {
    Run r;
    const std::string cmd = std::string(ETAU_BIN) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("surface catenoid writes OBJ and nu sidecar") {
    const Run r = run("surface catenoid --tau 0 --d 1 --rows 20 --cols 16 --out cli_cat.obj");
    CHECK(r.code == 0);
    const json j = r.report();
    CHECK(j["vertices"] == 320);
    const std::string obj = slurp("cli_cat.obj");
    std::size_t v = 0, pos = 0;
    while ((pos = obj.find("\nv ", pos)) != std::string::npos) ++v, ++pos;
    CHECK(v == 320);
    const std::string csv = slurp("cli_cat.nu.csv");
    CHECK(csv.rfind("vertex,x,y,t,n1,n2,n3,nu\n", 0) == 0);
}

TEST_CASE("surface invariant") {
    const Run r = run("surface invariant --tau 0.5 --d 1.2 --s 1 --rows 21 --cols 9 --out cli_inv.obj --profile cli_inv.csv");
    CHECK(r.code == 0);
    CHECK(r.report()["domain_violation"].get<double>() < 1e-12);
    CHECK(slurp("cli_inv.csv").rfind("theta,u_plus,u_minus\n", 0) == 0);
    const Run bad = run("surface invariant --tau 0 --d 1 --out cli_bad.obj");
    CHECK(bad.code == 1);
    CHECK(bad.report()["error"].get<std::string>().find("d > 1") != std::string::npos);
}

TEST_CASE("verify suites") {
    const Run lim = run("verify limits --tau 0");
    CHECK(lim.code == 0);
    CHECK(lim.report()["pass"] == true);
    const Run iso = run("verify isometries --tau 1 --n 50");
    CHECK(iso.code == 0);
    CHECK(iso.report()["families"].size() == 7);
    CHECK(run("verify lifts --tau 0.5").code == 0);
    CHECK(run("verify transversality --eps 0.5 --h0 1 --tau 0").code == 0);
    CHECK(run("verify foliation --tau 0 --n 10").code == 0);
    const Run unknown = run("verify nothing");
    CHECK(unknown.code == 1);
    CHECK(unknown.report()["status"] == "invalid_input");
}

TEST_CASE("solve") {
    const Run zero = run("solve --boundary zero --tau 0 --grid 17 --csv cli_zero.csv");
    CHECK(zero.code == 0);
    CHECK(zero.report()["sup_norm"] == 0.0);
    std::ifstream f("cli_zero.csv");
    const GraphFunction u = read_graph_csv(f);
    CHECK(u.domain.nx == 17);
    const Run cat = run("solve --boundary catenoid --tau 0.5 --d 2 --grid 33");
    CHECK(cat.code == 0);
    CHECK(cat.report()["sup_error"].get<double>() < 1e-3);
    const Run wild = run("solve --boundary extreme --grid 33 --out cli_wild.json");
    CHECK(wild.code == 2);
    const json w = json::parse(slurp("cli_wild.json"));
    CHECK(w["converged"] == false);
    CHECK(w["residual_history"].size() >= 2);
}

TEST_CASE("slab audits and exit codes") {
    const Run ok = run("slab example2 --r 1 --C 0.2 --h 0.45 --n 4");
    CHECK(ok.code == 0);
    CHECK(ok.report()["feasibility"]["feasible"] == true);
    const Run bad = run("slab example2 --r 1 --C 0.25 --h 0.45");
    CHECK(bad.code == 1);
    CHECK(bad.report()["infeasible"].get<std::string>().find("2 C r < h") != std::string::npos);
    const Run e1 = run("slab example1 --tau 0 --eps 0.1 --n 3");
    CHECK(e1.code == 0);
    CHECK(e1.report()["report"]["pass"] == true);
}

TEST_CASE("config file, flag precedence and determinism") {
    {
        std::ofstream cfg("cli_cfg.json");
        cfg << R"({"C": 0.25, "r": 1, "h": 0.45, "n": 3, "seed": 5})";
    }
    CHECK(run("slab example2 --config cli_cfg.json").code == 1);
    CHECK(run("slab example2 --config cli_cfg.json --C 0.2").code == 0);
    const Run a = run("slab example2 --config cli_cfg.json --C 0.2");
    const Run b = run("slab example2 --config cli_cfg.json --C 0.2");
    CHECK(a.out == b.out);
    CHECK(a.report()["seed"] == 5);
    {
        std::ofstream cfg("cli_bad_cfg.json");
        cfg << R"({"colour": 1})";
    }
    CHECK(run("verify limits --config cli_bad_cfg.json").code == 1);
    CHECK(run("verify limits --tau abc").code == 1);
}
