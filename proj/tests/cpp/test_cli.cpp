#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

// driven end-to-end through the installed binary (path injected at build time)

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

fs::path scratch_root() {
    static fs::path root = [] {
        fs::path p = fs::temp_directory_path() / ("wavegraph-cli-" + std::to_string(::getpid()));
        fs::create_directories(p);
        return p;
    }();
    return root;
}

fs::path scratch(const std::string& name) {
    fs::path p = scratch_root() / name;
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args, const std::string& env = "") {
    fs::path cap = scratch_root() / "capture.txt";
    std::string cmd = env + (env.empty() ? "" : " ") + "\"" WAVEGRAPH_CLI_PATH "\" " + args +
                      " > \"" + cap.string() + "\" 2>&1";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(cap);
    return r;
}

std::string last_data_line(const std::string& csv) {
    std::string last;
    std::istringstream in(csv);
    for (std::string line; std::getline(in, line);)
        if (!line.empty() && line[0] != '#') last = line;
    return last;
}

}  // namespace

TEST_CASE("solve writes the artifact trio with exact initial data") {
    fs::path dir = scratch("solve");
    auto r = run("solve --graph line --omega 0 --g0 const:1 --h0 const:0 --tmax 2 --tsteps 4 "
                 "--output \"" + dir.string() + "\"");
    CHECK(r.code == 0);
    CHECK(fs::exists(dir / "solution.csv"));
    CHECK(fs::exists(dir / "summary.json"));
    CHECK(fs::exists(dir / "spec.json"));

    std::string csv = slurp(dir / "solution.csv");
    CHECK(csv.find("t,x,u,dudt\n0,0,1,0\n") != std::string::npos);  // row at t = 0
    CHECK(csv.find("# command: solve") != std::string::npos);       // config echo

    std::string summary = slurp(dir / "summary.json");
    CHECK(summary.find("\"residual_sampled\"") != std::string::npos);
    CHECK(summary.find("\"energy_drift\"") != std::string::npos);
}

TEST_CASE("identical configurations produce byte-identical artifacts") {
    fs::path d1 = scratch("rep1"), d2 = scratch("rep2");
    // xmax 14: the ratio tail then covers x = 5..14, inside the monotone
    // decay regime (small x wobbles before the estimate takes over)
    std::string args = "counterexample --beta 3 --xmax 14 --precision 192 --tmax 1 --output ";
    auto r1 = run(args + "\"" + d1.string() + "\"");
    auto r2 = run(args + "\"" + d2.string() + "\"", "WAVEGRAPH_THREADS=3");
    CHECK(r1.code == 0);
    CHECK(r2.code == 0);
    for (const char* name : {"counterexample.csv", "certificate.json", "spec.json"})
        CHECK(slurp(d1 / name) == slurp(d2 / name));

    std::string cert = slurp(d1 / "certificate.json");
    CHECK(cert.find("\"certified\": true") != std::string::npos);
    CHECK(cert.find("\"jet_vanishes\": true") != std::string::npos);
    CHECK(cert.find("\"ratio_tail_decreasing\": true") != std::string::npos);
    CHECK(cert.find("\"max_residual\": \"0\"") != std::string::npos);
}

TEST_CASE("solve is reproducible under thread-count changes") {
    fs::path d1 = scratch("srep1"), d2 = scratch("srep2");
    std::string args = "solve --graph line --omega -2..2 --g0 1=0.5,-1=0.25,0=1,2=0,-2=0 "
                       "--h0 const:0.1 --tmax 3 --tsteps 6 --output ";
    auto r1 = run(args + "\"" + d1.string() + "\"", "WAVEGRAPH_THREADS=1");
    auto r2 = run(args + "\"" + d2.string() + "\"", "WAVEGRAPH_THREADS=4");
    CHECK(r1.code == 0);
    CHECK(r2.code == 0);
    CHECK(slurp(d1 / "solution.csv") == slurp(d2 / "solution.csv"));
    CHECK(slurp(d1 / "summary.json") == slurp(d2 / "summary.json"));
}

TEST_CASE("radius prints the critical value and the unbounded branch") {
    auto r = run("radius --D 2 --A1 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("0.367879441") != std::string::npos);

    auto u = run("radius --D 2 --A1 1.5");
    CHECK(u.code == 0);
    CHECK(u.out.find("\"unbounded\"") != std::string::npos);

    auto t = run("radius --D 2 --A1 2 --dt 0.3 --kmax 50");
    CHECK(t.code == 0);
    CHECK(t.out.find("\"remainder_trace\"") != std::string::npos);
    CHECK(t.out.find("\"decreasing_from\"") != std::string::npos);
}

TEST_CASE("forced solve matches its closed form at the final row") {
    fs::path dir = scratch("forced");
    auto r = run("solve-forced --graph line --omega 0 --g0 const:0 --h0 const:0 "
                 "--forcing const:0.8 --step 0.005 --tmax 2 --tsteps 4 --output \"" +
                 dir.string() + "\"");
    CHECK(r.code == 0);
    std::string line = last_data_line(slurp(dir / "solution.csv"));
    // t=2, x=0: closed form (c/2)(1 - cos(sqrt(2) t))
    auto second_comma = line.find(',', line.find(',') + 1);
    double u = std::stod(line.substr(second_comma + 1));
    double expect = 0.4 * (1.0 - std::cos(std::sqrt(2.0) * 2.0));
    CHECK(u == doctest::Approx(expect).epsilon(1e-6));
}

TEST_CASE("graph json files feed the solver") {
    fs::path dir = scratch("json-graph");
    fs::path gpath = dir / "path4.json";
    {
        std::ofstream out(gpath);
        out << R"({"vertices":[{"id":0,"mu":1.0},{"id":1,"mu":2.0},{"id":2,"mu":1.0},
                  {"id":3,"mu":1.0}],
                  "edges":[{"u":0,"v":1,"w":1.0},{"u":1,"v":2,"w":0.5},{"u":2,"v":3,"w":1.0}]})";
    }
    auto r = run("solve --graph \"" + gpath.string() + "\" --omega 1,2 --g0 const:1 "
                 "--h0 const:0 --tmax 1 --tsteps 2 --output \"" + dir.string() + "\"");
    CHECK(r.code == 0);
    CHECK(slurp(dir / "summary.json").find("\"modes\": 2") != std::string::npos);
}

TEST_CASE("validation failures exit 1 with a message") {
    CHECK(run("solve").code == 1);                                   // --omega missing
    CHECK(run("nonsense-subcommand").code == 1);
    auto r = run("counterexample --beta 1 --eps 1 --xmax 2");        // beta <= 2/eps, explicit
    CHECK(r.code == 1);
    CHECK(r.out.find("beta > 2/eps") != std::string::npos);
    CHECK(run("verify --suite nope").code == 1);
    CHECK(run("solve --graph line --omega 0 --tmax -1").code == 1);
}

TEST_CASE("default eps out of range only mutes the ratio") {
    fs::path dir = scratch("beta1");
    auto r = run("counterexample --beta 1 --xmax 2 --precision 128 --output \"" +
                 dir.string() + "\"");
    CHECK(r.code == 0);  // not an error: the ratio column is skipped, and says so
    std::string cert = slurp(dir / "certificate.json");
    CHECK(cert.find("growth_skipped") != std::string::npos);
    CHECK(cert.find("\"certified\": true") != std::string::npos);
}

TEST_CASE("certification failures exit 2") {
    fs::path dir = scratch("cls");
    auto setup = run("counterexample --beta 3 --xmax 6 --precision 128 --output \"" +
                     dir.string() + "\"");
    REQUIRE(setup.code == 0);
    auto fail = run("class-check --solution \"" + (dir / "spec.json").string() +
                    "\" --A1 2 --C 1e-30 --grid-t 1 --grid-x 2..5");
    CHECK(fail.code == 2);
    CHECK(fail.out.find("\"holds\": false") != std::string::npos);

    auto ok = run("class-check --solution zero --A1 2 --C 1 --grid-t 1 --grid-x 2..5");
    CHECK(ok.code == 0);
}

TEST_CASE("uniqueness harness through the CLI") {
    auto pos = run("uniqueness --u zero --v zero --A1 1 --C 1 --grid-x 1..4");
    CHECK(pos.code == 0);
    CHECK(pos.out.find("hypotheses hold") != std::string::npos);

    fs::path dir = scratch("uniq");
    auto setup = run("counterexample --beta 3 --xmax 4 --precision 128 --output \"" +
                     dir.string() + "\"");
    REQUIRE(setup.code == 0);
    auto neg = run("uniqueness --u \"" + (dir / "spec.json").string() +
                   "\" --v zero --A1 2 --C 1 --grid-t 0.5,1 --grid-x 1..8");
    CHECK(neg.code == 0);  // unmet hypotheses: reported, not an error
    CHECK(neg.out.find("hypotheses unmet") != std::string::npos);
    CHECK(neg.out.find("\"hypotheses_met\": false") != std::string::npos);
}

TEST_CASE("verify suites run seeded and green") {
    auto r = run("verify --suite ore --seed 1");
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}
