// End-to-end tests for the wittcalc binary: subcommand behavior, output
// formats, exit codes (0 pass, 1 verdict failure, 2 usage/input error).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "witt/parser.hpp"
#include "witt/session.hpp"

using namespace witt;
using nlohmann::ordered_json;

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(WITTCALC_BIN) + " " + args + " 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool has(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t c = 0;
  for (std::size_t p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++c;
  return c;
}

// One shared on-disk session exercised by the session-aware subcommands.
const std::string& session_path() {
  static const std::string path = [] {
    std::string p = (std::filesystem::temp_directory_path() / "wittcalc_cli_fixture.json").string();
    Session s;
    RingPtr b3 = PresentedRing::make({"x0", "x1", "x2", "x3"}, {"x0^2 + x1^2 - x2*x3 + 1"});
    RingPtr bl = localize(b3, b3->element("x2 + x3"));
    RingPtr q2 = PresentedRing::make({"x", "y"}, std::vector<std::string>{});
    RingPtr qx = PresentedRing::make({"x", "y"}, {"x"});
    RingPtr s2 = PresentedRing::make({"x0", "x1", "x2"}, {"x0^2 + x1^2 + x2^2 - 1"});
    s.rings.emplace("b3l", bl);
    s.rings.emplace("q2", q2);
    s.rings.emplace("qx", qx);
    s.rings.emplace("s2r", s2);

    CycleComponent g1{{bl->element("x0^2 + 1")}, bl->element("x0*x1 + x2"),
                      {bl->element("x0^2 + 1")}, 1};
    CycleComponent g2{{bl->element("x2")}, bl->element("x1*x3"), {bl->element("x2")}, 1};
    s.cycles.emplace("gen", Over<FramedCycle>{"b3l", FramedCycle(bl, {g1, g2})});
    CycleComponent t1{{q2->element("x")}, q2->element("1 + y"), {q2->element("x")}, 1};
    s.cycles.emplace("c", Over<FramedCycle>{"q2", FramedCycle(q2, {t1})});
    CycleComponent b1{{q2->element("y")}, q2->element("x + x*y"), {q2->element("y")}, 1};
    s.cycles.emplace("b", Over<FramedCycle>{"q2", FramedCycle(q2, {b1})});

    s.fields.emplace(
        "kq2", Over<PresentedField>{
                   "b3l", PresentedField::make(
                              bl, {bl->element("x1"), bl->element("x2")}, FieldKind::Complex,
                              {{"x0", parse_polynomial("x0^2 + 1", bl->vars(), bl->order())}})});

    std::vector<RingElement> e1{s2->one(), s2->zero(), s2->zero(), s2->zero()};
    s.rows.emplace("e1", Over<UnimodularRow>{"s2r", UnimodularRow(e1, e1)});
    std::vector<RingElement> e1x{s2->one(), s2->element("x0"), s2->zero(), s2->zero()};
    s.rows.emplace("e1x", Over<UnimodularRow>{"s2r", UnimodularRow(e1x, e1)});

    s.matrices.emplace("id4", Over<RingMatrix>{"s2r", RingMatrix::identity(s2, 4)});
    s.matrices.emplace("two4",
                       Over<RingMatrix>{"s2r", RingMatrix::identity(s2, 4) * s2->constant(rat(2))});
    RingMatrix g01 = RingMatrix::identity(s2, 4);
    g01.set(0, 1, s2->element("x0"));
    s.matrices.emplace("g01", Over<RingMatrix>{"s2r", g01});
    s.matrices.emplace("id2", Over<RingMatrix>{"s2r", RingMatrix::identity(s2, 2)});
    s.matrices.emplace("two2",
                       Over<RingMatrix>{"s2r", RingMatrix::identity(s2, 2) * s2->constant(rat(2))});
    s.forms.emplace("h1", Over<FramedAlternatingForm>{"s2r", hyperbolic(s2, 1)});
    save_session(s, p);
    return p;
  }();
  return path;
}

std::string with_session(const std::string& args) {
  return args + " --session " + session_path();
}

}  // namespace

TEST_CASE("usage errors exit 2, help exits 0") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("nf --vars x").code == 2);                      // missing required --expr
  CHECK(run("nf --vars x --order zorp --expr x").code == 2);
  RunResult help = run("--help");
  CHECK(help.code == 0);
  CHECK(has(help.out, "wittcalc"));
}

TEST_CASE("gb prints the reduced basis and flags trivial ideals") {
  RunResult r = run("gb --vars x0,x1,x2,x3 --rel 'x0^2+x1^2+x2^2+x3^2-1'");
  CHECK(r.code == 0);
  CHECK(has(r.out, "gb[0] = x0^2 + x1^2 + x2^2 + x3^2 - 1"));

  RunResult t = run("gb --vars x --gen 'x' --gen 'x-1'");
  CHECK(t.code == 0);
  CHECK(has(t.out, "gb[0] = 1"));
  CHECK(has(t.out, "trivial: ideal contains 1"));

  RunResult j = run("gb --vars x,y --rel 'x^2-y' --json");
  CHECK(j.code == 0);
  ordered_json doc = ordered_json::parse(j.out);
  CHECK(doc["trivial"] == false);
  CHECK(doc["basis"].size() == 1);

  // a named (localized) session ring resolves through --ring
  RunResult b = run(with_session("gb --ring b3l"));
  CHECK(b.code == 0);
  CHECK(has(b.out, "gb[0] = x0^2 + x1^2 - x2*x3 + 1"));
  CHECK(count(b.out, "gb[") == 2);
}

TEST_CASE("nf reduces modulo the relations") {
  RunResult r = run("nf --vars x,y --rel 'x^2-y' --expr 'x^4'");
  CHECK(r.code == 0);
  CHECK(has(r.out, "nf = y^2"));

  RunResult z = run("nf --vars x,y --rel 'x^2-y' --expr 'x^2-y' --json");
  CHECK(z.code == 0);
  ordered_json doc = ordered_json::parse(z.out);
  CHECK(doc["nf"] == "0");
  CHECK(doc["is_zero"] == true);

  CHECK(run("nf --vars x --expr 'x +'").code == 2);  // parse error in the expression
}

TEST_CASE("check-unimodular decides and prints the cofactor witness") {
  RunResult yes = run(
      "check-unimodular --vars x0,x1,x2,x3 --rel 'x0^2+x1^2+x2^2+x3^2-1' "
      "--entry=-x0 --entry x1 --entry x2 --entry x3");
  CHECK(yes.code == 0);
  CHECK(has(yes.out, "unimodular: yes"));
  CHECK(count(yes.out, "w[") == 4);

  RunResult no = run("check-unimodular --vars x --entry x");
  CHECK(no.code == 1);
  CHECK(has(no.out, "unimodular: no"));
}

TEST_CASE("symplectic-check on matrix literals") {
  RunResult yes = run("symplectic-check --vars x --literal '0,1;-1,0'");
  CHECK(yes.code == 0);
  CHECK(has(yes.out, "symplectic: yes"));

  RunResult no = run("symplectic-check --vars x --literal '2,0;0,1'");
  CHECK(no.code == 1);
  CHECK(has(no.out, "symplectic: no"));

  CHECK(run("symplectic-check --vars x").code == 2);  // neither --matrix nor --literal
}

TEST_CASE("construct-qv reports the rank-(n-2) form") {
  RunResult r = run(
      "construct-qv --vars x0,x1,x2,x3 --rel 'x0^2+x1^2+x2^2+x3^2-1' "
      "--entry x0 --entry x1 --entry x2 --entry x3");
  CHECK(r.code == 0);
  CHECK(has(r.out, "rank = 2"));

  RunResult bad = run("construct-qv --vars x --entry x");
  CHECK(bad.code == 1);
  CHECK(has(bad.out, "row is not unimodular"));
}

TEST_CASE("symplectic-class round trips the row verbatim") {
  RunResult r = run(
      "symplectic-class --vars x0,x1,x2,x3 --rel 'x0^2+x1^2+x2^2+x3^2-1' "
      "--entry x0 --entry x1 --entry x2 --entry x3 --json");
  CHECK(r.code == 0);
  ordered_json doc = ordered_json::parse(r.out);
  CHECK(doc["verbatim_round_trip"] == true);
  CHECK(doc["v"][0] == "x0");

  RunResult h = run(
      "symplectic-class --vars x0,x1,x2,x3 --rel 'x0^2+x1^2+x2^2+x3^2-1' "
      "--entry x0 --entry x1 --entry x2 --entry x3");
  CHECK(h.code == 0);
  CHECK(has(h.out, "round trip: verbatim"));
}

TEST_CASE("transition reports status, matrix and determinants") {
  RunResult ok = run(
      "transition --vars x1,x2 --prime x1 --prime x2 --from x1 --from x2 --to 'x1+x2' --to x2");
  CHECK(ok.code == 0);
  CHECK(has(ok.out, "status: ok"));
  CHECK(has(ok.out, "det = 1"));
  CHECK(has(ok.out, "det mod prime = 1"));

  RunResult deg = run(
      "transition --vars x1,x2 --prime x1 --prime x2 --from 'x1^2' --from x2 --to x1 --to x2");
  CHECK(deg.code == 1);
  CHECK(has(deg.out, "status: degenerate"));
  CHECK(has(deg.out, "det mod prime = 0"));

  RunResult ne = run(
      "transition --vars x1,x2 --prime x1 --prime x2 --from x1 --from x2 --to 'x1^2' --to x2");
  CHECK(ne.code == 1);
  CHECK(has(ne.out, "status: not-expressible"));
}

TEST_CASE("square-check normalizes classes and verifies witnesses") {
  RunResult trivial = run("square-check --vars x,y --prime x --expr '4*y^2'");
  CHECK(trivial.code == 0);
  CHECK(has(trivial.out, "class: trivial (square)"));

  RunResult cls = run("square-check --vars x,y --prime x --expr '2*y'");
  CHECK(cls.code == 1);
  CHECK(has(cls.out, "class: <2*y>"));

  RunResult real = run("square-check --vars x,y --prime x --kind real --expr=-4");
  CHECK(real.code == 1);
  CHECK(has(real.out, "class: <-1>"));

  RunResult wit = run("square-check --vars x,y --prime x --expr 9/4 --witness-a 3 --witness-b 2");
  CHECK(wit.code == 0);
  CHECK(has(wit.out, "witness: verified"));

  RunResult bad = run("square-check --vars x,y --prime x --expr 9/4 --witness-a 1 --witness-b 1");
  CHECK(bad.code == 1);
  CHECK(has(bad.out, "witness: FAILED"));
  CHECK(has(bad.out, "u*b^2 - scale*a^2 does not vanish in the field"));
}

TEST_CASE("residue evaluates cycle components at a session field") {
  RunResult r = run(with_session("residue --cycle gen --field kq2"));
  CHECK(r.code == 0);
  CHECK(has(r.out, "residue[0] = <x3> Kos(x1, x2)"));
  CHECK(has(r.out, "residue[1] = <x3> Kos(x1, x2)"));

  RunResult one = run(with_session("residue --cycle gen --field kq2 --component 1"));
  CHECK(one.code == 0);
  CHECK(has(one.out, "residue[1]"));
  CHECK_FALSE(has(one.out, "residue[0]"));

  RunResult missing = run(with_session("residue --cycle nope --field kq2"));
  CHECK(missing.code == 2);
  CHECK(has(missing.out, "session has no cycle named 'nope'"));
}

TEST_CASE("cycle-diff reports the verdict per prime") {
  RunResult r = run(with_session("cycle-diff --cycle gen --field kq2"));
  CHECK(r.code == 0);
  CHECK(has(r.out, "d at kappa(x1, x2) [complex]: zero (residues cancel in witnessed pairs)"));
}

TEST_CASE("cycle-transport pushes a cycle through generator images") {
  RunResult r = run(with_session("cycle-transport --cycle c --target q2 --image y --image x"));
  CHECK(r.code == 0);
  CHECK(has(r.out, "component[0]: sign +1 prime (y) unit x + 1 frame Kos(y)"));
}

TEST_CASE("cycle-boundary computes odd-valuation components") {
  RunResult r = run(with_session("cycle-boundary --cycle b --along x --quotient qx"));
  CHECK(r.code == 0);
  CHECK(has(r.out, "component[0]: sign +1 prime (y) unit y + 1 frame Kos(y)"));

  RunResult hinted =
      run(with_session("cycle-boundary --cycle b --along x --quotient qx --hint '0:1:1+y'"));
  CHECK(hinted.code == 0);
  CHECK(has(hinted.out, "component[0]: sign +1 prime (y) unit y + 1 frame Kos(y)"));

  RunResult bad = run(with_session("cycle-boundary --cycle b --along x --quotient qx --hint 0:1"));
  CHECK(bad.code == 2);
  CHECK(has(bad.out, "--hint expects component:valuation:expr"));
}

TEST_CASE("orbit-verify checks the row action and the membership claim") {
  RunResult ok = run(with_session("orbit-verify --row e1 --target e1 --g id4 --kind sp"));
  CHECK(ok.code == 0);
  CHECK(has(ok.out, "orbit certificate: verified"));

  RunResult bad = run(with_session("orbit-verify --row e1 --target e1 --g two4 --kind sp"));
  CHECK(bad.code == 1);
  CHECK(has(bad.out, "orbit certificate: FAILED"));

  RunResult eprod =
      run(with_session("orbit-verify --row e1 --target e1x --g g01 --kind eprod --op '0,1,x0'"));
  CHECK(eprod.code == 0);
  CHECK(has(eprod.out, "orbit certificate: verified"));
}

TEST_CASE("isometry-verify checks certificates between session forms") {
  RunResult ok = run(with_session("isometry-verify --source h1 --target h1 --map id2"));
  CHECK(ok.code == 0);
  CHECK(has(ok.out, "isometry: verified"));

  RunResult bad = run(with_session("isometry-verify --source h1 --target h1 --map two2"));
  CHECK(bad.code == 1);
  CHECK(has(bad.out, "isometry: FAILED"));
  CHECK(has(bad.out, "pullback of the target form differs from the source form"));
}

TEST_CASE("session plumbing errors exit 2") {
  CHECK(run("residue --cycle gen --field kq2").code == 2);  // no --session
  RunResult r = run("residue --cycle gen --field kq2 --session /nonexistent/nope.json");
  CHECK(r.code == 2);
  CHECK(has(r.out, "cannot open"));
}

TEST_CASE("verify-paper runs the canned scenarios") {
  RunResult all = run("verify-paper");
  CHECK(all.code == 0);
  CHECK(count(all.out, "PASS ") == 10);
  CHECK_FALSE(has(all.out, "FAIL"));
  CHECK(has(all.out, "all scenarios passed"));

  RunResult one = run("verify-paper --scenario quaternion-symplectic");
  CHECK(one.code == 0);
  CHECK(has(one.out, "PASS quaternion-symplectic"));

  RunResult json = run("verify-paper --json");
  CHECK(json.code == 0);
  ordered_json doc = ordered_json::parse(json.out);
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 10);
  for (const auto& rep : doc) {
    CHECK(rep["pass"] == true);
    CHECK(rep["assertions"].is_array());
  }

  RunResult unknown = run("verify-paper --scenario nope");
  CHECK(unknown.code == 2);
  CHECK(has(unknown.out, "unknown scenario 'nope'"));
}
