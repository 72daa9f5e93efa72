#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "generator.hpp"
#include "noether/workspace.hpp"

using namespace noether;
namespace fs = std::filesystem;

namespace {

const std::string fixtures = NOETHER_FIXTURES;

struct Run {
  int code;
  std::string out;
};

Run cli(const std::string& args) {
  std::string cmd = std::string(NOETHER_CLI) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "noether-cli-test";
  fs::create_directories(dir);
  return dir / name;
}

// Writes a diagram over a Słomiński form as workspace text.
std::string workspace_of(const Diagram& d) {
  const auto& F = dynamic_cast<const SlominskiForm&>(*d.form);
  WorkspaceText w;
  std::map<ObjectId, bool> seen;
  DiagramDecl dd{"d", w.slominski_name, {}, {}, {}};
  for (const auto& [role, x] : d.objects) {
    if (!seen[x]) {
      const SlominskiAlgebra& a = F.algebra(x);
      w.algebras.push_back({F.object_name(x), false, a.size(), a.zero(), a.p_table(), a.d_table()});
      seen[x] = true;
    }
    dd.uses.emplace_back(F.object_name(x), role);
  }
  for (const auto& [role, f] : d.arrows) {
    std::string name = "h" + std::to_string(w.homs.size());
    w.homs.push_back({name, F.object_name(f.dom), F.object_name(f.cod), f.table});
    dd.uses.emplace_back(name, role);
  }
  w.diagrams.push_back(dd);
  return serialize(w);
}

}  // namespace

TEST_CASE("check-axioms") {
  Run ok = cli("check-axioms " + fixtures + "/snake_d8.txt --with-axiom6");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("PASS") != std::string::npos);
  CHECK(ok.out.find("FAIL") == std::string::npos);

  Run six = cli("check-axioms " + fixtures + "/no_axiom6.txt --with-axiom6");
  CHECK(six.code == 1);
  CHECK(six.out.find("FAIL Ax6") != std::string::npos);
  CHECK(cli("check-axioms " + fixtures + "/no_axiom6.txt").code == 0);

  fs::path bad = scratch("bad.txt");
  std::ofstream(bad) << "group Z2 size 2 id 0\ntable 0 1 / 1\n";
  Run b = cli("check-axioms " + bad.string());
  CHECK(b.code == 2);
  CHECK(b.out.find("bad.txt:2:") != std::string::npos);
  CHECK(cli("check-axioms /nonexistent/file.txt").code == 2);
  CHECK(cli("no-such-command").code == 2);
}

TEST_CASE("chase") {
  std::string file = fixtures + "/snake_d8.txt";
  Run bot = cli("chase " + file + " delta --subobject bot");
  CHECK(bot.code == 0);
  CHECK(bot.out.find("CokA:{0}") != std::string::npos);
  Run top = cli("chase " + file + " delta --subobject top --direction backward --trace");
  CHECK(top.code == 0);
  CHECK(top.out.find("VB:{0,1}") != std::string::npos);
  CHECK(top.out.find("  D8:") != std::string::npos);
  CHECK(cli("chase " + file + " delta --subobject 0,9").code == 2);
  CHECK(cli("chase " + file + " nope --subobject bot").code == 2);
}

TEST_CASE("induce and pyramid") {
  std::string file = fixtures + "/snake_d8.txt";
  Run ind = cli("induce " + file + " delta");
  CHECK(ind.code == 0);
  CHECK(ind.out.find("induces VB -> CokA") != std::string::npos);
  CHECK(ind.out.find("map 0 1") != std::string::npos);
  CHECK(cli("induce " + fixtures + "/z4_stacks.txt mod2-back").out.find("map 0 1") != std::string::npos);
  fs::path kernel = scratch("kernel.txt");
  std::ofstream(kernel) << "group Z2 size 2 id 0\ntable 0 1 / 1 0\n"
                           "group Z4 size 4 id 0\ntable 0 1 2 3 / 1 2 3 0 / 2 3 0 1 / 3 0 1 2\n"
                           "hom mod2 Z4 -> Z2 map 0 1 0 1\nzigzag k : Z4 mod2:> Z2 mod2:< Z4\n";
  Run no = cli("induce " + kernel.string() + " k");
  CHECK(no.code == 1);
  CHECK(no.out.find("no morphism induced") != std::string::npos);

  fs::path dot = scratch("delta.dot");
  fs::remove(dot);
  Run p = cli("pyramid " + file + " delta --dot " + dot.string());
  CHECK(p.code == 0);
  CHECK(p.out.find("height 5") != std::string::npos);
  CHECK(p.out.find("PASS") != std::string::npos);
  std::ifstream in(dot);
  std::stringstream s;
  s << in.rdbuf();
  CHECK(s.str().find("X_0_0") != std::string::npos);
}

TEST_CASE("snake and verify") {
  Run s = cli("snake " + fixtures + "/snake_d8.txt snake");
  CHECK(s.code == 0);
  CHECK(s.out.find("Ker alpha order 1") != std::string::npos);
  CHECK(s.out.find("Coker gamma order 2") != std::string::npos);
  std::size_t exact = 0;
  for (std::size_t at = s.out.find("PASS exact at"); at != std::string::npos; at = s.out.find("PASS exact at", at + 1))
    ++exact;
  CHECK(exact == 4);

  std::string stacks = fixtures + "/z4_stacks.txt";
  CHECK(cli("verify " + stacks + " five --lemma five").code == 0);
  CHECK(cli("verify " + stacks + " five --lemma no-such-lemma").code == 2);
  Run shape = cli("verify " + stacks + " ses --lemma five");
  CHECK(shape.code == 2);
  CHECK(shape.out.find("shape") != std::string::npos);
}

TEST_CASE("verify on generated five-lemma instances") {
  noether::testing::InstanceGenerator gen({"Z1", "Z2", "Z3", "Z4", "Z2xZ2", "S3"}, 99);
  int n = 0;
  for (int k = 0; k < 5; ++k) {
    auto d = gen.find(lemma_template("five"));
    if (!d) continue;
    ++n;
    fs::path file = scratch("five" + std::to_string(k) + ".txt");
    std::ofstream(file) << workspace_of(*d);
    Run r = cli("verify " + file.string() + " d --lemma five");
    CHECK_MESSAGE(r.code == 0, r.out);
    CHECK(r.out.find("PASS iso u") != std::string::npos);
    Run f = cli("format " + file.string());
    CHECK(f.code == 0);
    CHECK(parse_workspace_string(f.out) == parse_workspace_file(file.string()));
  }
  CHECK(n >= 3);
}
