#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "noether/axioms.hpp"
#include "noether/workspace.hpp"

using namespace noether;
namespace fs = std::filesystem;

namespace {

const std::string fixtures = NOETHER_FIXTURES;

// Kind and message of the error raised while loading `text`.
std::pair<ErrorKind, std::string> load_error(const std::string& text) {
  try {
    Workspace::from_string(text);
  } catch (const Error& e) {
    return {e.kind(), e.what()};
  }
  FAIL("expected an error");
  return {};
}

const char* z2 = "group Z2 size 2 id 0\ntable 0 1 / 1 0\n";

const char* diamond = R"(form diamond
object X subobjects bot a b top
order X bot <= a
order X bot <= b
order X a <= top
order X b <= top
morphism id X -> X
dimg bot -> bot
dimg a -> a
dimg b -> b
dimg top -> top
iimg bot -> bot
iimg a -> a
iimg b -> b
iimg top -> top
)";

}  // namespace

TEST_CASE("parse errors carry line and column") {
  auto [kind, msg] = load_error(std::string(z2) + "bogus line\n");
  CHECK(kind == ErrorKind::parse);
  CHECK(msg.find("<input>:3:1") != std::string::npos);
  CHECK(msg.find("bogus") != std::string::npos);

  auto [k2, m2] = load_error("group Z2 size 2 id 0\ntable 0 1 / 1\n");
  CHECK(k2 == ErrorKind::parse);
  CHECK(m2.find("ragged") != std::string::npos);
  CHECK(m2.find("<input>:2:") != std::string::npos);

  CHECK(load_error("group Z2 size 2 id 7\n").first == ErrorKind::parse);
  CHECK(load_error("use A as B\n").first == ErrorKind::parse);
  CHECK(load_error(std::string(z2) + "zigzag z : Z2 f:>\n").first == ErrorKind::parse);
  CHECK(load_error("include nowhere.txt\n").second.find("nowhere.txt") != std::string::npos);
}

TEST_CASE("validation errors name the offending declaration") {
  auto [k1, m1] = load_error(std::string(z2) + "hom f Z2 -> Z3 map 0 0\n");
  CHECK(k1 == ErrorKind::validation);
  CHECK(m1.find("<input>:3:") != std::string::npos);
  CHECK(m1.find("f") != std::string::npos);

  CHECK(load_error(std::string(z2) + "hom f Z2 -> Z2 map 0 0 0\n").first == ErrorKind::validation);
  CHECK(load_error(std::string(z2) + "zigzag z : Z2 q:> Z2\n").first == ErrorKind::validation);
  CHECK(load_error("group Z2 size 2 id 0\ntable 0 1 / 0 1\n").first == ErrorKind::validation);

  Workspace ws = Workspace::from_string(std::string(z2) + "hom one Z2 -> Z2 map 0 1\n");
  CHECK_THROWS_AS(ws.zigzag("missing"), Error);
  CHECK_THROWS_AS(ws.diagram("missing"), Error);
  CHECK_THROWS_AS(ws.form("missing"), Error);
}

TEST_CASE("finite forms from text") {
  Workspace ws = Workspace::from_string(diamond);
  FormPtr f = ws.form("diamond");
  REQUIRE(f);
  REQUIRE(f->object_count() == 1);
  CHECK(f->object_name(0) == "X");
  CHECK(f->lattice(0).size() == 4);
  CHECK(axiom_suite(*f, false).passed());

  Workspace lonely = Workspace::load(fixtures + "/no_axiom6.txt");
  auto r = axiom_suite(*lonely.form("lonely"), true);
  CHECK_FALSE(r.passed());
  CHECK(r.to_text().find("Ax6") != std::string::npos);

  CHECK(load_error("form f\nobject X subobjects a b\n").first == ErrorKind::not_a_lattice);
}

TEST_CASE("serialize then parse is the identity on every fixture") {
  std::vector<fs::path> files;
  for (const auto& e : fs::recursive_directory_iterator(fixtures))
    if (e.path().extension() == ".txt") files.push_back(e.path());
  CHECK(files.size() >= 15);
  for (const auto& p : files) {
    WorkspaceText w = parse_workspace_file(p.string());
    std::string text = serialize(w);
    WorkspaceText again = parse_workspace_string(text);
    CHECK_MESSAGE(again == w, p.string());
    CHECK(serialize(again) == text);
  }
  WorkspaceText d = parse_workspace_string(diamond);
  CHECK(parse_workspace_string(serialize(d)) == d);
}

TEST_CASE("includes resolve relative to the including file") {
  fs::path dir = fs::temp_directory_path() / "noether-include-test";
  fs::create_directories(dir / "sub");
  std::ofstream(dir / "sub" / "z2.txt") << z2;
  std::ofstream(dir / "main.txt") << "include sub/z2.txt\nhom one Z2 -> Z2 map 0 1\n"
                                     "zigzag loop : Z2 one:> Z2 one:< Z2\n";
  Workspace ws = Workspace::load((dir / "main.txt").string());
  auto [form, z] = ws.zigzag("loop");
  CHECK(z.length() == 2);
  CHECK(form->object_name(z.front()) == "Z2");

  std::ofstream(dir / "bad.txt") << "include sub/z2.txt\nhom f Z2 -> Z2 map 0 1 1\n";
  try {
    Workspace::load((dir / "bad.txt").string());
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("bad.txt:2:") != std::string::npos);
  }
  fs::remove_all(dir);
}

TEST_CASE("diagrams resolve roles, paths and assertions") {
  Workspace ws = Workspace::load(fixtures + "/snake_d8.txt");
  Diagram d = ws.diagram("snake");
  CHECK(d.objects.size() == 6);
  CHECK(d.arrows.size() == 7);
  CHECK(d.object("A'") == d.object("B"));
  CHECK(d.hypotheses.size() == 6);
  for (const auto& h : d.hypotheses) CHECK(check(d, h).status == CheckLine::Status::pass);
  CHECK(same_maps(d.path(parse_path("beta.f")), d.path(parse_path("f'.alpha"))));
  CHECK_THROWS_AS(d.arrow("nope"), Error);
  CHECK(path_text(parse_path("g'.beta")) == "g'.beta");
}
