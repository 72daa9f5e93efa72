// noether: batch verifier for noetherian-form workspaces.
//
// Exit codes: 0 pass, 1 verified failure or refutation, 2 input error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "noether/axioms.hpp"
#include "noether/lemmas.hpp"
#include "noether/pyramid.hpp"
#include "noether/workspace.hpp"
#include "noether/zigzag.hpp"

namespace {

using namespace noether;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;

[[noreturn]] void input_error(const std::string& message) {
  throw Error(ErrorKind::validation, message);
}

std::string key(const Form& form, Subobject s) { return form.lattice(s.owner).key(s.index); }

Subobject find_subobject(const Form& form, ObjectId x, const std::string& text) {
  const Lattice l = form.lattice(x);
  if (auto i = l.find(text)) return {x, *i};
  if (auto i = l.find("{" + text + "}")) return {x, *i};
  input_error("unknown subobject " + text + " of " + form.object_name(x));
}

int cmd_check_axioms(const std::string& file, bool with6, const std::string& only) {
  Workspace ws = Workspace::load(file);
  std::vector<std::string> names = ws.form_names();
  std::sort(names.begin(), names.end());
  if (!only.empty()) {
    if (std::find(names.begin(), names.end(), only) == names.end())
      input_error("unknown form " + only);
    names = {only};
  }
  if (names.empty()) input_error(file + " declares no form");
  if (!ws.text().algebras.empty()) ws.close_slominski();
  bool ok = true;
  for (const auto& name : names) {
    AxiomReport r = axiom_suite(*ws.form(name), with6);
    std::cout << "form " << name << "\n" << r.to_text();
    ok = ok && r.passed();
  }
  return ok ? kPass : kFail;
}

int cmd_chase(const std::string& file, const std::string& zname, const std::string& sub,
              const std::string& direction, bool trace) {
  Workspace ws = Workspace::load(file);
  auto [form, z] = ws.zigzag(zname);
  Chase c;
  if (direction == "forward") {
    c = chase_forward(z, find_subobject(*form, z.front(), sub), trace);
  } else {
    c = chase_backward(z, find_subobject(*form, z.back(), sub), trace);
  }
  for (const Subobject& s : c.trace) std::cout << "  " << form->sub_name(s) << "\n";
  std::cout << form->sub_name(c.result) << "\n";
  return kPass;
}

int cmd_induce(const std::string& file, const std::string& zname) {
  Workspace ws = Workspace::load(file);
  auto [form, z] = ws.zigzag(zname);
  InductionVerdict v = decide_induction(*form, z);
  if (!v.induces) {
    std::cout << "no morphism induced: " << v.failed_condition << " fails at node " << v.node;
    if (v.offending) std::cout << " (" << form->sub_name(*v.offending) << ")";
    if (!v.witness.empty()) std::cout << ": " << v.witness;
    std::cout << "\n";
    return kFail;
  }
  const Morphism& m = *v.morphism;
  std::cout << "induces " << form->object_name(m.dom) << " -> " << form->object_name(m.cod)
            << "\n";
  for (SubIndex i = 0; i < m.dimg.size(); ++i)
    std::cout << "dimg " << key(*form, {m.dom, i}) << " -> " << key(*form, {m.cod, m.dimg[i]})
              << "\n";
  for (SubIndex j = 0; j < m.iimg.size(); ++j)
    std::cout << "iimg " << key(*form, {m.cod, j}) << " -> " << key(*form, {m.dom, m.iimg[j]})
              << "\n";
  if (m.has_table()) {
    std::cout << "map";
    for (std::size_t y : m.table) std::cout << " " << y;
    std::cout << "\n";
  }
  return kPass;
}

int cmd_pyramid(const std::string& file, const std::string& zname, const std::string& dot,
                const BuildOptions& options) {
  Workspace ws = Workspace::load(file);
  auto [form, z] = ws.zigzag(zname);
  Pyramid p = build_pyramid(*form, z, options);
  std::ofstream out(dot);
  if (!out) input_error("cannot write " + dot);
  out << to_dot(*form, p);
  auto problem = check_pyramid(*form, p);
  std::cout << "pyramid of height " << p.height() << " written to " << dot << "\n";
  if (problem) {
    std::cout << "FAIL " << *problem << "\n";
    return kFail;
  }
  std::cout << "PASS every diamond commutes\n";
  return kPass;
}

int cmd_verify(const std::string& file, const std::string& dname, const std::string& lemma) {
  Workspace ws = Workspace::load(file);
  LemmaReport r = verify_lemma(ws.diagram(dname), lemma);
  std::cout << r.to_text();
  return r.passed() ? kPass : kFail;
}

int cmd_snake(const std::string& file, const std::string& dname) {
  Workspace ws = Workspace::load(file);
  Diagram d = ws.diagram(dname);
  Construction c = snake(d);
  for (std::size_t i = 0; i < c.object_names.size(); ++i) {
    std::cout << c.object_names[i] << " ";
    if (!c.objects[i]) {
      std::cout << "undefined\n";
      continue;
    }
    if (auto s = std::dynamic_pointer_cast<const SlominskiForm>(d.form))
      std::cout << "order " << s->order(*c.objects[i]) << "\n";
    else
      std::cout << d.form->object_name(*c.objects[i]) << "\n";
  }
  std::cout << c.report.to_text();
  return c.report.passed() ? kPass : kFail;
}

int cmd_format(const std::string& file) {
  std::cout << serialize(parse_workspace_file(file));
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify noetherian-form workspaces"};
  app.require_subcommand(1);

  std::string file, name, sub, direction = "forward", dot, lemma, form_name;
  bool with6 = false, trace = false;
  BuildOptions build;

  auto* axioms = app.add_subcommand("check-axioms", "Run the axiom suite on every form in FILE");
  axioms->add_option("file", file)->required()->check(CLI::ExistingFile);
  axioms->add_flag("--with-axiom6", with6, "Also check Axiom 6");
  axioms->add_option("--form", form_name, "Only this form");

  auto* chase = app.add_subcommand("chase", "Chase a subobject along a zigzag");
  chase->add_option("file", file)->required()->check(CLI::ExistingFile);
  chase->add_option("zigzag", name)->required();
  chase->add_option("--subobject", sub)->required();
  chase->add_option("--direction", direction)->check(CLI::IsMember({"forward", "backward"}));
  chase->add_flag("--trace", trace, "Print the subobject at every node");

  auto* induce = app.add_subcommand("induce", "Decide whether a zigzag induces a morphism");
  induce->add_option("file", file)->required()->check(CLI::ExistingFile);
  induce->add_option("zigzag", name)->required();

  auto* pyramid = app.add_subcommand("pyramid", "Build the pyramid over a zigzag");
  pyramid->add_option("file", file)->required()->check(CLI::ExistingFile);
  pyramid->add_option("zigzag", name)->required();
  pyramid->add_option("--dot", dot, "DOT output file")->required();
  pyramid->add_flag("--right-to-left", build.right_to_left);
  pyramid->add_flag("--image-side-apex", build.image_side_apex);

  auto* verify = app.add_subcommand("verify", "Check a diagram against a lemma");
  verify->add_option("file", file)->required()->check(CLI::ExistingFile);
  verify->add_option("diagram", name)->required();
  verify->add_option("--lemma", lemma)->required();

  auto* snake = app.add_subcommand("snake", "Build the snake sequence of a diagram");
  snake->add_option("file", file)->required()->check(CLI::ExistingFile);
  snake->add_option("diagram", name)->required();

  auto* format = app.add_subcommand("format", "Print FILE in canonical form");
  format->add_option("file", file)->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  try {
    if (*axioms) return cmd_check_axioms(file, with6, form_name);
    if (*chase) return cmd_chase(file, name, sub, direction, trace);
    if (*induce) return cmd_induce(file, name);
    if (*pyramid) return cmd_pyramid(file, name, dot, build);
    if (*verify) return cmd_verify(file, name, lemma);
    if (*snake) return cmd_snake(file, name);
    if (*format) return cmd_format(file);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << " [" << to_string(e.kind()) << "]\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
