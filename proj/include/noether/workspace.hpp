#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "noether/diagram.hpp"
#include "noether/finite_form.hpp"
#include "noether/slominski.hpp"
#include "noether/zigzag.hpp"

namespace noether {

struct Location {
  std::string file;
  std::size_t line = 0;
  std::size_t column = 0;
  std::string text() const;
};

struct FormObjectDecl {
  std::string name;
  std::vector<std::string> keys;
  std::vector<std::pair<std::string, std::string>> order;  // lower <= upper
  bool operator==(const FormObjectDecl&) const = default;
};

struct FormMorphismDecl {
  std::string name, dom, cod;
  std::vector<std::pair<std::string, std::string>> dimg, iimg;
  bool operator==(const FormMorphismDecl&) const = default;
};

struct FormDecl {
  std::string name;
  std::vector<FormObjectDecl> objects;
  std::vector<FormMorphismDecl> morphisms;
  bool operator==(const FormDecl&) const = default;
};

// Either a group given by its Cayley table (`p` holds the table, `zero` the identity)
// or a Słomiński algebra given by its p and d tables.
struct AlgebraDecl {
  std::string name;
  bool group = false;
  std::size_t size = 0;
  Element zero = 0;
  std::vector<Element> p, d;
  bool operator==(const AlgebraDecl&) const = default;
};

struct HomDecl {
  std::string name, dom, cod;
  std::vector<Element> map;
  bool operator==(const HomDecl&) const = default;
};

struct ZigzagDecl {
  std::string name, over;  // `over` may be empty
  std::vector<std::string> nodes;
  std::vector<std::pair<std::string, Direction>> edges;
  bool operator==(const ZigzagDecl&) const = default;
};

struct DiagramDecl {
  std::string name, over;
  std::vector<std::pair<std::string, std::string>> uses;      // entity, role
  std::vector<std::pair<std::string, std::string>> commutes;  // dot paths
  std::vector<std::vector<std::string>> asserts;              // tokens after "assert"
  bool operator==(const DiagramDecl&) const = default;
};

struct WorkspaceText {
  std::string slominski_name = "slominski";
  std::vector<FormDecl> forms;
  std::vector<AlgebraDecl> algebras;
  std::vector<HomDecl> homs;
  std::vector<ZigzagDecl> zigzags;
  std::vector<DiagramDecl> diagrams;
  bool operator==(const WorkspaceText&) const = default;
};

// Line-oriented parser; `include <path>` is resolved relative to the including file.
// Errors carry file:line:column and have kind parse.
WorkspaceText parse_workspace(std::istream& in, const std::string& source = "<input>");
WorkspaceText parse_workspace_file(const std::string& path);
WorkspaceText parse_workspace_string(const std::string& text);

// Canonical text; parsing it yields an equal WorkspaceText.
std::string serialize(const WorkspaceText& w);

// Resolved workspace: forms built, every cross-reference checked.
class Workspace {
 public:
  explicit Workspace(WorkspaceText text, std::map<std::string, Location> locations = {});
  static Workspace load(const std::string& path);
  static Workspace from_string(const std::string& text);

  const WorkspaceText& text() const { return text_; }
  std::vector<std::string> form_names() const;
  FormPtr form(const std::string& name) const;
  std::shared_ptr<const SlominskiForm> slominski() const { return slominski_; }
  /// Declares every composite of the declared homs.
  void close_slominski(std::size_t limit = 4096) { slominski_->close_under_composition(limit); }

  std::pair<FormPtr, Zigzag> zigzag(const std::string& name) const;
  Diagram diagram(const std::string& name) const;

 private:
  FormPtr owner_of(const ZigzagDecl& z) const;
  Error error_at(const std::string& key, const std::string& message) const;

  WorkspaceText text_;
  std::map<std::string, Location> locations_;  // "kind name" -> declaration site
  std::map<std::string, std::shared_ptr<FiniteForm>> finite_;
  std::shared_ptr<SlominskiForm> slominski_;
};

}  // namespace noether
