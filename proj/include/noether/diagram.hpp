#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "noether/form.hpp"

namespace noether {

/// Arrow roles composed right to left: {"a", "b"} is a after b, written "a.b".
using Path = std::vector<std::string>;

Path parse_path(const std::string& text);
std::string path_text(const Path& p);

/// Subobject-valued expression over a diagram's roles.
struct SubExpr;
using SubExprPtr = std::shared_ptr<const SubExpr>;

struct SubExpr {
  enum class Kind { ker, im, top, bottom, dimg, iimg, join, meet };
  Kind kind;
  Path path;          // ker, im, dimg, iimg
  std::string object; // top, bottom
  std::vector<SubExprPtr> args;

  std::string text() const;
};

SubExprPtr ker(const std::string& path);
SubExprPtr im(const std::string& path);
SubExprPtr top_of(const std::string& object);
SubExprPtr bottom_of(const std::string& object);
SubExprPtr dimg(const std::string& path, SubExprPtr arg);
SubExprPtr iimg(const std::string& path, SubExprPtr arg);
SubExprPtr join(SubExprPtr a, SubExprPtr b);
SubExprPtr meet(SubExprPtr a, SubExprPtr b);

struct Assertion {
  enum class Kind {
    commute,
    exact,
    short_exact,
    injective,
    surjective,
    iso,
    zero,
    sub_eq,
    sub_leq,
    normal,
    conormal,
    normal_in,  // a relatively normal in b
  };
  Kind kind;
  Path lhs, rhs;
  SubExprPtr a, b;

  std::string text() const;
};

Assertion commute(const std::string& lhs, const std::string& rhs);
Assertion exact(const std::string& f, const std::string& g);
Assertion short_exact(const std::string& f, const std::string& g);
Assertion injective(const std::string& f);
Assertion surjective(const std::string& f);
Assertion iso(const std::string& f);
Assertion zero(const std::string& path);
Assertion sub_eq(SubExprPtr a, SubExprPtr b);
Assertion sub_leq(SubExprPtr a, SubExprPtr b);
Assertion normal(SubExprPtr a);
Assertion conormal(SubExprPtr a);
Assertion normal_in(SubExprPtr lower, SubExprPtr upper);

struct Diagram {
  std::string name;
  FormPtr form;
  std::map<std::string, ObjectId> objects;
  std::map<std::string, Morphism> arrows;
  std::vector<Assertion> hypotheses;

  /// Throws shape_mismatch for unknown roles.
  ObjectId object(const std::string& role) const;
  const Morphism& arrow(const std::string& role) const;
  Morphism path(const Path& p) const;
  Subobject eval(const SubExpr& e) const;
};

struct CheckLine {
  enum class Status { pass, fail, skip };
  Status status = Status::skip;
  std::string name;
  std::string witness;
  std::vector<Subobject> values;

  std::string text() const;
};

struct LemmaReport {
  std::string lemma;
  std::vector<CheckLine> hypotheses;
  std::vector<CheckLine> conclusions;
  std::string witness;

  bool hypotheses_hold() const;
  bool conclusions_hold() const;
  bool passed() const { return hypotheses_hold() && conclusions_hold(); }
  /// Hypotheses hold yet a conclusion fails.
  bool refuted() const { return hypotheses_hold() && !conclusions_hold(); }
  std::string to_text() const;
};

bool is_exact_at(const Form& form, const Morphism& f, const Morphism& g);
bool is_short_exact(const Form& form, const Morphism& f, const Morphism& g);

CheckLine check(const Diagram& d, const Assertion& a);

/// Checks the diagram's hypotheses, then the conclusions when they all hold.
LemmaReport verify_generic(const Diagram& d, const std::vector<Assertion>& conclusions,
                           const std::string& lemma = "generic");

/// Same roles over the dual form: arrows reversed and every assertion dualized.
Diagram dualize(const Diagram& d);
Assertion dualize(const Assertion& a);
SubExprPtr dualize(const SubExprPtr& e);

/// Renames object and arrow roles; unmapped roles keep their names.
Diagram rename_roles(const Diagram& d, const std::map<std::string, std::string>& names);

}  // namespace noether
