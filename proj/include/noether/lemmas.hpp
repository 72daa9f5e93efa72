#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "noether/diagram.hpp"
#include "noether/pyramid.hpp"

namespace noether {

struct ArrowRole {
  std::string name, dom, cod;
};

// Shape schema plus the hypotheses and conclusions of one lemma statement.
struct LemmaTemplate {
  std::string name;
  std::vector<std::string> objects;
  std::vector<ArrowRole> arrows;
  std::vector<Assertion> hypotheses;
  std::vector<Assertion> conclusions;
};

const std::vector<LemmaTemplate>& lemma_templates();
const LemmaTemplate& lemma_template(const std::string& name);

// Template-based lemmas plus the constructive ones (snake, generalized-snail, goursat, salamander).
std::vector<std::string> lemma_names();

// Throws shape_mismatch naming the first missing or misplaced role.
void validate_shape(const Diagram& d, const LemmaTemplate& t);

// Checks the template's hypotheses followed by any extra ones declared on the diagram.
LemmaReport verify_lemma(const Diagram& d, const std::string& name);

inline LemmaReport verify_four(const Diagram& d, const std::string& part) {
  return verify_lemma(d, part.empty() ? "four" : "four-" + part);
}
inline LemmaReport verify_five(const Diagram& d, const std::string& part) {
  return verify_lemma(d, part.empty() ? "five" : "five-" + part);
}
inline LemmaReport verify_3x3(const Diagram& d, const std::string& variant) {
  return verify_lemma(d, "3x3-" + variant);
}
inline LemmaReport verify_exercise(const Diagram& d, const std::string& name) {
  return verify_lemma(d, name);
}

// Role renaming that turns the dual of a four-lemma diagram back into four-lemma shape.
const std::map<std::string, std::string>& four_dual_roles();

// A constructed sequence of objects and connecting maps, with its report.
struct Construction {
  LemmaReport report;
  std::vector<std::string> object_names;
  std::vector<std::optional<ObjectId>> objects;
  std::vector<std::string> map_names;
  std::vector<std::optional<Morphism>> maps;
};

Construction snake(const Diagram& d);
Construction generalized_snail(const Diagram& d);
Construction goursat(const Diagram& d);
Construction salamander(const Diagram& d);

struct HomologyObject {
  bool defined = false;
  std::string guard;  // "lower normal in upper"
  Subobject upper, lower;
  std::optional<Morphism> embedding;   // U -> X for the upper subobject
  std::optional<Morphism> projection;  // U -> U/lower
  std::optional<ObjectId> object;
};

// upper/lower as a subquotient of one object; undefined (not an error) when lower is not
// relatively normal in upper.
HomologyObject homology_object(const Form& form, Subobject upper, Subobject lower);

// (meet of kernels of outgoing) / (join of images of incoming) at object x.
HomologyObject homology_object(const Form& form, ObjectId x, const std::vector<Morphism>& incoming,
                               const std::vector<Morphism>& outgoing);

// Roles Z0 -o-> A -f-> B -g-> C -t-> Z1 with trivial end objects.
bool strongly_short_exact_check(const Diagram& d);
LemmaReport strongly_short_exact_report(const Diagram& d);

}  // namespace noether
