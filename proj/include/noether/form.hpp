#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "noether/errors.hpp"
#include "noether/lattice.hpp"

namespace noether {

using ObjectId = std::size_t;

struct Subobject {
  ObjectId owner = 0;
  SubIndex index = 0;

  auto operator<=>(const Subobject&) const = default;
};

/// A morphism seen through its image maps.
///
/// `table` optionally carries an element-level realization (Słomiński forms).
/// It always describes the morphism in its original orientation; `reversed`
/// records that this value is the opposite arrow in a dual form.
struct Morphism {
  ObjectId dom = 0;
  ObjectId cod = 0;
  std::vector<SubIndex> dimg;  // indexed by Sub(dom)
  std::vector<SubIndex> iimg;  // indexed by Sub(cod)
  std::vector<std::size_t> table;
  bool reversed = false;
  std::string label;

  Morphism opposite() const;
  bool has_table() const { return !table.empty() && !reversed; }
};

/// Extensional equality: endpoints and both image maps.
bool same_maps(const Morphism& a, const Morphism& b);

struct Factorization {
  Morphism e;  // projection part
  Morphism h;  // isomorphism
  Morphism m;  // embedding part
};

class Form {
 public:
  virtual ~Form() = default;

  virtual std::string name() const = 0;
  virtual std::size_t object_count() const = 0;
  virtual std::string object_name(ObjectId x) const = 0;
  virtual Lattice lattice(ObjectId x) const = 0;
  virtual Morphism identity(ObjectId x) const = 0;

  /// g after f. The default composes image maps (and tables when present).
  virtual Morphism compose(const Morphism& g, const Morphism& f) const;
  /// Inverse of an isomorphism. The default swaps the adjoint pair.
  virtual Morphism inverse(const Morphism& iso) const;

  virtual bool is_normal(Subobject s) const = 0;
  virtual bool is_conormal(Subobject s) const = 0;
  virtual std::optional<Morphism> embedding_of(Subobject s) const = 0;
  virtual std::optional<Morphism> projection_of(Subobject s) const = 0;

  /// All u with emb . u == f.
  virtual std::vector<Morphism> lifts(const Morphism& emb, const Morphism& f) const = 0;
  /// All v with v . proj == f.
  virtual std::vector<Morphism> descents(const Morphism& proj, const Morphism& f) const = 0;

  /// Projection of the kernel, then the unique arrows through the embedding
  /// of the image.
  virtual std::optional<Factorization> try_factorize(const Morphism& f) const;

  /// Declared morphisms, identities included; the axiom suite ranges over them.
  virtual std::vector<Morphism> morphisms() const = 0;

  /// False for objects a form materialized on demand; the axiom suite skips those.
  virtual bool is_declared_object(ObjectId) const { return true; }

  /// Equality used for commutativity checks; Słomiński forms also compare tables.
  virtual bool equal(const Morphism& a, const Morphism& b) const { return same_maps(a, b); }

  /// Non-null when this form is a dual view.
  virtual std::shared_ptr<const Form> dual_base() const { return nullptr; }

  std::string sub_name(Subobject s) const;
  std::string arrow_name(const Morphism& f) const;
};

using FormPtr = std::shared_ptr<const Form>;

// Lattice calculus on subobjects.
Subobject bottom(const Form& form, ObjectId x);
Subobject top(const Form& form, ObjectId x);
Subobject join(const Form& form, Subobject a, Subobject b);
Subobject meet(const Form& form, Subobject a, Subobject b);
bool leq(const Form& form, Subobject a, Subobject b);

Morphism compose(const Form& form, const Morphism& g, const Morphism& f);
Subobject direct_image(const Morphism& f, Subobject a);
Subobject inverse_image(const Morphism& f, Subobject b);
Subobject kernel(const Form& form, const Morphism& f);
Subobject image(const Form& form, const Morphism& f);

bool is_injective(const Form& form, const Morphism& f);
bool is_surjective(const Form& form, const Morphism& f);
bool is_isomorphism(const Form& form, const Morphism& f);
bool is_zero(const Form& form, const Morphism& f);

/// Throw unsupported_subobject when the form has no such morphism.
Morphism embedding_of(const Form& form, Subobject s);
Morphism projection_of(const Form& form, Subobject s);
/// Throws unsupported_form when Axioms 3-4 cannot be realized for f.
Factorization factorize(const Form& form, const Morphism& f);

struct RmlCheck {
  bool holds = true;
  bool hypotheses_met = false;
};

RmlCheck restricted_modular_law_check(const Form& form, Subobject x, Subobject y,
                                      Subobject z);

/// B is normal relative to A: B <= A, A conormal, and the pullback of B
/// along the embedding of A is normal.
bool is_relatively_normal(const Form& form, Subobject b, Subobject a);

/// Lazy dual view. Dualizing a dual view returns its base.
FormPtr dualize(const FormPtr& form);

}  // namespace noether
