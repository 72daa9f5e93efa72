#pragma once

#include <map>
#include <string>
#include <vector>

#include "noether/form.hpp"

namespace noether {

/// A form given by explicit data: subobject posets and image maps.
///
/// Normality, conormality and the universal arrows are found by searching the
/// declared morphisms, so the declaration should be closed under composition.
class FiniteForm final : public Form {
 public:
  explicit FiniteForm(std::string name) : name_(std::move(name)) {}

  ObjectId add_object(std::string name, Lattice lattice);
  /// Identical image maps between the same endpoints are stored once.
  const Morphism& add_morphism(Morphism m);
  /// Adds identity morphisms for objects that lack one.
  void add_missing_identities();

  std::optional<ObjectId> find_object(const std::string& name) const;
  std::optional<Morphism> find_morphism(const std::string& label) const;

  std::string name() const override { return name_; }
  std::size_t object_count() const override { return objects_.size(); }
  std::string object_name(ObjectId x) const override { return objects_.at(x).name; }
  Lattice lattice(ObjectId x) const override { return objects_.at(x).lattice; }
  Morphism identity(ObjectId x) const override;
  Morphism compose(const Morphism& g, const Morphism& f) const override;

  bool is_normal(Subobject s) const override;
  bool is_conormal(Subobject s) const override;
  std::optional<Morphism> embedding_of(Subobject s) const override;
  std::optional<Morphism> projection_of(Subobject s) const override;
  std::vector<Morphism> lifts(const Morphism& emb, const Morphism& f) const override;
  std::vector<Morphism> descents(const Morphism& proj, const Morphism& f) const override;
  std::vector<Morphism> morphisms() const override { return morphisms_; }

 private:
  struct Object {
    std::string name;
    Lattice lattice;
  };

  const Morphism* declared(const Morphism& m) const;

  std::string name_;
  std::vector<Object> objects_;
  std::vector<Morphism> morphisms_;
  std::map<std::string, std::size_t> aliases_;
};

}  // namespace noether
