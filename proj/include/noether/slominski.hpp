#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "noether/form.hpp"

namespace noether {

using Element = std::size_t;
using Mask = std::uint64_t;
inline constexpr std::size_t kMaxCarrier = 64;

/// Finite algebra with binary p, d and constant zero satisfying
/// d(x,x) = 0 and p(d(x,y),y) = x.
class SlominskiAlgebra {
 public:
  SlominskiAlgebra() = default;
  /// Tables are row-major n*n. Throws validation errors.
  static SlominskiAlgebra make(std::size_t n, Element zero, std::vector<Element> p,
                               std::vector<Element> d);

  std::size_t size() const { return n_; }
  Element zero() const { return zero_; }
  Element p(Element x, Element y) const { return p_[x * n_ + y]; }
  Element d(Element x, Element y) const { return d_[x * n_ + y]; }
  const std::vector<Element>& p_table() const { return p_; }
  const std::vector<Element>& d_table() const { return d_; }
  Mask full() const { return n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1; }

  bool operator==(const SlominskiAlgebra&) const = default;

 private:
  std::size_t n_ = 0;
  Element zero_ = 0;
  std::vector<Element> p_, d_;
};

using CayleyTable = std::vector<std::vector<Element>>;

/// Empty string when `table` is a group table, otherwise the reason.
std::string group_table_problem(const CayleyTable& table);
SlominskiAlgebra from_group(const CayleyTable& cayley, const std::vector<Element>& inverse,
                            Element identity);
/// Identity and inverses read off the table.
SlominskiAlgebra from_group(const CayleyTable& cayley);

CayleyTable cyclic_group(std::size_t n);
/// Elements a^i b^j at index i + n*j, so order 4 gives e, a, a2, a3, b, ab, a2b, a3b.
CayleyTable dihedral_group(std::size_t n);
CayleyTable quaternion_group();
/// Pair (x, y) at index x * |b| + y.
CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b);

struct NamedGroup {
  std::string name;
  CayleyTable table;
};

/// One representative of each isomorphism class of groups of order at most 8.
std::vector<NamedGroup> small_groups();

inline bool contains(Mask m, Element x) { return (m >> x) & 1u; }
inline Mask singleton(Element x) { return Mask{1} << x; }
std::string mask_key(Mask m);
std::vector<Element> elements(Mask m);

Mask generated_subalgebra(const SlominskiAlgebra& a, Mask seed);
bool is_subalgebra(const SlominskiAlgebra& a, Mask m);
/// All subalgebras ordered by size, then by mask value.
std::vector<Mask> subalgebras(const SlominskiAlgebra& a);

struct Congruence {
  std::vector<Element> rep;  // least element of each class

  Mask class_of(Element x) const;
  std::vector<std::vector<Element>> classes() const;
};

Congruence generate_congruence(const SlominskiAlgebra& a,
                               const std::vector<std::pair<Element, Element>>& pairs);
bool is_normal_subalgebra(const SlominskiAlgebra& a, Mask b);

struct Quotient {
  SlominskiAlgebra algebra;
  std::vector<Element> projection;
};

/// Throws unsupported_subobject unless `b` is a normal subalgebra.
Quotient quotient(const SlominskiAlgebra& a, Mask b);

bool is_hom(const SlominskiAlgebra& a, const SlominskiAlgebra& b,
            const std::vector<Element>& table);
/// Lexicographic order over the carrier of `a`.
std::vector<std::vector<Element>> enumerate_homs(const SlominskiAlgebra& a,
                                                 const SlominskiAlgebra& b);

/// The form of Słomiński algebras and their homomorphisms.
///
/// Declared algebras and homs are what the axiom suite ranges over. Embeddings
/// of subalgebras and projections onto quotients are materialized on demand
/// and memoized, so repeated requests return the same object.
class SlominskiForm final : public Form {
 public:
  explicit SlominskiForm(std::string name = "slominski") : name_(std::move(name)) {}

  ObjectId add_algebra(std::string name, SlominskiAlgebra algebra);
  /// Validates and computes image maps; does not declare.
  Morphism hom(ObjectId dom, ObjectId cod, std::vector<Element> table,
               std::string label = {}) const;
  /// Equal homs are stored once; a second label becomes an alias.
  const Morphism& declare(Morphism m);
  /// Declares composites until closed; throws once more than `limit` are declared.
  void close_under_composition(std::size_t limit = 4096);

  const SlominskiAlgebra& algebra(ObjectId x) const;
  Mask mask(Subobject s) const;
  Subobject subobject(ObjectId x, Mask m) const;
  std::optional<ObjectId> find_object(const std::string& name) const;
  std::optional<Morphism> find_morphism(const std::string& label) const;
  std::size_t order(ObjectId x) const { return algebra(x).size(); }
  bool is_declared_object(ObjectId x) const override;

  std::string name() const override { return name_; }
  std::size_t object_count() const override;
  std::string object_name(ObjectId x) const override;
  Lattice lattice(ObjectId x) const override;
  Morphism identity(ObjectId x) const override;
  Morphism compose(const Morphism& g, const Morphism& f) const override;

  bool is_normal(Subobject s) const override;
  bool is_conormal(Subobject s) const override;
  std::optional<Morphism> embedding_of(Subobject s) const override;
  std::optional<Morphism> projection_of(Subobject s) const override;
  std::vector<Morphism> lifts(const Morphism& emb, const Morphism& f) const override;
  std::vector<Morphism> descents(const Morphism& proj, const Morphism& f) const override;
  std::vector<Morphism> morphisms() const override;
  bool equal(const Morphism& a, const Morphism& b) const override;

  /// Attaches image maps to an element table already known to be a hom.
  void fill_maps(Morphism& m) const;

 private:
  struct Entry {
    std::string name;
    SlominskiAlgebra algebra;
    std::vector<Mask> subs;
    std::unordered_map<Mask, SubIndex> index;
    Lattice lattice;
    bool declared = false;
  };

  const Entry& entry(ObjectId x) const;
  ObjectId add_entry(std::string name, SlominskiAlgebra algebra, bool declared) const;
  std::vector<Element> require_table(const Morphism& m) const;

  std::string name_;
  mutable std::recursive_mutex mu_;
  mutable std::deque<Entry> entries_;
  std::vector<Morphism> declared_;
  std::map<std::string, std::size_t> aliases_;
  mutable std::map<std::pair<ObjectId, SubIndex>, Morphism> embeddings_, projections_;
  mutable std::map<std::pair<ObjectId, SubIndex>, bool> normal_;
};

struct HomSpec {
  std::string label;
  std::size_t dom = 0;  // index into the algebra list
  std::size_t cod = 0;
  std::vector<Element> table;
};

/// Throws validation errors naming the offending pair when `homs` together
/// with identities is not closed under composition.
std::shared_ptr<SlominskiForm> as_form(
    const std::vector<std::pair<std::string, SlominskiAlgebra>>& algebras,
    const std::vector<HomSpec>& homs, std::string name = "slominski");

}  // namespace noether
