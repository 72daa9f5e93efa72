#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "noether/zigzag.hpp"

namespace noether {

struct PyramidArrow {
  Morphism morphism;
  bool up = true;  // up: dom is the lower node and the arrow is a projection
};

/// Triangular grid X_i^j, 0 <= i <= j <= n, over a zigzag of length n.
/// Node (i,j) sits at layer j - i; its upper neighbours are (i-1,j) and (i,j+1).
class Pyramid {
 public:
  explicit Pyramid(Zigzag base);

  const Zigzag& base() const { return base_; }
  std::size_t height() const { return n_; }

  ObjectId node(std::size_t i, std::size_t j) const { return nodes_.at(slot(i, j)); }
  /// Between (i,j) and (i,j+1).
  const PyramidArrow& ne(std::size_t i, std::size_t j) const;
  /// Between (i,j) and (i-1,j).
  const PyramidArrow& nw(std::size_t i, std::size_t j) const;

  /// Up the left side, then down the right side.
  Zigzag principal_horizontal() const;
  /// X_0^0 up to X_0^n.
  Zigzag principal_vertical_left() const;
  /// X_n^n up to X_0^n.
  Zigzag principal_vertical_right() const;

  // Construction access.
  void set_node(std::size_t i, std::size_t j, ObjectId x) { nodes_.at(slot(i, j)) = x; }
  void set_ne(std::size_t i, std::size_t j, PyramidArrow a) { ne_.at(slot(i, j)) = std::move(a); }
  void set_nw(std::size_t i, std::size_t j, PyramidArrow a) { nw_.at(slot(i, j)) = std::move(a); }

 private:
  std::size_t slot(std::size_t i, std::size_t j) const;
  static Edge step(const PyramidArrow& a, bool from_lower);

  Zigzag base_;
  std::size_t n_;
  std::vector<ObjectId> nodes_;
  std::vector<PyramidArrow> ne_, nw_;
};

struct BuildOptions {
  /// Visit each layer's diamonds right to left.
  bool right_to_left = false;
  /// In factorizations use the image object as apex instead of the quotient.
  bool image_side_apex = false;
};

/// Throws unsupported_form naming the subobject when an embedding, projection
/// or universal arrow is missing.
Pyramid build_pyramid(const Form& form, const Zigzag& z, const BuildOptions& options = {});

/// Empty when every diamond commutes under exhaustive chasing and arrows have
/// the right kind; otherwise a description of the first failure.
std::optional<std::string> check_pyramid(const Form& form, const Pyramid& p);

std::string to_dot(const Form& form, const Pyramid& p);

struct InductionVerdict {
  bool induces = false;
  std::optional<Morphism> morphism;
  // Failure witness.
  std::string failed_condition;  // "forward-bottom" or "backward-top"
  std::size_t node = 0;          // first node index (in the chase order) leaving the bound
  std::optional<Subobject> offending;
  std::string witness;
};

/// Forward chase of bottom must give bottom and backward chase of top must
/// give top. On Słomiński forms the induced relation is attached as an
/// element table when it is a function.
InductionVerdict decide_induction(const Form& form, const Zigzag& z);

struct IsoVerdict {
  bool iso = false;
  // forward bottom, forward top, backward bottom, backward top
  std::array<bool, 4> chases{};
  std::optional<Morphism> forward;
  std::optional<Morphism> backward;
  bool mutually_inverse = false;
};

IsoVerdict decide_isomorphism(const Form& form, const Zigzag& z);

struct QuotientIsoResult {
  bool w_normal_in_x = false;
  bool fw_normal_in_fx = false;
  std::optional<Zigzag> zigzag;
  std::optional<IsoVerdict> verdict;

  /// Relative normality matches on both sides and, when defined, the zigzag
  /// induces an isomorphism.
  bool holds() const {
    return w_normal_in_x == fw_normal_in_fx &&
           (!w_normal_in_x || (verdict && verdict->iso && verdict->mutually_inverse));
  }
};

/// Requires Ker f <= W <= X with X conormal.
QuotientIsoResult quotient_iso(const Form& form, const Morphism& f, Subobject w, Subobject x);

}  // namespace noether
