#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace noether {

using SubIndex = std::size_t;
inline constexpr SubIndex kNoSub = static_cast<SubIndex>(-1);

/// Finite poset of subobjects with precomputed bounds.
///
/// A Lattice is a cheap handle onto shared, immutable data. The dual view
/// shares that data and reads the order backwards, so join and meet trade
/// places along with bottom and top.
class Lattice {
 public:
  struct Data {
    std::size_t size = 0;
    std::vector<std::uint8_t> leq;  // row-major, leq[a * size + b] is a <= b
    std::vector<SubIndex> join;     // kNoSub when no least upper bound exists
    std::vector<SubIndex> meet;
    SubIndex bottom = kNoSub;
    SubIndex top = kNoSub;
    std::vector<std::string> keys;
  };

  Lattice() = default;
  explicit Lattice(std::shared_ptr<const Data> data, bool dual = false)
      : data_(std::move(data)), dual_(dual) {}

  /// Reflexive-transitive closure of `generators` over the given keys.
  static Lattice from_relation(
      std::vector<std::string> keys,
      const std::vector<std::pair<SubIndex, SubIndex>>& generators);

  /// Builds from a complete order predicate.
  static Lattice from_order(std::vector<std::string> keys,
                            const std::function<bool(SubIndex, SubIndex)>& leq);

  std::size_t size() const { return data_ ? data_->size : 0; }
  bool leq(SubIndex a, SubIndex b) const;
  bool lt(SubIndex a, SubIndex b) const { return a != b && leq(a, b); }

  /// Throw Error(not_a_lattice) when the bound does not exist.
  SubIndex join(SubIndex a, SubIndex b) const;
  SubIndex meet(SubIndex a, SubIndex b) const;
  SubIndex bottom() const;
  SubIndex top() const;

  /// kNoSub instead of throwing.
  SubIndex try_join(SubIndex a, SubIndex b) const;
  SubIndex try_meet(SubIndex a, SubIndex b) const;
  SubIndex try_bottom() const { return data_ ? (dual_ ? data_->top : data_->bottom) : kNoSub; }
  SubIndex try_top() const { return data_ ? (dual_ ? data_->bottom : data_->top) : kNoSub; }

  const std::string& key(SubIndex a) const { return data_->keys.at(a); }
  /// Accepts stored keys as well as the aliases "bot" and "top".
  std::optional<SubIndex> find(std::string_view key) const;

  bool is_dual() const { return dual_; }
  Lattice dual() const { return Lattice(data_, !dual_); }
  const std::shared_ptr<const Data>& data() const { return data_; }

  bool same_data(const Lattice& other) const {
    return data_ == other.data_ && dual_ == other.dual_;
  }

 private:
  std::shared_ptr<const Data> data_;
  bool dual_ = false;
};

}  // namespace noether
