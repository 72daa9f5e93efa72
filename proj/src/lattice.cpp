#include "noether/lattice.hpp"

#include "noether/errors.hpp"

namespace noether {

namespace {

void fill_bounds(Lattice::Data& d) {
  const std::size_t n = d.size;
  auto le = [&](SubIndex a, SubIndex b) { return d.leq[a * n + b] != 0; };
  for (SubIndex c = 0; c < n; ++c) {
    bool least = true, greatest = true;
    for (SubIndex x = 0; x < n; ++x) {
      least = least && le(c, x);
      greatest = greatest && le(x, c);
    }
    if (least && d.bottom == kNoSub) d.bottom = c;
    if (greatest && d.top == kNoSub) d.top = c;
  }
  d.join.assign(n * n, kNoSub);
  d.meet.assign(n * n, kNoSub);
  std::vector<SubIndex> bounds;
  for (SubIndex a = 0; a < n; ++a) {
    for (SubIndex b = a; b < n; ++b) {
      bounds.clear();
      for (SubIndex c = 0; c < n; ++c)
        if (le(a, c) && le(b, c)) bounds.push_back(c);
      for (SubIndex c : bounds) {
        bool least = true;
        for (SubIndex u : bounds) least = least && le(c, u);
        if (least) {
          d.join[a * n + b] = d.join[b * n + a] = c;
          break;
        }
      }
      bounds.clear();
      for (SubIndex c = 0; c < n; ++c)
        if (le(c, a) && le(c, b)) bounds.push_back(c);
      for (SubIndex c : bounds) {
        bool greatest = true;
        for (SubIndex u : bounds) greatest = greatest && le(u, c);
        if (greatest) {
          d.meet[a * n + b] = d.meet[b * n + a] = c;
          break;
        }
      }
    }
  }
}

}  // namespace

Lattice Lattice::from_relation(
    std::vector<std::string> keys,
    const std::vector<std::pair<SubIndex, SubIndex>>& generators) {
  auto data = std::make_shared<Data>();
  const std::size_t n = keys.size();
  data->size = n;
  data->keys = std::move(keys);
  data->leq.assign(n * n, 0);
  for (SubIndex a = 0; a < n; ++a) data->leq[a * n + a] = 1;
  for (auto [a, b] : generators) {
    if (a >= n || b >= n)
      throw Error(ErrorKind::validation, "order relation refers to an unknown subobject");
    data->leq[a * n + b] = 1;
  }
  // Warshall
  for (SubIndex k = 0; k < n; ++k)
    for (SubIndex i = 0; i < n; ++i)
      if (data->leq[i * n + k])
        for (SubIndex j = 0; j < n; ++j)
          if (data->leq[k * n + j]) data->leq[i * n + j] = 1;
  fill_bounds(*data);
  return Lattice(std::move(data));
}

Lattice Lattice::from_order(std::vector<std::string> keys,
                            const std::function<bool(SubIndex, SubIndex)>& leq) {
  auto data = std::make_shared<Data>();
  const std::size_t n = keys.size();
  data->size = n;
  data->keys = std::move(keys);
  data->leq.assign(n * n, 0);
  for (SubIndex a = 0; a < n; ++a)
    for (SubIndex b = 0; b < n; ++b) data->leq[a * n + b] = leq(a, b) ? 1 : 0;
  fill_bounds(*data);
  return Lattice(std::move(data));
}

bool Lattice::leq(SubIndex a, SubIndex b) const {
  const std::size_t n = size();
  if (a >= n || b >= n) throw Error(ErrorKind::ownership, "subobject index out of range");
  return dual_ ? data_->leq[b * n + a] != 0 : data_->leq[a * n + b] != 0;
}

SubIndex Lattice::try_join(SubIndex a, SubIndex b) const {
  const std::size_t n = size();
  if (a >= n || b >= n) throw Error(ErrorKind::ownership, "subobject index out of range");
  return dual_ ? data_->meet[a * n + b] : data_->join[a * n + b];
}

SubIndex Lattice::try_meet(SubIndex a, SubIndex b) const {
  const std::size_t n = size();
  if (a >= n || b >= n) throw Error(ErrorKind::ownership, "subobject index out of range");
  return dual_ ? data_->join[a * n + b] : data_->meet[a * n + b];
}

SubIndex Lattice::join(SubIndex a, SubIndex b) const {
  SubIndex r = try_join(a, b);
  if (r == kNoSub)
    throw Error(ErrorKind::not_a_lattice, "no join of " + key(a) + " and " + key(b));
  return r;
}

SubIndex Lattice::meet(SubIndex a, SubIndex b) const {
  SubIndex r = try_meet(a, b);
  if (r == kNoSub)
    throw Error(ErrorKind::not_a_lattice, "no meet of " + key(a) + " and " + key(b));
  return r;
}

SubIndex Lattice::bottom() const {
  SubIndex r = try_bottom();
  if (r == kNoSub) throw Error(ErrorKind::not_a_lattice, "no least subobject");
  return r;
}

SubIndex Lattice::top() const {
  SubIndex r = try_top();
  if (r == kNoSub) throw Error(ErrorKind::not_a_lattice, "no greatest subobject");
  return r;
}

std::optional<SubIndex> Lattice::find(std::string_view key) const {
  if (!data_) return std::nullopt;
  for (SubIndex i = 0; i < data_->size; ++i)
    if (data_->keys[i] == key) return i;
  if (key == "bot" && try_bottom() != kNoSub) return try_bottom();
  if (key == "top" && try_top() != kNoSub) return try_top();
  return std::nullopt;
}

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::composition: return "composition error";
    case ErrorKind::ownership: return "ownership mismatch";
    case ErrorKind::unsupported_subobject: return "unsupported subobject";
    case ErrorKind::unsupported_form: return "unsupported form";
    case ErrorKind::not_collapsible: return "not collapsible";
    case ErrorKind::not_a_lattice: return "not a lattice";
    case ErrorKind::validation: return "validation error";
    case ErrorKind::shape_mismatch: return "shape mismatch";
    case ErrorKind::parse: return "parse error";
  }
  return "error";
}

}  // namespace noether
