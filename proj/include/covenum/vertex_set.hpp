#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <ostream>
#include <string>
#include <vector>

namespace covenum {

// Vertex subset in canonical form: ids sorted ascending, no duplicates.
// Equality, ordering and hashing all work on the canonical form, so two
// sets built in different orders compare equal.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<int> ids) : ids_(ids) { normalize(); }
  explicit VertexSet(std::vector<int> ids) : ids_(std::move(ids)) { normalize(); }

  static VertexSet range(int n) {
    VertexSet s;
    s.ids_.resize(n > 0 ? static_cast<size_t>(n) : 0);
    for (int v = 0; v < n; ++v) s.ids_[static_cast<size_t>(v)] = v;
    return s;
  }

  bool contains(int v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
  }

  void insert(int v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) ids_.insert(it, v);
  }

  void erase(int v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it != ids_.end() && *it == v) ids_.erase(it);
  }

  VertexSet with(int v) const {
    VertexSet s = *this;
    s.insert(v);
    return s;
  }

  VertexSet without(int v) const {
    VertexSet s = *this;
    s.erase(v);
    return s;
  }

  VertexSet unite(const VertexSet& other) const {
    VertexSet s;
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(),
                   other.ids_.end(), std::back_inserter(s.ids_));
    return s;
  }

  VertexSet minus(const VertexSet& other) const {
    VertexSet s;
    std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(),
                        other.ids_.end(), std::back_inserter(s.ids_));
    return s;
  }

  VertexSet intersect(const VertexSet& other) const {
    VertexSet s;
    std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(),
                          other.ids_.end(), std::back_inserter(s.ids_));
    return s;
  }

  bool subset_of(const VertexSet& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(),
                         ids_.end());
  }

  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  const std::vector<int>& ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  bool operator==(const VertexSet& other) const { return ids_ == other.ids_; }
  bool operator!=(const VertexSet& other) const { return ids_ != other.ids_; }
  bool operator<(const VertexSet& other) const { return ids_ < other.ids_; }

  std::string str() const {
    std::string s = "{";
    for (size_t i = 0; i < ids_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(ids_[i]);
    }
    s += "}";
    return s;
  }

 private:
  void normalize() {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  std::vector<int> ids_;
};

struct VertexSetHash {
  size_t operator()(const VertexSet& s) const {
    // FNV-1a over the canonical id sequence
    size_t h = 14695981039346656037ull;
    for (int v : s.ids()) {
      h ^= static_cast<size_t>(v) + 1;
      h *= 1099511628211ull;
    }
    return h;
  }
};

inline std::ostream& operator<<(std::ostream& out, const VertexSet& s) {
  return out << s.str();
}

// Sorts a family of sets by (size, lexicographic) for deterministic output
// and comparisons.
inline void sort_family(std::vector<VertexSet>& family) {
  std::sort(family.begin(), family.end(),
            [](const VertexSet& a, const VertexSet& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
}

}  // namespace covenum
