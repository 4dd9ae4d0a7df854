#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace tropical {

// Strictly increasing subset of [0, universe).
class IndexSet {
 public:
  IndexSet() = default;

  // Sorts the input; throws kIndexOutOfRange if an index >= universe and
  // kInvalidArgument on duplicates.
  IndexSet(std::vector<std::size_t> indices, std::size_t universe);
  IndexSet(std::initializer_list<std::size_t> indices, std::size_t universe)
      : IndexSet(std::vector<std::size_t>(indices), universe) {}

  static IndexSet full(std::size_t universe);
  // Builds from 1-based indices, as they appear in external formats.
  static IndexSet from_one_based(const std::vector<std::size_t>& indices,
                                 std::size_t universe);

  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  std::size_t universe() const { return universe_; }
  std::size_t operator[](std::size_t pos) const { return indices_[pos]; }
  const std::vector<std::size_t>& indices() const { return indices_; }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

  bool contains(std::size_t index) const;
  // Position of `index` within the set, if present.
  std::optional<std::size_t> position_of(std::size_t index) const;

  IndexSet complement() const;
  // Selects positions of this set: result[r] = (*this)[positions[r]].
  IndexSet compose(const IndexSet& positions) const;
  IndexSet set_union(const IndexSet& other) const;
  IndexSet set_intersection(const IndexSet& other) const;
  IndexSet set_difference(const IndexSet& other) const;

  std::vector<std::size_t> to_one_based() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::size_t> indices_;
  std::size_t universe_ = 0;
};

}  // namespace tropical
