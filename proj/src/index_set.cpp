#include "tropical/index_set.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "tropical/error.hpp"

namespace tropical {

IndexSet::IndexSet(std::vector<std::size_t> indices, std::size_t universe)
    : indices_(std::move(indices)), universe_(universe) {
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw Error(Errc::kInvalidArgument, "duplicate index in index set");
  }
  if (!indices_.empty() && indices_.back() >= universe_) {
    throw Error(Errc::kIndexOutOfRange,
                "index " + std::to_string(indices_.back()) +
                    " outside universe of size " + std::to_string(universe_));
  }
}

IndexSet IndexSet::full(std::size_t universe) {
  std::vector<std::size_t> all(universe);
  for (std::size_t i = 0; i < universe; ++i) all[i] = i;
  return IndexSet(std::move(all), universe);
}

IndexSet IndexSet::from_one_based(const std::vector<std::size_t>& indices,
                                  std::size_t universe) {
  std::vector<std::size_t> zero_based;
  zero_based.reserve(indices.size());
  for (std::size_t i : indices) {
    if (i == 0) throw Error(Errc::kIndexOutOfRange, "1-based index 0");
    zero_based.push_back(i - 1);
  }
  return IndexSet(std::move(zero_based), universe);
}

bool IndexSet::contains(std::size_t index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

std::optional<std::size_t> IndexSet::position_of(std::size_t index) const {
  auto it = std::lower_bound(indices_.begin(), indices_.end(), index);
  if (it == indices_.end() || *it != index) return std::nullopt;
  return static_cast<std::size_t>(it - indices_.begin());
}

IndexSet IndexSet::complement() const {
  std::vector<std::size_t> rest;
  rest.reserve(universe_ - indices_.size());
  std::size_t pos = 0;
  for (std::size_t i = 0; i < universe_; ++i) {
    if (pos < indices_.size() && indices_[pos] == i) {
      ++pos;
    } else {
      rest.push_back(i);
    }
  }
  IndexSet out;
  out.indices_ = std::move(rest);
  out.universe_ = universe_;
  return out;
}

IndexSet IndexSet::compose(const IndexSet& positions) const {
  if (positions.universe() != size()) {
    throw Error(Errc::kIndexOutOfRange, "composed selection universe mismatch");
  }
  std::vector<std::size_t> picked;
  picked.reserve(positions.size());
  for (std::size_t p : positions) picked.push_back(indices_[p]);
  return IndexSet(std::move(picked), universe_);
}

IndexSet IndexSet::set_union(const IndexSet& other) const {
  std::vector<std::size_t> out;
  std::set_union(begin(), end(), other.begin(), other.end(),
                 std::back_inserter(out));
  return IndexSet(std::move(out), universe_);
}

IndexSet IndexSet::set_intersection(const IndexSet& other) const {
  std::vector<std::size_t> out;
  std::set_intersection(begin(), end(), other.begin(), other.end(),
                        std::back_inserter(out));
  return IndexSet(std::move(out), universe_);
}

IndexSet IndexSet::set_difference(const IndexSet& other) const {
  std::vector<std::size_t> out;
  std::set_difference(begin(), end(), other.begin(), other.end(),
                      std::back_inserter(out));
  return IndexSet(std::move(out), universe_);
}

std::vector<std::size_t> IndexSet::to_one_based() const {
  std::vector<std::size_t> out(indices_);
  for (auto& i : out) ++i;
  return out;
}

}  // namespace tropical
