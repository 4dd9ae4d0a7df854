#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "tropical/index_set.hpp"
#include "tropical/matrix.hpp"
#include "tropical/value.hpp"

namespace tropical {

// A directed edge (source, target); for matrices, (row, col).
using Edge = std::pair<std::size_t, std::size_t>;

// A bijection of [n] onto itself, stored as image[i] = pi(i).
class Permutation {
 public:
  Permutation() = default;
  // Throws kInvalidArgument unless `image` is a bijection of [n].
  explicit Permutation(std::vector<std::size_t> image);
  Permutation(std::initializer_list<std::size_t> image)
      : Permutation(std::vector<std::size_t>(image)) {}

  static Permutation identity(std::size_t n);
  // From 1-based images, e.g. {2, 3, 4, 1}.
  static Permutation from_one_based(const std::vector<std::size_t>& image);

  std::size_t size() const { return image_.size(); }
  std::size_t operator()(std::size_t i) const { return image_[i]; }
  const std::vector<std::size_t>& image() const { return image_; }

  Permutation inverse() const;
  // (this ∘ other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;
  bool is_identity() const;

  std::vector<Edge> edges() const;
  // Sum of m(i, pi(i)); -inf if any entry is -inf.
  TropValue weight(const TropMatrix& m) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.image_ <=> b.image_;
  }

 private:
  std::vector<std::size_t> image_;
};

// A bijection from the index set `domain` onto `codomain`. The two universes
// differ only for rectangular matrices. map()[r] is the image of domain()[r].
class Bijection {
 public:
  Bijection() = default;
  // Throws kInvalidArgument unless sizes agree and `image` lists every
  // codomain element exactly once.
  Bijection(IndexSet domain, IndexSet codomain, std::vector<std::size_t> image);
  // Builds from (source, target) pairs over [n].
  static Bijection from_edges(const std::vector<Edge>& edges, std::size_t n);
  static Bijection from_permutation(const Permutation& p);
  static Bijection empty(std::size_t n);

  const IndexSet& domain() const { return domain_; }
  const IndexSet& codomain() const { return codomain_; }
  const std::vector<std::size_t>& map() const { return image_; }
  std::size_t size() const { return image_.size(); }
  std::size_t universe() const { return domain_.universe(); }

  // Image of `source`; throws kIndexOutOfRange when source is not in domain.
  std::size_t operator()(std::size_t source) const;

  Bijection inverse() const;
  std::vector<Edge> edges() const;  // ascending by source
  TropValue weight(const TropMatrix& m) const;

  friend bool operator==(const Bijection&, const Bijection&) = default;

 private:
  IndexSet domain_;
  IndexSet codomain_;
  std::vector<std::size_t> image_;
};

}  // namespace tropical
