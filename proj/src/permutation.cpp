#include "tropical/permutation.hpp"

#include <algorithm>
#include <string>

#include "tropical/error.hpp"

namespace tropical {

Permutation::Permutation(std::vector<std::size_t> image)
    : image_(std::move(image)) {
  std::vector<char> seen(image_.size(), 0);
  for (std::size_t v : image_) {
    if (v >= image_.size() || seen[v]) {
      throw Error(Errc::kInvalidArgument, "image is not a permutation");
    }
    seen[v] = 1;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> image(n);
  for (std::size_t i = 0; i < n; ++i) image[i] = i;
  return Permutation(std::move(image));
}

Permutation Permutation::from_one_based(const std::vector<std::size_t>& image) {
  std::vector<std::size_t> zero(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] == 0) throw Error(Errc::kInvalidArgument, "1-based image 0");
    zero[i] = image[i] - 1;
  }
  return Permutation(std::move(zero));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) {
    throw Error(Errc::kInvalidArgument, "composing permutations of different size");
  }
  std::vector<std::size_t> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = image_[other(i)];
  return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

std::vector<Edge> Permutation::edges() const {
  std::vector<Edge> out;
  out.reserve(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) out.emplace_back(i, image_[i]);
  return out;
}

TropValue Permutation::weight(const TropMatrix& m) const {
  TropValue w = TropValue::one();
  for (std::size_t i = 0; i < image_.size(); ++i) w = tmul(w, m(i, image_[i]));
  return w;
}

Bijection::Bijection(IndexSet domain, IndexSet codomain,
                     std::vector<std::size_t> image)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      image_(std::move(image)) {
  if (domain_.size() != codomain_.size() || image_.size() != domain_.size()) {
    throw Error(Errc::kInvalidArgument, "bijection size mismatch");
  }
  std::vector<char> hit(codomain_.size(), 0);
  for (std::size_t v : image_) {
    auto pos = codomain_.position_of(v);
    if (!pos || hit[*pos]) {
      throw Error(Errc::kInvalidArgument, "map is not a bijection onto codomain");
    }
    hit[*pos] = 1;
  }
}

Bijection Bijection::from_edges(const std::vector<Edge>& edges, std::size_t n) {
  std::vector<Edge> sorted(edges);
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> sources, targets, image;
  for (const auto& [s, t] : sorted) {
    sources.push_back(s);
    targets.push_back(t);
    image.push_back(t);
  }
  return Bijection(IndexSet(std::move(sources), n), IndexSet(std::move(targets), n),
                   std::move(image));
}

Bijection Bijection::from_permutation(const Permutation& p) {
  const std::size_t n = p.size();
  return Bijection(IndexSet::full(n), IndexSet::full(n), p.image());
}

Bijection Bijection::empty(std::size_t n) {
  return Bijection(IndexSet({}, n), IndexSet({}, n), {});
}

std::size_t Bijection::operator()(std::size_t source) const {
  auto pos = domain_.position_of(source);
  if (!pos) {
    throw Error(Errc::kIndexOutOfRange,
                "node " + std::to_string(source) + " not in bijection domain");
  }
  return image_[*pos];
}

Bijection Bijection::inverse() const {
  std::vector<Edge> flipped;
  flipped.reserve(size());
  for (std::size_t r = 0; r < size(); ++r) flipped.emplace_back(image_[r], domain_[r]);
  return from_edges(flipped, universe());
}

std::vector<Edge> Bijection::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (std::size_t r = 0; r < size(); ++r) out.emplace_back(domain_[r], image_[r]);
  return out;
}

TropValue Bijection::weight(const TropMatrix& m) const {
  TropValue w = TropValue::one();
  for (std::size_t r = 0; r < size(); ++r) w = tmul(w, m(domain_[r], image_[r]));
  return w;
}

}  // namespace tropical
