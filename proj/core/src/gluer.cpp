#include "dwkit/gluer.hpp"

#include <bit>
#include <map>
#include <numeric>

#include "dwkit/error.hpp"

namespace dwkit {

SimplexGluer::SimplexGluer(int dimension, int top_count) : dimension_(dimension), top_count_(top_count) {
  if (dimension < 0 || dimension > 8) throw DomainError("gluer supports dimensions 0..8");
  if (top_count < 0) throw DomainError("negative simplex count");
  parent_.resize(static_cast<std::size_t>(top_count) << (dimension + 1));
  std::iota(parent_.begin(), parent_.end(), 0);
}

int SimplexGluer::find(int x) const {
  while (parent_[static_cast<std::size_t>(x)] != x) {
    parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
    x = parent_[static_cast<std::size_t>(x)];
  }
  return x;
}

void SimplexGluer::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
}

void SimplexGluer::identify(int a, std::span<const int> va, int b, std::span<const int> vb) {
  if (va.size() != vb.size() || va.empty()) throw DomainError("identify needs two nonempty vertex lists of equal length");
  if (a < 0 || a >= top_count_ || b < 0 || b >= top_count_) throw DomainError("identify: simplex out of range");
  for (std::size_t i = 0; i < va.size(); ++i) {
    if (va[i] < 0 || va[i] > dimension_ || vb[i] < 0 || vb[i] > dimension_) {
      throw DomainError("identify: local vertex out of range");
    }
    if (i > 0 && (va[i] <= va[i - 1] || vb[i] <= vb[i - 1])) {
      throw DomainError("identify: local vertices must be increasing");
    }
  }
  const std::uint32_t subsets = 1u << va.size();
  for (std::uint32_t s = 1; s < subsets; ++s) {
    std::uint32_t ma = 0, mb = 0;
    for (std::size_t i = 0; i < va.size(); ++i) {
      if (s & (1u << i)) {
        ma |= 1u << va[i];
        mb |= 1u << vb[i];
      }
    }
    unite(key(a, ma), key(b, mb));
  }
}

void SimplexGluer::identify(int a, std::initializer_list<int> va, int b, std::initializer_list<int> vb) {
  identify(a, std::span<const int>(va.begin(), va.size()), b, std::span<const int>(vb.begin(), vb.size()));
}

void SimplexGluer::identify_by_label(const Labeller& label) {
  std::map<std::string, int> first;
  const std::uint32_t masks = 1u << (dimension_ + 1);
  for (int t = 0; t < top_count_; ++t) {
    for (std::uint32_t m = 1; m < masks; ++m) {
      auto [it, inserted] = first.emplace(label(t, m), key(t, m));
      if (!inserted) unite(it->second, key(t, m));
    }
  }
}

DeltaComplex SimplexGluer::build() const {
  const std::uint32_t masks = 1u << (dimension_ + 1);
  ids_.assign(parent_.size(), -1);
  std::vector<int> counts(static_cast<std::size_t>(dimension_ + 1), 0);
  std::vector<int> class_id(parent_.size(), -1);
  // Order of appearance: by dimension-agnostic scan of (top, mask).
  for (int t = 0; t < top_count_; ++t) {
    for (std::uint32_t m = 1; m < masks; ++m) {
      int root = find(key(t, m));
      if (class_id[static_cast<std::size_t>(root)] < 0) {
        int k = std::popcount(m) - 1;
        class_id[static_cast<std::size_t>(root)] = counts[static_cast<std::size_t>(k)]++;
      }
      ids_[static_cast<std::size_t>(key(t, m))] = class_id[static_cast<std::size_t>(root)];
    }
  }
  std::vector<std::vector<std::vector<int>>> faces(static_cast<std::size_t>(dimension_));
  for (int k = 1; k <= dimension_; ++k) faces[static_cast<std::size_t>(k - 1)].resize(static_cast<std::size_t>(counts[static_cast<std::size_t>(k)]));
  for (int t = 0; t < top_count_; ++t) {
    for (std::uint32_t m = 1; m < masks; ++m) {
      int k = std::popcount(m) - 1;
      if (k == 0) continue;
      auto& entry = faces[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(ids_[static_cast<std::size_t>(key(t, m))])];
      std::vector<int> f;
      std::uint32_t rest = m;
      while (rest) {
        std::uint32_t bit = rest & (~rest + 1);
        rest &= rest - 1;
        f.push_back(ids_[static_cast<std::size_t>(key(t, m & ~bit))]);
      }
      if (entry.empty()) {
        entry = std::move(f);
      } else if (entry != f) {
        throw DomainError("gluing is not order-preserving: inconsistent faces for a " + std::to_string(k) + "-simplex");
      }
    }
  }
  DeltaComplex out(dimension_, counts[0], std::move(faces));
  require_valid(out);
  return out;
}

int SimplexGluer::id_of(int top, std::uint32_t mask) const {
  if (ids_.empty()) throw DomainError("id_of called before build()");
  return ids_[static_cast<std::size_t>(key(top, mask))];
}

}  // namespace dwkit
