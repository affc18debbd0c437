#include "iol/norms.hpp"

#include <algorithm>
#include <stdexcept>

namespace iol {

void NormSet::add(Norm norm) {
  if (by_name_.contains(norm.name))
    throw std::invalid_argument("duplicate norm name: " + norm.name);
  by_name_.emplace(norm.name, norms_.size());
  norms_.push_back(std::move(norm));
}

std::optional<std::size_t> NormSet::index_of(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

NormSet NormSet::subset(const std::vector<std::size_t>& positions) const {
  NormSet result;
  for (std::size_t p : positions) result.add(norms_.at(p));
  return result;
}

std::vector<std::string> NormSet::names() const {
  std::vector<std::string> out;
  out.reserve(norms_.size());
  for (const Norm& n : norms_) out.push_back(n.name);
  return out;
}

bool NormSet::same_names(const NormSet& other) const {
  if (size() != other.size()) return false;
  return std::all_of(norms_.begin(), norms_.end(), [&](const Norm& n) {
    return other.by_name_.contains(n.name);
  });
}

}  // namespace iol
