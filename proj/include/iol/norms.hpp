#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "iol/formula.hpp"

namespace iol {

/// A named conditional norm: given the body, the head ought to hold.
struct Norm {
  std::string name;
  Formula body;
  Formula head;
};

/// Ordered set of norms with pairwise distinct names. Distinct names may
/// carry identical (body, head) pairs; subset reasoning and preferences
/// treat them as separate norms.
class NormSet {
 public:
  NormSet() = default;

  void add(Norm norm);  // throws std::invalid_argument on duplicate name
  std::optional<std::size_t> index_of(const std::string& name) const;

  std::size_t size() const { return norms_.size(); }
  bool empty() const { return norms_.empty(); }
  const Norm& operator[](std::size_t i) const { return norms_[i]; }
  std::vector<Norm>::const_iterator begin() const { return norms_.begin(); }
  std::vector<Norm>::const_iterator end() const { return norms_.end(); }

  /// Subset by ascending positions, preserving relative order.
  NormSet subset(const std::vector<std::size_t>& positions) const;

  std::vector<std::string> names() const;
  bool same_names(const NormSet& other) const;  // as unordered name sets

 private:
  std::vector<Norm> norms_;
  std::unordered_map<std::string, std::size_t> by_name_;
};

enum class BaseOperator : std::uint8_t { out1, out2, out3, out4 };

/// One of the seven distinct output operations: the four base operators,
/// optionally with throughput (the variants of out2 and out4 with
/// throughput coincide and share one basis construction).
struct OutputOperator {
  BaseOperator base = BaseOperator::out1;
  bool throughput = false;

  bool operator==(const OutputOperator&) const = default;
};

}  // namespace iol
