#ifndef SCLOSURE_INDEXED_GROUP_H
#define SCLOSURE_INDEXED_GROUP_H

#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "sclosure/group.h"

namespace sclosure
{

/// Subset of a small group, indexed by element rank.
using Subset = boost::dynamic_bitset<>;

struct IndexedSubgroup
{
  Subset members;
  std::vector<std::uint32_t> generators;
};

/**
 * A small group with a full multiplication table, elements numbered by
 * their rank in the underlying GeneratedGroup.
 */
class IndexedGroup
{
public:
  IndexedGroup(GeneratedGroup const &G, std::uint64_t cap);

  std::size_t size() const { return elements_.size(); }
  GeneratedGroup const &group() const { return group_; }
  Permutation const &element(std::uint32_t i) const { return elements_[i]; }
  std::uint32_t index_of(Permutation const &g) const;
  std::uint32_t mul(std::uint32_t i, std::uint32_t j) const { return mul_[i * size() + j]; }
  std::uint32_t identity() const { return identity_; }

  /// Subgroup generated by `gens` (indices).
  Subset closure(std::vector<std::uint32_t> const &gens) const;

  /// Every subgroup, each with a small generating set; trivial group first.
  std::vector<IndexedSubgroup> all_subgroups() const;

  GeneratedGroup to_group(Subset const &members) const;

private:
  GeneratedGroup group_;
  std::vector<Permutation> elements_;
  std::vector<std::uint32_t> mul_;
  std::uint32_t identity_ = 0;
};

} // namespace sclosure

#endif // SCLOSURE_INDEXED_GROUP_H
