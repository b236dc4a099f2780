#include "sclosure/indexed_group.h"

#include <set>

namespace sclosure
{

IndexedGroup::IndexedGroup(GeneratedGroup const &G, std::uint64_t cap) : group_(G)
{
  require_within(G.order(), cap, "indexed group");
  elements_ = G.elements(cap);
  std::size_t n = elements_.size();
  mul_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (elements_[i].is_identity())
      identity_ = static_cast<std::uint32_t>(i);
    for (std::size_t j = 0; j < n; ++j)
      mul_[i * n + j] = static_cast<std::uint32_t>(*G.rank(compose(elements_[i], elements_[j])));
  }
}

std::uint32_t IndexedGroup::index_of(Permutation const &g) const
{
  auto r = group_.rank(g);
  if (!r)
    throw std::invalid_argument("element not in indexed group");
  return static_cast<std::uint32_t>(*r);
}

Subset IndexedGroup::closure(std::vector<std::uint32_t> const &gens) const
{
  Subset s(size());
  std::vector<std::uint32_t> queue{identity_};
  s.set(identity_);
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (auto g : gens) {
      auto x = mul(queue[h], g);
      if (!s.test(x)) {
        s.set(x);
        queue.push_back(x);
      }
    }
  return s;
}

std::vector<IndexedSubgroup> IndexedGroup::all_subgroups() const
{
  std::vector<IndexedSubgroup> out;
  std::set<Subset> seen;
  IndexedSubgroup triv{closure({}), {}};
  seen.insert(triv.members);
  out.push_back(std::move(triv));
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (std::uint32_t x = 0; x < size(); ++x) {
      if (out[k].members.test(x))
        continue;
      auto gens = out[k].generators;
      gens.push_back(x);
      Subset m = closure(gens);
      if (seen.insert(m).second)
        out.push_back({std::move(m), std::move(gens)});
    }
  }
  return out;
}

GeneratedGroup IndexedGroup::to_group(Subset const &members) const
{
  GeneratedGroup H = GeneratedGroup::trivial(group_.degree());
  for (auto i = members.find_first(); i != Subset::npos; i = members.find_next(i))
    if (!H.contains(elements_[i]))
      H = H.with(elements_[i]);
  return H;
}

} // namespace sclosure
