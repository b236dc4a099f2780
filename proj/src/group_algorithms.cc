#include "sclosure/group_algorithms.h"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>

namespace sclosure
{

std::size_t ConjugacyClassTable::locate(GeneratedGroup const &G, Permutation const &g) const
{
  auto r = G.rank(g);
  if (!r)
    throw std::invalid_argument("element is not in the group");
  return class_of_rank[*r];
}

ConjugacyClassTable conjugacy_classes(GeneratedGroup const &G, Caps const &caps)
{
  require_within(G.order(), caps.max_elements, "conjugacy class table");
  std::uint64_t n = G.order_u64();
  constexpr std::uint32_t unset = UINT32_MAX;

  ConjugacyClassTable t;
  t.class_of_rank.assign(n, unset);
  auto const &gens = G.generators();

  std::vector<Permutation> queue;
  for (std::uint64_t r = 0; r < n; ++r) {
    if (t.class_of_rank[r] != unset)
      continue;
    auto cls = static_cast<std::uint32_t>(t.representatives.size());
    Permutation rep = G.unrank(r);
    t.class_of_rank[r] = cls;
    queue.clear();
    queue.push_back(rep);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (auto const &s : gens) {
        Permutation c = conjugate(queue[head], s);
        auto cr = *G.rank(c);
        if (t.class_of_rank[cr] == unset) {
          t.class_of_rank[cr] = cls;
          queue.push_back(std::move(c));
        }
      }
    }
    t.representatives.push_back(std::move(rep));
    t.sizes.push_back(queue.size());
  }

  std::uint64_t total = 0;
  for (auto s : t.sizes) {
    total += s;
    if (n % s != 0)
      throw VerificationFailure("class size does not divide the group order");
  }
  if (total != n)
    throw VerificationFailure("class sizes do not sum to the group order");
  return t;
}

std::vector<Permutation> class_of(GeneratedGroup const &G, Permutation const &g,
                                  Caps const &caps)
{
  if (!G.contains(g))
    throw std::invalid_argument("class_of: element not in group");
  std::unordered_set<Permutation, PermutationHash> seen{g};
  std::vector<Permutation> orbit{g};
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (auto const &s : G.generators()) {
      Permutation c = conjugate(orbit[head], s);
      if (seen.insert(c).second) {
        orbit.push_back(std::move(c));
        if (orbit.size() > caps.max_elements)
          throw CapExceeded("conjugacy orbit exceeds cap " +
                            std::to_string(caps.max_elements));
      }
    }
  }
  return orbit;
}

GeneratedGroup subgroup_by_predicate(GeneratedGroup const &G,
                                     std::function<bool(Permutation const &)> const &pred,
                                     Caps const &caps)
{
  GeneratedGroup H = GeneratedGroup::trivial(G.degree());
  G.for_each_element(
    [&](Permutation const &x) {
      if (!H.contains(x) && pred(x))
        H = H.with(x);
    },
    caps.max_elements);
  return H;
}

GeneratedGroup centralizer(GeneratedGroup const &G, Permutation const &g, Caps const &caps)
{
  return subgroup_by_predicate(
    G, [&](Permutation const &x) { return compose(x, g) == compose(g, x); }, caps);
}

GeneratedGroup centralizer(GeneratedGroup const &G, GeneratedGroup const &H, Caps const &caps)
{
  auto const &hs = H.generators();
  return subgroup_by_predicate(
    G,
    [&](Permutation const &x) {
      for (auto const &h : hs)
        if (compose(x, h) != compose(h, x))
          return false;
      return true;
    },
    caps);
}

GeneratedGroup normalizer(GeneratedGroup const &G, GeneratedGroup const &H, Caps const &caps)
{
  auto const &hs = H.generators();
  return subgroup_by_predicate(
    G,
    [&](Permutation const &x) {
      for (auto const &h : hs)
        if (!H.contains(conjugate(h, x)))
          return false;
      return true;
    },
    caps);
}

GeneratedGroup center(GeneratedGroup const &G, Caps const &caps)
{
  return centralizer(G, G, caps);
}

GeneratedGroup generated(GeneratedGroup const &G, std::vector<Permutation> const &X)
{
  for (auto const &x : X)
    if (!G.contains(x))
      throw std::invalid_argument("generated: element outside the ambient group");
  return GeneratedGroup(G.degree(), X);
}

GeneratedGroup intersection(GeneratedGroup const &A, GeneratedGroup const &B, Caps const &caps)
{
  if (A.degree() != B.degree())
    throw std::invalid_argument("intersection: degree mismatch");
  if (A.is_subgroup_of(B))
    return A;
  if (B.is_subgroup_of(A))
    return B;
  GeneratedGroup const &small = A.order() <= B.order() ? A : B;
  GeneratedGroup const &big = A.order() <= B.order() ? B : A;
  return subgroup_by_predicate(
    small, [&](Permutation const &x) { return big.contains(x); }, caps);
}

GeneratedGroup normal_closure(GeneratedGroup const &G, std::vector<Permutation> const &X)
{
  GeneratedGroup H = generated(G, X);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Permutation> fresh;
    for (auto const &h : H.generators())
      for (auto const &g : G.generators()) {
        Permutation c = conjugate(h, g);
        if (!H.contains(c))
          fresh.push_back(std::move(c));
      }
    if (!fresh.empty()) {
      H = H.with(fresh);
      grew = true;
    }
  }
  return H;
}

GeneratedGroup normal_closure(GeneratedGroup const &G, GeneratedGroup const &H)
{
  return normal_closure(G, H.generators());
}

GeneratedGroup derived_subgroup(GeneratedGroup const &H)
{
  auto const &gs = H.generators();
  std::vector<Permutation> comms;
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      Permutation c = commutator(gs[i], gs[j]);
      if (!c.is_identity())
        comms.push_back(std::move(c));
    }
  return normal_closure(H, comms);
}

GeneratedGroup join(GeneratedGroup const &A, GeneratedGroup const &B)
{
  if (A.degree() != B.degree())
    throw std::invalid_argument("join: degree mismatch");
  return A.with(B.generators());
}

bool is_normal(GeneratedGroup const &G, GeneratedGroup const &N)
{
  if (!N.is_subgroup_of(G))
    return false;
  for (auto const &n : N.generators())
    for (auto const &g : G.generators())
      if (!N.contains(conjugate(n, g)))
        return false;
  return true;
}

namespace
{

bool already_listed(std::vector<GeneratedGroup> const &list, GeneratedGroup const &H)
{
  for (auto const &K : list)
    if (K.same_group(H))
      return true;
  return false;
}

} // namespace

std::vector<GeneratedGroup> normal_subgroups(GeneratedGroup const &G, Caps const &caps)
{
  auto table = conjugacy_classes(G, caps);
  std::vector<GeneratedGroup> list;
  list.push_back(GeneratedGroup::trivial(G.degree()));
  for (auto const &rep : table.representatives) {
    if (rep.is_identity())
      continue;
    GeneratedGroup N = normal_closure(G, std::vector<Permutation>{rep});
    if (!already_listed(list, N))
      list.push_back(std::move(N));
  }
  // close under joins; every normal subgroup is a join of class closures
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      GeneratedGroup J = join(list[i], list[j]);
      if (!already_listed(list, J))
        list.push_back(std::move(J));
    }
  std::stable_sort(list.begin(), list.end(),
                   [](GeneratedGroup const &a, GeneratedGroup const &b) {
                     return a.order() < b.order();
                   });
  return list;
}

GeneratedGroup o_p_prime(GeneratedGroup const &G, std::uint64_t p, Caps const &caps)
{
  GeneratedGroup res = GeneratedGroup::trivial(G.degree());
  for (auto const &N : normal_subgroups(G, caps))
    if (N.order() % p != 0)
      res = join(res, N);
  if (res.order() % p == 0)
    throw VerificationFailure("join of p'-normal subgroups is not a p'-group");
  return res;
}

CosetAction::CosetAction(GeneratedGroup const &G, GeneratedGroup const &N, Caps const &caps)
  : kernel_(N)
{
  if (!is_normal(G, N))
    throw InputError("coset_action: subgroup is not normal");
  BigInt idx = G.order() / N.order();
  require_within(idx, caps.max_degree, "coset action degree");

  reps_.push_back(N.canonical_coset_rep(Permutation(G.degree())));
  index_.emplace(reps_[0], 0);
  auto const &gens = G.generators();
  std::vector<std::vector<Point>> images(gens.size());
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    for (std::size_t t = 0; t < gens.size(); ++t) {
      Permutation c = N.canonical_coset_rep(compose(reps_[i], gens[t]));
      auto it = index_.find(c);
      std::uint32_t k;
      if (it == index_.end()) {
        k = static_cast<std::uint32_t>(reps_.size());
        index_.emplace(c, k);
        reps_.push_back(std::move(c));
      } else {
        k = it->second;
      }
      images[t].push_back(k);
    }
  }
  std::vector<Permutation> img_gens;
  for (auto &v : images)
    img_gens.push_back(Permutation(std::move(v)));
  image_ = GeneratedGroup(reps_.size(), img_gens);
  if (image_.order() * N.order() != G.order())
    throw VerificationFailure("coset action: |image|*|N| != |G|");
}

std::size_t CosetAction::coset_of(Permutation const &g) const
{
  auto it = index_.find(kernel_.canonical_coset_rep(g));
  if (it == index_.end())
    throw std::invalid_argument("coset_of: element not in the acting group");
  return it->second;
}

Permutation CosetAction::map(Permutation const &g) const
{
  std::vector<Point> img(reps_.size());
  for (std::size_t i = 0; i < reps_.size(); ++i)
    img[i] = static_cast<Point>(coset_of(compose(reps_[i], g)));
  return Permutation(std::move(img));
}

RightCosets::RightCosets(GeneratedGroup const &G, GeneratedGroup const &X, Caps const &caps)
  : X_(X)
{
  if (!X.is_subgroup_of(G))
    throw std::invalid_argument("RightCosets: X is not a subgroup of G");
  require_within(G.order() / X.order(), caps.max_degree, "coset space");
  reps_.push_back(X.canonical_coset_rep(Permutation(G.degree())));
  index_.emplace(reps_[0], 0);
  for (std::size_t i = 0; i < reps_.size(); ++i)
    for (auto const &g : G.generators()) {
      Permutation c = X.canonical_coset_rep(compose(reps_[i], g));
      if (index_.emplace(c, static_cast<std::uint32_t>(reps_.size())).second)
        reps_.push_back(std::move(c));
    }
  if (BigInt(reps_.size()) * X.order() != G.order())
    throw VerificationFailure("coset enumeration incomplete");
}

std::size_t RightCosets::index_of(Permutation const &g) const
{
  auto it = index_.find(X_.canonical_coset_rep(g));
  if (it == index_.end())
    throw std::invalid_argument("RightCosets: element outside the group");
  return it->second;
}

Permutation RightCosets::action(Permutation const &g) const
{
  std::vector<Point> img(reps_.size());
  for (std::size_t i = 0; i < reps_.size(); ++i)
    img[i] = static_cast<Point>(index_of(compose(reps_[i], g)));
  return Permutation(std::move(img));
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> order_census(GeneratedGroup const &G,
                                                                  Caps const &caps)
{
  std::map<std::uint64_t, std::uint64_t> m;
  G.for_each_element([&](Permutation const &g) { ++m[g.order()]; }, caps.max_elements);
  return {m.begin(), m.end()};
}

Permutation shift_permutation(Permutation const &g, std::size_t offset,
                              std::size_t total_degree)
{
  if (offset + g.degree() > total_degree)
    throw std::invalid_argument("shift_permutation: does not fit");
  std::vector<Point> img(total_degree);
  for (std::size_t x = 0; x < total_degree; ++x)
    img[x] = static_cast<Point>(x);
  for (std::size_t x = 0; x < g.degree(); ++x)
    img[offset + x] = static_cast<Point>(offset + g[static_cast<Point>(x)]);
  return Permutation::unchecked(std::move(img));
}

GeneratedGroup direct_product(GeneratedGroup const &A, GeneratedGroup const &B)
{
  std::size_t n = A.degree() + B.degree();
  std::vector<Permutation> gens;
  for (auto const &a : A.generators())
    gens.push_back(shift_permutation(a, 0, n));
  for (auto const &b : B.generators())
    gens.push_back(shift_permutation(b, A.degree(), n));
  return GeneratedGroup(n, gens);
}

} // namespace sclosure
