#include "sclosure/sylow.h"

#include <algorithm>
#include <map>

#include "sclosure/group_algorithms.h"

namespace sclosure
{

namespace
{

bool normalizes(Permutation const &g, GeneratedGroup const &P)
{
  for (auto const &h : P.generators())
    if (!P.contains(conjugate(h, g)))
      return false;
  return true;
}

} // namespace

GeneratedGroup sylow_subgroup(GeneratedGroup const &G, std::uint64_t p, Caps const &caps)
{
  if (!is_prime(p))
    throw InputError("sylow_subgroup: " + std::to_string(p) + " is not prime");
  BigInt target = p_part(G.order(), p);
  GeneratedGroup P = GeneratedGroup::trivial(G.degree());
  if (target == 1)
    return P;
  require_within(G.order(), caps.max_elements, "Sylow search");

  std::uint64_t n = G.order_u64();
  while (P.order() != target) {
    bool grew = false;
    for (std::uint64_t r = 0; r < n && !grew; ++r) {
      Permutation g = G.unrank(r);
      std::uint64_t o = g.order();
      std::uint64_t pp = p_part(o, p);
      if (pp == 1)
        continue;
      Permutation y = g.pow(static_cast<std::int64_t>(o / pp));
      if (P.contains(y) || !normalizes(y, P))
        continue;
      P = P.with(y);
      grew = true;
    }
    if (!grew)
      throw VerificationFailure("Sylow ascent stalled below the full p-part");
  }
  return P;
}

bool is_p_group(GeneratedGroup const &S, std::uint64_t p)
{
  return p_part(S.order(), p) == S.order();
}

bool is_abelian(GeneratedGroup const &G)
{
  auto const &gs = G.generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      if (compose(gs[i], gs[j]) != compose(gs[j], gs[i]))
        return false;
  return true;
}

bool is_cyclic(GeneratedGroup const &G, Caps const &caps)
{
  if (!is_abelian(G))
    return false;
  BigInt n = G.order();
  bool cyclic = false;
  G.for_each_element(
    [&](Permutation const &g) {
      if (!cyclic && BigInt(g.order()) == n)
        cyclic = true;
    },
    caps.max_elements);
  return cyclic;
}

namespace
{

std::vector<std::uint64_t> invariants_from_census(std::map<std::uint64_t, std::uint64_t> const &census,
                                                  std::uint64_t p)
{
  // c[k] = log_p #{x : x^(p^k) = 1}
  std::vector<unsigned> c{0};
  std::uint64_t pk = 1, total = 0;
  for (auto [o, cnt] : census)
    total += cnt;
  while (true) {
    pk *= p;
    std::uint64_t m = 0;
    for (auto [o, cnt] : census)
      if (pk % o == 0)
        m += cnt;
    c.push_back(valuation(BigInt(m), p));
    if (m == total)
      break;
  }
  // factors of order exactly p^k: (c_k - c_{k-1}) - (c_{k+1} - c_k)
  std::vector<std::uint64_t> inv;
  std::size_t K = c.size() - 1;
  for (std::size_t k = K; k >= 1; --k) {
    int ge_k = static_cast<int>(c[k]) - static_cast<int>(c[k - 1]);
    int ge_k1 = k < K ? static_cast<int>(c[k + 1]) - static_cast<int>(c[k]) : 0;
    std::uint64_t pw = 1;
    for (std::size_t i = 0; i < k; ++i)
      pw *= p;
    for (int t = 0; t < ge_k - ge_k1; ++t)
      inv.push_back(pw);
  }
  return inv;
}

std::map<std::uint64_t, std::uint64_t> census_of(GeneratedGroup const &S, Caps const &caps)
{
  std::map<std::uint64_t, std::uint64_t> census;
  S.for_each_element([&](Permutation const &g) { ++census[g.order()]; }, caps.max_pgroup);
  return census;
}

std::optional<Homocyclic> homocyclic_from(std::vector<std::uint64_t> const &inv)
{
  if (inv.empty())
    return Homocyclic{0, 1};
  for (auto x : inv)
    if (x != inv.front())
      return std::nullopt;
  return Homocyclic{inv.size(), inv.front()};
}

} // namespace

std::optional<std::vector<std::uint64_t>> abelian_invariants(GeneratedGroup const &S,
                                                             std::uint64_t p, Caps const &caps)
{
  if (!is_p_group(S, p))
    throw std::invalid_argument("abelian_invariants: not a p-group");
  if (!is_abelian(S))
    return std::nullopt;
  require_within(S.order(), caps.max_pgroup, "p-group census");
  return invariants_from_census(census_of(S, caps), p);
}

std::optional<Homocyclic> homocyclic_invariants(GeneratedGroup const &S, std::uint64_t p,
                                                Caps const &caps)
{
  auto inv = abelian_invariants(S, p, caps);
  if (!inv)
    return std::nullopt;
  return homocyclic_from(*inv);
}

PGroupProfile p_group_profile(GeneratedGroup const &S, std::uint64_t p, Caps const &caps)
{
  if (!is_p_group(S, p))
    throw std::invalid_argument("p_group_profile: not a p-group");
  require_within(S.order(), caps.max_pgroup, "p-group profile");

  PGroupProfile prof;
  prof.S = S;
  prof.p = p;
  prof.order = S.order();

  auto const &gens = S.generators();
  std::size_t deg = S.degree();
  GeneratedGroup Z = GeneratedGroup::trivial(deg);
  GeneratedGroup O = GeneratedGroup::trivial(deg);
  std::map<std::uint64_t, std::uint64_t> census;
  S.for_each_element(
    [&](Permutation const &g) {
      std::uint64_t o = g.order();
      ++census[o];
      prof.exponent = std::max(prof.exponent, o);
      if (o == p && !O.contains(g))
        O = O.with(g);
      if (!Z.contains(g)) {
        bool central = true;
        for (auto const &h : gens)
          if (compose(g, h) != compose(h, g)) {
            central = false;
            break;
          }
        if (central)
          Z = Z.with(g);
      }
    },
    caps.max_pgroup);
  prof.center = Z;
  prof.omega1 = O;

  prof.derived = derived_subgroup(S);
  prof.abelian = prof.derived.is_trivial();

  std::vector<Permutation> phi_gens;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    phi_gens.push_back(gens[i].pow(static_cast<std::int64_t>(p)));
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      phi_gens.push_back(commutator(gens[i], gens[j]));
  }
  prof.frattini = normal_closure(S, phi_gens);

  prof.special = !prof.abelian && prof.center.same_group(prof.frattini) &&
                 prof.frattini.same_group(prof.derived);

  if (prof.abelian) {
    prof.abelian_invariants = invariants_from_census(census, p);
    prof.homocyclic = homocyclic_from(prof.abelian_invariants);
  }
  return prof;
}

} // namespace sclosure
