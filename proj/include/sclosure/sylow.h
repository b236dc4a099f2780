#ifndef SCLOSURE_SYLOW_H
#define SCLOSURE_SYLOW_H

#include <optional>
#include <vector>

#include "sclosure/group.h"

namespace sclosure
{

struct Homocyclic
{
  std::size_t rank = 0;
  std::uint64_t exponent = 1;
  friend bool operator==(Homocyclic const &, Homocyclic const &) = default;
};

struct PGroupProfile
{
  GeneratedGroup S;
  std::uint64_t p = 2;
  BigInt order;
  GeneratedGroup center;
  GeneratedGroup omega1;
  GeneratedGroup frattini;
  GeneratedGroup derived;
  std::uint64_t exponent = 1;
  bool abelian = true;
  /// Z(S) = Phi(S) = S' with S non-abelian.
  bool special = false;
  /// Orders of the cyclic factors, decreasing; filled only when abelian.
  std::vector<std::uint64_t> abelian_invariants;
  std::optional<Homocyclic> homocyclic;
};

/// A Sylow p-subgroup of G, trivial when p does not divide |G|. Grows P by
/// p-parts of elements of N_G(P), scanning G in rank order, so the result is
/// deterministic.
GeneratedGroup sylow_subgroup(GeneratedGroup const &G, std::uint64_t p,
                              Caps const &caps = default_caps());

bool is_p_group(GeneratedGroup const &S, std::uint64_t p);

PGroupProfile p_group_profile(GeneratedGroup const &S, std::uint64_t p,
                              Caps const &caps = default_caps());

/// Invariant factors of an abelian p-group from its element-order census;
/// nullopt if S is not abelian.
std::optional<std::vector<std::uint64_t>> abelian_invariants(GeneratedGroup const &S,
                                                             std::uint64_t p,
                                                             Caps const &caps = default_caps());

std::optional<Homocyclic> homocyclic_invariants(GeneratedGroup const &S, std::uint64_t p,
                                                Caps const &caps = default_caps());

bool is_abelian(GeneratedGroup const &G);
bool is_cyclic(GeneratedGroup const &G, Caps const &caps = default_caps());

} // namespace sclosure

#endif // SCLOSURE_SYLOW_H
