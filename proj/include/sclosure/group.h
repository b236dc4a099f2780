#ifndef SCLOSURE_GROUP_H
#define SCLOSURE_GROUP_H

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "sclosure/errors.h"
#include "sclosure/perm.h"

namespace sclosure
{

/**
 * A finitely generated permutation group with a stabilizer chain.
 *
 * The chain is built eagerly with the deterministic Schreier-Sims algorithm
 * and is immutable afterwards, so copies share it and concurrent read-only
 * use is safe. Every element has a unique rank in [0, |G|) derived from its
 * transversal coordinates; rank() doubles as a membership test.
 */
class GeneratedGroup
{
public:
  GeneratedGroup();
  GeneratedGroup(std::size_t degree, std::vector<Permutation> const &generators);

  static GeneratedGroup trivial(std::size_t degree);

  std::size_t degree() const;

  /// The non-redundant subset of the generators passed at construction.
  std::vector<Permutation> const &generators() const;

  BigInt const &order() const;

  /// Order as a machine integer; throws CapExceeded if it does not fit.
  std::uint64_t order_u64() const;

  bool is_trivial() const { return generators().empty(); }

  bool contains(Permutation const &g) const;

  /// Position of g in the canonical element enumeration, or nullopt if g is
  /// not a member.
  std::optional<std::uint64_t> rank(Permutation const &g) const;
  Permutation unrank(std::uint64_t r) const;

  std::vector<Point> base() const;
  std::vector<std::size_t> transversal_sizes() const;

  /// Orbit of the i-th base point under the i-th stabilizer.
  std::vector<Point> const &basic_orbit(std::size_t i) const;

  /// Visits every element once, in rank order. Refuses when |G| > cap.
  void for_each_element(std::function<void(Permutation const &)> const &visit,
                        std::uint64_t cap) const;

  std::vector<Permutation> elements(std::uint64_t cap) const;

  /// The group generated by this group and g.
  GeneratedGroup with(Permutation const &g) const;
  GeneratedGroup with(std::vector<Permutation> const &gs) const;

  bool is_subgroup_of(GeneratedGroup const &other) const;

  /// Treating this group as N, the unique element of the right coset N*g
  /// whose base-image sequence is lexicographically least.
  Permutation canonical_coset_rep(Permutation const &g) const;

  /// Equality as subgroups of Sym(degree).
  bool same_group(GeneratedGroup const &other) const;

  struct Chain;

private:
  std::shared_ptr<Chain const> chain_;
};

/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
BigInt p_part(BigInt const &n, std::uint64_t p);

/// Largest e with p^e | n.
unsigned valuation(BigInt const &n, std::uint64_t p);

bool is_prime(std::uint64_t n);

/// Distinct prime divisors of n in increasing order.
std::vector<std::uint64_t> prime_divisors(BigInt const &n);

} // namespace sclosure

#endif // SCLOSURE_GROUP_H
