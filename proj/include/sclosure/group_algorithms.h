#ifndef SCLOSURE_GROUP_ALGORITHMS_H
#define SCLOSURE_GROUP_ALGORITHMS_H

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "sclosure/group.h"

namespace sclosure
{

/// Conjugacy classes of a group small enough to enumerate.
struct ConjugacyClassTable
{
  std::vector<Permutation> representatives;
  std::vector<std::uint64_t> sizes;
  /// Class index of every element, indexed by GeneratedGroup::rank.
  std::vector<std::uint32_t> class_of_rank;

  std::size_t locate(GeneratedGroup const &G, Permutation const &g) const;
};

ConjugacyClassTable conjugacy_classes(GeneratedGroup const &G,
                                      Caps const &caps = default_caps());

/// The conjugation orbit g^G, in breadth-first order starting at g. Refuses
/// once the orbit grows past caps.max_elements.
std::vector<Permutation> class_of(GeneratedGroup const &G, Permutation const &g,
                                  Caps const &caps = default_caps());

/// {x in G : pred(x)}, assuming the predicate carves out a subgroup.
GeneratedGroup subgroup_by_predicate(GeneratedGroup const &G,
                                     std::function<bool(Permutation const &)> const &pred,
                                     Caps const &caps = default_caps());

GeneratedGroup centralizer(GeneratedGroup const &G, Permutation const &g,
                           Caps const &caps = default_caps());
GeneratedGroup centralizer(GeneratedGroup const &G, GeneratedGroup const &H,
                           Caps const &caps = default_caps());
GeneratedGroup normalizer(GeneratedGroup const &G, GeneratedGroup const &H,
                          Caps const &caps = default_caps());
GeneratedGroup center(GeneratedGroup const &G, Caps const &caps = default_caps());

GeneratedGroup generated(GeneratedGroup const &G, std::vector<Permutation> const &X);
GeneratedGroup intersection(GeneratedGroup const &A, GeneratedGroup const &B,
                            Caps const &caps = default_caps());
GeneratedGroup normal_closure(GeneratedGroup const &G, std::vector<Permutation> const &X);
GeneratedGroup normal_closure(GeneratedGroup const &G, GeneratedGroup const &H);
GeneratedGroup derived_subgroup(GeneratedGroup const &H);
GeneratedGroup join(GeneratedGroup const &A, GeneratedGroup const &B);
bool is_normal(GeneratedGroup const &G, GeneratedGroup const &N);

/// Every normal subgroup of G, as joins of normal closures of conjugacy
/// classes; sorted by order.
std::vector<GeneratedGroup> normal_subgroups(GeneratedGroup const &G,
                                             Caps const &caps = default_caps());

/// Largest normal subgroup of G whose order is prime to p.
GeneratedGroup o_p_prime(GeneratedGroup const &G, std::uint64_t p,
                         Caps const &caps = default_caps());

/// Action of G on the right cosets of a normal subgroup N.
class CosetAction
{
public:
  CosetAction(GeneratedGroup const &G, GeneratedGroup const &N,
              Caps const &caps = default_caps());

  GeneratedGroup const &image() const { return image_; }
  GeneratedGroup const &kernel() const { return kernel_; }
  std::size_t index() const { return reps_.size(); }

  /// Canonical representative of each coset, coset 0 being N itself.
  std::vector<Permutation> const &representatives() const { return reps_; }

  /// The epimorphism G -> image.
  Permutation map(Permutation const &g) const;

  std::size_t coset_of(Permutation const &g) const;

private:
  GeneratedGroup kernel_;
  GeneratedGroup image_;
  std::vector<Permutation> reps_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index_;
};

/// Right cosets X*g of an arbitrary subgroup X, numbered in breadth-first
/// order from X itself, with G acting by right multiplication.
class RightCosets
{
public:
  RightCosets(GeneratedGroup const &G, GeneratedGroup const &X,
              Caps const &caps = default_caps());

  std::size_t size() const { return reps_.size(); }
  GeneratedGroup const &subgroup() const { return X_; }

  /// Canonical representative of each coset; reps[0] is the identity.
  std::vector<Permutation> const &representatives() const { return reps_; }

  std::size_t index_of(Permutation const &g) const;

  /// The permutation (X t_i) -> (X t_i g) of the cosets.
  Permutation action(Permutation const &g) const;

private:
  GeneratedGroup X_;
  std::vector<Permutation> reps_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index_;
};

/// Element-order census: order -> number of elements.
std::vector<std::pair<std::uint64_t, std::uint64_t>>
order_census(GeneratedGroup const &G, Caps const &caps = default_caps());

/// Direct product acting on the disjoint union of the two point sets.
GeneratedGroup direct_product(GeneratedGroup const &A, GeneratedGroup const &B);

/// g moved into Sym(total_degree), point x going to offset + x.
Permutation shift_permutation(Permutation const &g, std::size_t offset,
                              std::size_t total_degree);

} // namespace sclosure

#endif // SCLOSURE_GROUP_ALGORITHMS_H
