#ifndef SCLOSURE_STRONG_CLOSURE_H
#define SCLOSURE_STRONG_CLOSURE_H

#include <optional>
#include <string>
#include <vector>

#include "sclosure/group_algorithms.h"

namespace sclosure
{

/// a^g = b with a, b in S. For subset-mode failures `subgroup` holds the
/// generators of the subgroup P whose G-induced map is not realized in H;
/// then a is the first generator of P.
struct FusionWitness
{
  Permutation a;
  Permutation b;
  Permutation g;
  std::vector<Permutation> subgroup;

  /// conjugate(a, g) == b.
  bool replays() const;
};

/**
 * G-fusion of the elements of a Sylow subgroup S: every element of S carries
 * the index of its G-conjugacy class. Elements of S are numbered by their
 * rank in S.
 */
class FusionData
{
public:
  FusionData(GeneratedGroup G, GeneratedGroup S, std::uint64_t p,
             Caps const &caps = default_caps());

  GeneratedGroup const &G() const { return G_; }
  GeneratedGroup const &S() const { return S_; }
  std::uint64_t p() const { return p_; }
  Caps const &caps() const { return caps_; }
  ConjugacyClassTable const &classes() const { return classes_; }

  std::size_t s_size() const { return s_elements_.size(); }
  Permutation const &s_element(std::size_t i) const { return s_elements_[i]; }
  std::uint32_t label(std::size_t i) const { return labels_[i]; }

  /// Indices of the elements of S in G-class c.
  std::vector<std::uint32_t> const &class_in_s(std::uint32_t c) const;

  /// G-class labels of the elements of A (A must lie in S).
  std::vector<std::uint32_t> labels_of(GeneratedGroup const &A) const;

private:
  GeneratedGroup G_;
  GeneratedGroup S_;
  std::uint64_t p_;
  Caps caps_;
  ConjugacyClassTable classes_;
  std::vector<Permutation> s_elements_;
  std::vector<std::uint32_t> labels_;
  std::vector<std::vector<std::uint32_t>> by_label_;
};

struct ClosureCheck
{
  bool closed = true;
  std::optional<FusionWitness> witness;
};

/// Scans G for g with a^g = b; throws VerificationFailure if there is none.
Permutation find_conjugator(GeneratedGroup const &G, Permutation const &a,
                            Permutation const &b, Caps const &caps = default_caps());

ClosureCheck is_strongly_closed(FusionData const &F, GeneratedGroup const &A,
                                bool want_conjugator = true);

/// Smallest strongly closed subgroup of S containing X.
GeneratedGroup strong_closure(FusionData const &F, std::vector<Permutation> const &X);

/// Strong closure of Omega_1(S).
GeneratedGroup omega_bar(FusionData const &F);

/// Inclusion-minimal strong closures of <z>, one z per G-class of elements
/// of order p meeting S. Every nontrivial strongly closed subgroup contains
/// one of these.
std::vector<GeneratedGroup> minimal_strongly_closed(FusionData const &F);

/// Every strongly closed subgroup of S, by enumerating all subgroups of S.
/// Refuses when |S| exceeds caps.max_subgroup_enum. Sorted by order.
std::vector<GeneratedGroup> all_strongly_closed_brute(FusionData const &F);

/// Largest normal subgroup N of G with A ∩ N a Sylow p-subgroup of N.
GeneratedGroup script_O(GeneratedGroup const &G, GeneratedGroup const &A, std::uint64_t p,
                        Caps const &caps = default_caps());
GeneratedGroup script_O(std::vector<GeneratedGroup> const &normal_subgroups,
                        GeneratedGroup const &A, std::uint64_t p,
                        Caps const &caps = default_caps());

/// |A ∩ N| equals the p-part of |N|.
bool sylow_in(GeneratedGroup const &A, GeneratedGroup const &N, std::uint64_t p,
              Caps const &caps = default_caps());

enum class FusionMode
{
  Element,
  Cyclic,
  Subset
};

std::string to_string(FusionMode m);
FusionMode parse_fusion_mode(std::string const &s);

struct FusionVerdict
{
  FusionMode mode = FusionMode::Element;
  bool controls = true;
  std::optional<FusionWitness> witness;
};

/// Whether H (with S <= H <= G) controls G-fusion in S.
///  element: a^G ∩ S = a^H ∩ S for every a in S.
///  cyclic:  every G-induced map <a> -> S is induced by some h in H. Since
///           such a map is fixed by the image of a, this is the element
///           condition read through cyclic subgroups.
///  subset:  every G-induced map P -> S, over all subgroups P of S, is
///           induced by some h in H. Needs |S| <= caps.max_subgroup_enum.
FusionVerdict fusion_control(FusionData const &F, GeneratedGroup const &H, FusionMode mode);

} // namespace sclosure

#endif // SCLOSURE_STRONG_CLOSURE_H
