#ifndef SCLOSURE_EXTENSIONS_H
#define SCLOSURE_EXTENSIONS_H

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sclosure/fp_module.h"

namespace sclosure
{

/**
 * Extension 1 -> E -> G -> R -> 1 of an F_p[R]-module E by R, stored as
 * pairs (e, r) with
 *
 *   (e1, r1)(e2, r2) = (e1 + r1.e2 + c(r1, r2), r1 r2),
 *
 * where r.e = e M(r^-1) is the left action derived from the right module M,
 * and c is a normalized 2-cocycle (absent for split extensions).
 */
class ExtensionGroup
{
public:
  struct Element
  {
    FpVec e;
    Permutation r;
    friend bool operator==(Element const &, Element const &) = default;
  };

  using Cocycle = std::function<FpVec(Permutation const &, Permutation const &)>;

  ExtensionGroup(FpModule M, Cocycle c);

  FpModule const &module() const { return M_; }
  GeneratedGroup const &R() const { return M_.group; }
  std::uint64_t p() const { return M_.p; }
  std::size_t dim() const { return M_.dim; }
  bool is_split() const { return !c_; }
  BigInt order() const;

  FpVec left_act(Permutation const &r, FpVec const &e) const;
  FpVec cocycle(Permutation const &r, Permutation const &s) const;

  Element identity() const;
  Element mul(Element const &a, Element const &b) const;
  Element inverse(Element const &a) const;
  Element pow(Element const &a, std::uint64_t k) const;
  /// g^-1 a g.
  Element conjugate(Element const &a, Element const &g) const;
  std::uint64_t element_order(Element const &a) const;

  /// r.c(s,t) + c(r,st) == c(rs,t) + c(r,s).
  bool cocycle_identity(Permutation const &r, Permutation const &s,
                        Permutation const &t) const;

  /// Every element, (e, r) with e in lexicographic order inside r in rank
  /// order. Refuses beyond `cap` elements.
  std::vector<Element> elements(std::uint64_t cap) const;

private:
  FpModule M_;
  Cocycle c_;
};

/// E x| R with zero cocycle.
ExtensionGroup split_extension(FpModule M);

/// Right cosets X\R with representatives tau, and r = x^u tau.
struct Transversal
{
  GeneratedGroup R;
  GeneratedGroup X;
  Permutation x;
  std::uint64_t p = 0;
  std::shared_ptr<RightCosets const> cosets;

  std::vector<Permutation> const &reps() const { return cosets->representatives(); }
  /// (u, coset index) with r = x^u * reps[index].
  std::pair<std::uint32_t, std::size_t> decompose(Permutation const &r) const;
};

/// Coset action and transversal exponents u(w, r) for every r in R, indexed
/// by rank: tau_w r = x^{u(w,r)} tau_{w r}.
class CosetTable
{
public:
  CosetTable(Transversal t, Caps const &caps = default_caps());

  Transversal const &transversal() const { return t_; }
  std::size_t size() const { return n_; }
  std::uint32_t const *image(Permutation const &r) const;
  std::uint8_t const *exponents(Permutation const &r) const;

private:
  std::uint64_t rank_of(Permutation const &r) const;
  Transversal t_;
  std::size_t n_ = 0;
  std::vector<std::uint32_t> image_;
  std::vector<std::uint8_t> u_;
};

struct ShapiroData
{
  std::shared_ptr<CosetTable const> table;
  FpModule module;
  ExtensionGroup::Cocycle cocycle;
};

/// Carry cocycle of Z/p^2 over Z/p, transferred to R along X\R:
///   c(s,t)(w) = floor((u(w,s) + u(ws,t)) / p)
/// on the permutation module of R on X\R. The identity is checked on
/// triples built from the generators of R before returning; a failure
/// throws VerificationFailure.
ShapiroData shapiro_cocycle(GeneratedGroup const &R, Permutation const &x, std::uint64_t p,
                            Caps const &caps = default_caps());

ExtensionGroup coinduced_extension(ShapiroData const &data);

struct CosetPower
{
  /// 1, p or p^2: the least element order in the coset (e, r), e in E.
  std::uint64_t min_order = 1;
  /// Constant term of (e, r)^p = (Norm_r(e) + C_r, 1).
  FpVec C;
  /// Some e with (e, r)^p = 1 when min_order is p.
  std::optional<FpVec> witness;
};

/// Minimal order over the coset of r, by solving Norm_r(e) = -C_r.
CosetPower coset_min_order(ExtensionGroup const &G, Permutation const &r);

struct CocycleCheck
{
  std::uint64_t triples = 0;
  std::uint64_t failures = 0;
  bool exhaustive = false;
  bool normalized = true;
};

/// Exhaustive when |R|^3 <= exhaustive_limit; otherwise all triples of
/// generators and their pairwise products, plus `samples` random triples.
CocycleCheck check_cocycle(ExtensionGroup const &G, std::uint64_t samples,
                           std::uint64_t seed = 20240611,
                           std::uint64_t exhaustive_limit = 1'000'000);

/// Element orders of G as (order, count), sorted.
std::vector<std::pair<std::uint64_t, std::uint64_t>> order_census(ExtensionGroup const &G,
                                                                  std::uint64_t cap);

/// G acting on itself by right multiplication (degree |G|).
GeneratedGroup regular_realization(ExtensionGroup const &G, std::uint64_t cap = 10'000);

/// For a split extension of a permutation module: (i, a)^(e, r) =
/// (i r, a + e_i) on dim * p points. Throws if R does not act faithfully.
GeneratedGroup wreath_realization(ExtensionGroup const &G);

struct Prop41Witness
{
  FpVec z;
  Permutation r;
  FpVec rz;
  ExtensionGroup::Element a, b, g;
  bool replays = false;
};

struct Prop41Report
{
  std::uint64_t p = 0;
  BigInt R_order, T_order, omega_bar_T_order, kernel_order, S_order, omega_bar_S_bound;
  bool generated_by_p_elements = false;
  bool omega_bar_T_proper = false;
  bool quotient_not_p_group = false;
  bool preconditions = false;
  std::string failing;
  std::size_t fixed_dim = 0;
  std::optional<Prop41Witness> witness;
  bool ok = false;
};

/// Split extension E x| R with R generated by order-p elements, omega-bar(T)
/// proper in T, R/C_R(E) not a p-group: N_G(S) does not control fusion.
Prop41Report verify_prop41(FpModule const &M, Caps const &caps = default_caps());

struct ZReport
{
  Permutation z;
  bool conjugate_into_X = false;
  std::uint64_t min_order = 0;
  std::optional<FpVec> witness;
  bool witness_replays = false;
  bool free = false;
  std::size_t regular_orbits = 0;
};

struct Prop42Report
{
  std::uint64_t p = 0;
  BigInt R_order;
  std::size_t dim = 0;
  CocycleCheck cocycle;
  std::uint64_t min_order_x = 0;
  bool C_x_E1_nonzero = false;
  std::size_t E1_dim = 0;
  std::size_t E1_expected = 0;
  std::size_t E2_regular_orbits = 0;
  std::vector<ZReport> z;
  bool ok = false;
};

/// Coinduced extension of R by Coind_X^R(F_p), X = <x>: nonsplit over X,
/// split over every listed <z> not conjugate into X.
Prop42Report verify_prop42(GeneratedGroup const &R, Permutation const &x,
                           std::vector<Permutation> const &zs, std::uint64_t p,
                           std::uint64_t samples = 100'000, Caps const &caps = default_caps());

} // namespace sclosure

#endif // SCLOSURE_EXTENSIONS_H
