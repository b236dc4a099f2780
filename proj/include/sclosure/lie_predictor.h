#ifndef SCLOSURE_LIE_PREDICTOR_H
#define SCLOSURE_LIE_PREDICTOR_H

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sclosure/errors.h"

namespace sclosure
{

/// Family letter, rank and twist of a group of Lie type, plus q.
/// Supported: A_l, B_l, C_l, D_l, E6-8, F4, G2; twisted 2A_l (l >= 2),
/// 2D_l (l >= 4), 3D4, 2E6; order-only 2B2, 2G2, 2F4.
struct LieSpec
{
  char family = 'A';
  unsigned rank = 1;
  unsigned twist = 1;
  std::uint64_t q = 2;

  /// Accepts "A1", "2A2", "3D4", "E8", optionally followed by "(q)".
  static LieSpec parse(std::string const &text);
  /// Throws InputError if family, rank, twist or q is unsupported.
  static LieSpec make(char family, unsigned rank, unsigned twist, std::uint64_t q);

  bool order_only() const;
  std::string name() const;
};

/// |L(q)| = q^N * prod_m Phi_m(q)^{r_m}.
struct CyclotomicProfile
{
  unsigned N = 0;
  std::map<unsigned, unsigned> r;
  /// Suzuki and Ree families: no cyclotomic split, only the order formula.
  bool order_only = false;

  unsigned r_of(unsigned m) const;
};

CyclotomicProfile cyclotomic_profile(char family, unsigned rank, unsigned twist);

/// Phi_m(q) as an exact integer.
BigInt cyclotomic_value(unsigned m, std::uint64_t q);

/// q^N prod Phi_m(q)^{r_m}. For the Suzuki and Ree families this is the
/// coarse split of their order formula in q.
BigInt profile_order(CyclotomicProfile const &prof, std::uint64_t q);

/// Order of the universal group from the textbook product formula.
BigInt classical_lie_order(LieSpec const &spec);

/// Order of the centre of the universal group (the generic multiplier).
std::uint64_t generic_multiplier(LieSpec const &spec);

struct SylowShape
{
  std::uint64_t p = 0;
  unsigned m0 = 0;
  /// p-part of Phi_{m0}(q).
  BigInt exponent = 1;
  unsigned rank = 0;
  unsigned b = 0;
  BigInt order = 1;
  bool abelian = true;
  bool homocyclic = true;
  /// Set for 3D4 at p = 3, where the torus part is (3^{a+1}, 3^a).
  std::optional<std::string> special_case;
  /// Order-only families: only `order` is meaningful.
  bool order_only = false;

  /// rank copies of exponent when homocyclic.
  std::vector<BigInt> invariants() const;
  std::string describe() const;
};

/// Sylow p-subgroup of the universal group in characteristic not p.
/// For p = 2 the torus factor is the one of Phi_1, Phi_2 divisible by 4 and
/// every other 2-part goes to b.
SylowShape sylow_shape(LieSpec const &spec, std::uint64_t p);

struct Table3ARow
{
  unsigned m0 = 0;
  unsigned r_m0 = 0;
  std::uint64_t p_b = 1;
  friend bool operator==(Table3ARow const &, Table3ARow const &) = default;
};

/// Rows (m0, r_{m0}, p^b) over the m0 dividing p - 1 for which b > 0.
std::vector<Table3ARow> table3A_rows(char family, unsigned rank, unsigned twist, std::uint64_t p);

struct Table3AEntry
{
  std::string family;
  std::uint64_t p;
  std::vector<Table3ARow> rows;
};

/// The published table, embedded verbatim.
std::vector<Table3AEntry> const &table3A_reference();

/// One admissible strongly closed subgroup A of a component L.
struct AdmissibleShape
{
  std::string description;
  BigInt order;
  unsigned rank = 0;
  BigInt exponent = 0;
};

struct Verdict
{
  std::string input;
  std::uint64_t p = 0;
  bool has_proper_strongly_closed = false;
  /// "i" .. "v", or empty when there is no proper nontrivial A.
  std::string conclusion;
  std::vector<AdmissibleShape> shapes;
  /// How D and A_F act, as text. Never computed.
  std::string annotation;
  std::optional<SylowShape> shape;
};

/// Verdict for a Lie-type group (cross or defining characteristic).
Verdict strongly_closed_verdict(LieSpec const &spec, std::uint64_t p);

/// Verdict for a named group: "J2", "Co3", "A9" (alternating), "U3(8)",
/// "Sz(8)", "Re(27)", "G2(4)", a Lie name as accepted by LieSpec::parse with
/// "(q)", or "none".
Verdict strongly_closed_verdict(std::string const &name, std::uint64_t p);

} // namespace sclosure

#endif // SCLOSURE_LIE_PREDICTOR_H
