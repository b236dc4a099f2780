#ifndef SCLOSURE_FINITE_FIELD_H
#define SCLOSURE_FINITE_FIELD_H

#include <cstdint>
#include <string>
#include <vector>

namespace sclosure
{

using Elt = std::uint32_t;

/**
 * GF(p^n) with elements encoded as integers 0..q-1, the base-p digits being
 * the coefficients of a polynomial in x reduced modulo `modulus`. Zero is 0,
 * one is 1, and for n = 1 the encoding is the residue itself.
 */
class FieldSpec
{
public:
  FieldSpec(std::uint64_t p, unsigned n);

  std::uint64_t p() const { return p_; }
  unsigned n() const { return n_; }
  std::uint64_t q() const { return q_; }

  /// Coefficients of the monic modulus, constant term first (size n+1).
  std::vector<std::uint32_t> const &modulus() const { return modulus_; }
  std::string modulus_str() const;

  Elt add(Elt a, Elt b) const;
  Elt sub(Elt a, Elt b) const;
  Elt neg(Elt a) const;
  Elt mul(Elt a, Elt b) const;
  Elt inv(Elt a) const;
  Elt pow(Elt a, std::uint64_t e) const;

  /// A fixed generator of the multiplicative group.
  Elt primitive() const { return primitive_; }

  /// The element whose digit vector is the F_p-basis vector x^k.
  Elt basis(unsigned k) const;

  /// Prime-field element c as a field element.
  Elt from_int(std::int64_t c) const;

private:
  std::uint64_t p_;
  unsigned n_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  Elt primitive_ = 1;
  std::vector<Elt> exp_;
  std::vector<std::uint32_t> log_;

  Elt poly_mul(Elt a, Elt b) const;
};

FieldSpec make_field(std::uint64_t p, unsigned n);

/// Whether the monic polynomial (constant term first) is irreducible over F_p.
bool is_irreducible(std::vector<std::uint32_t> const &poly, std::uint64_t p);

/// Splits q = p^n; throws InputError if q is not a prime power.
std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q);

} // namespace sclosure

#endif // SCLOSURE_FINITE_FIELD_H
