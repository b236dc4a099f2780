#include "sclosure/finite_field.h"

#include <sstream>

#include "sclosure/errors.h"
#include "sclosure/group.h"

namespace sclosure
{

namespace
{

using Poly = std::vector<std::int64_t>;

// remainder of a modulo monic b over F_p; both constant term first
Poly poly_rem(Poly a, Poly const &b, std::int64_t p)
{
  std::size_t db = b.size() - 1;
  while (a.size() > db) {
    std::int64_t lead = a.back() % p;
    std::size_t shift = a.size() - 1 - db;
    if (lead != 0)
      for (std::size_t i = 0; i <= db; ++i)
        a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p) % p;
    a.pop_back();
  }
  return a;
}

bool is_zero(Poly const &a)
{
  for (auto c : a)
    if (c != 0)
      return false;
  return true;
}

} // namespace

bool is_irreducible(std::vector<std::uint32_t> const &poly, std::uint64_t p)
{
  std::size_t n = poly.size() - 1;
  if (n == 0 || poly.back() != 1)
    return false;
  if (n == 1)
    return true;
  Poly f(poly.begin(), poly.end());
  auto P = static_cast<std::int64_t>(p);
  for (std::size_t d = 1; d <= n / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i)
      count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly g(d + 1, 0);
      g[d] = 1;
      std::uint64_t v = c;
      for (std::size_t i = 0; i < d; ++i, v /= p)
        g[i] = static_cast<std::int64_t>(v % p);
      if (is_zero(poly_rem(f, g, P)))
        return false;
    }
  }
  return true;
}

std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q)
{
  if (q < 2)
    throw InputError("not a prime power: " + std::to_string(q));
  auto ps = prime_divisors(BigInt(q));
  if (ps.size() != 1)
    throw InputError("not a prime power: " + std::to_string(q));
  unsigned n = 0;
  for (std::uint64_t m = q; m > 1; m /= ps[0])
    ++n;
  return {ps[0], n};
}

FieldSpec::FieldSpec(std::uint64_t p, unsigned n) : p_(p), n_(n), q_(1)
{
  if (!is_prime(p))
    throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  if (n < 1)
    throw InputError("field degree must be at least 1");
  for (unsigned i = 0; i < n; ++i) {
    q_ *= p;
    if (q_ > 65536)
      throw InputError("field order exceeds 2^16");
  }

  // lex-least monic irreducible, comparing x^(n-1) coefficient first: that
  // is numeric order of the digit encoding
  modulus_.assign(n + 1, 0);
  modulus_[n] = 1;
  if (n > 1) {
    bool found = false;
    for (std::uint64_t c = 0; c < q_ && !found; ++c) {
      std::uint64_t v = c;
      for (unsigned i = 0; i < n; ++i, v /= p)
        modulus_[i] = static_cast<std::uint32_t>(v % p);
      found = is_irreducible(modulus_, p);
    }
    if (!found)
      throw VerificationFailure("no irreducible polynomial found");
  }

  // log tables from the least primitive element
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  for (Elt g = (q_ == 2 ? 1 : 2); g < q_; ++g) {
    Elt x = 1;
    std::uint64_t k = 0;
    do {
      exp_[k++] = x;
      x = poly_mul(x, g);
    } while (x != 1 && k < q_ - 1);
    if (x == 1 && k == q_ - 1) {
      primitive_ = g;
      break;
    }
  }
  for (std::uint64_t k = 0; k < q_ - 1; ++k)
    log_[exp_[k]] = static_cast<std::uint32_t>(k);
}

Elt FieldSpec::poly_mul(Elt a, Elt b) const
{
  if (n_ == 1)
    return static_cast<Elt>((std::uint64_t(a) * b) % p_);
  Poly x(n_), y(n_), r(2 * n_ - 1, 0);
  for (unsigned i = 0; i < n_; ++i, a /= p_, b /= p_) {
    x[i] = a % p_;
    y[i] = b % p_;
  }
  auto P = static_cast<std::int64_t>(p_);
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned j = 0; j < n_; ++j)
      r[i + j] = (r[i + j] + x[i] * y[j]) % P;
  Poly m(modulus_.begin(), modulus_.end());
  r = poly_rem(r, m, P);
  Elt out = 0;
  for (std::size_t i = r.size(); i-- > 0;)
    out = static_cast<Elt>(out * p_ + static_cast<std::uint64_t>(r[i]));
  return out;
}

Elt FieldSpec::add(Elt a, Elt b) const
{
  if (p_ == 2)
    return a ^ b;
  if (n_ == 1)
    return static_cast<Elt>((std::uint64_t(a) + b) % p_);
  Elt out = 0, scale = 1;
  for (unsigned i = 0; i < n_; ++i, a /= p_, b /= p_, scale *= p_)
    out += static_cast<Elt>(((a % p_) + (b % p_)) % p_) * scale;
  return out;
}

Elt FieldSpec::neg(Elt a) const
{
  if (p_ == 2)
    return a;
  Elt out = 0, scale = 1;
  for (unsigned i = 0; i < n_; ++i, a /= p_, scale *= p_)
    out += static_cast<Elt>((p_ - a % p_) % p_) * scale;
  return out;
}

Elt FieldSpec::sub(Elt a, Elt b) const { return add(a, neg(b)); }

Elt FieldSpec::mul(Elt a, Elt b) const
{
  if (a == 0 || b == 0)
    return 0;
  return exp_[(std::uint64_t(log_[a]) + log_[b]) % (q_ - 1)];
}

Elt FieldSpec::inv(Elt a) const
{
  if (a == 0)
    throw std::domain_error("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elt FieldSpec::pow(Elt a, std::uint64_t e) const
{
  if (e == 0)
    return 1;
  if (a == 0)
    return 0;
  return exp_[(log_[a] * (e % (q_ - 1))) % (q_ - 1)];
}

Elt FieldSpec::basis(unsigned k) const
{
  Elt v = 1;
  for (unsigned i = 0; i < k; ++i)
    v = static_cast<Elt>(v * p_);
  return v;
}

Elt FieldSpec::from_int(std::int64_t c) const
{
  auto P = static_cast<std::int64_t>(p_);
  return static_cast<Elt>(((c % P) + P) % P);
}

std::string FieldSpec::modulus_str() const
{
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = modulus_.size(); i-- > 0;) {
    std::uint32_t c = modulus_[i];
    if (c == 0)
      continue;
    if (!first)
      os << " + ";
    first = false;
    if (i == 0 || c != 1)
      os << c;
    if (i >= 1)
      os << "x";
    if (i >= 2)
      os << "^" << i;
  }
  if (first)
    os << "0";
  return os.str();
}

FieldSpec make_field(std::uint64_t p, unsigned n) { return FieldSpec(p, n); }

} // namespace sclosure
