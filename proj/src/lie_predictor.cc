#include "sclosure/lie_predictor.h"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <regex>
#include <set>

#include "sclosure/finite_field.h"
#include "sclosure/group.h"

namespace sclosure
{

namespace
{

// q^d - sign
struct Factor
{
  unsigned d;
  int sign;
};

BigInt qpow(std::uint64_t q, unsigned e)
{
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i)
    r *= q;
  return r;
}

BigInt eval(Factor f, std::uint64_t q) { return qpow(q, f.d) - f.sign; }

std::vector<unsigned> divisors(unsigned n)
{
  std::vector<unsigned> out;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0)
      out.push_back(d);
  return out;
}

int mobius(unsigned n)
{
  int mu = 1;
  for (unsigned p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      n /= p;
      if (n % p == 0)
        return 0;
      mu = -mu;
    }
  if (n > 1)
    mu = -mu;
  return mu;
}

unsigned positive_roots(char family, unsigned l)
{
  switch (family) {
  case 'A': return l * (l + 1) / 2;
  case 'B':
  case 'C': return l * l;
  case 'D': return l * (l - 1);
  case 'E': return l == 6 ? 36 : l == 7 ? 63 : 120;
  case 'F': return 24;
  case 'G': return 6;
  }
  return 0;
}

std::vector<unsigned> fundamental_degrees(char family, unsigned l)
{
  std::vector<unsigned> d;
  switch (family) {
  case 'A':
    for (unsigned i = 2; i <= l + 1; ++i)
      d.push_back(i);
    break;
  case 'B':
  case 'C':
    for (unsigned i = 1; i <= l; ++i)
      d.push_back(2 * i);
    break;
  case 'D':
    for (unsigned i = 1; i < l; ++i)
      d.push_back(2 * i);
    d.push_back(l);
    break;
  case 'E':
    if (l == 6)
      d = {2, 5, 6, 8, 9, 12};
    else if (l == 7)
      d = {2, 6, 8, 10, 12, 14, 18};
    else
      d = {2, 8, 12, 14, 18, 20, 24, 30};
    break;
  case 'F': d = {2, 6, 8, 12}; break;
  case 'G': d = {2, 6}; break;
  }
  return d;
}

// order formula as signed degree factors; 3D4 adds Phi_3 Phi_6 Phi_12 separately
std::vector<Factor> order_factors(char family, unsigned l, unsigned twist)
{
  if (twist == 2 && family == 'B')
    return {{2, -1}, {1, 1}};
  if (twist == 2 && family == 'G')
    return {{3, -1}, {1, 1}};
  if (twist == 2 && family == 'F')
    return {{6, -1}, {4, 1}, {3, -1}, {1, 1}};
  if (twist == 3)
    return {{2, 1}, {6, 1}};
  std::vector<Factor> out;
  bool first_d_l = true;
  for (unsigned d : fundamental_degrees(family, l)) {
    int sign = 1;
    if (twist == 2) {
      if (family == 'A')
        sign = d % 2 ? -1 : 1;
      else if (family == 'D' && d == l && first_d_l) {
        sign = -1;
        first_d_l = false;
      } else if (family == 'E')
        sign = (d == 5 || d == 9) ? -1 : 1;
    }
    out.push_back({d, sign});
  }
  return out;
}

unsigned order_only_N(char family)
{
  return family == 'B' ? 2 : family == 'G' ? 3 : 12;
}

unsigned mult_order(std::uint64_t q, std::uint64_t p)
{
  std::uint64_t x = q % p;
  unsigned k = 1;
  while (x != 1) {
    x = x * (q % p) % p;
    ++k;
  }
  return k;
}

std::uint64_t pow_mod(std::uint64_t b, unsigned e, std::uint64_t m)
{
  std::uint64_t r = 1 % m;
  for (unsigned i = 0; i < e; ++i)
    r = r * (b % m) % m;
  return r;
}

std::string to_str(BigInt const &x) { return x.str(); }

BigInt bigpow(std::uint64_t p, unsigned e) { return qpow(p, e); }

} // namespace

unsigned CyclotomicProfile::r_of(unsigned m) const
{
  auto it = r.find(m);
  return it == r.end() ? 0 : it->second;
}

bool LieSpec::order_only() const
{
  return twist == 2 && (family == 'B' || family == 'G' || family == 'F');
}

std::string LieSpec::name() const
{
  std::string s;
  if (twist > 1)
    s += std::to_string(twist);
  s += family;
  s += std::to_string(rank);
  s += "(" + std::to_string(q) + ")";
  return s;
}

LieSpec LieSpec::make(char family, unsigned rank, unsigned twist, std::uint64_t q)
{
  family = static_cast<char>(std::toupper(static_cast<unsigned char>(family)));
  auto bad = [&](std::string const &why) {
    return InputError("unsupported Lie type " + std::to_string(twist) + family +
                      std::to_string(rank) + ": " + why);
  };
  bool ok = false;
  switch (family) {
  case 'A': ok = rank >= 1; break;
  case 'B':
  case 'C': ok = rank >= 2; break;
  case 'D': ok = rank >= 4; break;
  case 'E': ok = rank >= 6 && rank <= 8; break;
  case 'F': ok = rank == 4; break;
  case 'G': ok = rank == 2; break;
  default: throw InputError(std::string("unknown Lie family '") + family + "'");
  }
  if (!ok)
    throw bad("rank out of range");
  if (twist == 2) {
    ok = (family == 'A' && rank >= 2) || family == 'D' || (family == 'E' && rank == 6) ||
         (family == 'B' && rank == 2) || family == 'G' || family == 'F';
  } else if (twist == 3) {
    ok = family == 'D' && rank == 4;
  } else {
    ok = twist == 1;
  }
  if (!ok)
    throw bad("twist not admissible");
  auto [p, n] = prime_power(q);
  LieSpec s{family, rank, twist, q};
  if (s.order_only()) {
    std::uint64_t want = family == 'G' ? 3 : 2;
    if (p != want || n % 2 == 0)
      throw bad("q must be an odd power of " + std::to_string(want));
  }
  return s;
}

LieSpec LieSpec::parse(std::string const &text)
{
  static std::regex const re(R"(\s*([123]?)\s*([A-Ga-g])\s*_?\s*(\d+)\s*\(\s*(\d+)\s*\)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re))
    throw InputError("cannot parse Lie type '" + text + "'");
  unsigned twist = m[1].length() ? static_cast<unsigned>(std::stoul(m[1])) : 1;
  return make(m[2].str()[0], static_cast<unsigned>(std::stoul(m[3])), twist,
              std::stoull(m[4]));
}

CyclotomicProfile cyclotomic_profile(char family, unsigned rank, unsigned twist)
{
  LieSpec spec = LieSpec::make(family, rank, twist, family == 'G' && twist == 2 ? 3 : 2);
  CyclotomicProfile prof;
  prof.order_only = spec.order_only();
  prof.N = prof.order_only ? order_only_N(spec.family) : positive_roots(spec.family, rank);
  for (Factor f : order_factors(spec.family, rank, twist)) {
    if (f.sign == 1) {
      for (unsigned m : divisors(f.d))
        ++prof.r[m];
    } else {
      for (unsigned m : divisors(2 * f.d))
        if (f.d % m != 0)
          ++prof.r[m];
    }
  }
  if (twist == 3)
    for (unsigned m : {3u, 6u, 12u})
      ++prof.r[m];
  return prof;
}

BigInt cyclotomic_value(unsigned m, std::uint64_t q)
{
  BigInt num = 1, den = 1;
  for (unsigned d : divisors(m)) {
    int mu = mobius(m / d);
    if (mu == 1)
      num *= qpow(q, d) - 1;
    else if (mu == -1)
      den *= qpow(q, d) - 1;
  }
  if (num % den != 0)
    throw VerificationFailure("cyclotomic value not integral");
  return num / den;
}

BigInt profile_order(CyclotomicProfile const &prof, std::uint64_t q)
{
  BigInt r = qpow(q, prof.N);
  for (auto [m, e] : prof.r)
    for (unsigned i = 0; i < e; ++i)
      r *= cyclotomic_value(m, q);
  return r;
}

BigInt classical_lie_order(LieSpec const &s)
{
  std::uint64_t q = s.q;
  unsigned l = s.rank;
  BigInt r = 1;
  auto prod = [&](std::initializer_list<Factor> fs) {
    for (Factor f : fs)
      r *= eval(f, q);
  };
  if (s.order_only()) {
    if (s.family == 'B') {
      r = qpow(q, 2);
      prod({{2, -1}, {1, 1}});
    } else if (s.family == 'G') {
      r = qpow(q, 3);
      prod({{3, -1}, {1, 1}});
    } else {
      r = qpow(q, 12);
      prod({{6, -1}, {4, 1}, {3, -1}, {1, 1}});
    }
    return r;
  }
  switch (s.family) {
  case 'A': {
    unsigned n = l + 1;
    if (s.twist == 1) {
      // |GL_n| / (q - 1)
      for (unsigned i = 0; i < n; ++i)
        r *= qpow(q, n) - qpow(q, i);
      r /= q - 1;
    } else {
      // |GU_n| / (q + 1)
      r = qpow(q, n * (n - 1) / 2);
      for (unsigned i = 1; i <= n; ++i)
        r *= qpow(q, i) - (i % 2 ? BigInt(-1) : BigInt(1));
      r /= q + 1;
    }
    return r;
  }
  case 'B':
  case 'C':
    r = qpow(q, l * l);
    for (unsigned i = 1; i <= l; ++i)
      r *= qpow(q, 2 * i) - 1;
    return r;
  case 'D':
    if (s.twist == 3) {
      r = qpow(q, 12) * (qpow(q, 8) + qpow(q, 4) + 1);
      prod({{6, 1}, {2, 1}});
      return r;
    }
    r = qpow(q, l * (l - 1)) * (qpow(q, l) - (s.twist == 2 ? -1 : 1));
    for (unsigned i = 1; i < l; ++i)
      r *= qpow(q, 2 * i) - 1;
    return r;
  case 'G':
    r = qpow(q, 6);
    prod({{6, 1}, {2, 1}});
    return r;
  case 'F':
    r = qpow(q, 24);
    prod({{12, 1}, {8, 1}, {6, 1}, {2, 1}});
    return r;
  case 'E':
    if (l == 6) {
      int e = s.twist == 2 ? -1 : 1;
      r = qpow(q, 36);
      prod({{12, 1}, {9, e}, {8, 1}, {6, 1}, {5, e}, {2, 1}});
    } else if (l == 7) {
      r = qpow(q, 63);
      prod({{18, 1}, {14, 1}, {12, 1}, {10, 1}, {8, 1}, {6, 1}, {2, 1}});
    } else {
      r = qpow(q, 120);
      prod({{30, 1}, {24, 1}, {20, 1}, {18, 1}, {14, 1}, {12, 1}, {8, 1}, {2, 1}});
    }
    return r;
  }
  throw InputError("classical_lie_order: unsupported family");
}

std::uint64_t generic_multiplier(LieSpec const &s)
{
  std::uint64_t q = s.q;
  unsigned l = s.rank;
  switch (s.family) {
  case 'A':
    return s.twist == 1 ? std::gcd<std::uint64_t>(l + 1, q - 1)
                        : std::gcd<std::uint64_t>(l + 1, q + 1);
  case 'B':
    if (s.twist == 2)
      return 1;
    [[fallthrough]];
  case 'C': return std::gcd<std::uint64_t>(2, q - 1);
  case 'D':
    if (s.twist == 3)
      return 1;
    return std::gcd<std::uint64_t>(4, (pow_mod(q, l, 4) + (s.twist == 2 ? 1 : 3)) % 4);
  case 'E':
    if (l == 6)
      return s.twist == 1 ? std::gcd<std::uint64_t>(3, q - 1) : std::gcd<std::uint64_t>(3, q + 1);
    if (l == 7)
      return std::gcd<std::uint64_t>(2, q - 1);
    return 1;
  }
  return 1;
}

std::vector<BigInt> SylowShape::invariants() const
{
  if (!homocyclic)
    return {};
  return std::vector<BigInt>(rank, exponent);
}

std::string SylowShape::describe() const
{
  if (order_only)
    return "order " + to_str(order) + " (shape not predicted)";
  if (special_case)
    return *special_case;
  if (order == 1)
    return "trivial";
  if (m0 == 0)
    return "cyclic of order " + to_str(order);
  std::string s = "torus part (" + to_str(exponent) + ")^" + std::to_string(rank);
  if (b > 0)
    s += " extended by a Weyl part of order " + std::to_string(p) + "^" + std::to_string(b);
  else
    s += ", abelian homocyclic";
  return s + "; order " + to_str(order);
}

SylowShape sylow_shape(LieSpec const &spec, std::uint64_t p)
{
  if (!is_prime(p))
    throw InputError("sylow_shape: " + std::to_string(p) + " is not prime");
  if (spec.q % p == 0)
    throw InputError("sylow_shape: p = " + std::to_string(p) + " is the defining characteristic of " +
                     spec.name());
  SylowShape sh;
  sh.p = p;
  BigInt full = p_part(classical_lie_order(spec), p);
  if (spec.order_only()) {
    sh.order = full;
    // Odd Sylows of Sz(q), and those of 2G2(q) for p >= 5, lie in a cyclic
    // maximal torus, so the order is the whole story there.
    bool cyclic = (spec.family == 'B' && p != 2) || (spec.family == 'G' && p >= 5);
    if (cyclic) {
      sh.rank = full > 1 ? 1 : 0;
      sh.exponent = full;
      sh.abelian = sh.homocyclic = true;
    } else {
      sh.order_only = true;
      sh.abelian = sh.homocyclic = false;
    }
    return sh;
  }
  CyclotomicProfile prof = cyclotomic_profile(spec.family, spec.rank, spec.twist);
  if (profile_order(prof, spec.q) != classical_lie_order(spec))
    throw VerificationFailure("cyclotomic profile disagrees with order formula for " + spec.name());

  if (p == 2) {
    sh.m0 = (spec.q % 4 == 1) ? 1 : 2;
    sh.exponent = p_part(cyclotomic_value(sh.m0, spec.q), 2);
    sh.rank = prof.r_of(sh.m0);
    unsigned b = 0;
    for (auto [m, e] : prof.r)
      if (m != sh.m0)
        b += e * valuation(cyclotomic_value(m, spec.q), 2);
    sh.b = b;
  } else {
    sh.m0 = mult_order(spec.q, p);
    sh.exponent = p_part(cyclotomic_value(sh.m0, spec.q), p);
    sh.rank = prof.r_of(sh.m0);
    unsigned b = 0;
    for (std::uint64_t m = p * sh.m0; m <= 64; m *= p)
      b += prof.r_of(static_cast<unsigned>(m));
    sh.b = b;
  }
  sh.order = pow(sh.exponent, sh.rank) * bigpow(p, sh.b);
  if (sh.order != full)
    throw VerificationFailure("Sylow order prediction " + to_str(sh.order) +
                              " disagrees with the order formula p-part " + to_str(full));
  sh.abelian = sh.b == 0;
  sh.homocyclic = sh.abelian;

  if (spec.family == 'D' && spec.twist == 3 && p == 3) {
    unsigned a = valuation(qpow(spec.q, 2) - 1, 3);
    sh.abelian = sh.homocyclic = false;
    sh.special_case = "3D4 at p = 3: abelian (" + to_str(bigpow(3, a + 1)) + "," +
                      to_str(bigpow(3, a)) + ") extended by 3; order " + to_str(sh.order);
    if (bigpow(3, 2 * a + 2) != sh.order)
      throw VerificationFailure("3D4 Sylow 3-subgroup order mismatch");
  }
  return sh;
}

std::vector<Table3ARow> table3A_rows(char family, unsigned rank, unsigned twist, std::uint64_t p)
{
  CyclotomicProfile prof = cyclotomic_profile(family, rank, twist);
  std::vector<Table3ARow> rows;
  for (unsigned m0 : divisors(static_cast<unsigned>(p - 1))) {
    unsigned b = 0;
    for (std::uint64_t m = p * m0; m <= 64; m *= p)
      b += prof.r_of(static_cast<unsigned>(m));
    if (b == 0)
      continue;
    std::uint64_t pb = 1;
    for (unsigned i = 0; i < b; ++i)
      pb *= p;
    rows.push_back({m0, prof.r_of(m0), pb});
  }
  return rows;
}

std::vector<Table3AEntry> const &table3A_reference()
{
  static std::vector<Table3AEntry> const t = {
    {"3D4", 3, {{1, 2, 9}, {2, 2, 9}}},
    {"G2", 3, {{1, 2, 3}, {2, 2, 3}}},
    {"F4", 3, {{1, 4, 9}, {2, 4, 9}}},
    {"2F4", 3, {{2, 2, 3}}},
    {"E6", 3, {{1, 6, 81}, {2, 4, 9}}},
    {"E6", 5, {{1, 6, 5}}},
    {"2E6", 3, {{1, 4, 9}, {2, 6, 81}}},
    {"2E6", 5, {{2, 6, 5}}},
    {"E7", 3, {{1, 7, 81}, {2, 7, 81}}},
    {"E7", 5, {{1, 7, 5}, {2, 7, 5}}},
    {"E7", 7, {{1, 7, 7}, {2, 7, 7}}},
    {"E8", 3, {{1, 8, 243}, {2, 8, 243}}},
    {"E8", 5, {{1, 8, 25}, {2, 8, 25}, {4, 4, 5}}},
    {"E8", 7, {{1, 8, 7}, {2, 8, 7}}},
  };
  return t;
}

namespace
{

Verdict no_verdict(std::string input, std::uint64_t p)
{
  Verdict v;
  v.input = std::move(input);
  v.p = p;
  return v;
}

bool not_simple(LieSpec const &s)
{
  std::string n = s.name();
  static std::set<std::string> const small = {"A1(2)", "A1(3)", "2A2(2)", "B2(2)", "C2(2)",
                                              "G2(2)", "2B2(2)", "2G2(3)"};
  return small.count(n) > 0;
}

Verdict defining_characteristic(LieSpec const &s, std::uint64_t p)
{
  Verdict v = no_verdict(s.name(), p);
  std::string tag = p == 2 ? "p2" : "ii";
  if (s.family == 'A' && s.twist == 2 && s.rank == 2) {
    v.has_proper_strongly_closed = true;
    v.conclusion = tag;
    v.shapes.push_back({"Z(S), elementary abelian", BigInt(s.q), 0, BigInt(p)});
  } else if (s.family == 'B' && s.twist == 2 && p == 2) {
    v.has_proper_strongly_closed = true;
    v.conclusion = tag;
    v.shapes.push_back({"Z(S), elementary abelian", BigInt(s.q), 0, BigInt(2)});
  } else if (s.family == 'G' && s.twist == 2 && p == 3) {
    v.has_proper_strongly_closed = true;
    v.conclusion = tag;
    v.shapes.push_back({"Z(S), elementary abelian", BigInt(s.q), 0, BigInt(3)});
    v.shapes.push_back({"S', elementary abelian", BigInt(s.q) * s.q, 0, BigInt(3)});
  }
  if (v.has_proper_strongly_closed) {
    for (auto &sh : v.shapes)
      sh.rank = valuation(sh.order, p);
    v.annotation = "D and A_F act trivially on L";
  }
  return v;
}

} // namespace

Verdict strongly_closed_verdict(LieSpec const &s, std::uint64_t p)
{
  if (!is_prime(p))
    throw InputError("verdict: " + std::to_string(p) + " is not prime");
  if (not_simple(s))
    throw InputError("verdict: " + s.name() + " is not simple");
  if (s.q % p == 0)
    return defining_characteristic(s, p);

  Verdict v = no_verdict(s.name(), p);
  SylowShape sh = sylow_shape(s, p);
  if (sh.order_only)
    throw InputError("verdict: no Sylow shape for " + s.name() + " at p = " + std::to_string(p));
  v.shape = sh;
  if (p == 2)
    return v;
  if (s.family == 'G' && s.twist == 1 && p == 3) {
    v.has_proper_strongly_closed = true;
    v.conclusion = "iii";
    v.shapes.push_back({"order 3", BigInt(3), 1, BigInt(3)});
    v.annotation = "D and A_F act trivially on L";
    return v;
  }
  BigInt p2 = BigInt(p) * p;
  if (sh.abelian && !sh.special_case && sh.rank > 0 && sh.exponent >= p2) {
    if (generic_multiplier(s) % p == 0)
      throw VerificationFailure("abelian non-elementary Sylow " + std::to_string(p) +
                                "-subgroup while p divides the multiplier of " + s.name());
    v.has_proper_strongly_closed = true;
    v.conclusion = "i";
    for (BigInt e = p; e < sh.exponent; e *= p)
      v.shapes.push_back({"homocyclic (" + to_str(e) + ")^" + std::to_string(sh.rank),
                          pow(e, sh.rank), sh.rank, e});
    v.annotation = "D/(D ∩ L C(L)) cyclic p'-group of outer diagonal automorphisms; "
                   "A_F acts as cyclic field automorphisms";
  }
  return v;
}

Verdict strongly_closed_verdict(std::string const &raw, std::uint64_t p)
{
  if (!is_prime(p))
    throw InputError("verdict: " + std::to_string(p) + " is not prime");
  std::string name;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c)))
      name += c;
  if (name == "none")
    return no_verdict(name, p);

  static std::set<std::string> const sporadic = {
    "M11", "M12", "M22", "M23", "M24", "J1",  "J2",   "J3",    "J4",  "HS",  "Mc",
    "McL", "He",  "Ru",  "Suz", "ON",  "Co1", "Co2",  "Co3",   "Fi22", "Fi23", "Fi24'",
    "HN",  "Ly",  "Th",  "B",   "M"};
  if (sporadic.count(name)) {
    Verdict v = no_verdict(name, p);
    std::string n = name == "McL" ? "Mc" : name;
    bool iv = (p == 3 && n == "J2") ||
              (p == 5 && (n == "Co3" || n == "Co2" || n == "HS" || n == "Mc")) ||
              (p == 11 && n == "J4");
    if (iv) {
      v.has_proper_strongly_closed = true;
      v.conclusion = "iv";
      v.shapes.push_back({"order " + std::to_string(p), BigInt(p), 1, BigInt(p)});
    } else if (p == 3 && n == "J3") {
      v.has_proper_strongly_closed = true;
      v.conclusion = "v";
      v.shapes.push_back({"Z(S), elementary abelian", BigInt(9), 2, BigInt(3)});
      v.shapes.push_back({"S', elementary abelian", BigInt(27), 3, BigInt(3)});
    }
    if (v.has_proper_strongly_closed)
      v.annotation = "D and A_F act trivially on L";
    return v;
  }

  std::smatch m;
  static std::regex const alt(R"((?:A|Alt)(\d+))");
  if (std::regex_match(name, m, alt)) {
    if (std::stoul(m[1]) < 5)
      throw InputError("verdict: A" + m[1].str() + " is not simple");
    return no_verdict(name, p);
  }
  static std::regex const named(R"((U3|Sz|Re|G2|L2|PSL2|L3|PSL3)\((\d+)\))");
  if (std::regex_match(name, m, named)) {
    std::string f = m[1];
    std::uint64_t q = std::stoull(m[2]);
    LieSpec s;
    if (f == "U3")
      s = LieSpec::make('A', 2, 2, q);
    else if (f == "Sz")
      s = LieSpec::make('B', 2, 2, q);
    else if (f == "Re")
      s = LieSpec::make('G', 2, 2, q);
    else if (f == "G2")
      s = LieSpec::make('G', 2, 1, q);
    else if (f == "L2" || f == "PSL2")
      s = LieSpec::make('A', 1, 1, q);
    else
      s = LieSpec::make('A', 2, 1, q);
    Verdict v = strongly_closed_verdict(s, p);
    v.input = name;
    return v;
  }
  try {
    Verdict v = strongly_closed_verdict(LieSpec::parse(name), p);
    v.input = name;
    return v;
  } catch (InputError const &) {
    throw InputError("verdict: unrecognized group '" + raw + "'");
  }
}

} // namespace sclosure
