#include "sclosure/matrix_groups.h"

#include <numeric>
#include <regex>
#include <sstream>

namespace sclosure
{

FMatrix FMatrix::identity(std::size_t dim)
{
  FMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    m(i, i) = 1;
  return m;
}

FMatrix mat_mul(FieldSpec const &F, FMatrix const &A, FMatrix const &B)
{
  FMatrix C(A.n);
  for (std::size_t i = 0; i < A.n; ++i)
    for (std::size_t k = 0; k < A.n; ++k) {
      Elt a = A(i, k);
      if (a == 0)
        continue;
      for (std::size_t j = 0; j < A.n; ++j)
        C(i, j) = F.add(C(i, j), F.mul(a, B(k, j)));
    }
  return C;
}

Elt mat_det(FieldSpec const &F, FMatrix A)
{
  std::size_t n = A.n;
  Elt det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && A(piv, c) == 0)
      ++piv;
    if (piv == n)
      return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(A(piv, j), A(c, j));
      det = F.neg(det);
    }
    det = F.mul(det, A(c, c));
    Elt inv = F.inv(A(c, c));
    for (std::size_t r = c + 1; r < n; ++r) {
      Elt f = F.mul(A(r, c), inv);
      if (f == 0)
        continue;
      for (std::size_t j = c; j < n; ++j)
        A(r, j) = F.sub(A(r, j), F.mul(f, A(c, j)));
    }
  }
  return det;
}

FMatrix mat_transpose(FMatrix const &A)
{
  FMatrix T(A.n);
  for (std::size_t i = 0; i < A.n; ++i)
    for (std::size_t j = 0; j < A.n; ++j)
      T(j, i) = A(i, j);
  return T;
}

FMatrix mat_frobenius(FieldSpec const &F, FMatrix const &A, unsigned k)
{
  std::uint64_t e = 1;
  for (unsigned i = 0; i < k; ++i)
    e *= F.p();
  FMatrix B = A;
  for (auto &x : B.a)
    x = F.pow(x, e);
  return B;
}

namespace
{

bool has_form(Family f) { return f == Family::Sp4 || f == Family::SU3 || f == Family::PSU3; }
bool unitary(Family f) { return f == Family::SU3 || f == Family::PSU3; }

char const *family_name(Family f)
{
  switch (f) {
  case Family::GL: return "GL";
  case Family::SL: return "SL";
  case Family::PSL: return "PSL";
  case Family::Sp4: return "Sp";
  case Family::SU3: return "SU";
  case Family::PSU3: return "PSU";
  }
  return "?";
}

// conjugate transpose for the unitary case, transpose otherwise
FMatrix star(MatrixGroupSpec const &s, FMatrix const &M)
{
  FMatrix T = mat_transpose(M);
  if (unitary(s.family))
    T = mat_frobenius(*s.field, T, s.field->n() / 2);
  return T;
}

} // namespace

MatrixGroupSpec MatrixGroupSpec::make(Family family, std::size_t dimension, std::uint64_t q)
{
  auto [p, n] = prime_power(q);
  MatrixGroupSpec s;
  s.family = family;
  s.dimension = dimension;
  s.q = q;
  switch (family) {
  case Family::GL:
  case Family::SL:
    if (dimension < 1)
      throw InputError("dimension must be positive");
    s.field = std::make_shared<FieldSpec const>(p, n);
    s.default_action = Action::NonzeroVectors;
    break;
  case Family::PSL:
    if (dimension < 2)
      throw InputError("PSL needs dimension at least 2");
    s.field = std::make_shared<FieldSpec const>(p, n);
    s.default_action = Action::ProjectivePoints;
    break;
  case Family::Sp4: {
    if (dimension != 4)
      throw InputError("only Sp(4,q) is supported");
    s.field = std::make_shared<FieldSpec const>(p, n);
    // basis e1, e2, f2, f1
    FieldSpec const &F = *s.field;
    s.form = FMatrix(4);
    s.form(0, 3) = 1;
    s.form(1, 2) = 1;
    s.form(2, 1) = F.neg(1);
    s.form(3, 0) = F.neg(1);
    s.default_action = Action::NonzeroVectors;
    break;
  }
  case Family::SU3:
  case Family::PSU3:
    if (dimension != 3)
      throw InputError("only SU(3,q) is supported");
    s.field = std::make_shared<FieldSpec const>(p, 2 * n);
    s.form = FMatrix(3);
    s.form(0, 2) = s.form(1, 1) = s.form(2, 0) = 1;
    s.default_action =
      family == Family::SU3 ? Action::NonzeroVectors : Action::IsotropicPoints;
    break;
  }
  return s;
}

MatrixGroupSpec MatrixGroupSpec::parse(std::string const &text)
{
  static std::regex const re(
    R"(\s*(GL|SL|PSL|Sp|SU|PSU|U)\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*(?::\s*(vectors|projective|isotropic))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re))
    throw InputError("cannot parse matrix group spec '" + text + "'");
  std::string fam = m[1];
  std::size_t dim = std::stoul(m[2]);
  std::uint64_t q = std::stoull(m[3]);
  Family f = fam == "GL"    ? Family::GL
             : fam == "SL"  ? Family::SL
             : fam == "PSL" ? Family::PSL
             : fam == "Sp"  ? Family::Sp4
             : fam == "SU"  ? Family::SU3
                            : Family::PSU3;
  auto s = make(f, dim, q);
  if (m[4].matched) {
    std::string a = m[4];
    s.default_action = a == "vectors"      ? Action::NonzeroVectors
                       : a == "projective" ? Action::ProjectivePoints
                                           : Action::IsotropicPoints;
  }
  return s;
}

std::string MatrixGroupSpec::name() const
{
  return std::string(family_name(family)) + "(" + std::to_string(dimension) + "," +
         std::to_string(q) + ")";
}

std::vector<FMatrix> classical_generators(MatrixGroupSpec const &spec)
{
  FieldSpec const &F = *spec.field;
  std::size_t d = spec.dimension;
  std::vector<FMatrix> gens;

  switch (spec.family) {
  case Family::GL:
  case Family::SL:
  case Family::PSL:
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        if (i == j)
          continue;
        for (unsigned k = 0; k < F.n(); ++k) {
          FMatrix t = FMatrix::identity(d);
          t(i, j) = F.basis(k);
          gens.push_back(std::move(t));
        }
      }
    if (spec.family == Family::GL && F.q() > 2) {
      FMatrix D = FMatrix::identity(d);
      D(0, 0) = F.primitive();
      gens.push_back(std::move(D));
    }
    break;

  case Family::Sp4: {
    // symplectic transvections x -> x + a B(x,v) v for 0/1 vectors v
    FMatrix const &J = spec.form;
    for (unsigned code = 1; code < 16; ++code) {
      std::vector<Elt> v(4);
      for (unsigned i = 0; i < 4; ++i)
        v[i] = (code >> i) & 1u;
      std::vector<Elt> Jv(4, 0);
      for (unsigned i = 0; i < 4; ++i)
        for (unsigned j = 0; j < 4; ++j)
          Jv[i] = F.add(Jv[i], F.mul(J(i, j), v[j]));
      for (unsigned k = 0; k < F.n(); ++k) {
        Elt a = F.basis(k);
        FMatrix M = FMatrix::identity(4);
        for (unsigned i = 0; i < 4; ++i)
          for (unsigned j = 0; j < 4; ++j)
            M(i, j) = F.add(M(i, j), F.mul(a, F.mul(Jv[i], v[j])));
        gens.push_back(std::move(M));
      }
    }
    break;
  }

  case Family::SU3:
  case Family::PSU3: {
    std::uint64_t q = spec.q;
    auto bar = [&](Elt x) { return F.pow(x, q); };
    auto trace = [&](Elt x) { return F.add(x, bar(x)); };
    auto upper = [&](Elt a, Elt b) {
      FMatrix U = FMatrix::identity(3);
      U(0, 1) = a;
      U(0, 2) = b;
      U(1, 2) = F.neg(bar(a));
      return U;
    };
    // U(a, b) needs tr(b) = -N(a)
    for (unsigned k = 0; k < F.n(); ++k) {
      Elt a = F.basis(k);
      Elt target = F.neg(F.mul(a, bar(a)));
      for (Elt b = 0; b < F.q(); ++b)
        if (trace(b) == target) {
          gens.push_back(upper(a, b));
          break;
        }
    }
    for (Elt b = 1; b < F.q(); ++b)
      if (trace(b) == 0)
        gens.push_back(upper(0, b));
    FMatrix W(3);
    W(0, 2) = W(1, 1) = W(2, 0) = F.neg(1);
    gens.push_back(W);
    Elt l = F.primitive();
    FMatrix D(3);
    D(0, 0) = l;
    D(1, 1) = F.mul(bar(l), F.inv(l));
    D(2, 2) = F.inv(bar(l));
    gens.push_back(D);
    break;
  }
  }

  for (auto const &M : gens) {
    if (spec.family != Family::GL && mat_det(F, M) != 1)
      throw VerificationFailure(spec.name() + ": generator with determinant != 1");
    if (!preserves_form(spec, M))
      throw VerificationFailure(spec.name() + ": generator does not preserve the form");
  }
  return gens;
}

BigInt classical_order(MatrixGroupSpec const &spec)
{
  BigInt q = spec.q;
  BigInt order = 1;
  std::size_t d = spec.dimension;
  switch (spec.family) {
  case Family::GL:
  case Family::SL:
  case Family::PSL: {
    for (std::size_t i = 1; i <= d; ++i)
      order *= boost::multiprecision::pow(q, static_cast<unsigned>(i)) - 1;
    order *= boost::multiprecision::pow(q, static_cast<unsigned>(d * (d - 1) / 2));
    if (spec.family != Family::GL)
      order /= q - 1;
    break;
  }
  case Family::Sp4:
    order = q * q * q * q * (q * q - 1) * (q * q * q * q - 1);
    break;
  case Family::SU3:
  case Family::PSU3:
    order = q * q * q * (q * q - 1) * (q * q * q + 1);
    break;
  }
  return order;
}

std::uint64_t scalar_count(MatrixGroupSpec const &spec)
{
  std::uint64_t q = spec.q;
  switch (spec.family) {
  case Family::GL: return q - 1;
  case Family::SL:
  case Family::PSL: return std::gcd<std::uint64_t>(spec.dimension, q - 1);
  case Family::Sp4: return std::gcd<std::uint64_t>(2, q - 1);
  case Family::SU3:
  case Family::PSU3: return std::gcd<std::uint64_t>(3, q + 1);
  }
  return 1;
}

bool preserves_form(MatrixGroupSpec const &spec, FMatrix const &M)
{
  if (!has_form(spec.family))
    return true;
  FieldSpec const &F = *spec.field;
  return mat_mul(F, mat_mul(F, M, spec.form), star(spec, M)) == spec.form;
}

GeneratedGroup permutation_image(MatrixGroupSpec const &spec, Caps const &caps)
{
  return permutation_image(spec, spec.default_action, caps);
}

GeneratedGroup permutation_image(MatrixGroupSpec const &spec, Action action, Caps const &caps)
{
  FieldSpec const &F = *spec.field;
  std::size_t d = spec.dimension;
  std::uint64_t Q = F.q();
  if (action == Action::IsotropicPoints && !has_form(spec.family))
    throw InputError(spec.name() + " has no form; isotropic action undefined");

  BigInt total = 1;
  for (std::size_t i = 0; i < d; ++i)
    total *= Q;
  require_within(total - 1, caps.max_degree * (Q - 1), "vector enumeration");

  auto nvec = static_cast<std::uint64_t>(total);
  auto decode = [&](std::uint64_t code) {
    std::vector<Elt> v(d);
    for (std::size_t i = 0; i < d; ++i, code /= Q)
      v[i] = static_cast<Elt>(code % Q);
    return v;
  };
  auto encode = [&](std::vector<Elt> const &v) {
    std::uint64_t c = 0;
    for (std::size_t i = d; i-- > 0;)
      c = c * Q + v[i];
    return c;
  };
  auto normalize = [&](std::vector<Elt> v) {
    std::size_t i = 0;
    while (v[i] == 0)
      ++i;
    Elt s = F.inv(v[i]);
    for (auto &x : v)
      x = F.mul(x, s);
    return v;
  };
  auto isotropic = [&](std::vector<Elt> const &v) {
    // v F v^*, with ^* from star()
    unsigned k = unitary(spec.family) ? F.n() / 2 : 0;
    std::uint64_t e = 1;
    for (unsigned i = 0; i < k; ++i)
      e *= F.p();
    Elt s = 0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        s = F.add(s, F.mul(v[i], F.mul(spec.form(i, j), F.pow(v[j], e))));
    return s == 0;
  };

  bool projective = action != Action::NonzeroVectors;
  std::vector<std::int64_t> index(nvec, -1);
  std::vector<std::vector<Elt>> points;
  for (std::uint64_t c = 1; c < nvec; ++c) {
    auto v = decode(c);
    if (projective && normalize(v) != v)
      continue;
    if (action == Action::IsotropicPoints && !isotropic(v))
      continue;
    index[c] = static_cast<std::int64_t>(points.size());
    points.push_back(std::move(v));
  }
  require_within(points.size(), caps.max_degree, spec.name() + " permutation degree");

  std::vector<Permutation> perms;
  for (auto const &M : classical_generators(spec)) {
    std::vector<Point> img(points.size());
    for (std::size_t pi = 0; pi < points.size(); ++pi) {
      auto const &v = points[pi];
      std::vector<Elt> w(d, 0);
      for (std::size_t i = 0; i < d; ++i) {
        if (v[i] == 0)
          continue;
        for (std::size_t j = 0; j < d; ++j)
          w[j] = F.add(w[j], F.mul(v[i], M(i, j)));
      }
      if (projective)
        w = normalize(std::move(w));
      auto k = index[encode(w)];
      if (k < 0)
        throw VerificationFailure(spec.name() + ": generator does not preserve the point set");
      img[pi] = static_cast<Point>(k);
    }
    perms.push_back(Permutation(std::move(img)));
  }
  GeneratedGroup G(points.size(), perms);

  BigInt expected = classical_order(spec);
  if (projective)
    expected /= scalar_count(spec);
  if (G.order() != expected) {
    std::ostringstream os;
    os << spec.name() << ": permutation image has order " << G.order() << ", expected "
       << expected;
    throw VerificationFailure(os.str());
  }
  return G;
}

std::vector<std::uint32_t> projective_blocks(MatrixGroupSpec const &spec)
{
  FieldSpec const &F = *spec.field;
  std::size_t d = spec.dimension;
  std::uint64_t Q = F.q();
  std::uint64_t nvec = 1;
  for (std::size_t i = 0; i < d; ++i)
    nvec *= Q;
  std::vector<std::int64_t> line(nvec, -1);
  std::vector<std::uint64_t> norm_code(nvec, 0);
  std::uint32_t next = 0;
  for (std::uint64_t c = 1; c < nvec; ++c) {
    std::vector<Elt> v(d);
    std::uint64_t t = c;
    for (std::size_t i = 0; i < d; ++i, t /= Q)
      v[i] = static_cast<Elt>(t % Q);
    std::size_t lead = 0;
    while (v[lead] == 0)
      ++lead;
    Elt s = F.inv(v[lead]);
    std::uint64_t code = 0;
    for (std::size_t i = d; i-- > 0;)
      code = code * Q + F.mul(v[i], s);
    norm_code[c] = code;
    if (code == c)
      line[c] = next++;
  }
  std::vector<std::uint32_t> out;
  for (std::uint64_t c = 1; c < nvec; ++c)
    out.push_back(static_cast<std::uint32_t>(line[norm_code[c]]));
  return out;
}

} // namespace sclosure
