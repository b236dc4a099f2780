#ifndef SCLOSURE_PERM_H
#define SCLOSURE_PERM_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sclosure
{

using Point = std::uint32_t;

/**
 * A bijection on {0, ..., degree - 1} stored as its image array.
 *
 * Products are read left to right: (g * h)(x) = h(g(x)), i.e. g is applied
 * first. Conjugation follows the same convention, a^g = g^-1 * a * g, which
 * maps g(x) to g(a(x)). Every module in this library uses these conventions.
 */
class Permutation
{
public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// Skips the bijection check; callers guarantee validity.
  static Permutation unchecked(std::vector<Point> images);

  static Permutation from_cycles(std::size_t degree,
                                 std::vector<std::vector<Point>> const &cycles);

  /// Parses disjoint-cycle notation over 0-based points, e.g. "(0 1 2)(3 4)".
  /// Commas are accepted as separators; "()" is the identity.
  static Permutation parse(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::span<Point const> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation pow(std::int64_t e) const;

  /// Least common multiple of the cycle lengths.
  std::uint64_t order() const;

  std::vector<std::vector<Point>> cycles() const;
  std::string str() const;

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend auto operator<=>(Permutation const &, Permutation const &) = default;

private:
  std::vector<Point> images_;
};

/// Left-to-right product; throws std::invalid_argument on degree mismatch.
Permutation compose(Permutation const &g, Permutation const &h);
inline Permutation operator*(Permutation const &g, Permutation const &h)
{
  return compose(g, h);
}

/// a^g = g^-1 a g.
Permutation conjugate(Permutation const &a, Permutation const &g);

/// [a, b] = a^-1 b^-1 a b.
Permutation commutator(Permutation const &a, Permutation const &b);

struct PermutationHash
{
  std::size_t operator()(Permutation const &p) const noexcept;
};

} // namespace sclosure

#endif // SCLOSURE_PERM_H
