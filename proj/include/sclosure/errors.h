#ifndef SCLOSURE_ERRORS_H
#define SCLOSURE_ERRORS_H

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sclosure
{

using BigInt = boost::multiprecision::cpp_int;

/// A computation was refused because it would exceed a configured cap.
class CapExceeded : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A postcondition that should hold mathematically failed to verify.
class VerificationFailure : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or unsupported input (parse errors, unknown names, bad specs).
class InputError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Resource caps. Defaults match the command-line defaults; from_env() reads
/// SC_MAX_ELEMENTS, SC_MAX_PGROUP, SC_MAX_DEGREE and SC_MAX_SUBGROUP_ENUM.
struct Caps
{
  std::uint64_t max_elements = 1'000'000;
  std::uint64_t max_pgroup = 6561;
  std::uint64_t max_degree = 10'000;
  std::uint64_t max_subgroup_enum = 81;

  static Caps from_env();
};

/// Default caps, initialised from the environment on first use.
Caps const &default_caps();

/// Throws CapExceeded when `size` exceeds `cap`.
void require_within(BigInt const &size, std::uint64_t cap, std::string const &what);

} // namespace sclosure

#endif // SCLOSURE_ERRORS_H
