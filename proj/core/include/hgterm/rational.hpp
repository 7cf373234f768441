#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hgterm {

using Rat = mpq_class;
using Int = mpz_class;

/// Integer lattice point or direction in Z^k.
using IntVec = std::vector<std::int64_t>;

/// Parses "p", "-p" or "p/q"; the result is canonical.
Rat parse_rat(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string format_rat(const Rat& r);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// Floor and ceiling of a rational as big integers.
Int floor_rat(const Rat& r);
Int ceil_rat(const Rat& r);

std::int64_t to_int64(const Int& z);

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

IntVec add(std::span<const std::int64_t> a, std::span<const std::int64_t> b);
IntVec sub(std::span<const std::int64_t> a, std::span<const std::int64_t> b);
IntVec scaled(std::span<const std::int64_t> a, std::int64_t s);
IntVec unit_vector(std::size_t k, std::size_t i, std::int64_t s = 1);

/// Divides by the gcd of the entries and makes the first nonzero entry positive.
/// Returns the zero vector unchanged.
IntVec primitive_direction(std::span<const std::int64_t> v);

bool is_zero_vector(std::span<const std::int64_t> v);

/// r^e for a possibly negative exponent; r must be nonzero when e < 0.
Rat pow_rat(const Rat& r, std::int64_t e);

std::string format_vec(std::span<const std::int64_t> v);

}  // namespace hgterm
