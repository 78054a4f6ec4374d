#pragma once

#include <gmpxx.h>

#include <string>

namespace khov {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline bool is_unit(const Integer& z) { return z == 1 || z == -1; }

}  // namespace khov
