#pragma once

#include <gmpxx.h>
#include <string>

namespace ainfty {

// Exact rational scalar. mpq_class keeps fractions reduced with positive
// denominator, which is exactly the invariant we need; no rounding ever.
using Scalar = mpq_class;

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

// Serialized as "p/q", or just "p" when q = 1.
std::string scalar_to_string(const Scalar& s);
Scalar scalar_from_string(const std::string& text);

// (-1)^(a*b)
inline Scalar koszul_sign(long deg_a, long deg_b) {
  return ((deg_a & 1) && (deg_b & 1)) ? Scalar(-1) : Scalar(1);
}

inline int parity_sign(long e) { return (e & 1) ? -1 : 1; }

}  // namespace ainfty
