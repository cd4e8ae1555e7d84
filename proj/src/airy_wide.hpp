#pragma once

// binary128 evaluation used where closed forms cancel heavily. Internal to
// the library.

#include "airyint/airy.hpp"

namespace airyint::detail {

using wide = __float128;

struct WideBasis {
  wide ai;
  wide ai_prime;
  wide bi;
  wide bi_prime;
};

/// Ai, Ai', Bi, Bi' at x with ~30 correct digits for |x| <= 8 (Maclaurin
/// series in binary128); outside that the double-precision asymptotic values
/// are promoted. Same domain errors as eval_airy_basis.
WideBasis eval_airy_basis_wide(wide x);

/// Rational to binary128, correct to about 1e-33 relative.
wide to_wide(const Rational& value);

}  // namespace airyint::detail
