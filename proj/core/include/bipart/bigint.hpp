#ifndef BIPART_BIGINT_HPP
#define BIPART_BIGINT_HPP

#include <gmpxx.h>

namespace bipart {

/// Arbitrary-precision signed integer used for every exact count in the library.
using BigInt = mpz_class;

}  // namespace bipart

#endif  // BIPART_BIGINT_HPP
