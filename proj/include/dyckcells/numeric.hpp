#pragma once

#include <gmpxx.h>

namespace dyckcells {

// Exact integers throughout; Kostka-type data and transition matrices must
// never overflow silently.
using Int = mpz_class;

Int factorial(int n);
Int binomial(int n, int k);
Int catalan_number(int n);

}  // namespace dyckcells
