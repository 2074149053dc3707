#include "dyckcells/numeric.hpp"

namespace dyckcells {

Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Int catalan_number(int n) { return binomial(2 * n, n) / (n + 1); }

}  // namespace dyckcells
