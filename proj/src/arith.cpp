#include "gcdmat/arith.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>

namespace gcdmat {

Int gcd(const Int& x, const Int& y) { return boost::multiprecision::gcd(x, y); }

Int lcm(const Int& x, const Int& y) { return x / gcd(x, y) * y; }

Int gcd_all(const std::vector<Int>& values) {
  if (values.empty()) throw Error("gcd of empty list");
  Int g = values.front();
  for (std::size_t i = 1; i < values.size() && g != 1; ++i) g = gcd(g, values[i]);
  return g;
}

int mobius(const Int& n) {
  if (n < 1) throw Error("mobius requires a positive argument");
  Int m = n;
  int primes = 0;
  for (Int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      m /= p;
      if (m % p == 0) return 0;  // repeated prime, early exit
      ++primes;
    }
  }
  if (m > 1) ++primes;
  return (primes % 2 == 0) ? 1 : -1;
}

std::vector<Int> divisors(const Int& n) {
  if (n < 1) throw Error("divisors requires a positive argument");
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool is_squarefree(const Int& n) {
  if (n < 1) throw Error("is_squarefree requires a positive argument");
  Int m = n;
  for (Int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      m /= p;
      if (m % p == 0) return false;
    }
  }
  return true;
}

Rational conv_mobius(const ArithmeticFn& f, const Int& n) {
  Rational sum(0);
  for (const Int& d : divisors(n)) {
    const int mu = mobius(n / d);
    if (mu == 1)
      sum += f(d);
    else if (mu == -1)
      sum -= f(d);
  }
  return sum;
}

}  // namespace gcdmat
