#pragma once

// Small integer helpers shared across the library. Everything operates on the
// desk-scale ranges the engine supports (group orders up to a few thousand),
// so plain trial division is fine.

#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace groupext {

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Prime factorization as (prime, multiplicity) pairs, primes ascending.
inline std::vector<std::pair<int, int>> factorize(int n) {
  if (n < 1) throw std::invalid_argument("factorize: argument must be positive");
  std::vector<std::pair<int, int>> out;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) { n /= d; ++e; }
      out.emplace_back(d, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// Largest power of p dividing n.
inline int p_part(int n, int p) {
  int r = 1;
  while (n % p == 0) { n /= p; r *= p; }
  return r;
}

inline int mod_norm(long long a, int n) {
  long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

inline int mod_mul(int a, int b, int n) {
  return static_cast<int>(static_cast<long long>(a) * b % n);
}

inline int mod_pow(int a, int e, int n) {
  a = mod_norm(a, n);
  long long r = 1, base = a;
  while (e > 0) {
    if (e & 1) r = r * base % n;
    base = base * base % n;
    e >>= 1;
  }
  return static_cast<int>(r);
}

inline int euler_phi(int n) {
  int r = n;
  for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
  return n == 1 ? 1 : r;
}

// Multiplicative order of a unit a modulo n.
inline int multiplicative_order(int a, int n) {
  a = mod_norm(a, n);
  if (n == 1) return 1;
  if (std::gcd(a, n) != 1) throw std::invalid_argument("multiplicative_order: not a unit");
  int x = a, k = 1;
  while (x != 1) { x = mod_mul(x, a, n); ++k; }
  return k;
}

inline int smallest_primitive_root(int p) {
  if (!is_prime(p)) throw std::invalid_argument("smallest_primitive_root: p must be prime");
  if (p == 2) return 1;
  for (int g = 2; g < p; ++g)
    if (multiplicative_order(g, p) == p - 1) return g;
  throw std::logic_error("smallest_primitive_root: none found");
}

// Smallest solution of x = a (mod m), x = b (mod n) for coprime m, n.
inline int crt(int a, int m, int b, int n) {
  for (int x = mod_norm(a, m); x < m * n; x += m)
    if (x % n == mod_norm(b, n)) return x;
  throw std::invalid_argument("crt: no solution (moduli not coprime?)");
}

// Square roots of -1 modulo a prime p = 1 (mod 4), ascending.
inline std::vector<int> roots_of_minus_one(int p) {
  std::vector<int> out;
  for (int x = 1; x < p; ++x)
    if (mod_mul(x, x, p) == p - 1) out.push_back(x);
  return out;
}

}  // namespace groupext
