// Lattice points on circles m^2 + n^2 = N via Gaussian integers.
//
// N = 2^a * prod p_i^{e_i} (p_i = 1 mod 4) * prod q_j^{2 f_j} (q_j = 3 mod 4).
// Every representation is a unit times (1+i)^a * prod pi_i^k conj(pi_i)^{e_i-k}
// * prod q_j^{f_j}, where p_i = pi_i conj(pi_i).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "eigres/geometry.hpp"

namespace eigres {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i64 = std::int64_t;
using i128 = __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

// Deterministic for all 64-bit inputs with these bases.
bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++r;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Brent's variant; n is odd, composite, and not a perfect power of a small prime.
u64 pollard_brent(u64 n, std::mt19937_64& rng) {
  for (;;) {
    const u64 c = rng() % (n - 1) + 1;
    u64 y = rng() % n;
    const u64 block = 128;
    u64 g = 1;
    u64 q = 1;
    u64 x = 0;
    u64 ys = 0;
    for (u64 r = 1; g == 1; r <<= 1U) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
      for (u64 k = 0; k < r && g == 1; k += block) {
        ys = y;
        for (u64 i = 0; i < std::min(block, r - k); ++i) {
          y = (mulmod(y, y, n) + c) % n;
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = (mulmod(ys, ys, n) + c) % n;
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(u64 n, std::map<u64, int>& out, std::mt19937_64& rng) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  const u64 d = pollard_brent(n, rng);
  factor_into(d, out, rng);
  factor_into(n / d, out, rng);
}

std::map<u64, int> factorize(u64 n) {
  std::map<u64, int> out;
  for (u64 p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  std::mt19937_64 rng(0x5eed);
  factor_into(n, out, rng);
  return out;
}

u64 isqrt(u64 n) {
  auto r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

struct Gauss {
  i128 re;
  i128 im;
};

Gauss mul(Gauss a, Gauss b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

Gauss gpow(Gauss a, int e) {
  Gauss r{1, 0};
  for (int i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

// a^2 + b^2 = p for a prime p = 1 mod 4 (Cornacchia with a root of -1).
Gauss split_prime(u64 p) {
  u64 root = 0;
  for (u64 a = 2;; ++a) {
    if (powmod(a, (p - 1) / 2, p) == p - 1) {
      root = powmod(a, (p - 1) / 4, p);
      break;
    }
  }
  const u64 limit = isqrt(p);
  u64 r0 = p;
  u64 r1 = root;
  while (r1 > limit) {
    const u64 t = r0 % r1;
    r0 = r1;
    r1 = t;
  }
  const u64 b = isqrt(p - r1 * r1);
  return {static_cast<i128>(r1), static_cast<i128>(b)};
}

}  // namespace

std::vector<std::pair<std::int64_t, std::int64_t>> sum_two_squares(std::uint64_t N) {
  std::vector<std::pair<i64, i64>> out;
  if (N == 0) {
    out.emplace_back(0, 0);
    return out;
  }
  std::vector<Gauss> partial{{1, 0}};
  for (const auto& [p, e] : factorize(N)) {
    std::vector<Gauss> next;
    if (p == 2) {
      const Gauss f = gpow({1, 1}, e);
      for (const auto& g : partial) next.push_back(mul(g, f));
    } else if (p % 4 == 3) {
      if (e % 2 != 0) return out;
      const Gauss f = gpow({static_cast<i128>(p), 0}, e / 2);
      for (const auto& g : partial) next.push_back(mul(g, f));
    } else {
      const Gauss pi = split_prime(p);
      const Gauss pibar{pi.re, -pi.im};
      for (int k = 0; k <= e; ++k) {
        const Gauss f = mul(gpow(pi, k), gpow(pibar, e - k));
        for (const auto& g : partial) next.push_back(mul(g, f));
      }
    }
    partial = std::move(next);
  }
  for (const auto& g : partial) {
    Gauss u = g;
    for (int k = 0; k < 4; ++k) {
      out.emplace_back(static_cast<i64>(u.re), static_cast<i64>(u.im));
      u = mul(u, {0, 1});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace eigres
