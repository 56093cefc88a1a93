#ifndef CURLED_TESTS_REFERENCE_HPP
#define CURLED_TESTS_REFERENCE_HPP

// Test-only reference implementations. They read a CurledTable through its
// accessors and nothing else: products go through a plain integer structure
// tensor, and the symbolic expansion of (xy)^2 - x^2 y^2 multiplies
// hand-rolled polynomials over Q. None of the library's product, square or
// formal machinery is used here.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>

#include "curled/algebra.hpp"

namespace ref {

// ------------------------------------------------------- integer tensors

struct Tensor {
  std::uint32_t p = 2;
  std::array<std::uint32_t, 27> c{};  // c[(r * 3 + s) * 3 + t]

  std::uint32_t& at(int r, int s, int t) { return c[(r * 3 + s) * 3 + t]; }
  std::uint32_t at(int r, int s, int t) const { return c[(r * 3 + s) * 3 + t]; }
};

using Vec = std::array<std::uint32_t, 3>;

// e f = A, e g = B, f e = C, f g = D, g e = E, g f = F.
inline constexpr int kOffDiagonal[6][2] = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};

inline Tensor tensor_of(const curled::CurledTable& table) {
  Tensor t;
  t.p = table.descriptor().characteristic();
  t.at(0, 0, 0) = static_cast<std::uint32_t>(table.type().i());
  t.at(1, 1, 1) = static_cast<std::uint32_t>(table.type().j());
  t.at(2, 2, 2) = static_cast<std::uint32_t>(table.type().k());
  for (int n = 0; n < 6; ++n) {
    const curled::Element& x = table.params()[static_cast<std::size_t>(n)];
    for (int q = 0; q < 3; ++q) t.at(kOffDiagonal[n][0], kOffDiagonal[n][1], q) = x[static_cast<std::size_t>(q)].as_residue();
  }
  return t;
}

/// Type bits from the code (i << 2 | j << 1 | k), coordinates from base-p
/// digits of index, least significant first, in the order A_e, A_f, ..., F_g.
inline Tensor tensor_of_index(std::uint32_t p, unsigned type_code, std::uint64_t index) {
  Tensor t;
  t.p = p;
  t.at(0, 0, 0) = (type_code >> 2) & 1u;
  t.at(1, 1, 1) = (type_code >> 1) & 1u;
  t.at(2, 2, 2) = type_code & 1u;
  for (int n = 0; n < 18; ++n) {
    t.at(kOffDiagonal[n / 3][0], kOffDiagonal[n / 3][1], n % 3) = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return t;
}

inline Vec mul(const Tensor& t, const Vec& x, const Vec& y) {
  std::array<std::uint64_t, 3> acc{};
  for (int r = 0; r < 3; ++r) {
    for (int s = 0; s < 3; ++s) {
      const std::uint64_t xy = std::uint64_t{x[r]} * y[s] % t.p;
      if (xy == 0) continue;
      for (int q = 0; q < 3; ++q) acc[q] = (acc[q] + xy * t.at(r, s, q)) % t.p;
    }
  }
  return {static_cast<std::uint32_t>(acc[0]), static_cast<std::uint32_t>(acc[1]), static_cast<std::uint32_t>(acc[2])};
}

template <class F>
void for_each_vec(std::uint32_t p, F&& f) {
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b)
      for (std::uint32_t c = 0; c < p; ++c) f(Vec{a, b, c});
}

inline bool is_ec(const Tensor& t) {
  bool ok = true;
  for_each_vec(t.p, [&](const Vec& x) {
    if (!ok) return;
    const Vec xx = mul(t, x, x);
    for_each_vec(t.p, [&](const Vec& y) {
      if (!ok) return;
      const Vec xy = mul(t, x, y);
      if (mul(t, xy, xy) != mul(t, xx, mul(t, y, y))) ok = false;
    });
  });
  return ok;
}

inline bool is_zeropotent(const Tensor& t) {
  bool ok = true;
  for_each_vec(t.p, [&](const Vec& x) { ok = ok && mul(t, x, x) == Vec{0, 0, 0}; });
  return ok;
}

inline bool dependent(const Vec& x, const Vec& y, std::uint32_t p) {
  auto minor = [&](int r, int s) {
    return (std::uint64_t{x[r]} * y[s] + std::uint64_t{p - x[s]} * y[r]) % p;
  };
  return minor(0, 1) == 0 && minor(0, 2) == 0 && minor(1, 2) == 0;
}

inline bool is_curled(const Tensor& t) {
  bool ok = true;
  for_each_vec(t.p, [&](const Vec& x) { ok = ok && dependent(x, mul(t, x, x), t.p); });
  return ok;
}

// ------------------------------------------------ polynomials over Q

/// Exponents of a, b, c, u, v, w.
using Mono = std::array<int, 6>;
using QPoly = std::map<Mono, mpq_class>;
using PVec = std::array<QPoly, 3>;

inline void add_to(QPoly& p, const Mono& m, const mpq_class& c) {
  mpq_class& slot = p[m];
  slot += c;
  if (slot == 0) p.erase(m);
}

inline QPoly pmul(const QPoly& x, const QPoly& y) {
  QPoly out;
  for (const auto& [m, c] : x) {
    for (const auto& [n, d] : y) {
      Mono s{};
      for (int q = 0; q < 6; ++q) s[q] = m[q] + n[q];
      add_to(out, s, c * d);
    }
  }
  return out;
}

inline QPoly var(int n) {
  Mono m{};
  m[n] = 1;
  return QPoly{{m, mpq_class(1)}};
}

/// Product through rational structure constants c[(r*3+s)*3+t].
inline PVec pvec_mul(const std::array<mpq_class, 27>& c, const PVec& x, const PVec& y) {
  PVec out;
  for (int r = 0; r < 3; ++r) {
    for (int s = 0; s < 3; ++s) {
      const QPoly xy = pmul(x[r], y[s]);
      if (xy.empty()) continue;
      for (int q = 0; q < 3; ++q) {
        const mpq_class& k = c[(r * 3 + s) * 3 + q];
        if (k == 0) continue;
        for (const auto& [m, v] : xy) add_to(out[q], m, v * k);
      }
    }
  }
  return out;
}

/// Structure constants of a table over Q.
inline std::array<mpq_class, 27> rational_constants(const curled::CurledTable& table) {
  std::array<mpq_class, 27> c;
  for (auto& x : c) x = 0;
  c[0] = table.type().i();
  c[(1 * 3 + 1) * 3 + 1] = table.type().j();
  c[(2 * 3 + 2) * 3 + 2] = table.type().k();
  for (int n = 0; n < 6; ++n) {
    const curled::Element& x = table.params()[static_cast<std::size_t>(n)];
    for (int q = 0; q < 3; ++q) {
      c[(kOffDiagonal[n][0] * 3 + kOffDiagonal[n][1]) * 3 + q] = x[static_cast<std::size_t>(q)].as_rational();
    }
  }
  return c;
}

/// (xy)^2 - x^2 y^2 with x = ae + bf + cg, y = ue + vf + wg.
inline PVec symbolic_difference(const curled::CurledTable& table) {
  const auto c = rational_constants(table);
  const PVec x{var(0), var(1), var(2)};
  const PVec y{var(3), var(4), var(5)};
  const PVec xy = pvec_mul(c, x, y);
  const PVec lhs = pvec_mul(c, xy, xy);
  const PVec rhs = pvec_mul(c, pvec_mul(c, x, x), pvec_mul(c, y, y));
  PVec out = lhs;
  for (int q = 0; q < 3; ++q) {
    for (const auto& [m, v] : rhs[q]) add_to(out[q], m, -v);
  }
  return out;
}

}  // namespace ref

#endif  // CURLED_TESTS_REFERENCE_HPP
