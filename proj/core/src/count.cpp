#include "wicks/count.hpp"

#include <optional>
#include <stdexcept>

namespace wicks {

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

namespace {

void require_genus(int g) {
  if (g < 1) throw std::invalid_argument("genus must be at least 1, got " + std::to_string(g));
}

std::optional<Integer> factorial(long n) {
  if (n < 0) return std::nullopt;
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Rational power(const Rational& base, int e) {
  Rational out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

// lead (d^2/12)^f / prod(k!) * (6f + 2K - 5)! / (f! (3f + K - 3)!), K = sum of ks
Rational family(const Rational& lead, int d, int f, std::initializer_list<int> ks) {
  int sum = 0;
  Integer denom = 1;
  for (int k : ks) {
    sum += k;
    denom *= *factorial(k);
  }
  auto top = factorial(6L * f + 2L * sum - 5);
  auto bottom = factorial(3L * f + sum - 3);
  if (!top || !bottom) return 0;
  Rational out = lead * power(Rational(d * d, 12), f) * Rational(*top, denom * *factorial(f) * *bottom);
  out.canonicalize();
  return out;
}

int mod(int a, int m) { return ((a % m) + m) % m; }

}  // namespace

Rational mass_m1(int g) {
  require_genus(g);
  Rational out = Rational(2) * power(Rational(1, 12), g) *
                 Rational(*factorial(6L * g - 5), *factorial(g) * *factorial(3L * g - 3));
  out.canonicalize();
  return out;
}

Rational mass_m2(int g, int r) {
  require_genus(g);
  const int x = 2 * g + 1 - r;
  if (r < 0 || x < 0 || x % 4 != 0) return 0;
  return family(Rational(2, 2), 2, x / 4, {r});
}

Rational mass_m3(int g, int s, int t) {
  require_genus(g);
  if (g == 1) return (s == 0 && t == 2) ? Rational(1, 6) : Rational(0);
  const int x = g + 1 - s - t;
  if (s < 0 || t < 0 || x < 0 || x % 3 != 0) return 0;
  if (mod(s - (2 * g + 1), 3) != 0 || mod(t - 2 * g, 3) != 0) return 0;
  return family(Rational(2, 3), 3, x / 3, {s, t});
}

Rational mass_m6(int g, int r, int s, int t) {
  require_genus(g);
  if (g == 1) return (r == 1 && s == 0 && t == 1) ? Rational(1, 6) : Rational(0);
  const int x = 2 * g + 5 - 3 * r - 4 * s - 4 * t;
  if (r < 0 || s < 0 || t < 0 || x < 0 || x % 12 != 0) return 0;
  if (mod(2 * s - (2 * g + 1), 3) != 0 || mod(2 * t - 2 * g, 3) != 0) return 0;
  return family(Rational(2, 6), 6, x / 12, {r, s, t});
}

std::vector<ParamTuple> feasible_params(int g, int order) {
  require_genus(g);
  std::vector<ParamTuple> out;
  switch (order) {
    case 2:
      for (int r = 0; r <= 2 * g + 1; ++r) {
        if (mass_m2(g, r) > 0) out.push_back({r, 0, 0});
      }
      break;
    case 3:
      for (int s = 0; s <= g + 1; ++s) {
        for (int t = 0; s + t <= g + 1; ++t) {
          if (mass_m3(g, s, t) > 0) out.push_back({0, s, t});
        }
      }
      break;
    case 6:
      for (int r = 0; 3 * r <= 2 * g + 5; ++r) {
        for (int s = 0; 3 * r + 4 * s <= 2 * g + 5; ++s) {
          for (int t = 0; 3 * r + 4 * s + 4 * t <= 2 * g + 5; ++t) {
            if (mass_m6(g, r, s, t) > 0) out.push_back({r, s, t});
          }
        }
      }
      break;
    default:
      throw std::invalid_argument("order must be 2, 3 or 6, got " + std::to_string(order));
  }
  return out;
}

namespace {

Integer require_integer(const Rational& value, const char* name, int g) {
  if (value.get_den() != 1 || value < 0) {
    throw std::logic_error(std::string(name) + " for genus " + std::to_string(g) +
                           " is not a nonnegative integer: " + to_string(value));
  }
  return value.get_num();
}

}  // namespace

MassReport report(int g) {
  require_genus(g);
  MassReport rep;
  rep.genus = g;
  rep.m1 = mass_m1(g);
  for (const ParamTuple& p : feasible_params(g, 2)) {
    rep.m2 += rep.m2_by_r[p.r] = mass_m2(g, p.r);
  }
  for (const ParamTuple& p : feasible_params(g, 3)) {
    rep.m3 += rep.m3_by_st[{p.s, p.t}] = mass_m3(g, p.s, p.t);
  }
  for (const ParamTuple& p : feasible_params(g, 6)) {
    rep.m6 += rep.m6_by_rst[p] = mass_m6(g, p.r, p.s, p.t);
  }
  rep.M1 = require_integer(rep.m1 + rep.m2 + 2 * rep.m3 + 2 * rep.m6, "M1", g);
  rep.M2 = require_integer(2 * rep.m2 + 4 * rep.m6, "M2", g);
  rep.M3 = require_integer(3 * rep.m3 + 3 * rep.m6, "M3", g);
  rep.M6 = require_integer(6 * rep.m6, "M6", g);
  rep.exact_order_counts[6] = rep.M6;
  rep.exact_order_counts[3] = rep.M3 - rep.M6;
  rep.exact_order_counts[2] = rep.M2 - rep.M6;
  rep.exact_order_counts[1] = rep.M1 - rep.M2 - rep.M3 + rep.M6;
  for (const auto& [d, count] : rep.exact_order_counts) {
    if (count < 0) {
      throw std::logic_error("negative count of classes with " + std::to_string(d) + " automorphisms");
    }
  }
  return rep;
}

Integer pointed_count(int g, int d) {
  require_genus(g);
  Rational mass;
  switch (d) {
    case 1:
      mass = mass_m1(g);
      break;
    case 2: {
      for (const ParamTuple& p : feasible_params(g, 2)) mass += mass_m2(g, p.r);
      break;
    }
    case 3: {
      for (const ParamTuple& p : feasible_params(g, 3)) mass += mass_m3(g, p.s, p.t);
      break;
    }
    case 6: {
      for (const ParamTuple& p : feasible_params(g, 6)) mass += mass_m6(g, p.r, p.s, p.t);
      break;
    }
    default:
      throw std::invalid_argument("d must be 1, 2, 3 or 6, got " + std::to_string(d));
  }
  const Rational pointed = Rational(12 * g - 6) * mass;
  if (pointed.get_den() != 1) {
    throw std::logic_error("pointed count (12g-6) m_" + std::to_string(d) + " is not an integer: " +
                           to_string(pointed));
  }
  return pointed.get_num();
}

bool recursion_check(int g) {
  if (g < 1) return false;
  const Rational lhs = Rational(2 * (6 * g + 1) * (6 * g - 1) * (2 * g - 1)) * mass_m1(g);
  const Rational rhs = Rational(g + 1) * mass_m1(g + 1);
  return lhs == rhs;
}

}  // namespace wicks
