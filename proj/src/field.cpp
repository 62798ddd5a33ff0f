#include "curv/field.hpp"

#include <sstream>

#include "curv/error.hpp"

namespace curv {

namespace {

constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 32;

using Poly = std::vector<std::uint32_t>;

// Remainder of a modulo monic b, coefficients mod p.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    if (lead != 0) {
      for (std::size_t i = 0; i <= db; ++i) {
        const std::uint64_t sub = (lead * b[i]) % p;
        a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
      }
    }
    a.pop_back();
  }
  return a;
}

bool is_zero_poly(const Poly& a) {
  for (auto c : a) {
    if (c != 0) return false;
  }
  return true;
}

// Trial division by every monic polynomial of degree 1..m/2.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t m = f.size() - 1;
  for (std::size_t k = 1; 2 * k <= m; ++k) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(k + 1, 0);
      g[k] = 1;
      std::uint64_t c = code;
      for (std::size_t i = 0; i < k; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      if (is_zero_poly(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power_decomposition(std::uint64_t q) {
  if (q < 2) throw Error(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;
  std::uint64_t rest = q;
  std::uint32_t m = 0;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1 || p > UINT32_MAX) {
    throw Error(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
  }
  return {static_cast<std::uint32_t>(p), m};
}

FiniteField make_field(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (m < 1) throw Error(ErrorKind::InvalidParams, "extension degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) {
      throw Error(ErrorKind::TooLarge, std::to_string(p) + "^" + std::to_string(m) + " exceeds 2^32");
    }
  }
  FiniteField f;
  f.p_ = p;
  f.m_ = m;
  f.q_ = q;
  // Candidates in increasing order of sum c_i p^i.
  for (std::uint64_t code = 0; code < q; ++code) {
    Poly cand(m + 1, 0);
    cand[m] = 1;
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < m; ++i) {
      cand[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    if (is_irreducible(cand, p)) {
      f.modulus_ = std::move(cand);
      return f;
    }
  }
  throw Error(ErrorKind::InvalidParams, "no irreducible polynomial found");  // unreachable
}

FiniteField make_field_of_order(std::uint64_t q) {
  const auto [p, m] = prime_power_decomposition(q);
  return make_field(p, m);
}

void FiniteField::check(const FieldElement& a) const {
  if (a.coeffs.size() != m_) {
    throw Error(ErrorKind::InvalidParams, "field element has " + std::to_string(a.coeffs.size()) +
                                              " coefficients, expected " + std::to_string(m_));
  }
  for (auto c : a.coeffs) {
    if (c >= p_) throw Error(ErrorKind::InvalidParams, "coefficient out of range");
  }
}

FieldElement FiniteField::zero() const { return FieldElement{std::vector<std::uint32_t>(m_, 0)}; }

FieldElement FiniteField::one() const {
  auto e = zero();
  e.coeffs[0] = 1;
  return e;
}

FieldElement FiniteField::element(std::uint64_t index) const {
  if (index >= q_) throw Error(ErrorKind::InvalidParams, "field index out of range");
  FieldElement e = zero();
  for (std::uint32_t i = m_; i-- > 0;) {
    e.coeffs[i] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  return e;
}

std::uint64_t FiniteField::index_of(const FieldElement& a) const {
  check(a);
  std::uint64_t index = 0;
  for (std::uint32_t i = 0; i < m_; ++i) index = index * p_ + a.coeffs[i];
  return index;
}

FieldElement FiniteField::add(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  FieldElement r = zero();
  for (std::uint32_t i = 0; i < m_; ++i) r.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % p_;
  return r;
}

FieldElement FiniteField::sub(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  FieldElement r = zero();
  for (std::uint32_t i = 0; i < m_; ++i) r.coeffs[i] = (a.coeffs[i] + p_ - b.coeffs[i]) % p_;
  return r;
}

FieldElement FiniteField::neg(const FieldElement& a) const { return sub(zero(), a); }

FieldElement FiniteField::mul(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  Poly prod(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::uint32_t j = 0; j < m_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(a.coeffs[i]) * b.coeffs[j]) % p_);
    }
  }
  Poly r = poly_mod(std::move(prod), modulus_, p_);
  r.resize(m_, 0);
  return FieldElement{std::move(r)};
}

FieldElement FiniteField::pow(const FieldElement& a, std::uint64_t e) const {
  FieldElement result = one();
  FieldElement base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FieldElement FiniteField::inverse(const FieldElement& a) const {
  if (is_zero(a)) throw Error(ErrorKind::InvalidParams, "zero has no inverse");
  return pow(a, q_ - 2);
}

bool FiniteField::is_zero(const FieldElement& a) const {
  check(a);
  return is_zero_poly(a.coeffs);
}

std::uint64_t FiniteField::add_index(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t result = 0, scale = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    result += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return result;
}

std::uint64_t FiniteField::sub_index(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t result = 0, scale = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    result += ((a % p_ + p_ - b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return result;
}

std::uint64_t FiniteField::mul_index(std::uint64_t a, std::uint64_t b) const {
  return index_of(mul(element(a), element(b)));
}

std::string FiniteField::to_string(const FieldElement& a) const {
  check(a);
  if (m_ == 1) return std::to_string(a.coeffs[0]);
  std::ostringstream os;
  bool first = true;
  for (std::uint32_t i = m_; i-- > 0;) {
    if (a.coeffs[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || a.coeffs[i] != 1) os << a.coeffs[i];
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

bool is_nonzero_square(const FiniteField& f, const FieldElement& a) {
  if (f.is_zero(a)) return false;
  if (f.characteristic() == 2) return true;
  return f.pow(a, (f.order() - 1) / 2) == f.one();
}

}  // namespace curv
