#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace curv {

// Element of GF(p^m) as its coefficient vector, constant term first.
struct FieldElement {
  std::vector<std::uint32_t> coeffs;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

// GF(p^m) realized as GF(p)[t] / (modulus). The modulus is the monic
// irreducible of degree m whose coefficient vector, read as the base-p
// integer sum c_i p^i, is smallest; for m = 1 that is t itself.
//
// Elements are also addressed by a canonical index in [0, q): the base-p
// number whose most significant digit is the constant term. Index order is
// the vertex order of every graph built over the field.
class FiniteField {
 public:
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return m_; }
  std::uint64_t order() const { return q_; }
  // Monic, constant term first, length m+1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement element(std::uint64_t index) const;
  std::uint64_t index_of(const FieldElement& a) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement pow(const FieldElement& a, std::uint64_t e) const;
  // Throws InvalidParams for zero.
  FieldElement inverse(const FieldElement& a) const;
  bool is_zero(const FieldElement& a) const;

  // Index arithmetic without materializing coefficient vectors.
  std::uint64_t add_index(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub_index(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t mul_index(std::uint64_t a, std::uint64_t b) const;

  std::string to_string(const FieldElement& a) const;

 private:
  friend FiniteField make_field(std::uint32_t p, std::uint32_t m);

  void check(const FieldElement& a) const;

  std::uint32_t p_ = 0;
  std::uint32_t m_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
};

bool is_prime(std::uint64_t n);

// Returns (p, m) with q = p^m, or throws NotPrimePower.
std::pair<std::uint32_t, std::uint32_t> prime_power_decomposition(std::uint64_t q);

// Throws NotPrime or, if p^m exceeds 2^32, TooLarge.
FiniteField make_field(std::uint32_t p, std::uint32_t m);
FiniteField make_field_of_order(std::uint64_t q);

// Euler's criterion a^((q-1)/2) == 1; every non-zero element is a square in
// characteristic 2.
bool is_nonzero_square(const FiniteField& f, const FieldElement& a);

}  // namespace curv
