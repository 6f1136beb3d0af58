#include "mck/fp.hpp"

namespace mck {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void require_prime(int p) {
  if (p < 2 || p > kMaxModulus) {
    throw PreconditionError("modulus " + std::to_string(p) + " outside supported range [2, " +
                            std::to_string(kMaxModulus) + "]");
  }
  if (!is_prime(p)) {
    throw PreconditionError("modulus " + std::to_string(p) + " is not prime");
  }
}

Fp::Fp(std::int64_t value, int p) : p_(p) {
  require_prime(p);
  std::int64_t r = value % p;
  if (r < 0) r += p;
  value_ = static_cast<int>(r);
}

void Fp::check_same_field(Fp rhs) const {
  if (p_ != rhs.p_) {
    throw ModulusMismatchError("mixed moduli " + std::to_string(p_) + " and " +
                               std::to_string(rhs.p_));
  }
}

Fp Fp::operator+(Fp rhs) const {
  check_same_field(rhs);
  return Fp(add_mod(value_, rhs.value_, p_), p_);
}

Fp Fp::operator-(Fp rhs) const {
  check_same_field(rhs);
  return Fp(sub_mod(value_, rhs.value_, p_), p_);
}

Fp Fp::operator-() const { return Fp(value_ == 0 ? 0 : p_ - value_, p_); }

Fp Fp::operator*(Fp rhs) const {
  check_same_field(rhs);
  return Fp(mul_mod(value_, rhs.value_, p_), p_);
}

Fp Fp::operator/(Fp rhs) const {
  check_same_field(rhs);
  return *this * rhs.inverse();
}

Fp Fp::inverse() const {
  if (value_ == 0) throw PreconditionError("inverse of zero in GF(" + std::to_string(p_) + ")");
  return Fp(inv_mod(value_, p_), p_);
}

int inv_mod(int a, int p) {
  // extended Euclid on (a, p), p prime and a nonzero
  int t = 0, new_t = 1;
  int r = p, new_r = a;
  while (new_r != 0) {
    int q = r / new_r;
    int tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return t;
}

}  // namespace mck
