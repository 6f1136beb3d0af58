#ifndef MCK_FP_HPP
#define MCK_FP_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mck {

/// Inputs that violate a documented precondition (bad shapes excluded,
/// see ShapeError).
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// Operands whose dimensions do not fit together.
class ShapeError : public std::runtime_error {
 public:
  explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

/// Scalars or containers over different prime fields were mixed.
class ModulusMismatchError : public std::runtime_error {
 public:
  explicit ModulusMismatchError(const std::string& what) : std::runtime_error(what) {}
};

/// A construction would exceed the configured size cap.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or axiom-violating input files.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A machine-checked hypothesis failed where the theory says it cannot;
/// signals an internal inconsistency, never swallowed.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

/// Moduli are restricted to one byte so field elements pack densely.
inline constexpr int kMaxModulus = 251;

bool is_prime(int p);

/// Throws PreconditionError unless 2 <= p <= 251 and p is prime.
void require_prime(int p);

/// An element of GF(p). Value is always reduced into [0, p); the modulus
/// travels with the value and every binary operation checks it.
class Fp {
 public:
  Fp(std::int64_t value, int p);

  int value() const { return value_; }
  int modulus() const { return p_; }

  bool is_zero() const { return value_ == 0; }

  Fp operator+(Fp rhs) const;
  Fp operator-(Fp rhs) const;
  Fp operator-() const;
  Fp operator*(Fp rhs) const;
  Fp operator/(Fp rhs) const;
  Fp inverse() const;

  bool operator==(const Fp&) const = default;

 private:
  int value_;
  int p_;

  void check_same_field(Fp rhs) const;
};

/// Residue-level helpers used by the dense kernels; callers guarantee
/// 0 <= a, b < p.
inline int add_mod(int a, int b, int p) {
  int s = a + b;
  return s >= p ? s - p : s;
}
inline int sub_mod(int a, int b, int p) {
  int d = a - b;
  return d < 0 ? d + p : d;
}
inline int mul_mod(int a, int b, int p) { return (a * b) % p; }

/// Multiplicative inverse of a mod p for a != 0.
int inv_mod(int a, int p);

}  // namespace mck

#endif
