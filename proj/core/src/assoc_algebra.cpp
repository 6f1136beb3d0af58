#include "mck/assoc_algebra.hpp"

#include <algorithm>
#include <sstream>

namespace mck {

namespace {

const ProductTerms kNoTerms{};

std::string index_name(const AssocAlgebra& a, int i) {
  if (i >= 0 && i < static_cast<int>(a.labels.size())) return a.labels[i];
  return "e" + std::to_string(i);
}

}  // namespace

const ProductTerms& AssocAlgebra::terms(int i, int j) const {
  auto it = products.find(key(i, j));
  return it == products.end() ? kNoTerms : it->second;
}

void AssocAlgebra::add_product_term(int i, int j, int k, int coeff) {
  const int c = ((coeff % p) + p) % p;
  if (c == 0) return;
  auto& list = products[key(i, j)];
  for (auto& [idx, val] : list) {
    if (idx == k) {
      const int merged = add_mod(val, c, p);
      if (merged == 0) {
        std::erase_if(list, [k](const ProductTerm& t) { return t.first == k; });
        if (list.empty()) products.erase(key(i, j));
      } else {
        val = static_cast<std::uint8_t>(merged);
      }
      return;
    }
  }
  list.emplace_back(k, static_cast<std::uint8_t>(c));
  std::sort(list.begin(), list.end());
}

std::vector<AxiomViolation> check_commutative(const AssocAlgebra& a) {
  std::vector<AxiomViolation> out;
  for (int i = 0; i < a.dim && out.size() < 8; ++i) {
    for (int j = i + 1; j < a.dim && out.size() < 8; ++j) {
      ProductTerms ij = a.terms(i, j);
      ProductTerms ji = a.terms(j, i);
      std::sort(ij.begin(), ij.end());
      std::sort(ji.begin(), ji.end());
      if (ij != ji) {
        out.push_back({{i, j}, "commutativity violated for basis pair (" + std::to_string(i) +
                                   ", " + std::to_string(j) + "): " + index_name(a, i) + "*" +
                                   index_name(a, j) + " != " + index_name(a, j) + "*" +
                                   index_name(a, i)});
      }
    }
  }
  return out;
}

std::vector<AxiomViolation> check_associative(const AssocAlgebra& a) {
  std::vector<AxiomViolation> out;
  const int p = a.p;
  std::vector<int> lhs(a.dim), rhs(a.dim);
  for (int i = 0; i < a.dim; ++i) {
    for (int j = 0; j < a.dim; ++j) {
      const auto& ij = a.terms(i, j);
      for (int k = 0; k < a.dim; ++k) {
        std::fill(lhs.begin(), lhs.end(), 0);
        std::fill(rhs.begin(), rhs.end(), 0);
        for (auto [m, c] : ij) {
          for (auto [t, c2] : a.terms(m, k)) lhs[t] = (lhs[t] + c * c2) % p;
        }
        for (auto [m, c] : a.terms(j, k)) {
          for (auto [t, c2] : a.terms(i, m)) rhs[t] = (rhs[t] + c * c2) % p;
        }
        if (lhs != rhs) {
          out.push_back({{i, j, k},
                         "associativity violated for basis triple (" + std::to_string(i) + ", " +
                             std::to_string(j) + ", " + std::to_string(k) + ")"});
          if (out.size() >= 8) return out;
        }
      }
    }
  }
  return out;
}

std::vector<AxiomViolation> check_unit_law(const AssocAlgebra& a, int unit_index) {
  std::vector<AxiomViolation> out;
  for (int j = 0; j < a.dim; ++j) {
    ProductTerms got = a.terms(unit_index, j);
    std::sort(got.begin(), got.end());
    const ProductTerms want{{j, 1}};
    if (got != want) {
      out.push_back({{unit_index, j}, "unit law fails at basis index " + std::to_string(j)});
    }
  }
  return out;
}

std::vector<int> exponents_of_index(int index, int p, int n) {
  std::vector<int> e(n, 0);
  for (int i = n - 1; i >= 0; --i) {
    e[i] = index % p;
    index /= p;
  }
  return e;
}

int index_of_exponents(const std::vector<int>& exponents, int p) {
  int idx = 0;
  for (int e : exponents) idx = idx * p + e;
  return idx;
}

std::string monomial_label(const std::vector<int>& exponents, int n) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < n; ++i) {
    if (exponents[i] == 0) continue;
    if (!first) os << "*";
    first = false;
    if (n == 1) {
      os << "x";
    } else {
      os << "x" << (i + 1);
    }
    if (exponents[i] > 1) os << "^" << exponents[i];
  }
  if (first) return "1";
  return os.str();
}

AssocAlgebra truncated_polynomial_algebra(int p, int n, int size_cap) {
  require_prime(p);
  if (n < 1) throw PreconditionError("truncated polynomial algebra needs n >= 1");
  std::int64_t d = 1;
  for (int i = 0; i < n; ++i) {
    d *= p;
    if (d > size_cap) {
      throw CapacityError("p^n = " + std::to_string(d) + "+ exceeds size cap " +
                          std::to_string(size_cap));
    }
  }
  AssocAlgebra a;
  a.p = p;
  a.dim = static_cast<int>(d);
  a.labels.reserve(a.dim);
  for (int i = 0; i < a.dim; ++i) a.labels.push_back(monomial_label(exponents_of_index(i, p, n), n));

  std::vector<int> sum(n);
  for (int i = 0; i < a.dim; ++i) {
    const auto ei = exponents_of_index(i, p, n);
    for (int j = i; j < a.dim; ++j) {
      const auto ej = exponents_of_index(j, p, n);
      bool in_range = true;
      for (int t = 0; t < n; ++t) {
        sum[t] = ei[t] + ej[t];
        if (sum[t] >= p) {
          in_range = false;
          break;
        }
      }
      if (!in_range) continue;
      const int k = index_of_exponents(sum, p);
      a.products[AssocAlgebra::key(i, j)] = {{k, 1}};
      if (i != j) a.products[AssocAlgebra::key(j, i)] = {{k, 1}};
    }
  }
  a.unit_index = 0;
  return a;
}

AssocAlgebra field_algebra(int p) {
  require_prime(p);
  AssocAlgebra a;
  a.p = p;
  a.dim = 1;
  a.labels = {"1"};
  a.products[AssocAlgebra::key(0, 0)] = {{0, 1}};
  a.unit_index = 0;
  return a;
}

AssocAlgebra pair_field_algebra(int p) {
  require_prime(p);
  AssocAlgebra a;
  a.p = p;
  a.dim = 2;
  a.labels = {"u", "v"};
  a.products[AssocAlgebra::key(0, 0)] = {{0, 1}};
  a.products[AssocAlgebra::key(1, 1)] = {{1, 1}};
  return a;
}

AssocAlgebra tensor_product(const AssocAlgebra& a, const AssocAlgebra& b) {
  if (a.p != b.p) throw ModulusMismatchError("tensor factors over different fields");
  if (!find_unit(a) || !find_unit(b)) {
    throw PreconditionError("tensor_product requires unital factors");
  }
  AssocAlgebra t;
  t.p = a.p;
  t.dim = a.dim * b.dim;
  t.labels.reserve(t.dim);
  for (int i = 0; i < a.dim; ++i) {
    for (int j = 0; j < b.dim; ++j) t.labels.push_back(a.labels[i] + "⊗" + b.labels[j]);
  }
  for (const auto& [ka, termsA] : a.products) {
    const int i = static_cast<int>(ka >> 32);
    const int i2 = static_cast<int>(ka & 0xffffffffu);
    for (const auto& [kb, termsB] : b.products) {
      const int j = static_cast<int>(kb >> 32);
      const int j2 = static_cast<int>(kb & 0xffffffffu);
      ProductTerms combined;
      combined.reserve(termsA.size() * termsB.size());
      for (auto [m, ca] : termsA) {
        for (auto [l, cb] : termsB) {
          combined.emplace_back(m * b.dim + l, static_cast<std::uint8_t>((ca * cb) % t.p));
        }
      }
      std::sort(combined.begin(), combined.end());
      t.products[AssocAlgebra::key(i * b.dim + j, i2 * b.dim + j2)] = std::move(combined);
    }
  }
  if (a.unit_index && b.unit_index) t.unit_index = *a.unit_index * b.dim + *b.unit_index;
  return t;
}

std::vector<std::uint8_t> multiply_raw(const AssocAlgebra& a, std::span<const std::uint8_t> u,
                                       std::span<const std::uint8_t> v) {
  if (static_cast<int>(u.size()) != a.dim || static_cast<int>(v.size()) != a.dim) {
    throw ShapeError("vector length differs from algebra dimension");
  }
  std::vector<std::uint8_t> out(a.dim, 0);
  for (int i = 0; i < a.dim; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < a.dim; ++j) {
      if (v[j] == 0) continue;
      const int f = (u[i] * v[j]) % a.p;
      for (auto [k, c] : a.terms(i, j)) {
        out[k] = static_cast<std::uint8_t>((out[k] + f * c) % a.p);
      }
    }
  }
  return out;
}

std::vector<Fp> multiply(const AssocAlgebra& a, const std::vector<Fp>& u,
                         const std::vector<Fp>& v) {
  return to_fp(multiply_raw(a, to_raw(u, a.p), to_raw(v, a.p)), a.p);
}

std::optional<std::vector<Fp>> find_unit(const AssocAlgebra& a) {
  // e * e_j = e_j for all j: dim^2 equations in the dim coordinates of e
  Matrix sys(a.dim * a.dim, a.dim, a.p);
  std::vector<Fp> rhs;
  rhs.reserve(a.dim * a.dim);
  for (int j = 0; j < a.dim; ++j) {
    for (int m = 0; m < a.dim; ++m) rhs.emplace_back(m == j ? 1 : 0, a.p);
  }
  for (int i = 0; i < a.dim; ++i) {
    for (int j = 0; j < a.dim; ++j) {
      for (auto [m, c] : a.terms(i, j)) {
        const int row = j * a.dim + m;
        sys.set_raw(row, i, add_mod(sys.raw(row, i), c, a.p));
      }
    }
  }
  return solve(sys, rhs);
}

Matrix right_mult_operator(const AssocAlgebra& alg, std::span<const std::uint8_t> a) {
  if (static_cast<int>(a.size()) != alg.dim) {
    throw ShapeError("vector length differs from algebra dimension");
  }
  Matrix m(alg.dim, alg.dim, alg.p);
  for (int i = 0; i < alg.dim; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < alg.dim; ++j) {
      for (auto [k, c] : alg.terms(i, j)) {
        m.set_raw(k, j, (m.raw(k, j) + a[i] * c) % alg.p);
      }
    }
  }
  return m;
}

Matrix right_mult_operator(const AssocAlgebra& alg, const std::vector<Fp>& a) {
  const auto raw = to_raw(a, alg.p);
  return right_mult_operator(alg, std::span<const std::uint8_t>(raw));
}

Matrix functional_on_products(const AssocAlgebra& a, std::span<const std::uint8_t> f) {
  if (static_cast<int>(f.size()) != a.dim) {
    throw ShapeError("functional length differs from algebra dimension");
  }
  Matrix m(a.dim, a.dim, a.p);
  for (const auto& [k, terms] : a.products) {
    const int i = static_cast<int>(k >> 32);
    const int j = static_cast<int>(k & 0xffffffffu);
    int acc = 0;
    for (auto [t, c] : terms) acc += c * f[t];
    m.set_raw(i, j, acc % a.p);
  }
  return m;
}

bool satisfies_leibniz(const AssocAlgebra& a, const Matrix& op) {
  if (op.rows() != a.dim || op.cols() != a.dim || op.modulus() != a.p) {
    throw ShapeError("operator shape differs from algebra");
  }
  // D R_j = R_j D + R_{D(e_j)} for every basis element, using the sparse
  // multiplication structure so the check stays O(dim^3) with a tiny
  // constant.
  std::vector<std::uint8_t> ej(a.dim, 0);
  for (int j = 0; j < a.dim; ++j) {
    ej.assign(a.dim, 0);
    ej[j] = 1;
    const Matrix rj = right_mult_operator(a, std::span<const std::uint8_t>(ej));
    std::vector<std::uint8_t> dej(a.dim);
    for (int r = 0; r < a.dim; ++r) dej[r] = op.raw(r, j);
    const Matrix rdej = right_mult_operator(a, std::span<const std::uint8_t>(dej));
    if (op * rj != rj * op + rdej) return false;
  }
  return true;
}

Subspace derivations(const AssocAlgebra& a) {
  const int d = a.dim;
  const int p = a.p;
  const auto var = [d](int r, int c) { return r * d + c; };

  std::vector<SparseRow> rows;
  rows.reserve(static_cast<std::size_t>(d) * d);
  std::vector<SparseRow> eq(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (auto& r : eq) r.clear();
      // coordinate m of D(e_i e_j) - D(e_i) e_j - e_i D(e_j) = 0
      for (auto [k, c] : a.terms(i, j)) {
        for (int m = 0; m < d; ++m) eq[m].emplace_back(var(m, k), c);
      }
      for (int r = 0; r < d; ++r) {
        for (auto [s, c] : a.terms(r, j)) {
          eq[s].emplace_back(var(r, i), static_cast<std::uint8_t>(p - c));
        }
        for (auto [s, c] : a.terms(i, r)) {
          eq[s].emplace_back(var(r, j), static_cast<std::uint8_t>(p - c));
        }
      }
      for (auto& r : eq) {
        if (!r.empty()) rows.push_back(r);
      }
    }
  }
  RowReducer red = reduce_sparse_rows(std::move(rows), d * d, p);
  return solution_space(red);
}

std::vector<Matrix> operators_of(const AssocAlgebra& a, const Subspace& flattened) {
  if (flattened.ambient_dim() != a.dim * a.dim) {
    throw ShapeError("flattened operator space has wrong ambient dimension");
  }
  std::vector<Matrix> out;
  out.reserve(flattened.dim());
  for (int i = 0; i < flattened.dim(); ++i) {
    out.push_back(matrix_from_flat(flattened.basis_vector(i), a.dim, a.dim, a.p));
  }
  return out;
}

Subspace derivation_image(const AssocAlgebra& a, const std::vector<Matrix>& ops) {
  RowReducer red(a.dim, a.p);
  for (const auto& op : ops) {
    if (op.rows() != a.dim || op.cols() != a.dim) {
      throw ShapeError("operator shape differs from algebra dimension");
    }
    for (int i = 0; i < a.dim; ++i) {
      std::vector<std::uint8_t> img(a.dim);
      for (int r = 0; r < a.dim; ++r) img[r] = op.raw(r, i);
      red.insert(std::move(img));
    }
  }
  return Subspace::span(red.basis_matrix());
}

Subspace dual_invariants(const AssocAlgebra& a, const std::vector<Matrix>& ops) {
  // f(D(e_c)) = 0 for all c: constraint rows are the columns of each D
  RowReducer red(a.dim, a.p);
  for (const auto& op : ops) {
    if (op.rows() != a.dim || op.cols() != a.dim) {
      throw ShapeError("operator shape differs from algebra dimension");
    }
    for (int c = 0; c < a.dim; ++c) {
      std::vector<std::uint8_t> col(a.dim);
      for (int r = 0; r < a.dim; ++r) col[r] = op.raw(r, c);
      red.insert(std::move(col));
    }
  }
  return solution_space(red);
}

}  // namespace mck
