#include "mck/cyclic.hpp"

namespace mck {

namespace {

void require_commutative(const AssocAlgebra& a, const char* op) {
  const auto violations = check_commutative(a);
  if (!violations.empty()) {
    throw PreconditionError(std::string(op) + " requires a commutative algebra: " +
                            violations.front().description);
  }
}

/// Appends the defining constraints of Z^1_lambda over the d^2 gram
/// unknowns: literal antisymmetry rows and the cocycle identity over all
/// basis triples.
void append_cyclic_rows(const AssocAlgebra& a, std::vector<SparseRow>& rows) {
  const int d = a.dim;
  const int p = a.p;
  const auto var = [d](int r, int c) { return r * d + c; };
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      if (i == j) {
        rows.push_back({{var(i, i), 2}});
      } else {
        rows.push_back({{var(i, j), 1}, {var(j, i), 1}});
      }
    }
  }
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        SparseRow row;
        for (auto [m, c] : a.terms(i, j)) row.emplace_back(var(m, k), c);
        for (auto [m, c] : a.terms(j, k)) {
          row.emplace_back(var(i, m), static_cast<std::uint8_t>(p - c));
        }
        for (auto [m, c] : a.terms(k, i)) row.emplace_back(var(m, j), c);
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
  }
}

}  // namespace

Fp BilinearForm::evaluate(std::span<const std::uint8_t> u, std::span<const std::uint8_t> v) const {
  const int p = gram.modulus();
  const auto gv = gram.apply(v);
  long long acc = 0;
  for (std::size_t i = 0; i < gv.size(); ++i) acc += static_cast<long long>(u[i]) * gv[i];
  return Fp(acc, p);
}

BilinearForm form_from_flat(std::span<const std::uint8_t> flat, int dim, int p) {
  return {matrix_from_flat(flat, dim, dim, p)};
}

bool is_cyclic_cocycle(const AssocAlgebra& a, const BilinearForm& phi) {
  const int d = a.dim;
  const int p = a.p;
  const Matrix& g = phi.gram;
  if (g.rows() != d || g.cols() != d || g.modulus() != p) {
    throw ShapeError("form shape differs from algebra");
  }
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (add_mod(g.raw(i, j), g.raw(j, i), p) != 0) return false;
    }
  }
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        // phi(e_i e_j, e_k) - phi(e_i, e_j e_k) + phi(e_k e_i, e_j)
        int acc = 0;
        for (auto [m, c] : a.terms(i, j)) acc += c * g.raw(m, k);
        for (auto [m, c] : a.terms(j, k)) acc += (p - c) * g.raw(i, m);
        for (auto [m, c] : a.terms(k, i)) acc += c * g.raw(m, j);
        if (acc % p != 0) return false;
      }
    }
  }
  return true;
}

Subspace cyclic_cocycles(const AssocAlgebra& a) {
  require_commutative(a, "cyclic_cocycles");
  std::vector<SparseRow> rows;
  rows.reserve(static_cast<std::size_t>(a.dim) * a.dim * a.dim / 4);
  append_cyclic_rows(a, rows);
  RowReducer red = reduce_sparse_rows(std::move(rows), a.dim * a.dim, a.p);
  return solution_space(red);
}

Subspace cyclic_coboundaries(const AssocAlgebra& a) {
  const int d = a.dim;
  RowReducer red(d * d, a.p);
  std::vector<std::uint8_t> psi(d, 0);
  for (int r = 0; r < d; ++r) {
    psi.assign(d, 0);
    psi[r] = 1;
    const Matrix m = functional_on_products(a, psi);
    const Matrix delta = m - m.transposed();  // psi(ab) - psi(ba)
    red.insert(delta.flattened());
  }
  return Subspace::span(red.basis_matrix());
}

Hc1Space hc1(const AssocAlgebra& a) {
  Hc1Space out{cyclic_cocycles(a), cyclic_coboundaries(a), 0};
  if (!out.cocycles.contains_subspace(out.coboundaries)) {
    throw ConsistencyError("cyclic coboundaries escaped the cocycle space");
  }
  out.hc1_dim = out.cocycles.dim() - out.coboundaries.dim();
  return out;
}

long long hc1_dimension_formula(int p, int n) {
  require_prime(p);
  if (n < 1) throw PreconditionError("hc1_dimension_formula needs n >= 1");
  long long v = n;
  for (int i = 0; i < n - 1; ++i) v *= p;
  return v;
}

BilinearForm alpha_cocycle(int p) {
  require_prime(p);
  Matrix g(p, p, p);
  for (int i = 1; i < p; ++i) {
    const int j = p - i;
    if (j < p) g.set_raw(i, j, i % p);
  }
  return {g};
}

BilinearForm derivation_act(const AssocAlgebra& a, const Matrix& d, const BilinearForm& phi) {
  if (d.rows() != a.dim || d.cols() != a.dim || phi.gram.rows() != a.dim) {
    throw ShapeError("operator or form shape differs from algebra");
  }
  return {d.transposed() * phi.gram + phi.gram * d};
}

Subspace invariant_classes(const AssocAlgebra& a, const std::vector<Matrix>& ops) {
  for (const auto& op : ops) {
    if (!satisfies_leibniz(a, op)) {
      throw PreconditionError("invariant_classes given an operator that is not a derivation");
    }
  }
  // Invariance on representatives stands in for invariance on classes only
  // because B^1 vanishes; assert that instead of assuming it.
  if (cyclic_coboundaries(a).dim() != 0) {
    throw ConsistencyError("nonzero B^1 on input accepted by cyclic_cocycles");
  }
  const int d = a.dim;
  const int p = a.p;
  const auto var = [d](int r, int c) { return r * d + c; };

  std::vector<SparseRow> rows;
  append_cyclic_rows(a, rows);
  // (D^T G + G D)[i][j] = 0 for every D
  for (const auto& op : ops) {
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        SparseRow row;
        for (int r = 0; r < d; ++r) {
          if (op.raw(r, i) != 0) row.emplace_back(var(r, j), op.raw(r, i));
          if (op.raw(r, j) != 0) row.emplace_back(var(i, r), op.raw(r, j));
        }
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
  }
  RowReducer red = reduce_sparse_rows(std::move(rows), d * d, p);
  return solution_space(red);
}

BilinearForm kunneth_assemble(const AssocAlgebra& a, const AssocAlgebra& b,
                              const BilinearForm& phi, const std::vector<Fp>& beta,
                              const std::vector<Fp>& alpha, const BilinearForm& psi) {
  if (a.p != b.p) throw ModulusMismatchError("tensor factors over different fields");
  if (!find_unit(a) || !find_unit(b)) {
    throw PreconditionError("kunneth_assemble requires unital factors");
  }
  if (phi.gram.rows() != a.dim || psi.gram.rows() != b.dim ||
      static_cast<int>(beta.size()) != b.dim || static_cast<int>(alpha.size()) != a.dim) {
    throw ShapeError("slot shapes differ from the factor algebras");
  }
  if (!is_cyclic_cocycle(a, phi) || !is_cyclic_cocycle(b, psi)) {
    throw PreconditionError("kunneth_assemble form slots must be cyclic cocycles");
  }
  const int p = a.p;
  const Matrix m_beta = functional_on_products(b, to_raw(beta, p));
  const Matrix m_alpha = functional_on_products(a, to_raw(alpha, p));

  Matrix g(a.dim * b.dim, a.dim * b.dim, p);
  for (int i = 0; i < a.dim; ++i) {
    for (int i2 = 0; i2 < a.dim; ++i2) {
      const int gphi = phi.gram.raw(i, i2);
      const int galpha = m_alpha.raw(i, i2);
      if (gphi == 0 && galpha == 0) continue;
      for (int j = 0; j < b.dim; ++j) {
        for (int j2 = 0; j2 < b.dim; ++j2) {
          const int val = (gphi * m_beta.raw(j, j2) + galpha * psi.gram.raw(j, j2)) % p;
          if (val) g.set_raw(i * b.dim + j, i2 * b.dim + j2, val);
        }
      }
    }
  }
  return {g};
}

KunnethReport kunneth_check(const AssocAlgebra& a, const AssocAlgebra& b) {
  require_commutative(a, "kunneth_check");
  require_commutative(b, "kunneth_check");
  if (!find_unit(a) || !find_unit(b)) {
    throw PreconditionError("kunneth_check requires unital factors");
  }
  const AssocAlgebra t = tensor_product(a, b);
  const Hc1Space ha = hc1(a);
  const Hc1Space hb = hc1(b);
  const Hc1Space ht = hc1(t);

  KunnethReport rep;
  rep.hc1_tensor = ht.hc1_dim;
  rep.hc1_a = ha.hc1_dim;
  rep.hc1_b = hb.hc1_dim;
  rep.dim_a = a.dim;
  rep.dim_b = b.dim;
  rep.predicted = static_cast<long long>(ha.hc1_dim) * b.dim +
                  static_cast<long long>(a.dim) * hb.hc1_dim;
  rep.dimensions_match = (rep.hc1_tensor == rep.predicted);

  // span of the assembled basis cocycles phi (x) beta and alpha (x) psi
  const int p = a.p;
  RowReducer span(t.dim * t.dim, p);
  const BilinearForm zero_a{Matrix(a.dim, a.dim, p)};
  const BilinearForm zero_b{Matrix(b.dim, b.dim, p)};
  const std::vector<Fp> zero_fa(a.dim, Fp(0, p));
  const std::vector<Fp> zero_fb(b.dim, Fp(0, p));

  bool all_cocycles = true;
  for (int u = 0; u < ha.cocycles.dim(); ++u) {
    const BilinearForm phi = form_from_flat(ha.cocycles.basis_vector(u), a.dim, p);
    for (int v = 0; v < b.dim; ++v) {
      std::vector<Fp> beta(b.dim, Fp(0, p));
      beta[v] = Fp(1, p);
      const BilinearForm assembled = kunneth_assemble(a, b, phi, beta, zero_fa, zero_b);
      if (!is_cyclic_cocycle(t, assembled)) all_cocycles = false;
      span.insert(assembled.flattened());
    }
  }
  for (int u = 0; u < a.dim; ++u) {
    std::vector<Fp> alpha(a.dim, Fp(0, p));
    alpha[u] = Fp(1, p);
    for (int v = 0; v < hb.cocycles.dim(); ++v) {
      const BilinearForm psi = form_from_flat(hb.cocycles.basis_vector(v), b.dim, p);
      const BilinearForm assembled = kunneth_assemble(a, b, zero_a, zero_fb, alpha, psi);
      if (!is_cyclic_cocycle(t, assembled)) all_cocycles = false;
      span.insert(assembled.flattened());
    }
  }
  rep.assembled_rank = span.rank();
  rep.span_matches = all_cocycles && (rep.assembled_rank == rep.predicted);
  return rep;
}

}  // namespace mck
