#include "mck/lie_cohomology.hpp"

#include <future>

namespace mck {

bool is_lie_two_cocycle(const LieAlgebra& l, const TwoCochain& phi) {
  const int d = l.dim;
  const int p = l.p;
  const Matrix& g = phi.gram;
  if (g.rows() != d || g.cols() != d || g.modulus() != p) {
    throw ShapeError("form shape differs from Lie algebra");
  }
  for (int i = 0; i < d; ++i) {
    if (g.raw(i, i) != 0) return false;
    for (int j = i + 1; j < d; ++j) {
      if (add_mod(g.raw(i, j), g.raw(j, i), p) != 0) return false;
    }
  }
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      for (int k = j + 1; k < d; ++k) {
        // phi([e_i,e_j],e_k) - phi([e_i,e_k],e_j) + phi([e_j,e_k],e_i)
        int acc = 0;
        for (auto [m, c] : l.bracket(i, j)) acc += c * g.raw(m, k);
        for (auto [m, c] : l.bracket(i, k)) acc += (p - c) * g.raw(m, j);
        for (auto [m, c] : l.bracket(j, k)) acc += c * g.raw(m, i);
        if (acc % p != 0) return false;
      }
    }
  }
  return true;
}

H2Space ce_h2(const LieAlgebra& l) {
  const int d = l.dim;
  const int p = l.p;
  const auto var = [d](int r, int c) { return r * d + c; };

  std::vector<SparseRow> rows;
  for (int i = 0; i < d; ++i) {
    rows.push_back({{var(i, i), 1}});  // zero diagonal, including p = 2
    for (int j = i + 1; j < d; ++j) {
      rows.push_back({{var(i, j), 1}, {var(j, i), 1}});
    }
  }
  // distinct triples suffice: repeated indices are vacuous for alternating
  // forms, and permutations only change the row by a unit modulo the
  // alternating relations already present
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      for (int k = j + 1; k < d; ++k) {
        SparseRow row;
        for (auto [m, c] : l.bracket(i, j)) row.emplace_back(var(m, k), c);
        for (auto [m, c] : l.bracket(i, k)) {
          row.emplace_back(var(m, j), static_cast<std::uint8_t>(p - c));
        }
        for (auto [m, c] : l.bracket(j, k)) row.emplace_back(var(m, i), c);
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
  }
  RowReducer red = reduce_sparse_rows(std::move(rows), d * d, p);
  H2Space out{solution_space(red), Subspace(d * d, p), 0};

  RowReducer bred(d * d, p);
  for (int r = 0; r < d; ++r) {
    Matrix g(d, d, p);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        for (auto [m, c] : l.bracket(i, j)) {
          if (m == r) g.set_raw(i, j, add_mod(g.raw(i, j), c, p));
        }
      }
    }
    bred.insert(g.flattened());
  }
  out.coboundaries = Subspace::span(bred.basis_matrix());

  if (!out.cocycles.contains_subspace(out.coboundaries)) {
    throw ConsistencyError("CE coboundaries escaped the cocycle space");
  }
  out.h2_dim = out.cocycles.dim() - out.coboundaries.dim();
  return out;
}

Subspace symmetric_invariant_forms(const LieAlgebra& s) {
  const int d = s.dim;
  const int p = s.p;
  const auto var = [d](int r, int c) { return r * d + c; };

  std::vector<SparseRow> rows;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      rows.push_back({{var(i, j), 1}, {var(j, i), static_cast<std::uint8_t>(p - 1)}});
    }
  }
  // beta([e_i,e_j], e_k) = beta(e_i, [e_j,e_k]) over all ordered triples
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        SparseRow row;
        for (auto [m, c] : s.bracket(i, j)) row.emplace_back(var(m, k), c);
        for (auto [m, c] : s.bracket(j, k)) {
          row.emplace_back(var(i, m), static_cast<std::uint8_t>(p - c));
        }
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
  }
  RowReducer red = reduce_sparse_rows(std::move(rows), d * d, p);
  return solution_space(red);
}

std::vector<TwoCochain> quotient_representatives(const LieAlgebra& l, const H2Space& space) {
  RowReducer red(l.dim * l.dim, l.p);
  for (int i = 0; i < space.coboundaries.dim(); ++i) {
    red.insert(space.coboundaries.basis_vector(i));
  }
  std::vector<TwoCochain> reps;
  for (int i = 0; i < space.cocycles.dim(); ++i) {
    auto v = space.cocycles.basis_vector(i);
    if (red.insert(std::vector<std::uint8_t>(v))) {
      reps.push_back(form_from_flat(v, l.dim, l.p));
    }
  }
  if (static_cast<int>(reps.size()) != space.h2_dim) {
    throw ConsistencyError("quotient representative count differs from h2_dim");
  }
  return reps;
}

namespace {

void require_semidirect_parts(const LieAlgebra& l) {
  if (l.parts.size() != static_cast<std::size_t>(l.dim)) {
    throw PreconditionError("lift target is missing semidirect part labels");
  }
}

TwoCochain verified(const LieAlgebra& l, Matrix gram, const char* kind) {
  TwoCochain out{std::move(gram)};
  if (!is_lie_two_cocycle(l, out)) {
    throw ConsistencyError(std::string("lifted ") + kind +
                           " cochain is not a 2-cocycle; a decomposition hypothesis is violated");
  }
  return out;
}

}  // namespace

TwoCochain lift_h2s_dual(const LieAlgebra& l, const AssocAlgebra& a, const TwoCochain& omega,
                         const std::vector<Fp>& f) {
  require_semidirect_parts(l);
  const int p = l.p;
  const Matrix mf = functional_on_products(a, to_raw(f, p));
  Matrix g(l.dim, l.dim, p);
  for (int u = 0; u < l.dim; ++u) {
    const auto& pu = l.parts[u];
    if (pu.kind != BasisPart::Kind::kCurrent) continue;
    for (int v = 0; v < l.dim; ++v) {
      const auto& pv = l.parts[v];
      if (pv.kind != BasisPart::Kind::kCurrent) continue;
      const int val = omega.gram.raw(pu.s_index, pv.s_index) * mf.raw(pu.a_index, pv.a_index) % p;
      if (val) g.set_raw(u, v, val);
    }
  }
  return verified(l, std::move(g), "H2(S) (x) invariant-dual");
}

TwoCochain lift_bs_hc1(const LieAlgebra& l, const AssocAlgebra& a, const TwoCochain& beta,
                       const BilinearForm& phi) {
  require_semidirect_parts(l);
  if (phi.gram.rows() != a.dim) throw ShapeError("cyclic form shape differs from algebra");
  const int p = l.p;
  Matrix g(l.dim, l.dim, p);
  for (int u = 0; u < l.dim; ++u) {
    const auto& pu = l.parts[u];
    if (pu.kind != BasisPart::Kind::kCurrent) continue;
    for (int v = 0; v < l.dim; ++v) {
      const auto& pv = l.parts[v];
      if (pv.kind != BasisPart::Kind::kCurrent) continue;
      const int val = beta.gram.raw(pu.s_index, pv.s_index) * phi.gram.raw(pu.a_index, pv.a_index) % p;
      if (val) g.set_raw(u, v, val);
    }
  }
  return verified(l, std::move(g), "B(S) (x) HC1-invariant");
}

TwoCochain lift_h2d(const LieAlgebra& l, const TwoCochain& eta) {
  require_semidirect_parts(l);
  Matrix g(l.dim, l.dim, l.p);
  for (int u = 0; u < l.dim; ++u) {
    const auto& pu = l.parts[u];
    if (pu.kind != BasisPart::Kind::kActing) continue;
    for (int v = 0; v < l.dim; ++v) {
      const auto& pv = l.parts[v];
      if (pv.kind != BasisPart::Kind::kActing) continue;
      g.set_raw(u, v, eta.gram.raw(pu.d_index, pv.d_index));
    }
  }
  return verified(l, std::move(g), "H2(D)");
}

DecompositionReport prop2_check(const LieAlgebra& s, const AssocAlgebra& a,
                                const DerivationAlgebra& d) {
  const LieAlgebra l = semidirect(s, a, d);

  // the left side and the three summands are independent computations
  auto lhs_task = std::async(std::launch::async, [&] { return ce_h2(l); });
  auto s_task = std::async(std::launch::async, [&] {
    return std::make_pair(ce_h2(s), symmetric_invariant_forms(s));
  });
  auto inv_task = std::async(std::launch::async, [&] {
    return std::make_pair(dual_invariants(a, d.action), invariant_classes(a, d.action));
  });
  auto d_task = std::async(std::launch::async, [&] { return ce_h2(d.algebra); });

  const H2Space h2_l = lhs_task.get();
  const auto [h2_s, bforms] = s_task.get();
  const auto [dual_inv, hc1_inv] = inv_task.get();
  const H2Space h2_d = d_task.get();

  DecompositionReport rep;
  rep.lhs_dim = h2_l.h2_dim;
  rep.h2_s = h2_s.h2_dim;
  rep.dual_inv = dual_inv.dim();
  rep.bforms_s = bforms.dim();
  rep.hc1_inv = hc1_inv.dim();
  rep.h2_d = h2_d.h2_dim;
  rep.rhs_dim = static_cast<long long>(rep.h2_s) * rep.dual_inv +
                static_cast<long long>(rep.bforms_s) * rep.hc1_inv + rep.h2_d;

  // lift a basis of each summand and count its rank modulo B^2(L)
  RowReducer mod_b(l.dim * l.dim, l.p);
  for (int i = 0; i < h2_l.coboundaries.dim(); ++i) {
    mod_b.insert(h2_l.coboundaries.basis_vector(i));
  }
  const int b_rank = mod_b.rank();

  for (const TwoCochain& omega : quotient_representatives(s, h2_s)) {
    for (int i = 0; i < dual_inv.dim(); ++i) {
      const auto f = to_fp(dual_inv.basis_vector(i), l.p);
      mod_b.insert(lift_h2s_dual(l, a, omega, f).flattened());
    }
  }
  for (int i = 0; i < bforms.dim(); ++i) {
    const TwoCochain beta = form_from_flat(bforms.basis_vector(i), s.dim, s.p);
    for (int j = 0; j < hc1_inv.dim(); ++j) {
      const BilinearForm phi = form_from_flat(hc1_inv.basis_vector(j), a.dim, a.p);
      mod_b.insert(lift_bs_hc1(l, a, beta, phi).flattened());
    }
  }
  for (const TwoCochain& eta : quotient_representatives(d.algebra, h2_d)) {
    mod_b.insert(lift_h2d(l, eta).flattened());
  }
  rep.lifted_rank = mod_b.rank() - b_rank;
  rep.match = (rep.lhs_dim == rep.rhs_dim) && (rep.lifted_rank == rep.rhs_dim);
  return rep;
}

}  // namespace mck
