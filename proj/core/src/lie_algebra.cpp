#include "mck/lie_algebra.hpp"

#include <algorithm>

namespace mck {

namespace {

const ProductTerms kNoTerms{};
constexpr std::size_t kMaxViolations = 100;

}  // namespace

const ProductTerms& LieAlgebra::bracket(int i, int j) const {
  auto it = brackets.find(AssocAlgebra::key(i, j));
  return it == brackets.end() ? kNoTerms : it->second;
}

void LieAlgebra::add_directed_bracket_term(int i, int j, int k, int coeff) {
  const int c = ((coeff % p) + p) % p;
  if (c == 0) return;
  auto& list = brackets[AssocAlgebra::key(i, j)];
  for (auto& [idx, val] : list) {
    if (idx == k) {
      const int merged = add_mod(val, c, p);
      if (merged == 0) {
        std::erase_if(list, [k](const ProductTerm& t) { return t.first == k; });
        if (list.empty()) brackets.erase(AssocAlgebra::key(i, j));
      } else {
        val = static_cast<std::uint8_t>(merged);
      }
      return;
    }
  }
  list.emplace_back(k, static_cast<std::uint8_t>(c));
  std::sort(list.begin(), list.end());
}

void LieAlgebra::add_bracket_term(int i, int j, int k, int coeff) {
  if (i == j) throw PreconditionError("[e_i, e_i] must stay zero in an alternating bracket");
  add_directed_bracket_term(i, j, k, coeff);
  add_directed_bracket_term(j, i, k, -coeff);
}

std::vector<std::uint8_t> lie_bracket_raw(const LieAlgebra& l, std::span<const std::uint8_t> u,
                                          std::span<const std::uint8_t> v) {
  if (static_cast<int>(u.size()) != l.dim || static_cast<int>(v.size()) != l.dim) {
    throw ShapeError("vector length differs from Lie algebra dimension");
  }
  std::vector<std::uint8_t> out(l.dim, 0);
  for (int i = 0; i < l.dim; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < l.dim; ++j) {
      if (v[j] == 0) continue;
      const int f = (u[i] * v[j]) % l.p;
      for (auto [k, c] : l.bracket(i, j)) {
        out[k] = static_cast<std::uint8_t>((out[k] + f * c) % l.p);
      }
    }
  }
  return out;
}

std::vector<AxiomViolation> lie_check(const LieAlgebra& l) {
  std::vector<AxiomViolation> out;
  const int d = l.dim;
  const int p = l.p;
  for (int i = 0; i < d && out.size() < kMaxViolations; ++i) {
    if (!l.bracket(i, i).empty()) {
      out.push_back({{i, i}, "[e_" + std::to_string(i) + ", e_" + std::to_string(i) + "] != 0"});
    }
  }
  for (int i = 0; i < d && out.size() < kMaxViolations; ++i) {
    for (int j = i + 1; j < d && out.size() < kMaxViolations; ++j) {
      std::vector<int> acc(d, 0);
      for (auto [k, c] : l.bracket(i, j)) acc[k] = (acc[k] + c) % p;
      for (auto [k, c] : l.bracket(j, i)) acc[k] = (acc[k] + c) % p;
      if (std::any_of(acc.begin(), acc.end(), [](int v) { return v != 0; })) {
        out.push_back({{i, j}, "anticommutativity fails for pair (" + std::to_string(i) + ", " +
                                   std::to_string(j) + ")"});
      }
    }
  }
  std::vector<int> acc(d);
  for (int i = 0; i < d && out.size() < kMaxViolations; ++i) {
    for (int j = i + 1; j < d && out.size() < kMaxViolations; ++j) {
      for (int k = j + 1; k < d && out.size() < kMaxViolations; ++k) {
        std::fill(acc.begin(), acc.end(), 0);
        // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
        for (auto [m, c] : l.bracket(i, j)) {
          for (auto [t, c2] : l.bracket(m, k)) acc[t] = (acc[t] + c * c2) % p;
        }
        for (auto [m, c] : l.bracket(j, k)) {
          for (auto [t, c2] : l.bracket(m, i)) acc[t] = (acc[t] + c * c2) % p;
        }
        for (auto [m, c] : l.bracket(k, i)) {
          for (auto [t, c2] : l.bracket(m, j)) acc[t] = (acc[t] + c * c2) % p;
        }
        if (std::any_of(acc.begin(), acc.end(), [](int v) { return v != 0; })) {
          out.push_back({{i, j, k}, "Jacobi fails for triple (" + std::to_string(i) + ", " +
                                        std::to_string(j) + ", " + std::to_string(k) + ")"});
        }
      }
    }
  }
  return out;
}

Subspace bracket_image(const LieAlgebra& l) {
  RowReducer red(l.dim, l.p);
  for (int i = 0; i < l.dim; ++i) {
    for (int j = i + 1; j < l.dim; ++j) {
      const auto& terms = l.bracket(i, j);
      if (terms.empty()) continue;
      std::vector<std::uint8_t> v(l.dim, 0);
      for (auto [k, c] : terms) v[k] = c;
      red.insert(std::move(v));
    }
  }
  return Subspace::span(red.basis_matrix());
}

LieAlgebra sl2(int p) {
  require_prime(p);
  if (p == 2) throw PreconditionError("sl2 is not simple over GF(2)");
  LieAlgebra l;
  l.p = p;
  l.dim = 3;
  l.labels = {"e", "h", "f"};
  l.add_bracket_term(1, 0, 0, 2);   // [h,e] = 2e
  l.add_bracket_term(1, 2, 2, -2);  // [h,f] = -2f
  l.add_bracket_term(0, 2, 1, 1);   // [e,f] = h
  return l;
}

namespace {

/// Lie algebra spanned by the rows of an rref operator basis, brackets by
/// matrix commutator. Coordinates are read off pivot columns, so the
/// construction is exact and deterministic.
DerivationAlgebra operator_lie_algebra(const AssocAlgebra& o_n, const Subspace& span,
                                       const std::string& label_prefix) {
  DerivationAlgebra out;
  out.algebra.p = o_n.p;
  out.algebra.dim = span.dim();
  const int m = span.dim();
  out.action.reserve(m);
  for (int i = 0; i < m; ++i) {
    out.algebra.labels.push_back(label_prefix + std::to_string(i));
    out.action.push_back(matrix_from_flat(span.basis_vector(i), o_n.dim, o_n.dim, o_n.p));
  }
  RowReducer basis(span.ambient_dim(), o_n.p);
  for (int i = 0; i < m; ++i) basis.insert(span.basis_vector(i));
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const Matrix comm = out.action[i] * out.action[j] - out.action[j] * out.action[i];
      const auto coords = basis.coordinates(comm.flattened());
      if (!coords) {
        throw ConsistencyError("commutator escaped the operator span");
      }
      for (int k = 0; k < m; ++k) {
        if ((*coords)[k] != 0) out.algebra.add_bracket_term(i, j, k, (*coords)[k]);
      }
    }
  }
  return out;
}

}  // namespace

DerivationAlgebra witt(int p, int n, int size_cap) {
  const AssocAlgebra o_n = truncated_polynomial_algebra(p, n, size_cap);
  const Subspace der = derivations(o_n);
  return operator_lie_algebra(o_n, der, "w");
}

DerivationAlgebra zero_derivation_algebra(int p) {
  require_prime(p);
  DerivationAlgebra out;
  out.algebra.p = p;
  out.algebra.dim = 0;
  return out;
}

DerivationAlgebra derivation_subalgebra(const AssocAlgebra& o_n, const std::vector<Matrix>& gens) {
  for (const auto& g : gens) {
    if (!satisfies_leibniz(o_n, g)) {
      throw PreconditionError("derivation_subalgebra generator fails the Leibniz rule");
    }
  }
  const int flat_dim = o_n.dim * o_n.dim;
  RowReducer span(flat_dim, o_n.p);
  std::vector<Matrix> basis_ops;
  for (const auto& g : gens) {
    if (span.insert(g.flattened())) basis_ops.push_back(g);
  }
  // close under commutator; each pass brackets every pair of current basis
  // operators and keeps what is new
  std::size_t frontier_start = 0;
  while (frontier_start < basis_ops.size()) {
    const std::size_t frozen = basis_ops.size();
    for (std::size_t i = 0; i < frozen; ++i) {
      for (std::size_t j = std::max(frontier_start, i + 1); j < frozen; ++j) {
        const Matrix comm = basis_ops[i] * basis_ops[j] - basis_ops[j] * basis_ops[i];
        if (span.insert(comm.flattened())) basis_ops.push_back(comm);
      }
    }
    frontier_start = frozen;
  }
  return operator_lie_algebra(o_n, Subspace::span(span.basis_matrix()), "d");
}

LieAlgebra current_algebra(const LieAlgebra& s, const AssocAlgebra& a) {
  if (s.p != a.p) throw ModulusMismatchError("current algebra factors over different fields");
  const auto commutativity = check_commutative(a);
  if (!commutativity.empty()) {
    throw PreconditionError("current_algebra requires a commutative coefficient algebra: " +
                            commutativity.front().description);
  }
  if (!find_unit(a)) throw PreconditionError("current_algebra requires a unital coefficient algebra");
  LieAlgebra l;
  l.p = s.p;
  l.dim = s.dim * a.dim;
  l.labels.reserve(l.dim);
  l.parts.reserve(l.dim);
  for (int si = 0; si < s.dim; ++si) {
    for (int ai = 0; ai < a.dim; ++ai) {
      l.labels.push_back(s.labels[si] + "⊗" + a.labels[ai]);
      l.parts.push_back({BasisPart::Kind::kCurrent, si, ai, -1});
    }
  }
  // [s⊗a, t⊗b] = [s,t] ⊗ ab
  for (const auto& [ks, termsS] : s.brackets) {
    const int si = static_cast<int>(ks >> 32);
    const int ti = static_cast<int>(ks & 0xffffffffu);
    for (const auto& [ka, termsA] : a.products) {
      const int ai = static_cast<int>(ka >> 32);
      const int bi = static_cast<int>(ka & 0xffffffffu);
      for (auto [u, cs] : termsS) {
        for (auto [m, ca] : termsA) {
          l.add_directed_bracket_term(si * a.dim + ai, ti * a.dim + bi, u * a.dim + m, cs * ca);
        }
      }
    }
  }
  return l;
}

LieAlgebra semidirect(const LieAlgebra& s, const AssocAlgebra& a, const DerivationAlgebra& d) {
  if (d.algebra.p != a.p) throw ModulusMismatchError("acting algebra over a different field");
  for (const auto& op : d.action) {
    if (!satisfies_leibniz(a, op)) {
      throw PreconditionError("semidirect action operator fails the Leibniz rule");
    }
  }
  LieAlgebra cur = current_algebra(s, a);
  const int current_dim = cur.dim;

  LieAlgebra l;
  l.p = cur.p;
  l.dim = current_dim + d.algebra.dim;
  l.labels = cur.labels;
  l.parts = cur.parts;
  for (int k = 0; k < d.algebra.dim; ++k) {
    l.labels.push_back(d.algebra.labels[k]);
    l.parts.push_back({BasisPart::Kind::kActing, -1, -1, k});
  }
  l.brackets = std::move(cur.brackets);

  // [Δ_k, s⊗a] = s ⊗ Δ_k(a)
  for (int k = 0; k < d.algebra.dim; ++k) {
    const Matrix& op = d.action[k];
    for (int si = 0; si < s.dim; ++si) {
      for (int ai = 0; ai < a.dim; ++ai) {
        for (int r = 0; r < a.dim; ++r) {
          const int c = op.raw(r, ai);
          if (c == 0) continue;
          l.add_directed_bracket_term(current_dim + k, si * a.dim + ai, si * a.dim + r, c);
          l.add_directed_bracket_term(si * a.dim + ai, current_dim + k, si * a.dim + r, -c);
        }
      }
    }
  }
  // [Δ_k, Δ_m] from D's own table
  for (const auto& [kd, terms] : d.algebra.brackets) {
    const int i = static_cast<int>(kd >> 32);
    const int j = static_cast<int>(kd & 0xffffffffu);
    for (auto [t, c] : terms) {
      l.add_directed_bracket_term(current_dim + i, current_dim + j, current_dim + t, c);
    }
  }

  const auto violations = lie_check(l);
  if (!violations.empty()) {
    throw ConsistencyError("semidirect sum failed lie_check: " + violations.front().description);
  }
  return l;
}

}  // namespace mck
