#include "mck/algebra_io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace mck {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError("malformed JSON");
  if (!j.is_object()) throw InputError("expected a JSON object");
  return j;
}

int get_int(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_integer()) {
    throw InputError(std::string("missing or non-integer field '") + field + "'");
  }
  return j[field].get<int>();
}

std::vector<std::string> get_labels(const json& j, int dim) {
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array() || static_cast<int>(j["labels"].size()) != dim) {
      throw InputError("'labels' must be an array of dim strings");
    }
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw InputError("'labels' entries must be strings");
      labels.push_back(l.get<std::string>());
    }
  } else {
    for (int i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
  }
  return labels;
}

struct Quad {
  int i, j, k, c;
};

std::vector<Quad> get_quads(const json& j, const char* field, int dim, int p) {
  if (!j.contains(field)) return {};
  if (!j[field].is_array()) throw InputError(std::string("'") + field + "' must be an array");
  std::vector<Quad> out;
  for (const auto& entry : j[field]) {
    if (!entry.is_array() || entry.size() != 4) {
      throw InputError(std::string("'") + field + "' entries must be [i, j, k, c] quadruples");
    }
    for (const auto& v : entry) {
      if (!v.is_number_integer()) {
        throw InputError(std::string("'") + field + "' quadruples must hold integers");
      }
    }
    Quad q{entry[0].get<int>(), entry[1].get<int>(), entry[2].get<int>(), entry[3].get<int>()};
    if (q.i < 0 || q.i >= dim || q.j < 0 || q.j >= dim || q.k < 0 || q.k >= dim) {
      throw InputError(std::string("index out of range in '") + field + "' entry [" +
                       std::to_string(q.i) + ", " + std::to_string(q.j) + ", " +
                       std::to_string(q.k) + ", " + std::to_string(q.c) + "]");
    }
    q.c = ((q.c % p) + p) % p;
    out.push_back(q);
  }
  return out;
}

void check_prime_field(int p) {
  try {
    require_prime(p);
  } catch (const PreconditionError& e) {
    throw InputError(e.what());
  }
}

}  // namespace

AssocAlgebra parse_assoc_algebra(const std::string& text, bool require_commutative) {
  const json j = parse_json(text);
  const int p = get_int(j, "p");
  check_prime_field(p);
  const int dim = get_int(j, "dim");
  if (dim < 1) throw InputError("dim must be positive");

  AssocAlgebra a;
  a.p = p;
  a.dim = dim;
  a.labels = get_labels(j, dim);
  for (const Quad& q : get_quads(j, "products", dim, p)) {
    a.add_product_term(q.i, q.j, q.k, q.c);
  }

  const auto assoc = check_associative(a);
  if (!assoc.empty()) throw InputError(assoc.front().description);
  if (require_commutative) {
    const auto comm = check_commutative(a);
    if (!comm.empty()) throw InputError(comm.front().description);
  }
  // a claimed unit is verified, never trusted
  if (j.contains("unit")) {
    if (!j["unit"].is_number_integer()) throw InputError("'unit' must be a basis index");
    const int u = j["unit"].get<int>();
    if (u < 0 || u >= dim) throw InputError("'unit' index out of range");
    const auto unit = check_unit_law(a, u);
    if (!unit.empty()) throw InputError(unit.front().description);
    a.unit_index = u;
  }
  return a;
}

AssocAlgebra parse_assoc_algebra_file(const std::string& path, bool require_commutative) {
  return parse_assoc_algebra(read_text_file(path), require_commutative);
}

LieAlgebra parse_lie_algebra(const std::string& text) {
  const json j = parse_json(text);
  const int p = get_int(j, "p");
  check_prime_field(p);
  const int dim = get_int(j, "dim");
  if (dim < 0) throw InputError("dim must be nonnegative");

  LieAlgebra l;
  l.p = p;
  l.dim = dim;
  l.labels = get_labels(j, dim);

  // collect directed sums first so duplicate/mirrored entries can be
  // cross-checked instead of silently added
  std::map<std::pair<int, int>, std::vector<int>> directed;
  for (const Quad& q : get_quads(j, "brackets", dim, p)) {
    if (q.i == q.j && q.c != 0) {
      throw InputError("bracket entry [" + std::to_string(q.i) + ", " + std::to_string(q.j) +
                       ", ...] violates [x, x] = 0");
    }
    auto& acc = directed[{q.i, q.j}];
    if (acc.empty()) acc.assign(dim, 0);
    acc[q.k] = add_mod(acc[q.k], q.c, p);
  }
  for (const auto& [pair, acc] : directed) {
    const auto [i, jdx] = pair;
    auto mirror = directed.find({jdx, i});
    if (mirror != directed.end() && i < jdx) {
      for (int k = 0; k < dim; ++k) {
        if (add_mod(acc[k], mirror->second[k], p) != 0) {
          throw InputError("inconsistent bracket entries for pair (" + std::to_string(i) + ", " +
                           std::to_string(jdx) + "): the (j, i) value is not the negative");
        }
      }
    }
    for (int k = 0; k < dim; ++k) {
      if (acc[k] != 0) {
        l.add_directed_bracket_term(i, jdx, k, acc[k]);
        if (mirror == directed.end()) l.add_directed_bracket_term(jdx, i, k, p - acc[k]);
      }
    }
  }

  const auto violations = lie_check(l);
  if (!violations.empty()) throw InputError(violations.front().description);
  return l;
}

LieAlgebra parse_lie_algebra_file(const std::string& path) {
  return parse_lie_algebra(read_text_file(path));
}

GeneratorFile parse_generator_file(const std::string& text, int size_cap) {
  const json j = parse_json(text);
  GeneratorFile out;
  out.p = get_int(j, "p");
  check_prime_field(out.p);
  out.n = get_int(j, "n");
  if (out.n < 1) throw InputError("n must be positive");
  std::int64_t dim = 1;
  for (int i = 0; i < out.n; ++i) {
    dim *= out.p;
    if (dim > size_cap) throw InputError("p^n exceeds the size cap");
  }
  if (!j.contains("generators") || !j["generators"].is_array()) {
    throw InputError("missing 'generators' array");
  }
  for (const auto& gen : j["generators"]) {
    if (!gen.is_array() || static_cast<std::int64_t>(gen.size()) != dim) {
      throw InputError("each generator must be a dim x dim matrix with dim = p^n");
    }
    Matrix m(static_cast<int>(dim), static_cast<int>(dim), out.p);
    for (int r = 0; r < dim; ++r) {
      const auto& row = gen[r];
      if (!row.is_array() || static_cast<std::int64_t>(row.size()) != dim) {
        throw InputError("each generator must be a dim x dim matrix with dim = p^n");
      }
      for (int c = 0; c < dim; ++c) {
        if (!row[c].is_number_integer()) throw InputError("generator entries must be integers");
        const int v = row[c].get<int>();
        m.set_raw(r, c, ((v % out.p) + out.p) % out.p);
      }
    }
    out.generators.push_back(std::move(m));
  }
  return out;
}

GeneratorFile parse_generator_file_path(const std::string& path, int size_cap) {
  return parse_generator_file(read_text_file(path), size_cap);
}

namespace {

json quads_of_table(const std::unordered_map<std::uint64_t, ProductTerms>& table,
                    bool upper_only) {
  std::vector<std::array<int, 4>> quads;
  for (const auto& [key, terms] : table) {
    const int i = static_cast<int>(key >> 32);
    const int j = static_cast<int>(key & 0xffffffffu);
    if (upper_only && i >= j) continue;
    for (auto [k, c] : terms) quads.push_back({i, j, k, c});
  }
  std::sort(quads.begin(), quads.end());
  json arr = json::array();
  for (const auto& q : quads) arr.push_back(q);
  return arr;
}

}  // namespace

std::string emit_assoc_algebra(const AssocAlgebra& a) {
  nlohmann::ordered_json j;
  j["p"] = a.p;
  j["dim"] = a.dim;
  j["labels"] = a.labels;
  j["products"] = quads_of_table(a.products, false);
  return j.dump(2) + "\n";
}

std::string emit_lie_algebra(const LieAlgebra& l) {
  nlohmann::ordered_json j;
  j["p"] = l.p;
  j["dim"] = l.dim;
  j["labels"] = l.labels;
  j["brackets"] = quads_of_table(l.brackets, true);
  return j.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace mck
