#include "wedderburn/serialization.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace wedderburn {

namespace {

[[noreturn]] void malformed(const std::string& what) { fail(ErrorCode::InvalidInput, "malformed document: " + what); }

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object()) malformed("expected an object");
  const auto it = doc.find(key);
  if (it == doc.end()) malformed(std::string("missing key '") + key + "'");
  return *it;
}

std::uint64_t to_uint(const Json& v, const std::string& what,
                      std::uint64_t max = std::numeric_limits<std::uint64_t>::max()) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    malformed(what + " must be a non-negative integer");
  const auto x = v.get<std::uint64_t>();
  if (x > max) malformed(what + " is out of range");
  return x;
}

Vec to_vec(const Json& v, const std::string& what, std::size_t length, std::uint32_t p) {
  if (!v.is_array() || v.size() != length) malformed(what + " must be an array of length " + std::to_string(length));
  Vec out;
  out.reserve(length);
  for (const auto& x : v) {
    const auto r = to_uint(x, what);
    if (r >= p) malformed(what + " has an entry outside [0, p)");
    out.push_back(static_cast<Residue>(r));
  }
  return out;
}

std::vector<Vec> to_vecs(const Json& v, const std::string& what, std::size_t count, std::size_t length,
                         std::uint32_t p) {
  if (!v.is_array() || v.size() != count) malformed(what + " must hold " + std::to_string(count) + " vectors");
  std::vector<Vec> out;
  for (const auto& x : v) out.push_back(to_vec(x, what, length, p));
  return out;
}

Json vecs_to_json(const std::vector<Vec>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(v);
  return out;
}

}  // namespace

Json algebra_to_json(const Algebra& a) {
  const std::size_t n = a.dim();
  Json sc = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < n; ++j) {
      const auto prod = a.basis_product(i, j);
      row.push_back(Vec(prod.begin(), prod.end()));
    }
    sc.push_back(std::move(row));
  }
  Json doc;
  doc["p"] = a.modulus();
  doc["dim"] = n;
  doc["structure_constants"] = std::move(sc);
  doc["identity"] = a.one();
  if (!a.labels().empty()) doc["labels"] = a.labels();
  return doc;
}

AlgebraPtr algebra_from_json(const Json& doc) {
  const auto p = static_cast<std::uint32_t>(to_uint(field(doc, "p"), "p", PrimeField::kMaxModulus));
  if (p < 2) malformed("p must be at least 2");
  const auto n = static_cast<std::size_t>(to_uint(field(doc, "dim"), "dim", 4096));
  if (n == 0) malformed("dim must be positive");
  const Json& sc = field(doc, "structure_constants");
  if (!sc.is_array() || sc.size() != n) malformed("structure_constants must be n x n x n");
  Vec flat;
  flat.reserve(n * n * n);
  for (const auto& row : sc) {
    if (!row.is_array() || row.size() != n) malformed("structure_constants must be n x n x n");
    for (const auto& cell : row) {
      const Vec v = to_vec(cell, "structure_constants", n, p);
      flat.insert(flat.end(), v.begin(), v.end());
    }
  }
  std::optional<Vec> one;
  if (doc.contains("identity")) one = to_vec(doc["identity"], "identity", n, p);
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const Json& l = doc["labels"];
    if (!l.is_array() || l.size() != n) malformed("labels must be an array of n strings");
    for (const auto& s : l) {
      if (!s.is_string()) malformed("labels must be strings");
      labels.push_back(s.get<std::string>());
    }
  }
  return Algebra::create(p, n, std::move(flat), std::move(one), std::move(labels));
}

Json cayley_to_json(const CayleyTable& t) {
  Json doc;
  doc["order"] = t.order;
  doc["identity"] = t.identity;
  doc["table"] = t.table;
  return doc;
}

CayleyTable cayley_from_json(const Json& doc) {
  CayleyTable t;
  t.order = static_cast<std::size_t>(to_uint(field(doc, "order"), "order", 4096));
  t.identity = static_cast<std::size_t>(to_uint(field(doc, "identity"), "identity"));
  const Json& table = field(doc, "table");
  if (!table.is_array()) malformed("table must be an array of rows");
  for (const auto& row : table) {
    if (!row.is_array()) malformed("table must be an array of rows");
    std::vector<std::size_t> r;
    for (const auto& x : row) r.push_back(static_cast<std::size_t>(to_uint(x, "table entry")));
    t.table.push_back(std::move(r));
  }
  t.validate();
  return t;
}

Json report_to_json(const DecompositionReport& r, const VerificationReport* verification) {
  Json doc;
  doc["p"] = r.p;
  doc["dim"] = r.dim;
  doc["seed"] = r.seed;
  Json blocks = Json::array();
  for (const auto& b : r.blocks) {
    Json jb;
    jb["n"] = b.n;
    jb["division_degree"] = b.division_degree;
    jb["central_idempotent"] = b.central_idempotent;
    jb["representative_idempotent"] = b.representative_idempotent;
    jb["idempotents"] = vecs_to_json(b.idempotents);
    jb["connecting_a"] = vecs_to_json(b.connecting_a);
    jb["connecting_b"] = vecs_to_json(b.connecting_b);
    jb["matrix_units"] = vecs_to_json(b.matrix_units);
    jb["division_basis"] = vecs_to_json(b.division_basis);
    blocks.push_back(std::move(jb));
  }
  doc["blocks"] = std::move(blocks);
  doc["iso_matrix"] = vecs_to_json(r.iso_matrix);
  doc["iso_inverse"] = vecs_to_json(r.iso_inverse);
  Json layout = Json::array();
  for (std::size_t k = 0; k < r.layout.total(); ++k) {
    const auto c = r.layout.coordinate(k);
    layout.push_back({{"block", c.block}, {"row", c.row}, {"col", c.col}, {"basis", c.basis}});
  }
  doc["layout"] = std::move(layout);
  if (verification) {
    Json v;
    v["unit"] = verification->unit;
    v["multiplicative"] = verification->multiplicative_checked ? Json(verification->multiplicative) : Json(nullptr);
    v["bijective"] = verification->bijective;
    v["orthogonality"] = verification->orthogonality;
    v["matrix_units"] = verification->matrix_units;
    doc["verification"] = std::move(v);
  }
  return doc;
}

DecompositionReport report_from_json(const Json& doc) {
  DecompositionReport r;
  r.p = static_cast<std::uint32_t>(to_uint(field(doc, "p"), "p", PrimeField::kMaxModulus));
  if (r.p < 2) malformed("p must be at least 2");
  r.dim = static_cast<std::size_t>(to_uint(field(doc, "dim"), "dim", 4096));
  r.seed = to_uint(field(doc, "seed"), "seed");
  const std::size_t n = r.dim;
  const Json& blocks = field(doc, "blocks");
  if (!blocks.is_array() || blocks.empty()) malformed("blocks must be a non-empty array");
  std::vector<std::pair<std::size_t, std::size_t>> shapes;
  for (const auto& jb : blocks) {
    DecompositionReport::Block b;
    b.n = static_cast<std::size_t>(to_uint(field(jb, "n"), "n", n));
    b.division_degree = static_cast<std::size_t>(to_uint(field(jb, "division_degree"), "division_degree", n));
    if (b.n == 0 || b.division_degree == 0) malformed("block sizes must be positive");
    b.central_idempotent = to_vec(field(jb, "central_idempotent"), "central_idempotent", n, r.p);
    b.representative_idempotent =
        to_vec(field(jb, "representative_idempotent"), "representative_idempotent", n, r.p);
    b.idempotents = to_vecs(field(jb, "idempotents"), "idempotents", b.n, n, r.p);
    b.connecting_a = to_vecs(field(jb, "connecting_a"), "connecting_a", b.n, n, r.p);
    b.connecting_b = to_vecs(field(jb, "connecting_b"), "connecting_b", b.n, n, r.p);
    b.matrix_units = to_vecs(field(jb, "matrix_units"), "matrix_units", b.n * b.n, n, r.p);
    b.division_basis = to_vecs(field(jb, "division_basis"), "division_basis", b.division_degree, n, r.p);
    shapes.emplace_back(b.n, b.division_degree);
    r.blocks.push_back(std::move(b));
  }
  r.layout = BlockLayout(std::move(shapes));
  if (r.layout.total() != n) malformed("block dimensions do not add up to dim");
  r.iso_matrix = to_vecs(field(doc, "iso_matrix"), "iso_matrix", n, n, r.p);
  r.iso_inverse = to_vecs(field(doc, "iso_inverse"), "iso_inverse", n, n, r.p);
  const Json& layout = field(doc, "layout");
  if (!layout.is_array() || layout.size() != n) malformed("layout must have dim entries");
  for (std::size_t k = 0; k < n; ++k) {
    const auto c = r.layout.coordinate(k);
    const Json& e = layout[k];
    if (to_uint(field(e, "block"), "layout") != c.block || to_uint(field(e, "row"), "layout") != c.row ||
        to_uint(field(e, "col"), "layout") != c.col || to_uint(field(e, "basis"), "layout") != c.basis)
      malformed("layout entry " + std::to_string(k) + " disagrees with the block shapes");
  }
  return r;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(Vec(m.row(i).begin(), m.row(i).end()));
  return rows;
}

Json scramble_to_json(const Matrix& s) {
  Json doc;
  doc["p"] = s.field().modulus();
  doc["dim"] = s.rows();
  doc["matrix"] = matrix_to_json(s);
  return doc;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    malformed(e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidInput, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

std::string dump(const Json& doc) { return doc.dump(1) + "\n"; }

void write_json_file(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::InvalidInput, "cannot write '" + path + "'");
  out << dump(doc);
}

}  // namespace wedderburn
