#include "cubal/io.hpp"

#include <fstream>
#include <sstream>

#include "cubal/errors.hpp"

namespace cubal {

namespace {

int get_m(const Json& doc, const char* what) {
  if (!doc.is_object() || !doc.contains("m") || !doc["m"].is_number_integer())
    throw MalformedInput(std::string(what) + ": missing integer field \"m\"");
  const int m = doc["m"].get<int>();
  if (m < 1) throw MalformedInput(std::string(what) + ": \"m\" must be positive");
  return m;
}

const Json& get_array(const Json& doc, const char* key, std::size_t expected, const char* what) {
  if (!doc.is_array() || doc.size() != expected)
    throw MalformedInput(std::string(what) + ": \"" + key + "\" must be an array of length " +
                         std::to_string(expected));
  return doc;
}

Scalar scalar_from_json(const Json& v) {
  if (v.is_string()) return parse_scalar(v.get<std::string>());
  if (v.is_number_integer()) return Scalar(std::to_string(v.get<long long>()), 10);
  throw MalformedInput("scalar must be a fraction string or an integer, got " + v.dump());
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot read file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// ---------------------------------------------------------------------------

Operation parse_operation_text(std::string_view text, Checking checking) {
  std::istringstream in{std::string(text)};
  long long m = 0;
  if (!(in >> m) || m < 1 || m > kMaxOperationSize)
    throw MalformedInput("table text must start with a size in 1.." + std::to_string(kMaxOperationSize));
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(m));
  for (auto& row : rows)
    for (long long c = 0; c < m; ++c) {
      long long v = 0;
      if (!(in >> v)) throw MalformedInput("table text ends early; expected " + std::to_string(m * m) + " entries");
      if (v < 1 || v > m) throw MalformedInput("table entry " + std::to_string(v) + " outside 1.." + std::to_string(m));
      row.push_back(static_cast<int>(v));
    }
  std::string rest;
  if (in >> rest) throw MalformedInput("unexpected trailing content in table text: \"" + rest + "\"");
  return Operation::from_rows(rows, checking);
}

Operation parse_operation_json(const Json& doc, Checking checking) {
  const int m = get_m(doc, "operation");
  if (!doc.contains("table")) throw MalformedInput("operation: missing \"table\"");
  const auto& table = get_array(doc["table"], "table", static_cast<std::size_t>(m), "operation");
  std::vector<std::vector<int>> rows;
  for (const auto& row : table) {
    get_array(row, "table row", static_cast<std::size_t>(m), "operation");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw MalformedInput("operation: table entries must be integers");
      r.push_back(v.get<int>());
    }
    rows.push_back(std::move(r));
  }
  return Operation::from_rows(rows, checking);
}

Operation parse_operation(std::string_view content, Checking checking) {
  const auto first = content.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && content[first] == '{')
    return parse_operation_json(parse_json(content), checking);
  return parse_operation_text(content, checking);
}

Operation load_operation(const std::filesystem::path& path, Checking checking) {
  return parse_operation(read_file(path), checking);
}

std::string format_operation_text(const Operation& a) {
  std::ostringstream out;
  out << a.size() << '\n';
  for (const auto& row : a.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
  return out.str();
}

Json table_json(const Operation& a) { return Json(a.rows()); }

Json to_json(const Operation& a) {
  Json out;
  out["m"] = a.size();
  out["table"] = table_json(a);
  return out;
}

// ---------------------------------------------------------------------------

CubicMatrix parse_cubic_matrix_json(const Json& doc) {
  const int m = get_m(doc, "cubic matrix");
  if (!doc.contains("entries")) throw MalformedInput("cubic matrix: missing \"entries\"");
  const auto n = static_cast<std::size_t>(m);
  std::vector<Scalar> entries;
  for (const auto& plane : get_array(doc["entries"], "entries", n, "cubic matrix"))
    for (const auto& row : get_array(plane, "entries[i]", n, "cubic matrix"))
      for (const auto& v : get_array(row, "entries[i][j]", n, "cubic matrix")) entries.push_back(scalar_from_json(v));
  return CubicMatrix::from_entries(m, std::move(entries));
}

CubicMatrix load_cubic_matrix(const std::filesystem::path& path) {
  return parse_cubic_matrix_json(parse_json(read_file(path)));
}

Json to_json(const CubicMatrix& x) {
  const int m = x.size();
  Json entries = Json::array();
  for (int i = 0; i < m; ++i) {
    Json plane = Json::array();
    for (int j = 0; j < m; ++j) {
      Json row = Json::array();
      for (int k = 0; k < m; ++k) row.push_back(format_scalar(x(i, j, k)));
      plane.push_back(std::move(row));
    }
    entries.push_back(std::move(plane));
  }
  Json out;
  out["m"] = m;
  out["entries"] = std::move(entries);
  return out;
}

Matrix parse_square_matrix_json(const Json& doc) {
  const int m = get_m(doc, "square matrix");
  if (!doc.contains("entries")) throw MalformedInput("square matrix: missing \"entries\"");
  const auto n = static_cast<std::size_t>(m);
  Matrix out(n, n);
  std::size_t i = 0;
  for (const auto& row : get_array(doc["entries"], "entries", n, "square matrix")) {
    std::size_t k = 0;
    for (const auto& v : get_array(row, "entries[i]", n, "square matrix")) out(i, k++) = scalar_from_json(v);
    ++i;
  }
  return out;
}

Json square_matrix_json(const Matrix& b) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < b.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < b.cols(); ++k) row.push_back(format_scalar(b(i, k)));
    entries.push_back(std::move(row));
  }
  Json out;
  out["m"] = b.rows();
  out["entries"] = std::move(entries);
  return out;
}

Json to_json(const AccompanyingElement& u) { return square_matrix_json(u.coefficients()); }

Json to_json(const LinearForm<Scalar>& chi) {
  const int m = chi.size();
  Json coeffs = Json::array();
  for (int i = 0; i < m; ++i) {
    Json plane = Json::array();
    for (int j = 0; j < m; ++j) {
      Json row = Json::array();
      for (int k = 0; k < m; ++k) row.push_back(format_scalar(chi(i, j, k)));
      plane.push_back(std::move(row));
    }
    coeffs.push_back(std::move(plane));
  }
  Json out;
  out["m"] = m;
  out["coefficients"] = std::move(coeffs);
  return out;
}

Json to_json(const Subset& s) {
  Json out = Json::array();
  for (int x : s.members()) out.push_back(x + 1);
  return out;
}

Json to_json(const Triple& t) { return Json::array({t.i + 1, t.j + 1, t.k + 1}); }

Json to_json(const SpannedSubspace& s) {
  Json triples = Json::array();
  for (const auto& t : s.triples()) triples.push_back(to_json(t));
  Json out;
  out["m"] = s.size();
  out["dimension"] = s.dimension();
  out["triples"] = std::move(triples);
  return out;
}

Json to_json(const SequenceClass& c) {
  Json cycle = Json::array();
  for (int x : c.cycle) cycle.push_back(x + 1);
  Json out;
  out["kind"] = to_string(c.kind);
  out["entry"] = c.entry;
  out["period"] = c.period;
  out["cycle"] = std::move(cycle);
  return out;
}

Json to_json(const CensusResult& census) {
  Json orbits = Json::array();
  for (const auto& o : census.orbits) {
    Json entry;
    entry["representative"] = table_json(o.representative);
    entry["size"] = o.size;
    orbits.push_back(std::move(entry));
  }
  Json out;
  out["m"] = census.m;
  out["total"] = census.total;
  out["orbit_count"] = census.orbit_count();
  out["orbits"] = std::move(orbits);
  return out;
}

CensusResult parse_census_json(const Json& doc) {
  CensusResult out;
  out.m = get_m(doc, "census");
  if (!doc.contains("total") || !doc["total"].is_number_unsigned() || !doc.contains("orbits") ||
      !doc["orbits"].is_array())
    throw MalformedInput("census: needs \"total\" and \"orbits\"");
  out.total = doc["total"].get<std::uint64_t>();
  for (const auto& o : doc["orbits"]) {
    if (!o.is_object() || !o.contains("representative") || !o.contains("size"))
      throw MalformedInput("census: orbit entries need \"representative\" and \"size\"");
    Json op;
    op["m"] = out.m;
    op["table"] = o["representative"];
    out.orbits.push_back({parse_operation_json(op), o["size"].get<std::uint64_t>()});
  }
  if (doc.contains("orbit_count") && doc["orbit_count"].get<std::size_t>() != out.orbits.size())
    throw MalformedInput("census: orbit_count disagrees with the orbit list");
  return out;
}

}  // namespace cubal
