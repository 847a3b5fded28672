#include "sectional/io.hpp"

#include "sectional/errors.hpp"

#include <fstream>
#include <sstream>

namespace sectional {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

Integer integer_from(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Rational q = parse_rational(j.get<std::string>());
    if (!is_integer(q)) fail(where + ": expected an integer, got '" + j.get<std::string>() + "'");
    return to_integer(q);
  }
  fail(where + ": expected an integer");
}

Rational rational_from(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(integer_from(j, where));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      fail(where + ": " + e.what());
    }
  }
  fail(where + ": expected a \"p/q\" string");
}

int int_from(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where + ": expected an integer");
  return j.get<int>();
}

std::vector<Integer> integer_list(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where + ": expected an array");
  std::vector<Integer> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(integer_from(j[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json integer_list_json(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(integer_json(z));
  return out;
}

StdPolynomial chi_from(const Json& j, int dim) {
  if (!j.is_object()) fail("chi: expected an object");
  if (j.contains("coeffs")) {
    const Json& c = j["coeffs"];
    if (!c.is_array()) fail("chi.coeffs: expected an array");
    std::vector<Rational> coeffs;
    for (std::size_t k = 0; k < c.size(); ++k) coeffs.push_back(rational_from(c[k], "chi.coeffs[" + std::to_string(k) + "]"));
    return StdPolynomial(std::move(coeffs));
  }
  if (j.contains("values")) {
    const Json& v = j["values"];
    if (!v.is_array()) fail("chi.values: expected an array");
    std::vector<Sample> samples;
    for (std::size_t k = 0; k < v.size(); ++k) {
      const std::string where = "chi.values[" + std::to_string(k) + "]";
      if (!v[k].is_array() || v[k].size() != 2) fail(where + ": expected [t, \"p/q\"]");
      samples.push_back({integer_from(v[k][0], where), rational_from(v[k][1], where)});
    }
    if (static_cast<int>(samples.size()) < dim + 1) {
      fail("chi.values: need at least " + std::to_string(dim + 1) + " samples, got " + std::to_string(samples.size()));
    }
    return interpolate(samples, dim);
  }
  fail("chi: expected \"values\" or \"coeffs\"");
}

int line_of_offset(const std::string& text, std::size_t offset) {
  int line = 1;
  for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
    if (text[k] == '\n') ++line;
  }
  return line;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, path.string() + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

PolarizedVarietyData instance_from_json(const Json& doc) {
  if (!doc.is_object()) fail("instance must be a JSON object");
  // output of `invariants --json` wraps the instance
  const Json& j = doc.contains("instance") && !doc.contains("dim") ? doc["instance"] : doc;
  if (!j.is_object()) fail("instance must be a JSON object");
  PolarizedVarietyData d;
  d.name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : std::string("unnamed");
  d.dim = int_from(field(j, "dim"), "dim");
  if (d.dim < 1) fail("dim: must be positive");
  d.chi = chi_from(field(j, "chi"), d.dim);
  d.h_struct = integer_list(field(j, "hO"), "hO");
  d.h_line = integer_list(field(j, "hL"), "hL");
  if (j.contains("adjointH0") && !j["adjointH0"].is_null()) d.adjoint_h0 = integer_list(j["adjointH0"], "adjointH0");
  if (j.contains("smooth")) {
    if (!j["smooth"].is_boolean()) fail("smooth: expected a boolean");
    d.smooth = j["smooth"].get<bool>();
  }
  if (j.contains("bsDim")) d.bs_dim = int_from(j["bsDim"], "bsDim");
  if (j.contains("canonicalMultiple") && !j["canonicalMultiple"].is_null()) {
    const Json& c = j["canonicalMultiple"];
    if (c.is_string() && c.get<std::string>() == "none") {
      d.canonical = CanonicalAssertion::not_a_multiple();
    } else {
      d.canonical = CanonicalAssertion::multiple_of(int_from(c, "canonicalMultiple"));
    }
  }
  return d;
}

Json to_json(const PolarizedVarietyData& d) {
  Json j;
  j["name"] = d.name;
  j["dim"] = d.dim;
  Json coeffs = Json::array();
  for (const auto& c : d.chi.coefficients()) coeffs.push_back(format_rational(c));
  j["chi"] = {{"coeffs", coeffs}};
  j["hO"] = integer_list_json(d.h_struct);
  j["hL"] = integer_list_json(d.h_line);
  if (d.adjoint_h0) j["adjointH0"] = integer_list_json(*d.adjoint_h0);
  j["smooth"] = d.smooth;
  j["bsDim"] = d.bs_dim;
  switch (d.canonical.kind()) {
    case CanonicalAssertion::Kind::Multiple: j["canonicalMultiple"] = *d.canonical.multiple(); break;
    case CanonicalAssertion::Kind::NotMultiple: j["canonicalMultiple"] = "none"; break;
    case CanonicalAssertion::Kind::Unknown: break;
  }
  return j;
}

Json to_json(const InvariantTable& t) {
  Json j;
  j["dim"] = t.dim;
  j["degree"] = integer_json(t.degree);
  j["chi"] = integer_list_json(t.chi_coeffs);
  j["g"] = integer_list_json(t.g);
  j["delta"] = integer_list_json(t.delta);
  return j;
}

ChernData chern_data_from_json(const Json& j) {
  if (!j.is_object()) fail("Chern table must be a JSON object");
  ChernData cd;
  cd.base_dim = int_from(field(j, "baseDim"), "baseDim");
  cd.rank = int_from(field(j, "rank"), "rank");
  cd.h_struct_base = integer_list(field(j, "hOBase"), "hOBase");
  const Json& table = field(j, "table");
  if (!table.is_object()) fail("table: expected an object");
  for (auto it = table.begin(); it != table.end(); ++it) {
    TableMonomial key;
    try {
      key = parse_table_key(it.key());
    } catch (const Error& e) {
      fail("table: " + std::string(e.what()));
    }
    cd.table[key] = integer_from(it.value(), "table." + it.key());
  }
  return cd;
}

Json to_json(const ChernData& cd) {
  Json j;
  j["baseDim"] = cd.base_dim;
  j["rank"] = cd.rank;
  j["hOBase"] = integer_list_json(cd.h_struct_base);
  Json table = Json::object();
  for (const auto& [k, v] : cd.table) table[spell(k)] = integer_json(v);
  j["table"] = table;
  return j;
}

std::vector<LoadedInstance> load_instances(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  const std::string where = path.string();

  auto build = [&](const Json& j, int line) {
    try {
      PolarizedVarietyData d = instance_from_json(j);
      require_valid(d);
      return LoadedInstance{line, std::move(d)};
    } catch (const Error& e) {
      throw Error(e.code(), where + ":" + std::to_string(line) + ": " + e.what());
    }
  };

  std::vector<LoadedInstance> out;
  Json whole = Json::parse(text, nullptr, false);
  if (!whole.is_discarded()) {
    if (whole.is_array()) {
      for (const auto& j : whole) out.push_back(build(j, 1));
    } else {
      out.push_back(build(whole, 1));
    }
    if (out.empty()) throw Error(ErrorCode::ParseError, where + ": no instances");
    return out;
  }

  // JSON Lines
  std::istringstream lines(text);
  std::string line;
  int number = 0;
  while (std::getline(lines, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json j = Json::parse(line, nullptr, false);
    if (j.is_discarded()) {
      // Not JSON Lines either: report the whole-document error where it occurs.
      try {
        [[maybe_unused]] Json again = Json::parse(text);
      } catch (const Json::parse_error& e) {
        const int at = out.empty() ? line_of_offset(text, e.byte) : number;
        throw Error(ErrorCode::ParseError, where + ":" + std::to_string(at) + ": malformed JSON");
      }
    }
    out.push_back(build(j, number));
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, where + ": no instances");
  return out;
}

ChernData load_chern_data(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError,
                path.string() + ":" + std::to_string(line_of_offset(text, e.byte)) + ": " + e.what());
  }
  ChernData cd;
  try {
    cd = chern_data_from_json(j);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
  auto report = validate(cd);
  if (!report.ok()) {
    std::string msg = path.string() + ": invalid Chern table";
    for (const auto& v : report.violations) msg += "; " + v;
    throw Error(ErrorCode::InvalidInstance, msg);
  }
  return cd;
}

}  // namespace sectional
