#include "cellkit/spec_file.hpp"

#include "cellkit/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace cellkit {

using json = nlohmann::ordered_json;

namespace {

json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

Integer integer_from(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw Error(ErrorCode::ParseError, "bad integer string");
    return x;
  }
  throw Error(ErrorCode::ParseError, "expected an integer");
}

json term_json(std::size_t k, const Scalar& c) {
  return json::array({k, integer_json(c.numerator()), integer_json(c.denominator())});
}

Scalar scalar_from(const RingSpec& ring, const json& num, const json& den) {
  return Scalar(ring, integer_from(num), integer_from(den));
}

std::size_t index_from(const json& j, std::size_t bound, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw Error(ErrorCode::ParseError, std::string(what) + " must be a nonnegative integer");
  }
  const auto k = j.get<std::size_t>();
  if (k >= bound) throw Error(ErrorCode::ParseError, std::string(what) + " out of range");
  return k;
}

}  // namespace

std::string export_spec(const Algebra& a, const CellDatum* datum) {
  std::ostringstream os;
  const std::size_t dim = a.dim();
  os << "{\n";
  os << "  \"format_version\": \"1\",\n";
  os << "  \"ring\": " << json(a.ring().to_string()).dump() << ",\n";
  os << "  \"basis\": " << json(a.labels()).dump() << ",\n";
  json unit = json::array();
  for (std::size_t k = 0; k < dim; ++k) {
    if (!a.unit()[k].is_zero()) unit.push_back(term_json(k, a.unit()[k]));
  }
  os << "  \"unit\": " << unit.dump() << ",\n";
  os << "  \"structure_constants\": [";
  bool first = true;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const SparseVector& p = a.product(i, j);
      if (p.empty()) continue;
      json terms = json::array();
      for (const auto& t : p) terms.push_back(term_json(t.index, t.coeff));
      os << (first ? "\n    " : ",\n    ") << json::array({i, j, terms}).dump();
      first = false;
    }
  }
  os << (first ? "]" : "\n  ]");
  if (datum) {
    const CellDatum& d = *datum;
    os << ",\n  \"cell_datum\": {\n";
    os << "    \"labels\": " << json(d.labels).dump() << ",\n";
    json less = json::array();
    for (std::size_t x = 0; x < d.size(); ++x) {
      for (std::size_t y = 0; y < d.size(); ++y) {
        if (d.less(x, y)) less.push_back(json::array({d.labels[x], d.labels[y]}));
      }
    }
    os << "    \"less\": " << less.dump() << ",\n";
    os << "    \"tableaux\": " << json(d.tableaux).dump() << ",\n";
    os << "    \"index\": [";
    bool first_index = true;
    for (std::size_t l = 0; l < d.size(); ++l) {
      for (std::size_t s = 0; s < d.index[l].size(); ++s) {
        for (std::size_t t = 0; t < d.index[l][s].size(); ++t) {
          os << (first_index ? "" : ", ") << json::array({l, s, t, d.index[l][s][t]}).dump();
          first_index = false;
        }
      }
    }
    os << "],\n";
    os << "    \"involution\": " << json(d.involution).dump() << "\n";
    os << "  }";
  }
  os << "\n}\n";
  return os.str();
}

SpecFile load_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("spec file is not valid JSON: ") + e.what());
  }
  try {
    if (doc.value("format_version", std::string()) != "1") {
      throw Error(ErrorCode::ParseError, "unsupported format_version");
    }
    const RingSpec ring = RingSpec::parse(doc.at("ring").get<std::string>());
    auto labels = doc.at("basis").get<std::vector<std::string>>();
    const std::size_t dim = labels.size();
    Vector unit = zero_vector(ring, dim);
    for (const auto& t : doc.at("unit")) {
      unit[index_from(t.at(0), dim, "unit index")] += scalar_from(ring, t.at(1), t.at(2));
    }
    std::vector<SparseVector> products(dim * dim);
    for (const auto& entry : doc.at("structure_constants")) {
      const std::size_t i = index_from(entry.at(0), dim, "product index");
      const std::size_t j = index_from(entry.at(1), dim, "product index");
      for (const auto& t : entry.at(2)) {
        products[i * dim + j].push_back(
            {index_from(t.at(0), dim, "basis index"), scalar_from(ring, t.at(1), t.at(2))});
      }
    }
    SpecFile out{Algebra(ring, std::move(labels), std::move(products), std::move(unit)), std::nullopt};
    if (doc.contains("cell_datum")) {
      const json& cd = doc.at("cell_datum");
      CellDatum d;
      d.labels = cd.at("labels").get<std::vector<std::string>>();
      const std::size_t n = d.labels.size();
      d.leq.assign(n, std::vector<bool>(n, false));
      for (std::size_t x = 0; x < n; ++x) d.leq[x][x] = true;
      for (const auto& pair : cd.at("less")) {
        d.leq[d.find_label(pair.at(0).get<std::string>())][d.find_label(pair.at(1).get<std::string>())] = true;
      }
      d.tableaux = cd.at("tableaux").get<std::vector<std::vector<std::string>>>();
      if (d.tableaux.size() != n) throw Error(ErrorCode::ParseError, "one tableau list per label required");
      d.index.resize(n);
      for (std::size_t l = 0; l < n; ++l) {
        const std::size_t m = d.tableaux[l].size();
        d.index[l].assign(m, std::vector<std::size_t>(m, dim));
      }
      for (const auto& q : cd.at("index")) {
        const std::size_t l = index_from(q.at(0), n, "cell label index");
        const std::size_t m = d.tableaux[l].size();
        d.index[l][index_from(q.at(1), m, "tableau index")][index_from(q.at(2), m, "tableau index")] =
            index_from(q.at(3), dim, "basis index");
      }
      d.involution = cd.at("involution").get<std::vector<std::size_t>>();
      out.datum = std::move(d);
    }
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed spec file: ") + e.what());
  }
}

SpecFile load_spec_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_spec(buf.str());
}

}  // namespace cellkit
