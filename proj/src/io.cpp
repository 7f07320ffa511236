#include "nilplab/io.hpp"

#include <fstream>
#include <sstream>

namespace nilplab {

using nlohmann::json;

namespace {

bool nonneg_integer(const json& v) {
  return v.is_number_unsigned() ||
         (v.is_number_integer() && v.get<long long>() >= 0);
}

FieldDescriptor field_from_json(const json& f) {
  if (f.is_string()) {
    if (f.get<std::string>() == "Q") return FieldDescriptor::rationals();
    throw ParseError("field must be \"Q\" or {\"p\": N}, got \"" +
                     f.get<std::string>() + "\"");
  }
  if (f.is_object() && f.contains("p") && nonneg_integer(f["p"])) {
    return FieldDescriptor::prime_field(f["p"].get<std::uint64_t>());
  }
  throw ParseError("field must be \"Q\" or {\"p\": N}");
}

json field_to_json(const FieldDescriptor& f) {
  if (f.is_rationals()) return "Q";
  return json{{"p", f.characteristic()}};
}

Scalar scalar_from_json(const json& v, const FieldDescriptor& f) {
  if (v.is_string()) return Scalar::parse(v.get<std::string>(), f);
  if (v.is_number_integer()) {
    return Scalar::from_integer(v.get<long>(), f);
  }
  throw ParseError("scalar entries must be strings or integers");
}

json require(const json& doc, const char* key) {
  if (!doc.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  return doc[key];
}

}  // namespace

Algebra algebra_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("algebra document must be an object");
  const FieldDescriptor field = field_from_json(require(doc, "field"));
  const json jdim = require(doc, "dim");
  if (!nonneg_integer(jdim)) throw ParseError("dim must be a nonnegative integer");
  const std::size_t dim = jdim.get<std::size_t>();
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    for (const json& l : doc["labels"]) {
      if (!l.is_string()) throw ParseError("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
    if (labels.size() != dim) {
      throw ParseError("label count does not match dim");
    }
  }
  std::vector<ProductEntry> entries;
  if (doc.contains("products")) {
    for (const json& p : doc["products"]) {
      if (!p.is_array() || p.size() != 4) {
        throw ParseError("each product entry must be [i, j, k, scalar]");
      }
      if (!nonneg_integer(p[0]) || !nonneg_integer(p[1]) ||
          !nonneg_integer(p[2])) {
        throw ParseError("product indices must be nonnegative integers");
      }
      entries.push_back({p[0].get<std::size_t>(), p[1].get<std::size_t>(),
                         p[2].get<std::size_t>(),
                         scalar_from_json(p[3], field)});
    }
  }
  try {
    return make_algebra(field, dim, std::move(labels), entries);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

Algebra read_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON in '") + path + "': " + e.what());
  }
  return algebra_from_json(doc);
}

json algebra_to_json(const Algebra& A) {
  json doc;
  doc["field"] = field_to_json(A.field());
  doc["dim"] = A.dim();
  doc["labels"] = A.labels();
  json products = json::array();
  for (const ProductEntry& e : A.product_entries()) {
    products.push_back(json::array({e.i, e.j, e.k, e.c.str()}));
  }
  doc["products"] = products;
  return doc;
}

TruncatedFreeAlgebra trunc_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("config must be an object");
  std::string alphabet;
  for (const json& a : require(doc, "alphabet")) {
    if (!a.is_string() || a.get<std::string>().size() != 1) {
      throw ParseError("alphabet entries must be single letters");
    }
    alphabet += a.get<std::string>();
  }
  std::vector<std::string> literals;
  if (doc.contains("literals")) {
    for (const json& l : doc["literals"]) {
      if (!l.is_string()) throw ParseError("literals must be strings");
      literals.push_back(l.get<std::string>());
    }
  }
  std::vector<SandwichRule> rules;
  if (doc.contains("sandwich")) {
    for (const json& s : doc["sandwich"]) {
      if (!s.is_array() || s.size() != 3 || !s[0].is_string() ||
          !s[1].is_string() || !s[2].is_string()) {
        throw ParseError("sandwich entries must be [left, middle, right]");
      }
      const std::string left = s[0].get<std::string>();
      const std::string mid = s[1].get<std::string>();
      const std::string right = s[2].get<std::string>();
      if (left.size() != 1 || right.size() != 1) {
        throw ParseError("sandwich ends must be single letters");
      }
      rules.push_back(
          SandwichRule{left[0], {mid.begin(), mid.end()}, right[0]});
    }
  }
  const json jdeg = require(doc, "degree");
  if (!nonneg_integer(jdeg) || jdeg.get<std::size_t>() < 1) {
    throw ParseError("degree must be a positive integer");
  }
  FieldDescriptor field = FieldDescriptor::rationals();
  if (doc.contains("field")) field = field_from_json(doc["field"]);
  try {
    return build_truncated(alphabet, ForbiddenSet(literals, rules),
                           jdeg.get<std::size_t>(), field);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

TruncatedFreeAlgebra read_trunc_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON in '") + path + "': " + e.what());
  }
  return trunc_from_json(doc);
}

namespace {

json opt_json(const std::optional<std::size_t>& v) {
  if (!v) return nullptr;
  return *v;
}

std::string opt_str(const std::optional<std::size_t>& v) {
  return v ? std::to_string(*v) : "none";
}

}  // namespace

json analysis_to_json(const AnalysisReport& rep) {
  json doc;
  doc["dim"] = rep.dim;
  doc["field"] = rep.field;
  doc["structure"] = {{"associative", rep.checks.associative},
                      {"anticommutative", rep.checks.anticommutative},
                      {"jacobi", rep.checks.jacobi},
                      {"lie", rep.checks.lie}};
  doc["nilpotent"] = rep.nilpotence.nilpotent;
  doc["N1"] = opt_json(rep.nilpotence.N1);
  doc["N2"] = opt_json(rep.nilpotence.N2);
  doc["N3"] = opt_json(rep.nilpotence.N3);
  doc["solvable"] = rep.solvable;
  doc["derived_length"] = opt_json(rep.derived_len);
  doc["left_nilpotence"] = opt_json(rep.left_nilpotence);
  doc["right_nilpotence"] = opt_json(rep.right_nilpotence);
  doc["associator_nilpotence"] = opt_json(rep.assoc_nilpotence);
  doc["stable_image_dim"] = rep.stable_image_dim;
  doc["stable_image_step"] = rep.stable_image_step;
  return doc;
}

std::string analysis_pretty(const AnalysisReport& rep) {
  std::ostringstream os;
  os << "algebra over " << rep.field << ", dim " << rep.dim << "\n";
  os << "structure: associative=" << (rep.checks.associative ? "yes" : "no")
     << " anticommutative=" << (rep.checks.anticommutative ? "yes" : "no")
     << " jacobi=" << (rep.checks.jacobi ? "yes" : "no")
     << " lie=" << (rep.checks.lie ? "yes" : "no") << "\n";
  os << "nilpotent: " << (rep.nilpotence.nilpotent ? "yes" : "no");
  if (rep.nilpotence.nilpotent) {
    os << ", N1=" << opt_str(rep.nilpotence.N1)
       << " N2=" << opt_str(rep.nilpotence.N2)
       << " N3=" << opt_str(rep.nilpotence.N3);
  }
  os << "\n";
  os << "solvable: " << (rep.solvable ? "yes" : "no");
  if (rep.derived_len) os << " (length " << *rep.derived_len << ")";
  os << "\n";
  os << "left nilpotence index: " << opt_str(rep.left_nilpotence) << "\n";
  os << "right nilpotence index: " << opt_str(rep.right_nilpotence) << "\n";
  os << "associator nilpotence index: " << opt_str(rep.assoc_nilpotence)
     << "\n";
  os << "stable image: dim " << rep.stable_image_dim << " after "
     << rep.stable_image_step << " steps\n";
  return os.str();
}

}  // namespace nilplab
