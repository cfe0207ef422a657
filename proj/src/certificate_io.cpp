#include "altquot/certificate_io.hpp"

#include <algorithm>

#include "altquot/errors.hpp"

namespace altquot {

namespace {

std::string generator_key(Label i) { return std::string(1, letter_char({i, 1})); }

const Json& require(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key))
    throw SchemaError(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

std::size_t require_index(const Json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw SchemaError(std::string(what) + " must be a non-negative integer");
  return v.get<std::size_t>();
}

std::vector<std::string> require_strings(const Json& v, const char* what) {
  if (!v.is_array()) throw SchemaError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const Json& e : v) {
    if (!e.is_string())
      throw SchemaError(std::string(what) + " entries must be strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

Permutation require_permutation(const Json& v, std::size_t degree,
                                const std::string& what) {
  if (!v.is_array() || v.size() != degree)
    throw SchemaError(what + " must be an array of length " +
                      std::to_string(degree));
  std::vector<Point> img;
  for (const Json& e : v) img.push_back(static_cast<Point>(require_index(e, what.c_str())));
  try {
    return Permutation(std::move(img));
  } catch (const std::invalid_argument&) {
    throw SchemaError(what + " is not a permutation");
  }
}

Classification parse_classification(const std::string& s) {
  if (s == "alternating") return Classification::alternating;
  if (s == "symmetric") return Classification::symmetric;
  if (s == "other") return Classification::other;
  throw SchemaError("unknown classification \"" + s + "\"");
}

Json check_to_json(const WordCheck& c) {
  Json j;
  j["word"] = render(c.word);
  j["image"] = std::vector<Point>(c.image.image().begin(), c.image.image().end());
  j["base_image"] = c.base_image;
  j["result"] = c.passed;
  return j;
}

WordCheck check_from_json(const Json& j, std::size_t rank, std::size_t degree) {
  WordCheck c;
  const Json& word = require(j, "word");
  if (!word.is_string()) throw SchemaError("check word must be a string");
  c.word = parse_word(word.get<std::string>(), rank);
  c.image = require_permutation(require(j, "image"), degree, "check image");
  c.base_image = static_cast<Point>(require_index(require(j, "base_image"), "base_image"));
  const Json& result = require(j, "result");
  if (!result.is_boolean()) throw SchemaError("check result must be a boolean");
  c.passed = result.get<bool>();
  return c;
}

}  // namespace

Mode parse_mode(const std::string& name) {
  if (name == "hall") return Mode::hall;
  if (name == "alternating") return Mode::alternating;
  if (name == "symmetric") return Mode::symmetric;
  throw SchemaError("unknown mode \"" + name + "\"");
}

ProblemInstance instance_from_json(const Json& doc) {
  if (!doc.is_object()) throw SchemaError("instance must be a JSON object");
  ProblemInstance inst;
  const Json& rank = require(doc, "rank");
  if (!rank.is_number_integer() || rank.get<long long>() < 1 ||
      rank.get<long long>() > 26)
    throw SchemaError("rank must be an integer in 1..26");
  inst.rank = rank.get<std::size_t>();
  const auto subgroup = require_strings(require(doc, "subgroup"), "subgroup");
  const auto elements = require_strings(require(doc, "elements"), "elements");
  const Json& mode = require(doc, "mode");
  if (!mode.is_string()) throw SchemaError("mode must be a string");
  inst.mode = parse_mode(mode.get<std::string>());
  inst.h_generators = parse_words(subgroup, inst.rank);
  inst.gammas = parse_words(elements, inst.rank);
  return inst;
}

Json instance_to_json(const ProblemInstance& inst) {
  Json j;
  j["rank"] = inst.rank;
  j["subgroup"] = Json::array();
  for (const Word& w : inst.h_generators) j["subgroup"].push_back(render(w));
  j["elements"] = Json::array();
  for (const Word& w : inst.gammas) j["elements"].push_back(render(w));
  j["mode"] = mode_name(inst.mode);
  return j;
}

Json certificate_to_json(const SeparationCertificate& cert) {
  Json j;
  j["mode"] = mode_name(cert.mode);
  j["rank"] = cert.rank;
  j["degree"] = cert.degree;
  j["base"] = cert.base;
  Json images = Json::object();
  for (std::size_t i = 0; i < cert.generator_images.size(); ++i) {
    const Permutation& p = cert.generator_images[i];
    Json e;
    e["array"] = std::vector<Point>(p.image().begin(), p.image().end());
    e["cycles"] = to_cycle_string(p);
    images[generator_key(static_cast<Label>(i + 1))] = std::move(e);
  }
  j["images"] = std::move(images);
  if (cert.group) {
    j["order"] = cert.group->order.str();
    j["classification"] = classification_name(cert.group->classification);
  }
  if (cert.sign_vector) {
    Json s = Json::object();
    for (Label i = 1; i <= cert.sign_vector->rank(); ++i)
      s[generator_key(i)] = cert.sign_vector->at(i);
    j["sign_vector"] = std::move(s);
  }
  Json checks;
  checks["subgroup"] = Json::array();
  for (const WordCheck& c : cert.h_checks) checks["subgroup"].push_back(check_to_json(c));
  checks["elements"] = Json::array();
  for (const WordCheck& c : cert.gamma_checks)
    checks["elements"].push_back(check_to_json(c));
  j["checks"] = std::move(checks);
  return j;
}

SeparationCertificate certificate_from_json(const Json& doc) {
  if (!doc.is_object()) throw SchemaError("certificate must be a JSON object");
  SeparationCertificate cert;
  const Json& mode = require(doc, "mode");
  if (!mode.is_string()) throw SchemaError("mode must be a string");
  cert.mode = parse_mode(mode.get<std::string>());
  cert.rank = require_index(require(doc, "rank"), "rank");
  if (cert.rank < 1 || cert.rank > 26) throw SchemaError("rank must be in 1..26");
  cert.degree = require_index(require(doc, "degree"), "degree");
  if (cert.degree == 0) throw SchemaError("degree must be positive");
  cert.base = static_cast<Point>(require_index(require(doc, "base"), "base"));
  if (cert.base >= cert.degree) throw SchemaError("base outside the point set");

  const Json& images = require(doc, "images");
  if (!images.is_object() || images.size() != cert.rank)
    throw SchemaError("images must have one entry per generator");
  for (Label i = 1; i <= cert.rank; ++i) {
    const std::string key = generator_key(i);
    const Json& e = require(images, key.c_str());
    cert.generator_images.push_back(
        require_permutation(require(e, "array"), cert.degree, "image of " + key));
  }

  const bool has_order = doc.contains("order");
  const bool has_class = doc.contains("classification");
  const bool has_signs = doc.contains("sign_vector");
  if (cert.mode != Mode::hall) {
    if (!has_order || !has_class || !has_signs)
      throw SchemaError("order, classification and sign_vector are required");
  }
  if (has_order || has_class) {
    GroupDescription g;
    g.degree = cert.degree;
    g.generators = cert.generator_images;
    const Json& order = require(doc, "order");
    if (!order.is_string()) throw SchemaError("order must be a decimal string");
    const std::string digits = order.get<std::string>();
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw SchemaError("order must be a decimal string");
    g.order = BigInt(digits);
    const Json& cls = require(doc, "classification");
    if (!cls.is_string()) throw SchemaError("classification must be a string");
    g.classification = parse_classification(cls.get<std::string>());
    cert.group = std::move(g);
  }
  if (has_signs) {
    const Json& s = doc.at("sign_vector");
    if (!s.is_object() || s.size() != cert.rank)
      throw SchemaError("sign_vector must have one entry per generator");
    std::vector<int> values;
    for (Label i = 1; i <= cert.rank; ++i) {
      const Json& v = require(s, generator_key(i).c_str());
      if (!v.is_number_integer() || (v.get<int>() != 1 && v.get<int>() != -1))
        throw SchemaError("signs must be 1 or -1");
      values.push_back(v.get<int>());
    }
    cert.sign_vector = SignVector(std::move(values));
  }

  const Json& checks = require(doc, "checks");
  const Json& sub = require(checks, "subgroup");
  const Json& els = require(checks, "elements");
  if (!sub.is_array() || !els.is_array())
    throw SchemaError("checks must hold arrays");
  for (const Json& c : sub)
    cert.h_checks.push_back(check_from_json(c, cert.rank, cert.degree));
  for (const Json& c : els)
    cert.gamma_checks.push_back(check_from_json(c, cert.rank, cert.degree));
  return cert;
}

Json report_to_json(const VerificationReport& report) {
  Json j;
  j["passed"] = report.passed();
  j["checks"] = Json::array();
  for (const CheckEntry& c : report.checks) {
    Json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    e["detail"] = c.detail;
    j["checks"].push_back(std::move(e));
  }
  return j;
}

}  // namespace altquot
