#include "wlpkit/spec_io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>

#include "wlpkit/errors.hpp"

namespace wlpkit {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw SpecParseError((where.empty() ? std::string("/") : where) + ": " + what);
}

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

unsigned natural(const json& v, const std::string& where, unsigned lo) {
  if (!v.is_number_integer()) fail(where, "expected an integer");
  const auto x = v.get<long long>();
  if (x < lo || x > std::numeric_limits<unsigned>::max())
    fail(where, "expected an integer >= " + std::to_string(lo));
  return static_cast<unsigned>(x);
}

BigInt integer(const json& v, const std::string& where) {
  if (v.is_number_integer()) return v.is_number_unsigned() ? BigInt(v.get<std::uint64_t>()) : BigInt(v.get<long long>());
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    const std::size_t start = !s.empty() && (s[0] == '-' || s[0] == '+');
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      fail(where, "expected a decimal integer, got \"" + s + "\"");
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  }
  fail(where, "expected an integer or a decimal string");
}

Generator linear_power(const json& body, unsigned r, const std::string& where) {
  LinearPower lp;
  lp.exponent = natural(member(body, "exp", where), where + "/exp", 1);
  const json& coeffs = member(body, "coeffs", where);
  if (coeffs.is_string() && coeffs.get_ref<const std::string&>() == "general") return lp;
  if (!coeffs.is_array()) fail(where + "/coeffs", "expected an array or \"general\"");
  if (coeffs.size() != r) fail(where + "/coeffs", "expected " + std::to_string(r) + " coefficients");
  std::vector<BigInt> c;
  for (std::size_t i = 0; i < coeffs.size(); ++i) c.push_back(integer(coeffs[i], where + "/coeffs/" + std::to_string(i)));
  lp.form = LinearForm(std::move(c));
  if (lp.form->is_zero()) fail(where + "/coeffs", "the linear form is zero");
  return lp;
}

Generator form(const json& body, unsigned r, const std::string& where) {
  const unsigned d = natural(member(body, "degree", where), where + "/degree", 1);
  const json& terms = member(body, "terms", where);
  if (!terms.is_array()) fail(where + "/terms", "expected an array");
  HomogeneousForm f(r, d);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string at = where + "/terms/" + std::to_string(i);
    const json& t = terms[i];
    if (!t.is_array() || t.size() != 2 || !t[0].is_array()) fail(at, "expected [[exponents], coefficient]");
    if (t[0].size() != r) fail(at + "/0", "expected " + std::to_string(r) + " exponents");
    std::vector<unsigned> e;
    unsigned total = 0;
    for (std::size_t j = 0; j < r; ++j) {
      e.push_back(natural(t[0][j], at + "/0/" + std::to_string(j), 0));
      total += e.back();
    }
    if (total != d) fail(at + "/0", "exponents sum to " + std::to_string(total) + ", not " + std::to_string(d));
    f.add_term(ExponentVector(std::move(e)), integer(t[1], at + "/1"));
  }
  if (f.is_zero()) fail(where, "the form is zero");
  return f;
}

IdealSpec from_json(const json& doc) {
  if (!doc.is_object()) fail("", "expected an object");
  IdealSpec spec;
  spec.r = natural(member(doc, "vars", ""), "/vars", 1);
  const json& gens = member(doc, "generators", "");
  if (!gens.is_array() || gens.empty()) fail("/generators", "expected a non-empty array");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string at = "/generators/" + std::to_string(i);
    const json& g = gens[i];
    if (!g.is_object() || g.size() != 1) fail(at, "expected an object with one key");
    const std::string kind = g.begin().key();
    const json& body = g.begin().value();
    if (kind == "power_of_linear") {
      spec.generators.push_back(linear_power(body, spec.r, at + "/power_of_linear"));
    } else if (kind == "form") {
      spec.generators.push_back(form(body, spec.r, at + "/form"));
    } else if (kind == "general_form") {
      spec.generators.push_back(GeneralForm{natural(member(body, "degree", at), at + "/general_form/degree", 1)});
    } else {
      fail(at, "unknown generator kind \"" + kind + "\"");
    }
  }
  return spec;
}

}  // namespace

IdealSpec parse_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is one past the offending character
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    // drop the library's own "[json.exception...] parse error at ...: " prefix
    std::string detail = e.what();
    if (const auto pos = detail.find(": ", detail.find("column")); pos != std::string::npos) detail.erase(0, pos + 2);
    throw SpecParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + detail, line,
                         column);
  }
  return from_json(doc);
}

IdealSpec read_spec(std::istream& in) {
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_spec(text);
}

IdealSpec read_spec(const std::string& path) {
  if (path == "-") return read_spec(std::cin);
  std::ifstream in(path);
  if (!in) throw SpecParseError("cannot open " + path);
  return read_spec(in);
}

nlohmann::ordered_json bigint_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

nlohmann::ordered_json spec_to_json(const IdealSpec& spec) {
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (const auto& g : spec.generators) {
    if (const auto* lp = std::get_if<LinearPower>(&g)) {
      nlohmann::ordered_json coeffs = "general";
      if (lp->form) {
        coeffs = nlohmann::ordered_json::array();
        for (const auto& c : lp->form->coefficients) coeffs.push_back(bigint_json(c));
      }
      gens.push_back({{"power_of_linear", {{"coeffs", coeffs}, {"exp", lp->exponent}}}});
    } else if (const auto* f = std::get_if<HomogeneousForm>(&g)) {
      nlohmann::ordered_json terms = nlohmann::ordered_json::array();
      const auto basis = f->basis();
      for (std::size_t i = 0; i < f->coefficients.size(); ++i)
        if (f->coefficients[i] != 0)
          terms.push_back(nlohmann::ordered_json::array({(*basis)[i].exponents(), bigint_json(f->coefficients[i])}));
      gens.push_back({{"form", {{"degree", f->degree}, {"terms", terms}}}});
    } else {
      gens.push_back({{"general_form", {{"degree", std::get<GeneralForm>(g).degree}}}});
    }
  }
  return {{"vars", spec.r}, {"generators", gens}};
}

}  // namespace wlpkit
