#include "airyint/json_render.hpp"

#include <cmath>
#include <cstdio>

#include "airyint/errors.hpp"

namespace airyint {

Json form_to_json(const BilinearForm& form) {
  Json j;
  j["shift_a"] = to_string(form.shift_a);
  j["shift_b"] = to_string(form.shift_b);
  Json slots = Json::object();
  for (Pattern p : kAllPatterns) {
    Json coeffs = Json::array();
    for (const Rational& c : form[p].coefficients()) coeffs.push_back(to_string(c));
    slots[to_string(p)] = std::move(coeffs);
  }
  j["form"] = std::move(slots);
  return j;
}

BilinearForm form_from_json(const Json& j) {
  try {
    BilinearForm form(parse_rational(j.at("shift_a").get<std::string>()),
                      parse_rational(j.at("shift_b").get<std::string>()));
    const Json& slots = j.at("form");
    for (Pattern p : kAllPatterns) {
      std::vector<Rational> coeffs;
      for (const auto& c : slots.at(to_string(p))) coeffs.push_back(parse_rational(c.get<std::string>()));
      form[p] = Polynomial(std::move(coeffs));
    }
    return form;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed form JSON: ") + e.what());
  }
}

namespace {

void render(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(key).dump();
        out += ':';
        render(value, out);
      }
      out += '}';
      return;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0) out += ',';
        render(j[i], out);
      }
      out += ']';
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        return;
      }
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      std::string s(buf);
      // Keep a float marker so the value parses back as a double.
      if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
      out += s;
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string render_json(const Json& j) {
  std::string out;
  render(j, out);
  return out;
}

}  // namespace airyint
