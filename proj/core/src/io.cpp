#include "blackwell/io.hpp"

#include <json.hpp>

namespace blackwell {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

Rational number_field(const json& j, const std::string& what) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(mpz_class(j.dump(), 10));
  } catch (const std::invalid_argument& e) {
    throw FormatError(what + ": " + e.what());
  }
  throw FormatError(what + ": expected a rational string or an integer, got " + j.dump());
}

std::size_t index_field(const json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw FormatError(what + ": expected a nonnegative integer, got " + j.dump());
  }
  return j.get<std::size_t>();
}

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw FormatError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw FormatError(where + ": missing \"" + key + "\"");
  return *it;
}

Action parse_action(const json& j, const std::string& where) {
  Action a;
  if (!j.is_object()) throw FormatError(where + ": expected an object");
  if (auto it = j.find("label"); it != j.end()) {
    if (!it->is_string()) throw FormatError(where + ": label must be a string");
    a.label = it->get<std::string>();
  }
  const json& ts = member(j, "transitions", where);
  if (!ts.is_array()) throw FormatError(where + ": transitions must be an array");
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const std::string w = where + ".transitions[" + std::to_string(i) + "]";
    a.transitions.push_back({index_field(member(ts[i], "to", w), w + ".to"), number_field(member(ts[i], "p", w), w + ".p")});
  }
  const bool scalar = j.contains("reward");
  const bool per_successor = j.contains("rewards");
  if (scalar == per_successor) throw FormatError(where + ": exactly one of \"reward\" and \"rewards\" is required");
  if (scalar) {
    a.reward = number_field(j["reward"], where + ".reward");
    return a;
  }
  const json& rs = j["rewards"];
  if (!rs.is_array()) throw FormatError(where + ": rewards must be an array");
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const std::string w = where + ".rewards[" + std::to_string(i) + "]";
    const std::size_t to = index_field(member(rs[i], "to", w), w + ".to");
    const Rational r = number_field(member(rs[i], "r", w), w + ".r");
    bool found = false;
    for (const auto& t : a.transitions) {
      if (t.to == to) {
        a.reward += t.p * r;
        found = true;
      }
    }
    if (!found) throw FormatError(w + ": no transition to state " + std::to_string(to));
  }
  return a;
}

json polynomial_json(const Polynomial& p) {
  json arr = json::array();
  for (const auto& c : p.coefficients()) arr.push_back(to_string(c));
  return arr;
}

Polynomial polynomial_field(const json& j, const std::string& what) {
  if (!j.is_array()) throw FormatError(what + ": expected an array of coefficients");
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < j.size(); ++i) coeffs.push_back(number_field(j[i], what + "[" + std::to_string(i) + "]"));
  return Polynomial(std::move(coeffs));
}

}  // namespace

Mdp parse_mdp(std::string_view text) {
  const json doc = parse_json(text);
  const json& states = member(doc, "states", "MDP");
  if (!states.is_array()) throw FormatError("MDP: states must be an array");
  if (doc.contains("n") && index_field(doc["n"], "MDP.n") != states.size()) {
    throw FormatError("MDP: n = " + doc["n"].dump() + " but " + std::to_string(states.size()) + " states given");
  }
  Mdp m;
  for (std::size_t s = 0; s < states.size(); ++s) {
    const std::string where = "states[" + std::to_string(s) + "]";
    const json& actions = member(states[s], "actions", where);
    if (!actions.is_array()) throw FormatError(where + ": actions must be an array");
    std::vector<Action> acts;
    for (std::size_t a = 0; a < actions.size(); ++a) {
      acts.push_back(parse_action(actions[a], where + ".actions[" + std::to_string(a) + "]"));
    }
    m.states.push_back(std::move(acts));
  }
  return m;
}

std::string format_mdp(const Mdp& m) {
  json states = json::array();
  for (const auto& acts : m.states) {
    json actions = json::array();
    for (const auto& a : acts) {
      json ja;
      if (!a.label.empty()) ja["label"] = a.label;
      json ts = json::array();
      for (const auto& t : a.transitions) ts.push_back({{"to", t.to}, {"p", to_string(t.p)}});
      ja["transitions"] = std::move(ts);
      ja["reward"] = to_string(a.reward);
      actions.push_back(std::move(ja));
    }
    states.push_back({{"actions", std::move(actions)}});
  }
  json doc;
  doc["n"] = m.n();
  doc["states"] = std::move(states);
  return doc.dump(2) + "\n";
}

Policy parse_policy(std::string_view text) {
  json doc = parse_json(text);
  const json& arr = doc.is_object() ? member(doc, "policy", "policy") : doc;
  if (!arr.is_array()) throw FormatError("policy: expected an array of action indices");
  Policy pi;
  for (std::size_t i = 0; i < arr.size(); ++i) pi.push_back(index_field(arr[i], "policy[" + std::to_string(i) + "]"));
  return pi;
}

std::string format_policy(const Policy& pi) { return json{{"policy", pi}}.dump(); }

std::vector<std::string> coefficient_strings(const Polynomial& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

Polynomial polynomial_from_strings(const std::vector<std::string>& coeffs) {
  std::vector<Rational> cs;
  for (const auto& c : coeffs) cs.push_back(parse_rational(c));
  return Polynomial(std::move(cs));
}

std::string format_ratfun(const RationalFunction& r) {
  return json{{"num", polynomial_json(r.num())}, {"den", polynomial_json(r.den())}}.dump();
}

RationalFunction parse_ratfun(std::string_view text) {
  const json doc = parse_json(text);
  Polynomial num = polynomial_field(member(doc, "num", "rational function"), "num");
  Polynomial den = polynomial_field(member(doc, "den", "rational function"), "den");
  if (den.is_zero()) throw FormatError("rational function: zero denominator");
  return RationalFunction(std::move(num), std::move(den));
}

}  // namespace blackwell
