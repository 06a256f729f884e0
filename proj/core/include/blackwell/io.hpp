#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "blackwell/mdp.hpp"
#include "blackwell/ratfun.hpp"

namespace blackwell {

/// Malformed JSON or a document not matching the expected schema.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses the MDP JSON format:
///   {"n": 2, "states": [{"actions": [{"label": "stay",
///      "transitions": [{"to": 0, "p": "1/2"}, {"to": 1, "p": "1/2"}],
///      "reward": "3/4"}]}, ...]}
/// Numbers are rational strings or JSON integers; floats are rejected.
/// Instead of "reward" an action may give per-successor rewards
/// "rewards": [{"to": 1, "r": "2"}], folded to their expectation.
/// Throws FormatError. Semantic checks are left to validate_mdp.
Mdp parse_mdp(std::string_view json);

/// Serializes with scalar "reward" per action; parse_mdp inverts it exactly.
std::string format_mdp(const Mdp& m);

/// Accepts {"policy": [..]} or a bare array. Throws FormatError.
Policy parse_policy(std::string_view json);

/// {"policy":[a_0,...]}
std::string format_policy(const Policy& pi);

std::vector<std::string> coefficient_strings(const Polynomial& p);
Polynomial polynomial_from_strings(const std::vector<std::string>& coeffs);

/// {"num": [...], "den": [...]}, coefficient strings in ascending powers.
std::string format_ratfun(const RationalFunction& r);
RationalFunction parse_ratfun(std::string_view json);

}  // namespace blackwell
