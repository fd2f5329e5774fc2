#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclekit/graph.hpp"

namespace cyclekit {

class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A family name plus named integer parameters, e.g. {"H", {a:1, b:2, t:4, k:3}}.
struct FamilySpec {
  std::string name;
  std::map<std::string, int> params;

  /// "H(a=1,b=2,k=3,t=4)"
  std::string to_string() const;
};

/// Parses "H(a=1,b=2,t=4,k=3)" or a bare name such as "petersen".
FamilySpec parse_family_spec(const std::string& text);

/// Deterministic construction; throws FamilyError for unknown names,
/// missing parameters or parameters outside the family's domain.
Graph build(const FamilySpec& spec);

struct FamilyInfo {
  std::string name;
  std::vector<std::string> params;
  std::string domain;
  std::string description;
  std::vector<std::string> cited_by;  // catalog ids using this family as a sharpness example
};

const std::vector<FamilyInfo>& list_families();

}  // namespace cyclekit
