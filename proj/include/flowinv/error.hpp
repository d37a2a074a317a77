#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace flowinv {

enum class ErrorKind {
  NotPartialOrder,
  NotTopology,
  NotT0,
  InvalidInput,
  FlowIncoherentFace,
  NonIntegerGenus,
  Unsupported,
  NotRealizableInput,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPartialOrder: return "NotPartialOrder";
    case ErrorKind::NotTopology: return "NotTopology";
    case ErrorKind::NotT0: return "NotT0";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::FlowIncoherentFace: return "FlowIncoherentFace";
    case ErrorKind::NonIntegerGenus: return "NonIntegerGenus";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::NotRealizableInput: return "NotRealizableInput";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// What a validation rule was checked against.
enum class EntityKind { Saddle, Separatrix, Vertex, Annulus, Model };

inline const char* to_string(EntityKind kind) {
  switch (kind) {
    case EntityKind::Saddle: return "saddle";
    case EntityKind::Separatrix: return "separatrix";
    case EntityKind::Vertex: return "vertex";
    case EntityKind::Annulus: return "annulus";
    case EntityKind::Model: return "model";
  }
  return "?";
}

/// One broken rule. `index` points into the owning container of `entity`;
/// `rule` is a short stable tag (e.g. "degree", "alternation", "dangling-face").
struct Violation {
  EntityKind entity = EntityKind::Model;
  std::size_t index = 0;
  std::string rule;
  std::string message;
};

using Violations = std::vector<Violation>;

}  // namespace flowinv
