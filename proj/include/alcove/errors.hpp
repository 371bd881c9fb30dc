#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace alcove {

// Base for all contract violations. CLI maps these to exit code 2.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedType : Error {
  explicit UnsupportedType(const std::string& w) : Error(w) {}
};

struct GroupTooLarge : Error {
  explicit GroupTooLarge(const std::string& w) : Error(w) {}
};

struct LevelTooSmall : Error {
  explicit LevelTooSmall(const std::string& w) : Error(w) {}
};

// Point lies on arrangement hyperplanes; carries the violated wall ids
// as "dir:offset" strings.
struct OnWall : Error {
  explicit OnWall(std::vector<std::string> walls_)
      : Error("point lies on " + std::to_string(walls_.size()) +
              " arrangement hyperplane(s)"),
        walls(std::move(walls_)) {}
  std::vector<std::string> walls;
};

struct NotAdjacent : Error {
  explicit NotAdjacent(const std::string& w) : Error(w) {}
};

struct NotSupported : Error {
  explicit NotSupported(const std::string& w) : Error(w) {}
};

struct NotALoop : Error {
  explicit NotALoop(const std::string& w) : Error(w) {}
};

struct NotApplicable : Error {
  explicit NotApplicable(const std::string& w) : Error(w) {}
};

struct InvalidParabolic : Error {
  explicit InvalidParabolic(const std::string& w) : Error(w) {}
};

struct NoValidParabolic : Error {
  explicit NoValidParabolic(const std::string& w) : Error(w) {}
};

struct IllTyped : Error {
  explicit IllTyped(const std::string& w) : Error(w) {}
};

// Internal bug sentinel: the divisibility in the divided-difference
// operator is an invariant, so this must be unreachable.
struct InexactDivision : std::logic_error {
  explicit InexactDivision(const std::string& w) : std::logic_error(w) {}
};

}  // namespace alcove
