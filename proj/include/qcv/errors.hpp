#pragma once

#include <stdexcept>
#include <string>

namespace qcv {

// Every failure mode the toolkit can report is a named exception type, so
// callers (CLI, tests) can distinguish "the math says no" from misuse.

struct SingularMatrix : std::runtime_error {
  explicit SingularMatrix(const std::string& what) : std::runtime_error(what) {}
};

struct InconsistentData : std::runtime_error {
  explicit InconsistentData(const std::string& what) : std::runtime_error(what) {}
};

struct UnboundedFamily : std::runtime_error {
  explicit UnboundedFamily(const std::string& what) : std::runtime_error(what) {}
};

struct NoSolution : std::runtime_error {
  explicit NoSolution(const std::string& what) : std::runtime_error(what) {}
};

struct MultipleSolutions : std::runtime_error {
  explicit MultipleSolutions(const std::string& what) : std::runtime_error(what) {}
};

struct SingularSystem : std::runtime_error {
  explicit SingularSystem(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateTriangle : std::runtime_error {
  explicit DegenerateTriangle(const std::string& what) : std::runtime_error(what) {}
};

struct RegionOverflow : std::runtime_error {
  explicit RegionOverflow(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownCaseId : std::runtime_error {
  explicit UnknownCaseId(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qcv
