#ifndef UDLAD_TYPES_HPP
#define UDLAD_TYPES_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace udlad {

// Dense matrices are Eigen column-major doubles throughout; signals and
// dictionary atoms are columns.
using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using Index = Eigen::Index;

// Base class for everything thrown by this library.
class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or inconsistent input data: CSV parse failures, dimension
// mismatches, unreadable model files. Maps to exit code 2 in the CLI.
class data_error : public error {
public:
  explicit data_error(const std::string& what) : error(what) {}
};

// Training collapsed to a useless state (every representation row zeroed).
// Maps to exit code 3 in the CLI.
class degenerate_error : public error {
public:
  explicit degenerate_error(const std::string& what) : error(what) {}
};

}  // namespace udlad

#endif
