#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

// Integer solutions of A z = b by unimodular column reduction.
namespace gmc::intlin {

using Int = boost::multiprecision::cpp_int;
using Matrix = std::vector<std::vector<Int>>;

struct Solution {
    std::vector<Int> particular;
    // Basis of the integer kernel.
    std::vector<std::vector<Int>> kernel;
};

// A is rows x cols; returns nullopt if there is no integer solution.
std::optional<Solution> solve(const Matrix& A, const std::vector<Int>& b);

}  // namespace gmc::intlin
