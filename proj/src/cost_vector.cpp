#include "rcsp/cost_vector.hpp"

#include <ostream>
#include <stdexcept>

namespace rcsp {

void throw_dimension_mismatch(std::size_t lhs, std::size_t rhs) {
  throw std::invalid_argument("cost vector length mismatch: " + std::to_string(lhs) +
                              " vs " + std::to_string(rhs));
}

std::string to_string(const CostVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v[i] == kInfiniteCost ? std::string("inf") : std::to_string(v[i]);
  }
  out += ')';
  return out;
}

std::ostream& operator<<(std::ostream& os, const CostVector& v) { return os << to_string(v); }

}  // namespace rcsp
