#include "webgeo/rational.hpp"

#include <ostream>

namespace webgeo {

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

} // namespace webgeo
