#include "star/scalar.hpp"

#include <sstream>

namespace star {

std::string Scalar::str() const {
  std::ostringstream os;
  if (is_exact()) {
    const Rational& r = rational();
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
  } else {
    os << value();
  }
  return os.str();
}

}  // namespace star
