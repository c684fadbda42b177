#include "twopath/rational.hpp"

#include "twopath/error.hpp"

namespace twopath {

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0 || r.get_den() == 0)
    throw Error(ErrorKind::Parse, "not a rational: '" + text + "'");
  r.canonicalize();
  return r;
}

}  // namespace twopath
