#include "trisq/numeric.hpp"

#include <stdexcept>

namespace trisq {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    const bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && (i == 0 || text[i - 1] == '/'));
    if (!ok) throw std::invalid_argument("malformed rational: " + text);
  }
  Rational out;
  if (out.set_str(text, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
  if (out.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  out.canonicalize();
  return out;
}

}  // namespace trisq
