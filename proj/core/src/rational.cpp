#include "ainfty/rational.hpp"

#include <stdexcept>

namespace ainfty {

std::string scalar_to_string(const Scalar& s) {
  if (s.get_den() == 1) return s.get_num().get_str();
  return s.get_num().get_str() + "/" + s.get_den().get_str();
}

Scalar scalar_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  for (char c : text)
    if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
      throw std::invalid_argument("bad rational literal: " + text);
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + text);
  q.canonicalize();
  if (q.get_den() <= 0) throw std::invalid_argument("bad rational literal: " + text);
  return q;
}

}  // namespace ainfty
