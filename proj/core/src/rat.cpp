#include "lcmcap/rat.hpp"

#include <cctype>
#include <cstddef>

#include "lcmcap/errors.hpp"

namespace lcmcap {

std::string rat_str(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string int_str(const Int& n) { return n.get_str(); }

Rat rat_parse(std::string_view text) {
  if (text.empty()) throw InvalidInput("empty rational literal");
  std::string s(text);
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    // decimal literal: shift the point away and divide by the matching power of 10
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac_len = s.size() - dot - 1;
    for (char ch : digits) {
      if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '-' && ch != '+')
        throw InvalidInput("bad decimal literal: " + s);
    }
    Int num(digits, 10);
    Int den = 1;
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    Rat r(num, den);
    r.canonicalize();
    return r;
  }
  Rat r;
  if (r.set_str(s, 10) != 0) throw InvalidInput("bad rational literal: " + s);
  if (r.get_den() == 0) throw InvalidInput("zero denominator: " + s);
  r.canonicalize();
  return r;
}

}  // namespace lcmcap
