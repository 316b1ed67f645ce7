#include "treespec/rational.hpp"

#include <stdexcept>

namespace treespec {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw std::invalid_argument("rational with zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigRational parse_rational(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  auto last = text.find_last_not_of(" \t\r\n");
  if (first == std::string::npos) throw std::invalid_argument("empty rational literal");
  std::string s = text.substr(first, last - first + 1);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return BigRational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal: '" + s + "'");
  }
}

std::string to_string(const BigInt& z) { return z.get_str(); }

std::string to_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace treespec
