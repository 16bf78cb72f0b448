#include "setcalc/rational.hpp"

#include <cctype>
#include <sstream>

namespace setcalc {

Rational rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
      throw std::invalid_argument("bad rational literal: " + s);
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rational& r) { return r.get_str(); }

std::string rat_decimal(const Rational& r, int digits) {
  mpf_class f(r, 64 + 4 * digits);
  mp_exp_t exp;
  std::string m = f.get_str(exp, 10, digits);
  std::ostringstream out;
  out << (m.empty() || m[0] != '-' ? "" : "-");
  std::string digits_only = (m.empty() || m[0] != '-') ? m : m.substr(1);
  if (digits_only.empty()) return "0";
  if (exp <= 0) {
    out << "0." << std::string(-exp, '0') << digits_only;
  } else if (static_cast<size_t>(exp) >= digits_only.size()) {
    out << digits_only << std::string(exp - digits_only.size(), '0');
  } else {
    out << digits_only.substr(0, exp) << "." << digits_only.substr(exp);
  }
  return out.str();
}

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += rat_str(v[i]);
  }
  return s + ")";
}

}  // namespace setcalc
