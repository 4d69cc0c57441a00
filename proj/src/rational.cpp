#include "twistcat/rational.hpp"

#include <cstddef>

namespace twistcat {

namespace {

std::string rat_str(const Rational& r) {
  std::string s = r.str();
  return s;
}

// "2/3i" -> coefficient 2/3; bare "i" / "-i" -> 1 / -1.
Rational parse_rat(const std::string& piece) {
  if (piece.empty() || piece == "+") return Rational(1);
  if (piece == "-") return Rational(-1);
  return Rational(piece);
}

}  // namespace

std::string GaussianRational::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (re_ != 0) out += rat_str(re_);
  if (im_ != 0) {
    if (im_ > 0 && !out.empty()) out += "+";
    if (im_ == 1) {
      out += "i";
    } else if (im_ == -1) {
      out += "-i";
    } else {
      out += rat_str(im_) + "i";
    }
  }
  return out;
}

GaussianRational GaussianRational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty Q(i) literal");
  if (s == "0") return GaussianRational();
  // Split at the sign that starts the second term, if any. A '+'/'-' is a
  // splitter only when it is not the leading character.
  std::size_t split = std::string::npos;
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  auto term = [&](std::string t) -> GaussianRational {
    if (!t.empty() && t.front() == '+') t.erase(0, 1);
    if (t.empty()) throw std::invalid_argument("malformed Q(i) literal: " + s);
    if (t.back() == 'i') {
      return GaussianRational(Rational(0), parse_rat(t.substr(0, t.size() - 1)));
    }
    return GaussianRational(Rational(t));
  };
  try {
    if (split == std::string::npos) return term(s);
    return term(s.substr(0, split)) + term(s.substr(split));
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed Q(i) literal: " + s);
  }
}

}  // namespace twistcat
