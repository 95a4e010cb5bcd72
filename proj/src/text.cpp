#include "apnsurf/text.hpp"

#include <cctype>
#include <sstream>

namespace apnsurf {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Field& field, bool trivariate)
      : text_(text), field_(field), trivariate_(trivariate) {}

  TriPoly parse() {
    TriPoly acc(field_);
    acc += term();
    for (;;) {
      skip_ws();
      if (pos_ == text_.size()) break;
      if (text_[pos_] != '+') throw SyntaxError(pos_, "'+' or end of input");
      ++pos_;
      acc += term();
    }
    return acc;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_var() const {
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    if (c == 'x') return !(pos_ + 1 < text_.size() && text_[pos_ + 1] == '0');
    return trivariate_ && (c == 'y' || c == 'z');
  }

  const char* var_expectation() const { return trivariate_ ? "variable x, y or z" : "variable x"; }

  unsigned uint_literal() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError(pos_, "unsigned integer");
    if (pos_ - start > 9) throw SyntaxError(start, "exponent below 10^9");
    return static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
  }

  unsigned optional_exponent() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      return uint_literal();
    }
    return 1;
  }

  Elem coefficient() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) throw SyntaxError(pos_, "coefficient or variable");
    if (text_[pos_] == 'a') {
      ++pos_;
      return field_.pow(field_.generator(), optional_exponent());
    }
    std::uint64_t value = 0;
    if (text_.substr(pos_, 2) == "0x" || text_.substr(pos_, 2) == "0X") {
      pos_ += 2;
      const std::size_t digits = pos_;
      while (pos_ < text_.size() && std::isxdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (digits == pos_) throw SyntaxError(pos_, "hex digits");
      if (pos_ - digits > 8) throw Error(ErrorCode::CoefficientNotInField, "hex literal too wide");
      value = std::stoull(std::string(text_.substr(digits, pos_ - digits)), nullptr, 16);
    } else if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ - start > 10) throw Error(ErrorCode::CoefficientNotInField, "decimal literal too wide");
      value = std::stoull(std::string(text_.substr(start, pos_ - start)));
    } else {
      throw SyntaxError(pos_, std::string("coefficient or ") + var_expectation());
    }
    if (value >= field_.size()) {
      throw Error(ErrorCode::CoefficientNotInField,
                  format_elem(static_cast<Elem>(value)) + " is not in " + field_.to_string() + " (position " +
                      std::to_string(start) + ")");
    }
    return static_cast<Elem>(value);
  }

  TriPoly term() {
    skip_ws();
    Elem c = 1;
    if (!at_var()) {
      c = coefficient();
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        skip_ws();
        if (!at_var()) throw SyntaxError(pos_, var_expectation());
      } else {
        return TriPoly::constant(field_, c);
      }
    }
    std::array<unsigned, 3> e{0, 0, 0};
    for (;;) {
      skip_ws();
      if (!at_var()) throw SyntaxError(pos_, var_expectation());
      const int v = text_[pos_] == 'x' ? 0 : text_[pos_] == 'y' ? 1 : 2;
      ++pos_;
      e[v] += optional_exponent();
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return TriPoly::monomial(field_, c, Monomial(e[0], e[1], e[2]));
  }

  std::string_view text_;
  Field field_;
  bool trivariate_;
  std::size_t pos_ = 0;
};

}  // namespace

TriPoly parse_tripoly(std::string_view text, const Field& field) { return Parser(text, field, true).parse(); }

UniPoly parse_poly(std::string_view text, const Field& field) {
  const TriPoly t = Parser(text, field, false).parse();
  std::vector<Elem> coeffs(std::max(t.degree_in(0), 0) + 1, 0);
  for (const auto& term : t.terms()) coeffs[term.mono.x()] ^= term.coeff;
  return UniPoly(field, std::move(coeffs));
}

namespace {

void append_power(std::ostringstream& os, bool& first_factor, char var, unsigned e) {
  if (e == 0) return;
  if (!first_factor) os << '*';
  first_factor = false;
  os << var;
  if (e != 1) os << '^' << e;
}

}  // namespace

std::string format(const TriPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const auto& t : p.terms()) {
    if (!first_term) os << " + ";
    first_term = false;
    bool first_factor = true;
    if (t.coeff != 1 || t.mono.degree() == 0) {
      os << format_elem(t.coeff);
      first_factor = false;
    }
    append_power(os, first_factor, 'x', t.mono.x());
    append_power(os, first_factor, 'y', t.mono.y());
    append_power(os, first_factor, 'z', t.mono.z());
  }
  return os.str();
}

std::string format(const UniPoly& p) { return format(TriPoly::from_uni(p)); }

}  // namespace apnsurf
