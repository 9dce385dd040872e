#include <qplane/parser.hpp>

#include <cctype>
#include <charconv>

namespace qplane {

const Field& parse_field(std::string_view name, int adjoin) {
  if (adjoin < 1) throw ModeError("--adjoin must be positive");
  if (name == "generic") return Field::generic(adjoin);
  constexpr std::string_view prefix = "cyclotomic:";
  if (name.substr(0, prefix.size()) == prefix) {
    const std::string_view rest = name.substr(prefix.size());
    int t = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), t);
    if (ec != std::errc() || ptr != rest.data() + rest.size() || rest.empty())
      throw ParseError("bad field order '" + std::string(rest) + "'", prefix.size());
    if (t < 2) throw ModeError("root-of-unity order must be at least 2");
    return Field::root_of_unity(t, adjoin);
  }
  throw ParseError("unknown field '" + std::string(name) + "'", 0);
}

namespace {

class Parser {
 public:
  Parser(std::string_view src, const Field& field) : src_(src), field_(field) {}

  QElem parse() {
    QElem e = expr();
    skip();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  QElem expr() {
    QElem acc = term();
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else return acc;
    }
  }

  QElem term() {
    QElem acc = unary();
    for (;;) {
      if (eat('*')) {
        acc = acc * unary();
      } else if (eat('/')) {
        const std::size_t at = pos_;
        const QElem d = unary();
        if (!d.is_constant()) throw ParseError("division by a non-scalar", at);
        if (d.is_zero()) throw DivisionByZero();
        acc = d.coeff({0, 0}).inverse() * acc;
      } else {
        return acc;
      }
    }
  }

  QElem unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    QElem base = atom();
    while (eat('^')) base = pow(base, natural());
    return base;
  }

  int natural() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative exponent");
    int v = 0;
    auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, v);
    if (ec != std::errc()) throw ParseError("exponent out of range", start);
    return v;
  }

  QElem atom() {
    skip();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      const mpz_class v(std::string(src_.substr(start, pos_ - start)));
      return QElem::constant(field_.rational(mpq_class(v)));
    }
    ++pos_;
    switch (c) {
      case 'x':
        return QElem::x(field_);
      case 'y':
        return QElem::y(field_);
      case 'q':
        return QElem::constant(field_.q());
      case 'z':
        if (field_.conductor() == 1) throw ModeError("z is only available with adjoined roots of unity");
        return QElem::constant(field_.root_of_unity_power(field_.conductor(), 1));
      case '(': {
        QElem e = expr();
        if (!eat(')')) fail("expected ')'");
        return e;
      }
      default:
        --pos_;
        fail("unexpected '" + std::string(1, c) + "'");
    }
  }

  std::string_view src_;
  const Field& field_;
  std::size_t pos_ = 0;
};

}  // namespace

QElem parse_expr(std::string_view src, const Field& field) { return Parser(src, field).parse(); }

FieldElem parse_scalar(std::string_view src, const Field& field) {
  const QElem e = parse_expr(src, field);
  if (!e.is_constant()) throw ParseError("expected a scalar, got '" + std::string(src) + "'", 0);
  return e.coeff({0, 0});
}

Automorphism parse_automorphism(std::string_view src, const Field& field) {
  const auto colon = src.find(':');
  if (colon == std::string_view::npos) throw ParseError("expected toric:<a>,<b> or flip:<a>,<b>", 0);
  const std::string_view kind = src.substr(0, colon);
  const std::string_view args = src.substr(colon + 1);
  int depth = 0;
  std::size_t comma = std::string_view::npos;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == '(') ++depth;
    else if (args[i] == ')') --depth;
    else if (args[i] == ',' && depth == 0) {
      if (comma != std::string_view::npos) throw ParseError("too many scalars", colon + 1 + i);
      comma = i;
    }
  }
  if (comma == std::string_view::npos) throw ParseError("expected two scalars", src.size());
  const FieldElem a = parse_scalar(args.substr(0, comma), field);
  const FieldElem b = parse_scalar(args.substr(comma + 1), field);
  if (kind == "toric") return Automorphism::toric(a, b);
  if (kind == "flip") return Automorphism::flip(a, b);
  throw ParseError("unknown automorphism kind '" + std::string(kind) + "'", 0);
}

}  // namespace qplane
