#include "dct/parse.hpp"

#include <cctype>
#include <map>

namespace dct {

namespace {

// Commutative polynomial in D with coefficients in Q(x), plus the textual
// facts needed for the ordering check.
struct Value {
  std::map<int, RationalFunction> c;  // D power -> coefficient
  bool has_x = false;
  bool has_d = false;

  static Value constant(const RationalFunction& f) {
    Value v;
    if (!f.is_zero()) v.c[0] = f;
    return v;
  }
};

Value add(const Value& a, const Value& b, bool negate) {
  Value r = a;
  for (const auto& [k, f] : b.c) {
    auto it = r.c.find(k);
    RationalFunction v = negate ? -f : f;
    if (it == r.c.end()) {
      r.c[k] = v;
    } else {
      it->second += v;
      if (it->second.is_zero()) r.c.erase(it);
    }
  }
  r.has_x = a.has_x || b.has_x;
  r.has_d = a.has_d || b.has_d;
  return r;
}

Value mul(const Value& a, const Value& b) {
  Value r;
  for (const auto& [i, f] : a.c)
    for (const auto& [j, g] : b.c) {
      auto& slot = r.c[i + j];
      slot += f * g;
    }
  for (auto it = r.c.begin(); it != r.c.end();) it = it->second.is_zero() ? r.c.erase(it) : std::next(it);
  r.has_x = a.has_x || b.has_x;
  r.has_d = a.has_d || b.has_d;
  return r;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Value parse() {
    Value v = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        v = add(v, term(), false);
      } else if (peek('-')) {
        ++pos_;
        v = add(v, term(), true);
      } else {
        return v;
      }
    }
  }

  Value term() {
    bool neg = false;
    if (peek('-')) {
      ++pos_;
      neg = true;
    }
    Value v = factor();
    bool seen_d = v.has_d;
    for (;;) {
      if (peek('*')) {
        ++pos_;
        skip();
        std::size_t at = pos_;
        Value f = factor();
        if (seen_d && f.has_x) throw ParseError("D appears left of x", at);
        seen_d = seen_d || f.has_d;
        v = mul(v, f);
      } else if (peek('/')) {
        ++pos_;
        skip();
        std::size_t at = pos_;
        Value f = factor();
        if (f.has_d) throw ParseError("divisor contains D", at);
        RationalFunction d = f.c.count(0) ? f.c.at(0) : RationalFunction();
        if (d.is_zero()) throw ParseError("division by zero", at);
        if (seen_d && f.has_x) throw ParseError("D appears left of x", at);
        Value inv = Value::constant(d.inverse());
        inv.has_x = f.has_x;
        v = mul(v, inv);
      } else {
        break;
      }
    }
    if (neg) v = add(Value(), v, true);
    return v;
  }

  Value factor() {
    std::size_t at = pos_;
    Value a = atom();
    if (peek('^')) {
      ++pos_;
      skip();
      std::size_t ep = pos_;
      unsigned long e = uint_literal();
      if (e > 100000) throw ParseError("exponent too large", ep);
      if (e >= 2 && a.has_d && a.has_x) throw ParseError("D appears left of x", at);
      Value r = Value::constant(1);
      r.has_x = a.has_x;
      r.has_d = a.has_d;
      for (unsigned long i = 0; i < e; ++i) r = mul(r, a);
      return r;
    }
    return a;
  }

  unsigned long uint_literal() {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) throw ParseError("expected an unsigned integer", b);
    if (pos_ - b > 9) throw ParseError("integer too large", b);
    return std::stoul(std::string(s_.substr(b, pos_ - b)));
  }

  Value atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == 'x') {
      ++pos_;
      Value v = Value::constant(RationalFunction(Polynomial::x()));
      v.has_x = true;
      return v;
    }
    if (c == 'D') {
      ++pos_;
      Value v;
      v.c[1] = RationalFunction(1);
      v.has_d = true;
      return v;
    }
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!peek(')')) throw ParseError("expected ')'", pos_);
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t b = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string num(s_.substr(b, pos_ - b));
      // rational := int ('/' uint)? ; a '/' followed by digits binds here
      std::size_t save = pos_;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        std::size_t q = pos_ + 1;
        while (q < s_.size() && std::isspace(static_cast<unsigned char>(s_[q]))) ++q;
        if (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) {
          std::size_t e = q;
          while (e < s_.size() && std::isdigit(static_cast<unsigned char>(s_[e]))) ++e;
          Integer den(std::string(s_.substr(q, e - q)));
          if (den == 0) throw ParseError("zero denominator", q);
          Rational r{Integer(num), den};
          r.canonicalize();
          pos_ = e;
          return Value::constant(RationalFunction(r));
        }
      }
      pos_ = save;
      return Value::constant(RationalFunction(Rational(Integer(num))));
    }
    throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

bool is_constant(const RationalFunction& f) { return f.is_polynomial() && f.num().degree() <= 0; }

}  // namespace

OrePoly parse_operator(std::string_view src) {
  Value v = Parser(src).parse();
  if (v.c.empty()) throw ParseError("operator is zero", 0);
  int r = v.c.rbegin()->first;
  std::vector<RationalFunction> c(static_cast<std::size_t>(r) + 1);
  for (const auto& [k, f] : v.c) c[static_cast<std::size_t>(k)] = f;
  return OrePoly(std::move(c));
}

std::string to_string(const OrePoly& l) {
  if (l.is_zero()) return "0";
  std::string out;
  for (int k = l.order(); k >= 0; --k) {
    const RationalFunction& c = l.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::string dpart = k == 0 ? "" : (k == 1 ? "D" : "D^" + std::to_string(k));
    bool neg = false;
    std::string body;
    if (is_constant(c)) {
      Rational a = c.num().leading();
      neg = a < 0;
      if (neg) a = -a;
      if (a == 1 && k > 0)
        body = dpart;
      else
        body = a.get_str() + (k > 0 ? "*" + dpart : "");
    } else {
      body = "(" + to_string(c) + ")" + (k > 0 ? "*" + dpart : "");
    }
    if (out.empty())
      out = (neg ? "-" : "") + body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  return out;
}

}  // namespace dct
