#include "gecliff/tools/parse.hpp"

#include <cctype>
#include <charconv>

namespace gecliff::tools {

std::string Context::name() const { return is_gamma() ? "gamma:" + std::to_string(gamma_n) : order->name(); }

Context parse_context(std::string_view text) {
  Context c;
  if (text.substr(0, 6) == "gamma:") {
    const std::string_view digits = text.substr(6);
    int n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
      throw ParseError("malformed context '" + std::string(text) + "'", 6);
    if (n < 1 || n > 12) throw InvalidArgument("gamma dimension must be in 1..12");
    c.gamma_n = n;
    return c;
  }
  c.order = Order::by_name(text);
  return c;
}

namespace {

template <typename Alg>
class ExprParser {
 public:
  using T = typename Alg::Value;

  ExprParser(std::string_view s, std::size_t base, const Alg& alg) : s_(s), base_(base), alg_(alg) {}

  T parse() {
    T v = expr();
    skip();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, base_ + pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  T expr() {
    skip();
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    T acc = term();
    if (neg) acc = alg_.neg(acc);
    while (true) {
      if (eat('+')) acc = alg_.add(acc, term());
      else if (eat('-')) acc = alg_.add(acc, alg_.neg(term()));
      else return acc;
    }
  }

  // Division is by a positive integer literal only: "(1 + i)/2".
  T term() {
    T acc = unary();
    while (true) {
      if (eat('*')) {
        acc = alg_.mul(acc, unary());
      } else if (eat('/')) {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected an integer divisor");
        const Integer q{std::string(s_.substr(start, pos_ - start))};
        if (q == 0) throw ParseError("division by zero", base_ + start);
        acc = alg_.mul(acc, alg_.scalar(Rational(1, q)));
      } else {
        return acc;
      }
    }
  }

  T unary() {
    if (eat('-')) return alg_.neg(unary());
    return primary();
  }

  T primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      T v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return alg_.scalar(number());
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string_view sym = s_.substr(start, pos_ - start);
      auto v = alg_.symbol(sym);
      if (!v) throw ParseError("unknown generator '" + std::string(sym) + "' in " + alg_.name(), base_ + start);
      return *v;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Rational number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    try {
      return parse_rational(s_.substr(start, pos_ - start));
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what(), base_ + start);
    }
  }

  std::string_view s_;
  std::size_t base_;
  std::size_t pos_ = 0;
  const Alg& alg_;
};

struct CliffordAlg {
  using Value = CliffordElement;
  int n;

  std::string name() const { return "gamma:" + std::to_string(n); }
  Value scalar(const Rational& q) const { return CliffordElement::scalar(n, q); }
  std::optional<Value> symbol(std::string_view s) const {
    if (s.size() < 2 || s[0] != 'i') return std::nullopt;
    int h = 0;
    auto [ptr, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), h);
    if (ec != std::errc() || ptr != s.data() + s.size() || h < 1 || h > n - 1) return std::nullopt;
    return CliffordElement::generator(n, h);
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value neg(const Value& a) const { return -a; }
};

struct AmbientAlg {
  using Value = Ambient;
  const Order& ctx;

  std::string name() const { return ctx.name(); }
  Value scalar(const Rational& q) const { return Ambient{q, 0, 0, 0}; }
  std::optional<Value> symbol(std::string_view s) const {
    if (ctx.is_quaternion()) {
      if (s == "i") return Ambient{0, 1, 0, 0};
      if (s == "j") return Ambient{0, 0, 1, 0};
      if (s == "k") return Ambient{0, 0, 0, 1};
    } else if (ctx.rank() == 2 && s == "w") {
      return ctx.basis()[1];
    }
    return std::nullopt;
  }
  Value add(const Value& a, const Value& b) const {
    Ambient r;
    for (int t = 0; t < 4; ++t) r[t] = a[t] + b[t];
    return r;
  }
  Value mul(const Value& a, const Value& b) const { return ctx.ambient_mul(a, b); }
  Value neg(const Value& a) const {
    Ambient r;
    for (int t = 0; t < 4; ++t) r[t] = -a[t];
    return r;
  }
};

std::size_t skip_ws(std::string_view s, std::size_t p) {
  while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  return p;
}

// Position of the ')' matching the '(' at `open`.
std::size_t matching_paren(std::string_view s, std::size_t open) {
  int depth = 0;
  for (std::size_t p = open; p < s.size(); ++p) {
    if (s[p] == '(') ++depth;
    else if (s[p] == ')' && --depth == 0) return p;
  }
  throw ParseError("unbalanced '('", open);
}

// Top-level comma-separated pieces of s[from, to).
std::vector<std::pair<std::size_t, std::size_t>> split_args(std::string_view s, std::size_t from, std::size_t to) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  int depth = 0;
  std::size_t start = from;
  for (std::size_t p = from; p < to; ++p) {
    if (s[p] == '(') ++depth;
    else if (s[p] == ')') --depth;
    else if (s[p] == ',' && depth == 0) {
      out.emplace_back(start, p);
      start = p + 1;
    }
  }
  out.emplace_back(start, to);
  return out;
}

}  // namespace

CliffordElement parse_clifford(std::string_view text, int n, std::size_t base) {
  CliffordAlg alg{n};
  return ExprParser<CliffordAlg>(text, base, alg).parse();
}

OrderElement parse_order_element(std::string_view text, const OrderPtr& ctx, std::size_t base) {
  AmbientAlg alg{*ctx};
  const Ambient a = ExprParser<AmbientAlg>(text, base, alg).parse();
  try {
    return ctx->from_ambient(a);
  } catch (const ContextMismatch& e) {
    throw ParseError(std::string(e.what()), base);
  }
}

ElementParser<CliffordElement> clifford_parser(int n) {
  return [n](std::string_view s, std::size_t base) { return parse_clifford(s, n, base); };
}

ElementParser<OrderElement> order_parser(const OrderPtr& ctx) {
  return [ctx](std::string_view s, std::size_t base) { return parse_order_element(s, ctx, base); };
}

template <typename T>
GenWord<T> parse_word(std::string_view text, const T& one, const ElementParser<T>& element) {
  GenWord<T> w{one, {}};
  std::size_t p = skip_ws(text, 0);
  if (text.substr(p) == "1" || p == text.size()) return w;
  while (true) {
    p = skip_ws(text, p);
    if (p >= text.size()) break;
    if (text[p] == '*') {
      ++p;
      continue;
    }
    const std::size_t start = p;
    while (p < text.size() && std::isalpha(static_cast<unsigned char>(text[p]))) ++p;
    const std::string_view head = text.substr(start, p - start);
    if (p >= text.size() || text[p] != '(') throw ParseError("expected '(' after token name", p);
    const std::size_t close = matching_paren(text, p);
    const auto args = split_args(text, p + 1, close);
    auto arg = [&](std::size_t k) {
      return element(text.substr(args[k].first, args[k].second - args[k].first), args[k].first);
    };
    auto want = [&](std::size_t k) {
      if (args.size() != k) throw ParseError(std::string(head) + " takes " + std::to_string(k) + " argument(s)", start);
    };
    GenToken<T> tok = [&] {
      if (head == "E") {
        want(1);
        return GenToken<T>::elem(arg(0));
      }
      if (head == "Einv") {
        want(1);
        return GenToken<T>::elem(arg(0), -1);
      }
      if (head == "D") {
        want(1);
        return GenToken<T>::diag_d(arg(0));
      }
      if (head == "Diag") {
        want(2);
        return GenToken<T>::diag(arg(0), arg(1));
      }
      throw ParseError("unknown token '" + std::string(head) + "'", start);
    }();
    check_token(tok);
    p = close + 1;
    if (p < text.size() && text[p] == '^') {
      const std::size_t epos = p;
      ++p;
      int e = 0;
      auto [ptr, ec] = std::from_chars(text.data() + p, text.data() + text.size(), e);
      if (ec != std::errc() || e == 0) throw ParseError("expected a nonzero integer exponent", p);
      p = static_cast<std::size_t>(ptr - text.data());
      if (tok.kind != TokenKind::Elem) {
        if (e < 0) throw ParseError("only E tokens take negative exponents", epos);
        for (int k = 0; k < e; ++k) w.push(tok);
        continue;
      }
      tok.exponent *= e;
      if (tok.exponent != 1 && tok.exponent != -1) {
        const int reps = tok.exponent > 0 ? tok.exponent : -tok.exponent;
        tok.exponent = tok.exponent > 0 ? 1 : -1;
        for (int k = 0; k < reps; ++k) w.push(tok);
        continue;
      }
    }
    w.push(std::move(tok));
  }
  return w;
}

template GenWord<CliffordElement> parse_word(std::string_view, const CliffordElement&,
                                             const ElementParser<CliffordElement>&);
template GenWord<OrderElement> parse_word(std::string_view, const OrderElement&, const ElementParser<OrderElement>&);

template <typename T>
Matrix2<T> matrix_from_json(const json& j, const ElementParser<T>& element) {
  const json& rows = j.is_object() ? j.at("rows") : j;
  if (!rows.is_array() || rows.size() != 2 || !rows[0].is_array() || !rows[1].is_array() || rows[0].size() != 2 ||
      rows[1].size() != 2)
    throw ParseError("a matrix needs two rows of two entries", 0);
  auto entry = [&](const json& e) {
    if (e.is_string()) return element(e.get<std::string>(), 0);
    if (e.is_number_integer()) return element(std::to_string(e.get<long long>()), 0);
    throw ParseError("matrix entries must be strings or integers", 0);
  };
  return Matrix2<T>{entry(rows[0][0]), entry(rows[0][1]), entry(rows[1][0]), entry(rows[1][1])};
}

template Matrix2<CliffordElement> matrix_from_json(const json&, const ElementParser<CliffordElement>&);
template Matrix2<OrderElement> matrix_from_json(const json&, const ElementParser<OrderElement>&);

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
}

Presentation parse_presentation_any(std::string_view text) {
  const std::size_t p = skip_ws(text, 0);
  if (p < text.size() && text[p] == '{') {
    const json j = parse_json(text);
    std::string t = "gens:";
    for (const auto& g : j.at("generators")) t += " " + g.get<std::string>();
    t += "\n";
    for (const auto& r : j.value("relators", json::array())) t += "rel: " + r.get<std::string>() + "\n";
    Presentation pres = parse_presentation(t);
    pres.name = j.value("name", std::string("parsed"));
    return pres;
  }
  return parse_presentation(text);
}

json presentation_to_json(const Presentation& p) {
  json rels = json::array();
  for (const auto& r : p.relators) rels.push_back(to_string(r));
  return json{{"name", p.name}, {"generators", p.generators}, {"relators", rels}};
}

}  // namespace gecliff::tools
