#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "gecliff/matrix2.hpp"
#include "gecliff/order.hpp"
#include "gecliff/presentation.hpp"
#include "gecliff/words.hpp"

namespace gecliff::tools {

using nlohmann::json;

// "gamma:<n>" or an order name understood by Order::by_name.
struct Context {
  int gamma_n = 0;
  OrderPtr order;

  bool is_gamma() const { return gamma_n > 0; }
  std::string name() const;
};

Context parse_context(std::string_view text);

// Sums of products of rationals, generator symbols and parenthesized
// subexpressions. Gamma_n(Z) uses i1 .. i<n-1>; quadratic orders use w for the
// second basis element; quaternion orders use i, j, k of the ambient algebra.
// ParseError offsets are relative to `text` plus `base`.
CliffordElement parse_clifford(std::string_view text, int n, std::size_t base = 0);
OrderElement parse_order_element(std::string_view text, const OrderPtr& ctx, std::size_t base = 0);

template <typename T>
using ElementParser = std::function<T(std::string_view, std::size_t)>;

ElementParser<CliffordElement> clifford_parser(int n);
ElementParser<OrderElement> order_parser(const OrderPtr& ctx);

// Tokens separated by spaces or '*': E(x), E(x)^k, Einv(x), D(mu), Diag(mu, nu).
// "1" or an empty string is the empty word.
template <typename T>
GenWord<T> parse_word(std::string_view text, const T& one, const ElementParser<T>& element);

extern template GenWord<CliffordElement> parse_word(std::string_view, const CliffordElement&,
                                                    const ElementParser<CliffordElement>&);
extern template GenWord<OrderElement> parse_word(std::string_view, const OrderElement&,
                                                 const ElementParser<OrderElement>&);

// {"rows": [[a, b], [c, d]]} or the bare rows array. Entries are strings or integers.
template <typename T>
Matrix2<T> matrix_from_json(const json& j, const ElementParser<T>& element);

extern template Matrix2<CliffordElement> matrix_from_json(const json&, const ElementParser<CliffordElement>&);
extern template Matrix2<OrderElement> matrix_from_json(const json&, const ElementParser<OrderElement>&);

template <typename T>
json matrix_to_json(const Matrix2<T>& m) {
  return json::array({json::array({to_string(m.a), to_string(m.b)}), json::array({to_string(m.c), to_string(m.d)})});
}

template <typename T>
json word_to_json(const GenWord<T>& w) {
  json toks = json::array();
  for (const auto& t : w.tokens) toks.push_back(to_string(t));
  return toks;
}

// Text ("gens: ..." / "rel: ...") or the JSON mirror
// {"generators": [...], "relators": ["a a j^-1", ...]}.
Presentation parse_presentation_any(std::string_view text);
json presentation_to_json(const Presentation& p);

json parse_json(std::string_view text);  // nlohmann errors become ParseError

}  // namespace gecliff::tools
