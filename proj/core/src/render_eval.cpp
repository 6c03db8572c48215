// Copyright 2026 The estimand-algebra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "estimand/render_eval.hpp"

#include <bit>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "estimand/error.hpp"

namespace estimand {

namespace {

using Term = std::pair<std::uint32_t, Rational>;

bool is_tex(RenderFormat f) { return f != RenderFormat::unicode; }

std::string render_coefficient(const Rational& magnitude, RenderFormat format) {
  if (magnitude == 1) return "";
  if (!is_tex(format)) return to_string(magnitude) + "·";
  if (magnitude.get_den() == 1) return magnitude.get_num().get_str();
  return "\\tfrac{" + magnitude.get_num().get_str() + "}{" + magnitude.get_den().get_str() + "}";
}

std::string join_sign(bool first, bool negative, RenderFormat format) {
  if (is_tex(format)) return negative ? "-" : (first ? "" : "+");
  if (first) return negative ? "−" : "";
  return negative ? " − " : " + ";
}

std::string render_flat(const std::vector<Term>& terms, int k, RenderFormat format) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [bits, c] : terms) {
    Rational magnitude = abs(c);
    out += join_sign(first, sgn(c) < 0, format);
    out += render_coefficient(magnitude, format);
    out += render_state(SubsetMask(bits, k), format);
    first = false;
  }
  return out;
}

/// Per-T groups with their shared weight, or nullopt if the expression does
/// not have the grouped shape.
std::optional<std::vector<std::pair<Rational, std::vector<Term>>>> group_by_t(
    const EstimandExpression& expr) {
  const SubsetMask y = *expr.target();
  std::map<std::uint32_t, std::vector<Term>, CanonicalLess> groups;
  for (const auto& [bits, c] : expr.terms()) groups[bits & ~y.bits()].emplace_back(bits, c);
  std::vector<std::pair<Rational, std::vector<Term>>> out;
  const std::size_t group_size = std::size_t{1} << y.size();
  for (auto& [t, terms] : groups) {
    if (terms.size() != group_size) return std::nullopt;
    Rational w = abs(terms.front().second);
    for (const auto& [bits, c] : terms) {
      const bool odd = std::popcount(bits & y.bits()) & 1;
      Rational expected = odd ? Rational(-w) : w;
      if (c != expected) return std::nullopt;
    }
    for (auto& term : terms) term.second /= w;
    out.emplace_back(std::move(w), std::move(terms));
  }
  return out;
}

std::string render_latex_or_unicode(const EstimandExpression& expr, RenderFormat format) {
  std::vector<Term> flat(expr.terms().begin(), expr.terms().end());
  if (!expr.target() || flat.empty()) return render_flat(flat, expr.k(), format);
  auto groups = group_by_t(expr);
  if (!groups) return render_flat(flat, expr.k(), format);
  if (groups->size() == 1 && groups->front().first == 1) {
    return render_flat(groups->front().second, expr.k(), format);
  }
  std::string out;
  bool first = true;
  for (const auto& [w, terms] : *groups) {
    out += join_sign(first, false, format);
    out += render_coefficient(w, format);
    out += "(" + render_flat(terms, expr.k(), format) + ")";
    first = false;
  }
  return out;
}

std::string product(const std::vector<std::string>& factors, RenderFormat format) {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i && !is_tex(format)) out += "·";
    out += factors[i];
  }
  return out;
}

}  // namespace

RenderFormat render_format_from_string(std::string_view text) {
  if (text == "unicode") return RenderFormat::unicode;
  if (text == "latex") return RenderFormat::latex;
  if (text == "markdown") return RenderFormat::markdown;
  throw ValidationError("unknown render format '" + std::string(text) + "'");
}

std::string render_state(SubsetMask z, RenderFormat format) {
  std::string out = is_tex(format) ? "\\mu(" : "μ(";
  const std::string state = z.state_string();
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (i) out += ',';
    out += state[i];
  }
  return out + ")";
}

std::string render_expression(const EstimandExpression& expr, RenderFormat format) {
  const std::string body = render_latex_or_unicode(expr, format);
  return format == RenderFormat::markdown ? "$" + body + "$" : body;
}

std::string render_expression(const RatioEstimand& expr, RenderFormat format) {
  const bool odds = expr.link() == RatioLink::odds_ratio;
  std::vector<std::string> num, den, num_tail, den_tail;
  for (const auto& [bits, e] : expr.exponents()) {
    const std::string mu = render_state(SubsetMask(bits, expr.k()), format);
    const std::string complement = is_tex(format) ? "(1-" + mu + ")" : "(1 − " + mu + ")";
    if (e > 0) {
      num.push_back(mu);
      if (odds) den_tail.push_back(complement);
    } else {
      den.push_back(mu);
      if (odds) num_tail.push_back(complement);
    }
  }
  num.insert(num.end(), num_tail.begin(), num_tail.end());
  den.insert(den.end(), den_tail.begin(), den_tail.end());
  const std::string n = product(num, format);
  const std::string d = product(den, format);
  std::string body;
  if (is_tex(format)) {
    body = "\\frac{" + n + "}{" + d + "}";
  } else {
    body = (num.size() > 1 ? "(" + n + ")" : n) + "/" + (den.size() > 1 ? "(" + d + ")" : d);
  }
  return format == RenderFormat::markdown ? "$" + body + "$" : body;
}

Rational evaluate(const EstimandExpression& expr, const MuTable& mu) {
  if (mu.k() != expr.k()) {
    throw DimensionError("mu table is for K = " + std::to_string(mu.k()) +
                         ", expression for K = " + std::to_string(expr.k()));
  }
  Rational total = 0;
  for (const auto& [bits, c] : expr.terms()) total += c * mu.at(SubsetMask(bits, expr.k()));
  return total;
}

Rational evaluate(const RatioEstimand& expr, const MuTable& mu) {
  if (mu.k() != expr.k()) {
    throw DimensionError("mu table is for K = " + std::to_string(mu.k()) +
                         ", estimand for K = " + std::to_string(expr.k()));
  }
  Rational total = 1;
  for (const auto& [bits, e] : expr.exponents()) {
    const SubsetMask z(bits, expr.k());
    const Rational g = link_value(expr.link(), mu.at(z), z.state_string());
    if (e > 0) {
      total *= g;
    } else {
      total /= g;
    }
  }
  return total;
}

long double evaluate_real(const EstimandExpression& expr, std::span<const long double> f) {
  if (f.size() != (std::size_t{1} << expr.k())) throw DimensionError("f needs 2^K entries");
  long double total = 0;
  for (const auto& [bits, c] : expr.terms()) total += static_cast<long double>(c.get_d()) * f[bits];
  return total;
}

}  // namespace estimand
