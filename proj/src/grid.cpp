#include "agpoly/grid.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <optional>
#include <string>

#include "agpoly/laurent_poly.hpp"

namespace agpoly {

namespace {

constexpr std::array<char, 4> kVariables{'N', 'k', 'l', 'r'};

struct Bound {
  std::optional<char> variable;
  int offset = 0;
};

enum class Filter { none, odd, even };

struct Range {
  std::vector<Bound> list;  // explicit values
  std::optional<std::pair<Bound, Bound>> interval;
  Filter filter = Filter::none;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw UsageError("bad integer '" + std::string(s) + "' in grid field '" + std::string(context) + "'");
  }
  return value;
}

Bound parse_bound(std::string_view s, std::string_view context) {
  s = trim(s);
  if (s.empty()) throw UsageError("empty bound in grid field '" + std::string(context) + "'");
  if (std::find(kVariables.begin(), kVariables.end(), s.front()) == kVariables.end()) {
    return Bound{std::nullopt, parse_int(s, context)};
  }
  Bound b{s.front(), 0};
  std::string_view rest = s.substr(1);
  if (rest.empty()) return b;
  if (rest.front() == '+') rest.remove_prefix(1);
  b.offset = parse_int(rest, context);
  return b;
}

Range parse_range(std::string_view s, std::string_view context) {
  Range range;
  if (auto colon = s.rfind(':'); colon != std::string_view::npos) {
    const auto filter = trim(s.substr(colon + 1));
    if (filter == "odd") {
      range.filter = Filter::odd;
    } else if (filter == "even") {
      range.filter = Filter::even;
    } else {
      throw UsageError("unknown filter '" + std::string(filter) + "' in grid field '" + std::string(context) + "'");
    }
    s = s.substr(0, colon);
  }
  s = trim(s);
  if (!s.empty() && s.front() == '{') {
    if (s.back() != '}') throw UsageError("unterminated list in grid field '" + std::string(context) + "'");
    std::string_view body = s.substr(1, s.size() - 2);
    while (!body.empty()) {
      const auto comma = body.find(',');
      range.list.push_back(parse_bound(body.substr(0, comma), context));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
    if (range.list.empty()) throw UsageError("empty list in grid field '" + std::string(context) + "'");
    return range;
  }
  if (const auto dots = s.find(".."); dots != std::string_view::npos) {
    range.interval = std::pair{parse_bound(s.substr(0, dots), context), parse_bound(s.substr(dots + 2), context)};
  } else {
    range.list.push_back(parse_bound(s, context));
  }
  return range;
}

std::vector<std::string_view> split_top_level(std::string_view spec) {
  std::vector<std::string_view> fields;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (spec[i] == '{') ++depth;
    if (spec[i] == '}') --depth;
    if (spec[i] == ',' && depth == 0) {
      fields.push_back(spec.substr(start, i - start));
      start = i + 1;
    }
  }
  fields.push_back(spec.substr(start));
  return fields;
}

int index_of(char var) {
  return static_cast<int>(std::find(kVariables.begin(), kVariables.end(), var) - kVariables.begin());
}

int evaluate(const Bound& b, const std::array<int, 4>& values, int self) {
  if (!b.variable) return b.offset;
  const int idx = index_of(*b.variable);
  if (idx >= self) {
    throw UsageError(std::string("grid bound refers to '") + *b.variable + "' before it is defined");
  }
  return values[idx] + b.offset;
}

std::vector<int> expand(const Range& range, const std::array<int, 4>& values, int self) {
  std::vector<int> out;
  if (range.interval) {
    const int lo = evaluate(range.interval->first, values, self);
    const int hi = evaluate(range.interval->second, values, self);
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  } else {
    for (const auto& b : range.list) out.push_back(evaluate(b, values, self));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  std::erase_if(out, [&](int v) {
    return (range.filter == Filter::odd && v % 2 == 0) || (range.filter == Filter::even && v % 2 != 0);
  });
  return out;
}

void enumerate(const std::array<Range, 4>& ranges, std::array<int, 4>& values, int idx, std::vector<Params>& out) {
  if (idx == 4) {
    out.push_back(Params{values[0], values[1], values[2], values[3]});
    return;
  }
  for (int v : expand(ranges[idx], values, idx)) {
    values[idx] = v;
    enumerate(ranges, values, idx + 1, out);
  }
}

}  // namespace

std::vector<Params> resolve_grid(std::string_view spec) {
  std::map<char, Range> by_var;
  for (auto field : split_top_level(spec)) {
    field = trim(field);
    if (field.empty()) continue;
    const auto eq = field.find('=');
    if (eq == std::string_view::npos) throw UsageError("grid field '" + std::string(field) + "' lacks '='");
    const auto name = trim(field.substr(0, eq));
    if (name.size() != 1 || index_of(name.front()) == 4) {
      throw UsageError("unknown grid variable '" + std::string(name) + "'");
    }
    if (by_var.count(name.front())) throw UsageError("grid variable '" + std::string(name) + "' given twice");
    by_var.emplace(name.front(), parse_range(field.substr(eq + 1), field));
  }
  for (char required : {'N', 'k'}) {
    if (!by_var.count(required)) throw UsageError(std::string("grid must define ") + required);
  }
  for (char side : {'l', 'r'}) {
    if (!by_var.count(side)) by_var.emplace(side, parse_range("k", "default"));
  }
  std::array<Range, 4> ranges{by_var.at('N'), by_var.at('k'), by_var.at('l'), by_var.at('r')};
  std::array<int, 4> values{};
  std::vector<Params> out;
  enumerate(ranges, values, 0, out);
  return out;
}

}  // namespace agpoly
