#include "simperm/format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "simperm/error.hpp"

namespace simperm {
namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (const char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> values;
  if (text.empty()) throw Error(ErrorCode::kParse, "empty list");
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view item = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw Error(ErrorCode::kParse, "not an integer: '" + std::string(item) + "'");
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return values;
}

std::vector<std::vector<int>> split_cycles(std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != '(') throw Error(ErrorCode::kParse, "expected '(' in cycle notation");
    const std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) throw Error(ErrorCode::kParse, "unbalanced '('");
    cycles.push_back(parse_int_list(text.substr(pos + 1, close - pos - 1)));
    pos = close + 1;
  }
  if (cycles.empty()) throw Error(ErrorCode::kParse, "empty cycle notation");
  return cycles;
}

}  // namespace

Permutation parse_permutation(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw Error(ErrorCode::kParse, "empty permutation");
  if (s.front() != '(') return Permutation::from_images(parse_int_list(s));

  std::vector<CycleForm> cycles;
  int degree = 0;
  for (auto& raw : split_cycles(s)) {
    try {
      cycles.push_back(CycleForm::canonical(std::move(raw)));
    } catch (const Error& e) {
      throw Error(ErrorCode::kParse, e.what());
    }
    degree = std::max(degree, cycles.back().max());
  }
  try {
    return from_cycles(cycles, degree);
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

CycleForm parse_cycle(std::string_view text) {
  const std::string s = strip_spaces(text);
  auto cycles = split_cycles(s);
  if (cycles.size() != 1) throw Error(ErrorCode::kParse, "expected a single cycle");
  try {
    return CycleForm::canonical(std::move(cycles.front()));
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

std::string to_string(const Permutation& p) {
  std::string out;
  for (const int v : p.images()) {
    if (!out.empty()) out.push_back(',');
    out += std::to_string(v);
  }
  return out;
}

std::string to_string(const CycleForm& c) {
  std::string out = "(";
  for (const int v : c.elements()) {
    if (out.size() > 1) out.push_back(',');
    out += std::to_string(v);
  }
  out.push_back(')');
  return out;
}

std::string to_cycle_string(const Permutation& p) {
  std::string out;
  for (const CycleForm& c : cycle_decomposition(p)) out += to_string(c);
  return out;
}

}  // namespace simperm
