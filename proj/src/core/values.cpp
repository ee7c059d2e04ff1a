#include "core/values.hpp"

#include <cctype>

namespace ftopa {

namespace {

void skip_spaces(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

PValue parse_pvalue_at(std::string_view text, std::size_t& pos) {
  skip_spaces(text, pos);
  if (pos >= text.size() || text[pos] != 'e') {
    throw std::invalid_argument("expected probability literal like 'e3' in '" +
                                std::string(text) + "'");
  }
  ++pos;
  std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start) {
    throw std::invalid_argument("expected digits after 'e' in '" + std::string(text) + "'");
  }
  try {
    return PValue{std::stoi(std::string(text.substr(start, pos - start)))};
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("index too large in '" + std::string(text) + "'");
  }
}

}  // namespace

PValue parse_pvalue(std::string_view text) {
  std::size_t pos = 0;
  PValue v = parse_pvalue_at(text, pos);
  skip_spaces(text, pos);
  if (pos != text.size()) {
    throw std::invalid_argument("trailing characters in probability literal '" +
                                std::string(text) + "'");
  }
  return v;
}

PRange parse_belief(std::string_view text) {
  std::size_t pos = 0;
  skip_spaces(text, pos);
  if (pos < text.size() && text[pos] == '[') {
    ++pos;
    PValue lo = parse_pvalue_at(text, pos);
    skip_spaces(text, pos);
    if (pos >= text.size() || text[pos] != ',') {
      throw std::invalid_argument("expected ',' in range literal '" + std::string(text) + "'");
    }
    ++pos;
    PValue up = parse_pvalue_at(text, pos);
    skip_spaces(text, pos);
    if (pos >= text.size() || text[pos] != ']') {
      throw std::invalid_argument("expected ']' in range literal '" + std::string(text) + "'");
    }
    ++pos;
    skip_spaces(text, pos);
    if (pos != text.size()) {
      throw std::invalid_argument("trailing characters in range literal '" +
                                  std::string(text) + "'");
    }
    return PRange(lo, up);
  }
  return PRange(parse_pvalue(text));
}

}  // namespace ftopa
