#include "core/inference.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

namespace ftopa {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

// canonical key for one of the eight slots, e.g. "smoke|~fire" or
// "alarm|fire&~tampering" with the fire literal always first
std::string canonical_key(std::string_view inside, int line) {
  const std::string compact = strip_spaces(inside);
  const std::size_t bar = compact.find('|');
  const std::string event = bar == std::string::npos ? compact : compact.substr(0, bar);

  if (event != "fire" && event != "tampering" && event != "smoke" && event != "alarm") {
    throw ParseError("unknown event '" + event + "'", line);
  }
  if (bar == std::string::npos) {
    if (event != "fire" && event != "tampering") {
      throw ParseError("'" + event + "' needs a condition", line);
    }
    return event;
  }

  std::vector<std::string> conjuncts;
  std::string cond = compact.substr(bar + 1);
  std::size_t pos = 0;
  while (pos <= cond.size()) {
    const std::size_t amp = cond.find('&', pos);
    conjuncts.push_back(cond.substr(pos, amp == std::string::npos ? amp : amp - pos));
    if (amp == std::string::npos) break;
    pos = amp + 1;
  }

  std::optional<std::string> fire_lit;
  std::optional<std::string> tamper_lit;
  for (const std::string& lit : conjuncts) {
    std::string base = lit;
    if (!base.empty() && base[0] == '~') base = base.substr(1);
    if (base == "fire" && !fire_lit) {
      fire_lit = lit;
    } else if (base == "tampering" && !tamper_lit) {
      tamper_lit = lit;
    } else {
      throw ParseError("bad condition literal '" + lit + "'", line);
    }
  }

  if (event == "smoke") {
    if (!fire_lit || tamper_lit) {
      throw ParseError("smoke entries condition on fire only", line);
    }
    return "smoke|" + *fire_lit;
  }
  if (event == "alarm") {
    if (!fire_lit || !tamper_lit) {
      throw ParseError("alarm entries condition on both fire and tampering", line);
    }
    return "alarm|" + *fire_lit + "&" + *tamper_lit;
  }
  throw ParseError("'" + event + "' takes no condition", line);
}

}  // namespace

KnowledgeBase parse_knowledge_base(std::string_view text) {
  std::map<std::string, KbEntry*> slots;
  KnowledgeBase kb;
  slots["fire"] = &kb.fire;
  slots["tampering"] = &kb.tampering;
  slots["smoke|fire"] = &kb.smoke_given_fire;
  slots["smoke|~fire"] = &kb.smoke_given_not_fire;
  slots["alarm|fire&tampering"] = &kb.alarm_given_fire_tampering;
  slots["alarm|~fire&tampering"] = &kb.alarm_given_not_fire_tampering;
  slots["alarm|fire&~tampering"] = &kb.alarm_given_fire_not_tampering;
  slots["alarm|~fire&~tampering"] = &kb.alarm_given_not_fire_not_tampering;
  std::map<std::string, bool> seen;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    const std::size_t open = line.find("p(");
    const std::size_t close = line.find(')');
    if (open != 0 || close == std::string_view::npos) {
      throw ParseError("expected 'p(<event>|<condition>) = e<k> , <real>'", line_no);
    }
    const std::string key = canonical_key(line.substr(2, close - 2), line_no);
    if (!slots.count(key)) {
      throw ParseError("entry '" + key + "' is not part of the smoke-alarm network", line_no);
    }
    if (seen[key]) throw ParseError("duplicate entry for '" + key + "'", line_no);

    std::string_view rest = trim(line.substr(close + 1));
    if (rest.empty() || rest.front() != '=') {
      throw ParseError("expected '=' after the probability", line_no);
    }
    rest = trim(rest.substr(1));
    const std::size_t comma = rest.find(',');
    if (comma == std::string_view::npos) {
      throw ParseError("expected 'e<k> , <real>'", line_no);
    }

    KbEntry entry;
    try {
      entry.symbol_index = parse_pvalue(trim(rest.substr(0, comma))).index;
    } catch (const std::invalid_argument& error) {
      throw ParseError(error.what(), line_no);
    }
    if (entry.symbol_index < 1) {
      throw ParseError("probability index must be at least 1", line_no);
    }

    const std::string real_text{trim(rest.substr(comma + 1))};
    std::size_t consumed = 0;
    try {
      entry.real_value = std::stod(real_text, &consumed);
    } catch (const std::exception&) {
      throw ParseError("bad numeric value '" + real_text + "'", line_no);
    }
    if (consumed != real_text.size()) {
      throw ParseError("trailing characters after numeric value '" + real_text + "'", line_no);
    }
    if (entry.real_value < 0.0 || entry.real_value > 1.0) {
      throw ParseError("numeric value " + real_text + " outside [0, 1]", line_no);
    }

    *slots[key] = entry;
    seen[key] = true;
  }

  std::string missing;
  for (const auto& [key, unused] : slots) {
    if (!seen[key]) missing += missing.empty() ? key : ", " + key;
  }
  if (!missing.empty()) {
    throw ParseError("missing entries: " + missing);
  }
  return kb;
}

const std::string& default_knowledge_base_text() {
  static const std::string text =
      "p(fire) = e6 , 0.01\n"
      "p(tampering) = e6 , 0.02\n"
      "p(smoke|fire) = e2 , 0.9\n"
      "p(smoke|~fire) = e6 , 0.01\n"
      "p(alarm|fire&tampering) = e4 , 0.5\n"
      "p(alarm|~fire&tampering) = e2 , 0.99\n"
      "p(alarm|fire&~tampering) = e2 , 0.85\n"
      "p(alarm|~fire&~tampering) = e7 , 0.0001\n";
  return text;
}

KnowledgeBase default_knowledge_base() { return parse_knowledge_base(default_knowledge_base_text()); }

}  // namespace ftopa
