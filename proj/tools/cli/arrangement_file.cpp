#include "cli/arrangement_file.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "clarr/error.hpp"

namespace clarr::cli {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    if (i > start) {
      out.push_back({line.substr(start, i - start), start + 1});
    }
  }
  return out;
}

Integer parse_integer(const Token& tok, std::size_t line_no) {
  std::string_view s = tok.text;
  std::size_t pos = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    pos = 1;
  }
  if (pos == s.size()) {
    throw ParseError(line_no, tok.column, "expected an integer, got '" + std::string(s) + "'");
  }
  for (std::size_t i = pos; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw ParseError(line_no, tok.column + i,
                       "expected an integer, got '" + std::string(s) + "'");
    }
  }
  return Integer(std::string(s[0] == '+' ? s.substr(1) : s), 10);
}

}  // namespace

Arrangement parse_arrangement(std::string_view text, ArrangementMode mode) {
  std::string label;
  bool have_label = false;
  std::vector<Component> components;
  std::vector<std::size_t> record_lines;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens = tokenize(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const auto& head = tokens.front();
    if (head.text == "arrangement") {
      if (have_label) {
        throw ParseError(line_no, head.column, "duplicate 'arrangement' header");
      }
      if (!components.empty()) {
        throw ParseError(line_no, head.column, "'arrangement' header must precede components");
      }
      if (tokens.size() < 2) {
        throw ParseError(line_no, head.column + head.text.size(), "missing arrangement label");
      }
      const std::size_t start = tokens[1].column - 1;
      const std::size_t stop = tokens.back().column - 1 + tokens.back().text.size();
      label = std::string(line.substr(start, stop - start));
      have_label = true;
    } else if (head.text == "line" || head.text == "conic") {
      const bool is_line = head.text == "line";
      if (!have_label) {
        throw ParseError(line_no, head.column, "expected an 'arrangement <label>' header first");
      }
      const std::size_t want = is_line ? 3 : 6;
      if (tokens.size() != want + 1) {
        const std::size_t col = tokens.size() > want + 1 ? tokens[want + 1].column
                                                         : line.size() + 1;
        throw ParseError(line_no, col,
                         std::string(head.text) + " needs exactly " + std::to_string(want) +
                             " integer coefficients");
      }
      std::vector<Integer> c;
      for (std::size_t i = 1; i <= want; ++i) {
        c.push_back(parse_integer(tokens[i], line_no));
      }
      Component comp = [&]() -> Component {
        if (is_line) {
          try {
            return LineForm(c[0], c[1], c[2]);
          } catch (const Error&) {
            throw ParseError(line_no, head.column, "line with all coefficients zero");
          }
        }
        return ConicForm(c[0], c[1], c[2], c[3], c[4], c[5]);
      }();
      if (const auto* conic = std::get_if<ConicForm>(&comp); conic && !conic->is_smooth()) {
        throw Error(ErrorCode::kDegenerateConic, "line " + std::to_string(line_no) + ": '" +
                                                     component_record(comp) +
                                                     "' is not a smooth conic");
      }
      for (std::size_t j = 0; j < components.size(); ++j) {
        if (components[j] == comp) {
          throw Error(ErrorCode::kDuplicateComponent,
                      "line " + std::to_string(line_no) + ": '" + component_record(comp) +
                          "' repeats the component on line " + std::to_string(record_lines[j]));
        }
      }
      components.push_back(std::move(comp));
      record_lines.push_back(line_no);
    } else {
      throw ParseError(line_no, head.column,
                       "unknown record '" + std::string(head.text) +
                           "' (expected arrangement, line or conic)");
    }
    if (end == text.size()) {
      break;
    }
  }
  return validate(Arrangement(label, std::move(components)), mode);
}

Arrangement load_arrangement(const std::string& path, ArrangementMode mode) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_arrangement(buf.str(), mode);
}

std::string serialize_arrangement(const Arrangement& arrangement) {
  std::string out = "arrangement " + arrangement.label() + "\n";
  for (const auto& c : arrangement.components()) {
    out += component_record(c) + "\n";
  }
  return out;
}

}  // namespace clarr::cli
