#include "dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <vector>

namespace coxforge {

namespace {

struct Token {
  std::string text;
  int line, col;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> toks;
  int line = 1, col = 1;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      toks.push_back({"\n", line, col});
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ';') {  // inline statement separator, equivalent to a newline
      toks.push_back({"\n", line, col});
      ++col;
      ++i;
      continue;
    }
    if (c == '#') {  // comment to end of line
      while (i < text.size() && text[i] != '\n') {
        ++i;
        ++col;
      }
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++col;
      continue;
    }
    int start_col = col;
    std::string word;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
           text[i] != ';' && text[i] != '#') {
      word += text[i];
      ++i;
      ++col;
    }
    toks.push_back({std::move(word), line, start_col});
  }
  toks.push_back({"\n", line, col});
  return toks;
}

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

int parse_label(const Token& t) {
  if (t.text == "inf") return kInfinity;
  for (char c : t.text)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw parse_error(t.line, t.col,
                        "expected a label (integer or 'inf'), got '" + t.text + "'");
  if (t.text.size() > 9)
    throw parse_error(t.line, t.col, "label '" + t.text + "' is too large");
  long v = std::stol(t.text);
  if (v < 2) throw parse_error(t.line, t.col, "label must be at least 2");
  return static_cast<int>(v);
}

CoxeterMatrix parse_matrix_form(const std::vector<Token>& toks, size_t i) {
  const Token& header = toks[i - 1];
  if (i >= toks.size() || toks[i].text == "\n")
    throw parse_error(header.line, header.col, "matrix: missing rank");
  const Token& rank_tok = toks[i];
  long n = 0;
  for (char c : rank_tok.text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw parse_error(rank_tok.line, rank_tok.col,
                        "matrix: rank must be a positive integer");
    n = n * 10 + (c - '0');
    if (n > 64)
      throw parse_error(rank_tok.line, rank_tok.col, "matrix: rank is too large");
  }
  if (n < 1)
    throw parse_error(rank_tok.line, rank_tok.col, "matrix: rank must be positive");
  ++i;
  CoxeterMatrix m = CoxeterMatrix::commuting(static_cast<int>(n));
  for (int r = 0; r < n; ++r)
    for (int c = r + 1; c < n; ++c) {
      while (i < toks.size() && toks[i].text == "\n") ++i;
      if (i >= toks.size())
        throw parse_error(toks.back().line, toks.back().col,
                          "matrix: missing upper-triangle entries");
      m.set(r, c, parse_label(toks[i]));
      ++i;
    }
  while (i < toks.size() && toks[i].text == "\n") ++i;
  if (i < toks.size())
    throw parse_error(toks[i].line, toks[i].col,
                      "matrix: unexpected trailing input '" + toks[i].text + "'");
  return m;
}

CoxeterMatrix parse_diagram_form(const std::vector<Token>& toks, size_t i) {
  std::vector<std::string> names;
  std::map<std::string, int> index;
  while (i < toks.size() && toks[i].text != "\n") {
    const Token& t = toks[i];
    if (!is_identifier(t.text))
      throw parse_error(t.line, t.col, "'" + t.text + "' is not a valid vertex name");
    if (index.count(t.text))
      throw parse_error(t.line, t.col, "duplicate vertex name '" + t.text + "'");
    index[t.text] = static_cast<int>(names.size());
    names.push_back(t.text);
    ++i;
  }
  if (names.empty())
    throw parse_error(toks[i].line, toks[i].col, "vertices: empty vertex list");
  CoxeterMatrix m = CoxeterMatrix::commuting(static_cast<int>(names.size()));
  m.names = names;
  std::map<std::pair<int, int>, bool> seen;
  while (i < toks.size()) {
    if (toks[i].text == "\n") {
      ++i;
      continue;
    }
    const Token& kw = toks[i];
    if (kw.text != "edge")
      throw parse_error(kw.line, kw.col, "expected 'edge', got '" + kw.text + "'");
    if (i + 3 >= toks.size() || toks[i + 1].text == "\n" || toks[i + 2].text == "\n" ||
        toks[i + 3].text == "\n")
      throw parse_error(kw.line, kw.col, "edge: expected 'edge A B label'");
    const Token& ta = toks[i + 1];
    const Token& tb = toks[i + 2];
    auto ia = index.find(ta.text);
    if (ia == index.end())
      throw parse_error(ta.line, ta.col, "unknown vertex name '" + ta.text + "'");
    auto ib = index.find(tb.text);
    if (ib == index.end())
      throw parse_error(tb.line, tb.col, "unknown vertex name '" + tb.text + "'");
    if (ia->second == ib->second)
      throw parse_error(tb.line, tb.col, "self edge on vertex '" + ta.text + "'");
    int label = parse_label(toks[i + 3]);
    std::pair<int, int> key = std::minmax(ia->second, ib->second);
    if (seen[key])
      throw parse_error(kw.line, kw.col,
                        "duplicate edge for pair (" + ta.text + "," + tb.text + ")");
    seen[key] = true;
    m.set(ia->second, ib->second, label);
    i += 4;
    if (i < toks.size() && toks[i].text != "\n")
      throw parse_error(toks[i].line, toks[i].col,
                        "edge: unexpected trailing token '" + toks[i].text + "'");
  }
  return m;
}

}  // namespace

CoxeterMatrix parse_dsl(std::string_view text) {
  std::vector<Token> toks = tokenize(text);
  size_t i = 0;
  while (i < toks.size() && toks[i].text == "\n") ++i;
  if (i >= toks.size()) throw parse_error(1, 1, "empty input");
  const Token& head = toks[i];
  ++i;
  if (head.text == "matrix") return parse_matrix_form(toks, i);
  if (head.text == "vertices") return parse_diagram_form(toks, i);
  throw parse_error(head.line, head.col,
                    "expected 'matrix' or 'vertices', got '" + head.text + "'");
}

std::string render_dsl(const CoxeterMatrix& m) {
  std::ostringstream os;
  os << "vertices";
  for (const auto& name : m.names) os << ' ' << name;
  os << '\n';
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j) {
      int lab = m.label(i, j);
      if (lab < 3) continue;
      os << "edge " << m.names[i] << ' ' << m.names[j] << ' ';
      if (lab == kInfinity)
        os << "inf";
      else
        os << lab;
      os << '\n';
    }
  return os.str();
}

}  // namespace coxforge
