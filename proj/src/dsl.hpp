#pragma once

#include <string>
#include <string_view>

#include "coxeter.hpp"
#include "errors.hpp"

namespace coxforge {

// Parse failure with a 1-based source position.
class parse_error : public input_error {
 public:
  parse_error(int line, int col, const std::string& what)
      : input_error("line " + std::to_string(line) + ", col " +
                    std::to_string(col) + ": " + what),
        line(line),
        col(col) {}
  int line, col;
};

// Two input forms, line oriented; ';' splits a line, '#' starts a comment.
//
//   matrix N          followed by the strict upper triangle, row by row;
//                     entries are integers >= 2 or the token `inf`
//
//   vertices a b c    named generators, then one line per labelled edge:
//   edge a b 3        label is an integer >= 2 or `inf`; unmentioned pairs
//                     default to 2; repeating a pair is an error
CoxeterMatrix parse_dsl(std::string_view text);

// Diagram-form rendering; parse_dsl(render_dsl(m)) == m.
std::string render_dsl(const CoxeterMatrix& m);

}  // namespace coxforge
