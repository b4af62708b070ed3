#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "seshadri/envelope.hpp"
#include "seshadri/lattice.hpp"

namespace seshadri {

// A matrix whose entries are integer-linear expressions in single-letter
// variables, e.g. [[0,n],[n,0]] or [[2a,b],[b,0]].
class FamilyTemplate {
 public:
  // Throws BadFamily.
  static FamilyTemplate parse(std::string_view text);

  const std::vector<char>& variables() const { return vars_; }
  // Throws BadFamily when a variable is unbound.
  IntMatrix instantiate(const std::map<char, Int>& values) const;
  const std::string& text() const { return text_; }

 private:
  struct Term {
    Int coeff;
    char var;  // 0 for the constant term
  };
  std::string text_;
  std::vector<std::vector<std::vector<Term>>> entries_;
  std::vector<char> vars_;
};

struct VariableRange {
  char var;
  Int lo;
  Int hi;
};

// "n=1..6" or "n=4". Throws BadFamily.
VariableRange parse_range(std::string_view text);

struct SurveyRow {
  std::map<char, Int> values;
  IntMatrix matrix;
  bool valid = true;      // false when the instance is not a valid input
  std::string error;      // why, when !valid
  bool piecewise_linear = false;
  std::vector<GapInterval> gaps;
  std::size_t segment_count = 0;
};

// Every assignment in the product of the ranges, last variable fastest. Rows
// are computed in parallel and returned in that order. Throws BadFamily when
// a variable of the template has no range.
std::vector<SurveyRow> run_survey(const FamilyTemplate& family, const std::vector<VariableRange>& ranges,
                                  const Rational& delta, int grid = 16);

}  // namespace seshadri
