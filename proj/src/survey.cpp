#include "seshadri/survey.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "seshadri/errors.hpp"
#include "seshadri/parallel.hpp"

namespace seshadri {

namespace {

[[noreturn]] void bad_family(const std::string& what) { throw Error(ErrorCode::BadFamily, what); }

class Reader {
 public:
  explicit Reader(std::string_view s) : s_(s) {}

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) bad_family(std::string("expected '") + c + "' at offset " + std::to_string(i_));
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool done() {
    skip();
    return i_ == s_.size();
  }
  std::optional<Int> number() {
    skip();
    std::size_t j = i_;
    Int v = 0;
    while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) {
      if (v > (Int(1) << 40)) bad_family("coefficient too large");
      v = v * 10 + (s_[j] - '0');
      ++j;
    }
    if (j == i_) return std::nullopt;
    i_ = j;
    return v;
  }
  char letter() {
    skip();
    if (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) return s_[i_++];
    return '\0';
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

FamilyTemplate FamilyTemplate::parse(std::string_view text) {
  FamilyTemplate out;
  out.text_ = std::string(text);
  Reader r(text);
  r.expect('[');
  do {
    r.expect('[');
    std::vector<std::vector<Term>> row;
    do {
      std::vector<Term> expr;
      bool first = true;
      while (true) {
        Int sign = 1;
        if (r.eat('-')) {
          sign = -1;
        } else if (!first && !r.eat('+')) {
          break;
        } else if (first) {
          r.eat('+');
        }
        const auto n = r.number();
        r.eat('*');
        const char v = r.letter();
        if (!n && !v) bad_family("expected a term in '" + out.text_ + "'");
        expr.push_back({sign * n.value_or(1), v});
        if (v && std::find(out.vars_.begin(), out.vars_.end(), v) == out.vars_.end()) out.vars_.push_back(v);
        first = false;
      }
      row.push_back(std::move(expr));
    } while (r.eat(','));
    r.expect(']');
    out.entries_.push_back(std::move(row));
  } while (r.eat(','));
  r.expect(']');
  if (!r.done()) bad_family("trailing characters in '" + out.text_ + "'");
  for (const auto& row : out.entries_)
    if (row.size() != out.entries_.size()) bad_family("template is not square");
  std::sort(out.vars_.begin(), out.vars_.end());
  return out;
}

IntMatrix FamilyTemplate::instantiate(const std::map<char, Int>& values) const {
  IntMatrix m;
  for (const auto& row : entries_) {
    std::vector<Int> r;
    for (const auto& expr : row) {
      Int v = 0;
      for (const auto& t : expr) {
        Int x = 1;
        if (t.var) {
          const auto it = values.find(t.var);
          if (it == values.end()) bad_family(std::string("no value for '") + t.var + "'");
          x = it->second;
        }
        v += t.coeff * x;
      }
      r.push_back(v);
    }
    m.push_back(std::move(r));
  }
  return m;
}

VariableRange parse_range(std::string_view text) {
  Reader r(text);
  const char v = r.letter();
  if (!v) bad_family("range must start with a variable: '" + std::string(text) + "'");
  r.expect('=');
  auto signed_number = [&]() -> Int {
    const Int sign = r.eat('-') ? -1 : 1;
    const auto n = r.number();
    if (!n) bad_family("bad range '" + std::string(text) + "'");
    return sign * *n;
  };
  const Int lo = signed_number();
  Int hi = lo;
  if (r.eat('.')) {
    r.expect('.');
    hi = signed_number();
  }
  if (!r.done() || hi < lo) bad_family("bad range '" + std::string(text) + "'");
  if (hi - lo > 10'000) bad_family("range too long");
  return {v, lo, hi};
}

std::vector<SurveyRow> run_survey(const FamilyTemplate& family, const std::vector<VariableRange>& ranges,
                                  const Rational& delta, int grid) {
  std::vector<VariableRange> used;
  for (char v : family.variables()) {
    const auto it = std::find_if(ranges.begin(), ranges.end(), [&](const VariableRange& r) { return r.var == v; });
    if (it == ranges.end()) bad_family(std::string("no range for '") + v + "'");
    used.push_back(*it);
  }
  std::vector<SurveyRow> rows;
  std::map<char, Int> values;
  for (const auto& r : used) values[r.var] = r.lo;
  while (true) {
    SurveyRow row;
    row.values = values;
    row.matrix = family.instantiate(values);
    rows.push_back(std::move(row));
    int i = static_cast<int>(used.size()) - 1;
    while (i >= 0 && values[used[i].var] == used[i].hi) {
      values[used[i].var] = used[i].lo;
      --i;
    }
    if (i < 0) break;
    ++values[used[i].var];
  }

  EnvelopeOptions options;
  options.delta = delta;
  parallel_for(rows.size(), [&](std::size_t i) {
    SurveyRow& row = rows[i];
    try {
      const IntersectionMatrix S(row.matrix);
      const Envelope env = build_envelope(S, uniform_grid(grid), options);
      row.gaps = env.gaps.uncovered;
      row.segment_count = env.segments.size();
      row.piecewise_linear = row.gaps.empty();
    } catch (const Error& e) {
      row.valid = false;
      row.error = e.what();
    }
  });
  return rows;
}

}  // namespace seshadri
