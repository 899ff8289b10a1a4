#include "foldtrack/free_word.hpp"

#include <algorithm>
#include <cctype>

#include "foldtrack/error.hpp"

namespace foldtrack {

Word reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    if (x == 0) throw ArgumentError("letter code 0 is not allowed");
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

bool is_reduced_word(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == -w[i - 1]) return false;
  return true;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

Word multiply(const Word& lhs, const Word& rhs) {
  Word out = lhs;
  for (int x : rhs) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

Word conjugate(const Word& w, const Word& u) { return multiply(multiply(u, w), inverse(u)); }

Word cyclic_reduce(const Word& w) {
  Word r = reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
}

std::size_t cyclic_length(const Word& w) { return cyclic_reduce(w).size(); }

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  bool after_inverse = false;
  for (int x : w) {
    int idx = std::abs(x) - 1;
    if (idx >= 26) throw ArgumentError("letter index beyond z");
    if (after_inverse) out += ' ';
    out += static_cast<char>('a' + idx);
    after_inverse = x < 0;
    if (after_inverse) out += "^-1";
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word out;
  std::size_t i = 0;
  bool saw_one = false;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '1') {
      saw_one = true;
      ++i;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      throw ParseError("unexpected character '" + std::string(1, c) + "' in word");
    }
    int letter = std::tolower(static_cast<unsigned char>(c)) - 'a' + 1;
    bool inv = std::isupper(static_cast<unsigned char>(c)) != 0;
    ++i;
    if (text.substr(i, 3) == "^-1") {
      inv = !inv;
      i += 3;
    } else if (i < text.size() && text[i] == '^') {
      throw ParseError("only ^-1 exponents are supported");
    }
    out.push_back(inv ? -letter : letter);
  }
  if (saw_one && !out.empty()) throw ParseError("'1' denotes the empty word and cannot be mixed with letters");
  return reduce(out);
}

bool word_less(const Word& a, const Word& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace foldtrack
