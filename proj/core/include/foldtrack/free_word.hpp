#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace foldtrack {

// Word in the free group: letter +(i+1) is x_i, -(i+1) is its inverse.
using Word = std::vector<int>;

Word reduce(const Word& w);
bool is_reduced_word(const Word& w);
Word inverse(const Word& w);
// Free reduction at the junction; the product is reduced when lhs is.
Word multiply(const Word& lhs, const Word& rhs);
// u w u^-1, reduced.
Word conjugate(const Word& w, const Word& u);
Word cyclic_reduce(const Word& w);
std::size_t cyclic_length(const Word& w);

// "ab^-1 c": letters a..z, ^-1 for inverses, "1" for the empty word.
std::string format_word(const Word& w);
// Accepts uppercase letters and ^-1 as inverses; whitespace is ignored.
Word parse_word(std::string_view text);

// Lexicographic order on signed letter codes, shorter prefix first.
bool word_less(const Word& a, const Word& b);

}  // namespace foldtrack
