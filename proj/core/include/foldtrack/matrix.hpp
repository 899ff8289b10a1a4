#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace foldtrack {

// Dense nonnegative integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols, std::int64_t fill = 0);
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  std::int64_t& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  std::int64_t operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix transpose() const;
  IntMatrix power(int k) const;
  // Rows and columns restricted to the given index lists.
  IntMatrix select(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;

  bool operator==(const IntMatrix&) const = default;
  bool leq(const IntMatrix& rhs) const;  // entrywise

  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

// Largest coefficient LC(M).
std::int64_t lc(const IntMatrix& m);
// Sum of all entries L(M).
std::int64_t l_total(const IntMatrix& m);
// max{1, log C}; mlog(0) = 1.
double mlog(double c);

}  // namespace foldtrack
