#pragma once

#include <string>
#include <vector>

#include "antimagic/error.hpp"

namespace antimagic {

enum class RectKind { magic, nearly };

struct Rectangle {
  RectKind kind = RectKind::magic;
  int rows = 0;
  int cols = 0;
  Sum offset = 0;          // entries cover [offset+1, offset+rows*cols]
  std::vector<Sum> cells;  // row-major
  std::vector<int> low_rows;  // nearly magic only: rows with the smaller sum

  Sum at(int i, int j) const { return cells[static_cast<size_t>(i) * cols + j]; }
  Sum& at(int i, int j) { return cells[static_cast<size_t>(i) * cols + j]; }
  Sum row_sum(int i) const;
  Sum col_sum(int j) const;
};

// S x T magic rectangle on [Q+1, Q+ST]; S,T >= 2, same parity, not 2x2.
Rectangle magic_rectangle(int S, int T, Sum Q = 0);

// p x q nearly magic rectangle on [A+1, A+pq]; p even >= 2, q odd >= 3.
Rectangle nearly_magic_rectangle(int p, int q, Sum A = 0);

// column sum minus row sum of any S x T magic rectangle on [Q+1, Q+ST]
Sum col_row_gap(int S, int T, Sum Q);

Rectangle shifted(Rectangle r, Sum by);
Rectangle transposed(const Rectangle& r);

struct RectangleReport {
  bool ok = false;
  bool bijective = false;
  bool rows_ok = false;
  bool cols_ok = false;
  std::vector<Sum> row_sums;
  std::vector<Sum> col_sums;
  Sum gap = 0;  // C - R, magic only
  int low_count = 0;
  int high_count = 0;
  std::vector<std::string> problems;
};

// Recomputes everything from the cells; never trusts the constructor.
RectangleReport validate_rectangle(const Rectangle& r);

std::string rectangle_csv(const Rectangle& r);

}  // namespace antimagic
