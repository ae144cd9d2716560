#include "antimagic/rectangles.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

namespace antimagic {

namespace {

// 0-based cell values
using Grid = std::vector<std::vector<int>>;

Grid transpose(const Grid& g) {
  Grid t(g[0].size(), std::vector<int>(g.size()));
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = 0; j < g[0].size(); ++j) t[j][i] = g[i][j];
  return t;
}

// three permutations of Z_n (n odd) with constant column sums
Grid triple(int n) {
  int h = (n - 1) / 2;
  Grid out(3, std::vector<int>(n));
  for (int j = 0; j < n; ++j) {
    out[0][j] = j;
    out[1][j] = (j + h) % n;
    out[2][j] = 3 * h - out[0][j] - out[1][j];
  }
  return out;
}

// rows permutations of Z_n with constant column sums;
// rows even, or rows and n both odd
Grid kotzig(int rows, int n) {
  Grid out;
  if (rows % 2 == 1) out = triple(n);
  for (int d = 0; static_cast<int>(out.size()) < rows; ++d) {
    std::vector<int> p(n), c(n);
    for (int j = 0; j < n; ++j) {
      p[j] = (j + d) % n;
      c[j] = n - 1 - p[j];
    }
    out.push_back(p);
    out.push_back(c);
  }
  return out;
}

// 2 x T from complementary pairs; the top row hits half the total
// (or half minus one half for the nearly magic variant).
Grid two_row(int T, bool nearly) {
  int N = 2 * T + 1;
  std::vector<int> v(T);
  int total = 0;
  for (int x = 1; x <= T; ++x) {
    v[x - 1] = N - 2 * x;
    total += v[x - 1];
  }
  int target = nearly ? (total - 1) / 2 : total / 2;
  // reach[k][s]: sum s reachable with the first k items
  std::vector<std::vector<char>> reach(T + 1, std::vector<char>(total + 1, 0));
  reach[0][0] = 1;
  for (int k = 0; k < T; ++k)
    for (int s = 0; s <= total; ++s)
      if (reach[k][s]) {
        reach[k + 1][s] = 1;
        if (s + v[k] <= total) reach[k + 1][s + v[k]] = 1;
      }
  if (!reach[T][target]) throw Error(Errc::precondition, "no 2-row arrangement for width " + std::to_string(T));
  std::vector<char> flip(T, 0);
  for (int k = T, s = target; k > 0; --k) {
    if (!reach[k - 1][s]) {
      flip[k - 1] = 1;
      s -= v[k - 1];
    }
  }
  Grid g(2, std::vector<int>(T));
  for (int x = 1; x <= T; ++x) {
    int top = flip[x - 1] ? N - x : x;
    g[0][x - 1] = top - 1;
    g[1][x - 1] = N - top - 1;
  }
  return g;
}

// stacks a blocks of the base, each shifted by a column of K
Grid stack_with(const Grid& base, int a) {
  int b = static_cast<int>(base.size()), q = static_cast<int>(base[0].size());
  if (a == 1) return base;
  Grid K = kotzig(q, a);
  Grid out(a * b, std::vector<int>(q));
  for (int k = 0; k < a; ++k)
    for (int r = 0; r < b; ++r)
      for (int j = 0; j < q; ++j) out[k * b + r][j] = b * q * K[j][k] + base[r][j];
  return out;
}

Grid product(const Grid& A, const Grid& B) {
  int s1 = static_cast<int>(A.size()), t1 = static_cast<int>(A[0].size());
  int s2 = static_cast<int>(B.size()), t2 = static_cast<int>(B[0].size());
  Grid out(s1 * s2, std::vector<int>(t1 * t2));
  for (int i1 = 0; i1 < s1; ++i1)
    for (int i2 = 0; i2 < s2; ++i2)
      for (int j1 = 0; j1 < t1; ++j1)
        for (int j2 = 0; j2 < t2; ++j2) out[i1 * s2 + i2][j1 * t2 + j2] = s2 * t2 * A[i1][j1] + B[i2][j2];
  return out;
}

Grid odd_square(int S) {
  Grid g(S, std::vector<int>(S));
  for (int i = 0; i < S; ++i)
    for (int j = 0; j < S; ++j) g[i][j] = S * ((i + j) % S) + (i + 2 * j) % S;
  return g;
}

// 3 x T: beta is the triple, alpha chosen column by column so that every
// beta level sees each of 0,1,2 once and every alpha row sums to T.
std::optional<Grid> three_by(int T, std::uint64_t budget) {
  Grid B = triple(T);
  std::array<std::vector<int>, 3> inv;
  for (int r = 0; r < 3; ++r) {
    inv[r].resize(T);
    for (int j = 0; j < T; ++j) inv[r][B[r][j]] = j;
  }
  std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  std::vector<std::array<int, 3>> A(T, {-1, -1, -1});
  std::array<int, 3> rowsum{0, 0, 0};
  std::uint64_t nodes = 0;
  auto consistent = [&](int j) {
    for (int r = 0; r < 3; ++r) {
      int y = B[r][j];
      int mask = 0;
      for (int rr = 0; rr < 3; ++rr) {
        int a = A[inv[rr][y]][rr];
        if (a < 0) continue;
        if (mask & (1 << a)) return false;
        mask |= 1 << a;
      }
    }
    return true;
  };
  std::function<bool(int)> rec = [&](int j) -> bool {
    if (++nodes > budget) return false;
    if (j == T) return rowsum[0] == T && rowsum[1] == T && rowsum[2] == T;
    int rem = T - j - 1;
    for (const auto& p : perms) {
      A[j] = p;
      if (consistent(j)) {
        bool ok = true;
        for (int r = 0; r < 3; ++r) {
          int s = rowsum[r] + p[r];
          if (s > T || s + 2 * rem < T) ok = false;
        }
        if (ok) {
          for (int r = 0; r < 3; ++r) rowsum[r] += p[r];
          if (rec(j + 1)) return true;
          for (int r = 0; r < 3; ++r) rowsum[r] -= p[r];
        }
      }
      A[j] = {-1, -1, -1};
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  Grid g(3, std::vector<int>(T));
  for (int r = 0; r < 3; ++r)
    for (int j = 0; j < T; ++j) g[r][j] = 3 * B[r][j] + A[j][r];
  return g;
}

// Local search over alpha (S x T, values in Z_S) against a fixed beta whose
// rows are permutations of Z_T. Each column and each beta level must carry
// every alpha value once; a Kempe swap of two alpha values along an
// alternating cycle keeps that invariant, so only row costs need driving
// to zero.
std::optional<Grid> kempe_alpha(int S, int T, const Grid& B, const std::function<std::int64_t(std::int64_t)>& cost,
                                std::uint64_t seed, std::uint64_t iters) {
  std::mt19937_64 rng(seed);
  Grid A(S, std::vector<int>(T)), colrow(S, std::vector<int>(T)), levrow(S, std::vector<int>(T)),
      pos(S, std::vector<int>(T));
  std::vector<std::int64_t> rs(S);
  std::int64_t E = 0;
  for (int i = 0; i < S; ++i) {
    for (int j = 0; j < T; ++j) {
      A[i][j] = i;
      colrow[i][j] = i;
      levrow[i][B[i][j]] = i;
      pos[i][B[i][j]] = j;
    }
    rs[i] = static_cast<std::int64_t>(i) * T;
    E += cost(rs[i]);
  }
  std::vector<std::int64_t> delta(S, 0);
  std::vector<char> mark(S, 0);
  std::vector<int> touched;
  std::vector<std::array<int, 3>> cells;
  for (std::uint64_t it = 0; it < iters; ++it) {
    if (E == 0) return A;
    int s = static_cast<int>(rng() % S);
    int t = static_cast<int>(rng() % (S - 1));
    if (t >= s) ++t;
    int j0 = static_cast<int>(rng() % T);
    cells.clear();
    int j = j0;
    do {
      int r = colrow[s][j];
      cells.push_back({r, j, s});
      int y = B[r][j];
      int r2 = levrow[t][y];
      int jj = pos[r2][y];
      cells.push_back({r2, jj, t});
      j = jj;
    } while (j != j0);
    touched.clear();
    for (auto [r, jj, c] : cells) {
      if (!mark[r]) {
        mark[r] = 1;
        touched.push_back(r);
      }
      delta[r] += c == s ? t - s : s - t;
    }
    std::int64_t dE = 0;
    for (int r : touched) dE += cost(rs[r] + delta[r]) - cost(rs[r]);
    if (dE <= 0 || rng() % 100 == 0) {
      for (auto [r, jj, c] : cells) A[r][jj] = c == s ? t : s;
      for (auto [r, jj, c] : cells) {
        colrow[A[r][jj]][jj] = r;
        levrow[A[r][jj]][B[r][jj]] = r;
      }
      for (int r : touched) rs[r] += delta[r];
      E += dE;
    }
    for (int r : touched) delta[r] = mark[r] = 0;
  }
  if (E == 0) return A;
  return std::nullopt;
}

constexpr std::uint64_t kKempeIters = 400'000;
constexpr int kKempeRestarts = 16;

std::optional<Grid> kempe_magic(int S, int T) {
  Grid B = kotzig(S, T);
  std::int64_t target = static_cast<std::int64_t>(T) * (S - 1) / 2;
  auto cost = [target](std::int64_t x) { return (x - target) * (x - target); };
  for (int attempt = 0; attempt < kKempeRestarts; ++attempt) {
    auto A = kempe_alpha(S, T, B, cost, 0x9e3779b97f4a7c15ULL + attempt, kKempeIters);
    if (!A) continue;
    Grid g(S, std::vector<int>(T));
    for (int i = 0; i < S; ++i)
      for (int j = 0; j < T; ++j) g[i][j] = T * (*A)[i][j] + B[i][j];
    return g;
  }
  return std::nullopt;
}

std::optional<Grid> kempe_nearly(int p, int q) {
  Grid B = kotzig(p, q);
  std::int64_t c = (static_cast<std::int64_t>(q) * (p - 1) - 1) / 2;
  auto cost = [c](std::int64_t x) {
    std::int64_t d = 2 * x - 2 * c - 1;
    return d * d - 1;
  };
  for (int attempt = 0; attempt < kKempeRestarts; ++attempt) {
    auto A = kempe_alpha(p, q, B, cost, 0x5851f42d4c957f2dULL + attempt, kKempeIters);
    if (!A) continue;
    Grid g(p, std::vector<int>(q));
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < q; ++j) g[i][j] = p * B[i][j] + (*A)[i][j];
    return g;
  }
  return std::nullopt;
}

Grid odd_magic(int S, int T);

Grid even_magic(int S, int T) {
  if (T == 2) return transpose(even_magic(2, S));
  Grid base = two_row(T, false);
  int a = S / 2;
  if (a == 1) return base;
  Grid K = kotzig(T, a);
  Grid out(S, std::vector<int>(T));
  for (int k = 0; k < a; ++k)
    for (int r = 0; r < 2; ++r)
      for (int j = 0; j < T; ++j) out[2 * k + r][j] = 2 * T * K[j][k] + base[r][j];
  return out;
}

Grid odd_magic(int S, int T) {
  if (S > T) return transpose(odd_magic(T, S));
  if (S == T) return odd_square(S);
  if (S == 3)
    if (auto g = three_by(T, 20'000'000)) return *g;
  for (int s1 = 3; s1 < S; s1 += 2) {
    if (S % s1) continue;
    for (int t1 = 3; t1 < T; t1 += 2) {
      if (T % t1) continue;
      int s2 = S / s1, t2 = T / t1;
      if (s2 >= 3 && t2 >= 3) return product(odd_magic(s1, t1), odd_magic(s2, t2));
    }
  }
  if (auto g = kempe_magic(S, T)) return *g;
  throw Error(Errc::budget_exhausted,
              "no " + std::to_string(S) + "x" + std::to_string(T) + " magic rectangle found within the search budget");
}

Grid nearly_base(int p, int q) {
  int b = p & -p;
  int a = p / b;
  Grid base;
  if (b == 2) {
    base = two_row(q, true);
  } else if (auto g = kempe_nearly(b, q)) {
    base = *g;
  } else {
    throw Error(Errc::budget_exhausted, "no " + std::to_string(b) + "x" + std::to_string(q) +
                                            " nearly magic rectangle found within the search budget");
  }
  return stack_with(base, a);
}

std::mutex cache_mutex;
std::map<std::tuple<int, int, int>, Grid> cache;

Grid cached(int kind, int S, int T, const std::function<Grid()>& make) {
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({kind, S, T});
    if (it != cache.end()) return it->second;
  }
  Grid g = make();
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(std::make_tuple(kind, S, T), g);
  return g;
}

Rectangle from_grid(RectKind kind, const Grid& g, Sum offset) {
  Rectangle r;
  r.kind = kind;
  r.rows = static_cast<int>(g.size());
  r.cols = static_cast<int>(g[0].size());
  r.offset = offset;
  r.cells.reserve(static_cast<size_t>(r.rows) * r.cols);
  for (const auto& row : g)
    for (int x : row) r.cells.push_back(checked_add(offset, x + 1));
  return r;
}

void set_low_rows(Rectangle& r) {
  r.low_rows.clear();
  if (r.kind != RectKind::nearly) return;
  Sum lo = r.row_sum(0);
  for (int i = 1; i < r.rows; ++i) lo = std::min(lo, r.row_sum(i));
  for (int i = 0; i < r.rows; ++i)
    if (r.row_sum(i) == lo) r.low_rows.push_back(i);
}

}  // namespace

Sum Rectangle::row_sum(int i) const {
  Sum s = 0;
  for (int j = 0; j < cols; ++j) s = checked_add(s, at(i, j));
  return s;
}

Sum Rectangle::col_sum(int j) const {
  Sum s = 0;
  for (int i = 0; i < rows; ++i) s = checked_add(s, at(i, j));
  return s;
}

Rectangle magic_rectangle(int S, int T, Sum Q) {
  if (S < 2 || T < 2) throw Error(Errc::precondition, "magic rectangle needs S,T >= 2");
  if ((S - T) % 2 != 0) throw Error(Errc::precondition, "magic rectangle needs S and T of equal parity");
  if (S == 2 && T == 2) throw Error(Errc::precondition, "there is no 2x2 magic rectangle");
  if (Q < 0) throw Error(Errc::precondition, "offset must be non-negative");
  Grid g = cached(0, S, T, [&] { return S % 2 == 0 ? even_magic(S, T) : odd_magic(S, T); });
  return from_grid(RectKind::magic, g, Q);
}

Rectangle nearly_magic_rectangle(int p, int q, Sum A) {
  if (p < 2 || p % 2 != 0) throw Error(Errc::precondition, "nearly magic rectangle needs an even row count >= 2");
  if (q < 3 || q % 2 == 0) throw Error(Errc::precondition, "nearly magic rectangle needs an odd column count >= 3");
  Grid g = cached(1, p, q, [&] { return nearly_base(p, q); });
  Rectangle r = from_grid(RectKind::nearly, g, A);
  set_low_rows(r);
  return r;
}

Sum col_row_gap(int S, int T, Sum Q) {
  Sum st = checked_mul(S, T);
  Sum num = checked_mul(checked_add(checked_add(checked_mul(2, Q), 1), st), S - T);
  return num / 2;
}

Rectangle shifted(Rectangle r, Sum by) {
  for (auto& x : r.cells) x = checked_add(x, by);
  r.offset = checked_add(r.offset, by);
  return r;
}

Rectangle transposed(const Rectangle& r) {
  Rectangle t = r;
  t.rows = r.cols;
  t.cols = r.rows;
  for (int i = 0; i < r.rows; ++i)
    for (int j = 0; j < r.cols; ++j) t.at(j, i) = r.at(i, j);
  t.low_rows.clear();
  return t;
}

RectangleReport validate_rectangle(const Rectangle& r) {
  RectangleReport rep;
  auto problem = [&](std::string s) { rep.problems.push_back(std::move(s)); };
  size_t n = static_cast<size_t>(r.rows) * r.cols;
  if (r.rows < 1 || r.cols < 1 || r.cells.size() != n) {
    problem("cell count does not match the dimensions");
    return rep;
  }
  std::vector<char> seen(n, 0);
  rep.bijective = true;
  for (Sum x : r.cells) {
    Sum k = x - r.offset - 1;
    if (k < 0 || k >= static_cast<Sum>(n) || seen[k]) {
      rep.bijective = false;
      break;
    }
    seen[k] = 1;
  }
  if (!rep.bijective) problem("entries are not a bijection onto the offset range");
  for (int i = 0; i < r.rows; ++i) rep.row_sums.push_back(r.row_sum(i));
  for (int j = 0; j < r.cols; ++j) rep.col_sums.push_back(r.col_sum(j));
  std::set<Sum> rows(rep.row_sums.begin(), rep.row_sums.end());
  std::set<Sum> cols(rep.col_sums.begin(), rep.col_sums.end());
  rep.cols_ok = cols.size() == 1;
  if (!rep.cols_ok) problem("column sums are not constant");
  if (r.kind == RectKind::magic) {
    rep.rows_ok = rows.size() == 1;
    if (!rep.rows_ok) problem("row sums are not constant");
    if (rep.rows_ok && rep.cols_ok) rep.gap = *cols.begin() - *rows.begin();
  } else {
    Sum lo = *rows.begin();
    for (Sum s : rep.row_sums) (s == lo ? rep.low_count : rep.high_count)++;
    rep.rows_ok = rows.size() == 2 && *rows.rbegin() == lo + 1 && rep.low_count == rep.high_count;
    if (!rep.rows_ok) problem("row sums do not split evenly into two values one apart");
    if (r.rows % 2 != 0 || r.cols % 2 == 0) problem("nearly magic shape must be even by odd");
    std::vector<int> low;
    for (int i = 0; i < r.rows; ++i)
      if (rep.row_sums[i] == lo) low.push_back(i);
    if (!r.low_rows.empty() && low != r.low_rows) problem("declared low rows disagree with the row sums");
  }
  rep.ok = rep.problems.empty();
  return rep;
}

std::string rectangle_csv(const Rectangle& r) {
  std::ostringstream os;
  for (int j = 0; j < r.cols; ++j) os << (j ? "," : "") << "c" << j + 1;
  os << '\n';
  for (int i = 0; i < r.rows; ++i) {
    for (int j = 0; j < r.cols; ++j) os << (j ? "," : "") << r.at(i, j);
    os << '\n';
  }
  return os.str();
}

}  // namespace antimagic
