#include "csplab/tableaux.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "csplab/encoding.hpp"
#include "csplab/errors.hpp"

namespace csplab {

namespace {

using Grid = std::vector<std::vector<int>>;

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

int parse_int(std::string_view s, std::string_view context) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw PreconditionViolation("cannot parse '" + std::string(context) + "'");
  }
  return std::stoi(std::string(s));
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw ShapeViolation("partition parts must be positive and weakly decreasing");
    }
  }
}

Partition Partition::rectangle(int rows, int cols) {
  if (rows < 0 || cols < 0) throw ShapeViolation("negative rectangle dimensions");
  if (rows == 0 || cols == 0) return Partition{};
  return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
}

Partition Partition::staircase(int n) {
  std::vector<int> p;
  for (int i = n; i >= 1; --i) p.push_back(i);
  return Partition(std::move(p));
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  if (text.find(',') != std::string_view::npos) {
    for (auto tok : split(text, ',')) parts.push_back(parse_int(tok, text));
  } else {
    for (char c : text) parts.push_back(parse_int(std::string_view(&c, 1), text));
  }
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(int i, int j) const {
  return i >= 1 && static_cast<std::size_t>(i) <= parts_.size() && j >= 1 && j <= parts_[static_cast<std::size_t>(i - 1)];
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (parts_.empty()) return Partition{};
  for (int j = 1; j <= parts_.front(); ++j) {
    int len = 0;
    for (int p : parts_) len += p >= j ? 1 : 0;
    c.push_back(len);
  }
  return Partition(std::move(c));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> go = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      go(remaining - p, p);
      cur.pop_back();
    }
  };
  go(n, n);
  return out;
}

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].empty()) throw ShapeViolation("tableau rows must be nonempty");
    if (i > 0 && rows_[i].size() > rows_[i - 1].size()) throw ShapeViolation("tableau row lengths must weakly decrease");
  }
}

Tableau Tableau::parse(std::string_view text) {
  Grid rows;
  if (text.empty() || text == kEmptyLabel) return Tableau{};
  const bool wide = text.find('.') != std::string_view::npos;
  for (auto row : split(text, '/')) {
    std::vector<int> r;
    if (wide) {
      for (auto tok : split(row, '.')) r.push_back(parse_int(tok, text));
    } else {
      for (char c : row) r.push_back(parse_int(std::string_view(&c, 1), text));
    }
    rows.push_back(std::move(r));
  }
  return Tableau(std::move(rows));
}

Partition Tableau::shape() const {
  std::vector<int> p;
  for (const auto& r : rows_) p.push_back(static_cast<int>(r.size()));
  return Partition(std::move(p));
}

std::size_t Tableau::cell_count() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

bool Tableau::is_semistandard() const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (rows_[i][j] < 1) return false;
      if (j > 0 && rows_[i][j - 1] > rows_[i][j]) return false;
      if (i > 0 && rows_[i - 1][j] >= rows_[i][j]) return false;
    }
  }
  return true;
}

bool Tableau::is_standard() const {
  const std::size_t n = cell_count();
  std::vector<bool> seen(n + 1, false);
  for (const auto& r : rows_) {
    for (int x : r) {
      if (x < 1 || static_cast<std::size_t>(x) > n || seen[static_cast<std::size_t>(x)]) return false;
      seen[static_cast<std::size_t>(x)] = true;
    }
  }
  // Distinct entries plus weak row increase means strict increase.
  return is_semistandard();
}

std::vector<int> Tableau::content() const {
  std::vector<int> c;
  for (const auto& r : rows_) {
    for (int x : r) {
      if (static_cast<std::size_t>(x) > c.size()) c.resize(static_cast<std::size_t>(x));
      ++c[static_cast<std::size_t>(x - 1)];
    }
  }
  return c;
}

Tableau Tableau::transpose() const {
  Grid t;
  if (rows_.empty()) return Tableau{};
  for (std::size_t j = 0; j < rows_.front().size(); ++j) {
    std::vector<int> col;
    for (const auto& r : rows_)
      if (j < r.size()) col.push_back(r[j]);
    t.push_back(std::move(col));
  }
  return Tableau(std::move(t));
}

std::string Tableau::to_string() const {
  if (rows_.empty()) return kEmptyLabel;
  int max_entry = 0;
  for (const auto& r : rows_)
    for (int x : r) max_entry = std::max(max_entry, x);
  std::string s;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i > 0) s += '/';
    s += join_entries(rows_[i], max_entry > 9);
  }
  return s;
}

SYTableau::SYTableau(Tableau t) : Tableau(std::move(t)) {
  if (!is_standard()) throw PreconditionViolation("'" + to_string() + "' is not a standard Young tableau");
}

SSYTableau::SSYTableau(Tableau t) : Tableau(std::move(t)) {
  if (!is_semistandard()) throw PreconditionViolation("'" + to_string() + "' is not a semistandard Young tableau");
}

std::vector<int> NonnegMatrix::row_sums() const {
  std::vector<int> s;
  for (const auto& r : entries) s.push_back(std::accumulate(r.begin(), r.end(), 0));
  return s;
}

std::vector<int> NonnegMatrix::col_sums() const {
  std::vector<int> s;
  for (const auto& r : entries) {
    if (r.size() > s.size()) s.resize(r.size());
    for (std::size_t j = 0; j < r.size(); ++j) s[j] += r[j];
  }
  return s;
}

int NonnegMatrix::total() const {
  auto r = row_sums();
  return std::accumulate(r.begin(), r.end(), 0);
}

std::vector<std::vector<int>> hooklengths(const Partition& shape) {
  const Partition conj = shape.conjugate();
  Grid h;
  for (std::size_t i = 0; i < shape.length(); ++i) {
    std::vector<int> row;
    for (int j = 0; j < shape.parts()[i]; ++j) {
      int arm = shape.parts()[i] - j - 1;
      int leg = conj.parts()[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
      row.push_back(arm + leg + 1);
    }
    h.push_back(std::move(row));
  }
  return h;
}

Integer count_syt(const Partition& shape) {
  Integer num;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(shape.size()));
  Integer den = 1;
  for (const auto& row : hooklengths(shape))
    for (int h : row) den *= h;
  if (num % den != 0) throw InternalError("hooklength product does not divide n!");
  return num / den;
}

IntPolynomial q_count_syt(const Partition& shape) {
  IntPolynomial den{1};
  for (const auto& row : hooklengths(shape))
    for (int h : row) den *= q_int(static_cast<unsigned>(h));
  return exact_divide(q_factorial(static_cast<unsigned>(shape.size())), den);
}

std::vector<SYTableau> enumerate_syt(const Partition& shape, std::size_t max_count) {
  if (count_syt(shape) > max_count) {
    throw CapExceeded("SYT" + shape.to_string() + " has more than " + std::to_string(max_count) + " elements");
  }
  const int n = shape.size();
  std::vector<SYTableau> out;
  Grid g;
  g.resize(shape.length());
  std::function<void(int)> place = [&](int k) {
    if (k > n) {
      out.emplace_back(g);
      return;
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
      const bool room = static_cast<int>(g[i].size()) < shape.parts()[i];
      const bool supported = i == 0 || g[i - 1].size() > g[i].size();
      if (!room || !supported) continue;
      g[i].push_back(k);
      place(k + 1);
      g[i].pop_back();
    }
  };
  place(1);
  return out;
}

namespace {

// Slides the hole at (i, j) towards the outer corner, exchanging with the
// smaller of the right and lower neighbours among the cells `live` admits.
template <typename Live>
std::pair<std::size_t, std::size_t> slide_out(Grid& g, std::size_t i, std::size_t j, Live live) {
  while (true) {
    const bool has_below = i + 1 < g.size() && j < g[i + 1].size() && live(i + 1, j);
    const bool has_right = j + 1 < g[i].size() && live(i, j + 1);
    if (!has_below && !has_right) return {i, j};
    if (has_below && (!has_right || g[i + 1][j] < g[i][j + 1])) {
      std::swap(g[i][j], g[i + 1][j]);
      ++i;
    } else {
      std::swap(g[i][j], g[i][j + 1]);
      ++j;
    }
  }
}

}  // namespace

SYTableau promote(const SYTableau& t) {
  if (t.empty()) return t;
  Grid g = t.rows();
  const int n = static_cast<int>(t.cell_count());
  g[0][0] = 0;  // the dot
  auto [i, j] = slide_out(g, 0, 0, [](std::size_t, std::size_t) { return true; });
  for (auto& r : g)
    for (int& x : r) --x;
  g[i][j] = n;
  return SYTableau(std::move(g));
}

SYTableau promote_inverse(const SYTableau& t) {
  if (t.empty()) return t;
  Grid g = t.rows();
  const int n = static_cast<int>(t.cell_count());
  std::size_t i = 0;
  std::size_t j = 0;
  for (std::size_t r = 0; r < g.size(); ++r)
    for (std::size_t c = 0; c < g[r].size(); ++c)
      if (g[r][c] == n) std::tie(i, j) = std::pair{r, c};
  for (auto& r : g)
    for (int& x : r) ++x;
  // Reverse slides: the hole moves to the larger of its upper and left neighbours.
  while (i > 0 || j > 0) {
    const bool has_up = i > 0;
    const bool has_left = j > 0;
    if (has_up && (!has_left || g[i - 1][j] > g[i][j - 1])) {
      g[i][j] = g[i - 1][j];
      --i;
    } else {
      g[i][j] = g[i][j - 1];
      --j;
    }
  }
  g[0][0] = 1;
  return SYTableau(std::move(g));
}

SYTableau evacuate(const SYTableau& t) {
  const int n = static_cast<int>(t.cell_count());
  Grid g = t.rows();
  std::vector<std::vector<bool>> frozen;
  for (const auto& r : g) frozen.emplace_back(r.size(), false);
  for (int step = 1; step <= n; ++step) {
    // The smallest live entry is 1, and it sits at (1,1).
    g[0][0] = 0;
    auto [i, j] = slide_out(g, 0, 0, [&](std::size_t r, std::size_t c) { return !frozen[r][c]; });
    for (std::size_t r = 0; r < g.size(); ++r)
      for (std::size_t c = 0; c < g[r].size(); ++c)
        if (!frozen[r][c]) --g[r][c];
    g[i][j] = n - step + 1;
    frozen[i][j] = true;
  }
  return SYTableau(std::move(g));
}

SYTableau pon_wang_iota(const SYTableau& t) {
  const Partition shape = t.shape();
  const int n = static_cast<int>(shape.length());
  if (n == 0 || shape != Partition::staircase(n)) {
    throw ShapeViolation("pon_wang_iota needs a staircase tableau, got shape " + shape.to_string());
  }
  const int total = n * (n + 1);
  Grid out(static_cast<std::size_t>(n + 1), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int a = 1; a <= n; ++a)
    for (int b = 1; a + b <= n + 1; ++b) out[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = t(a, b);
  // Complement the evacuation and reflect it in the anti-diagonal into the
  // complementary staircase of the (n+1) x n rectangle.
  const SYTableau e = evacuate(t);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; a + b <= n + 1; ++b)
      out[static_cast<std::size_t>(n + 1 - b)][static_cast<std::size_t>(n - a)] = total + 1 - e(a, b);
  return SYTableau(std::move(out));
}

namespace {

// Row insertion; returns the (0-based) row where the new cell was created.
std::size_t row_insert(Grid& p, int x) {
  for (std::size_t i = 0;; ++i) {
    if (i == p.size()) {
      p.push_back({x});
      return i;
    }
    auto& row = p[i];
    auto it = std::upper_bound(row.begin(), row.end(), x);  // leftmost entry > x
    if (it == row.end()) {
      row.push_back(x);
      return i;
    }
    std::swap(*it, x);
  }
}

// Removes the cell at the end of row `i` and reverse-bumps up to row 0.
int reverse_bump(Grid& p, std::size_t i) {
  int y = p[i].back();
  p[i].pop_back();
  if (p[i].empty()) p.erase(p.begin() + static_cast<std::ptrdiff_t>(i));
  while (i-- > 0) {
    auto& row = p[i];
    auto it = std::lower_bound(row.begin(), row.end(), y);  // rightmost entry < y is just before
    --it;
    std::swap(*it, y);
  }
  return y;
}

// Row holding the largest entry of q (rightmost among ties).
std::size_t last_cell_row(const Grid& q) {
  std::size_t best_row = 0;
  int best = 0;
  std::size_t best_col = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const std::size_t c = q[i].size() - 1;
    const int v = q[i][c];
    if (v > best || (v == best && c > best_col)) {
      best = v;
      best_row = i;
      best_col = c;
    }
  }
  return best_row;
}

}  // namespace

std::pair<SYTableau, SYTableau> rsk_word(const Permutation& w) {
  Grid p;
  Grid q;
  int k = 0;
  for (int x : w.one_line()) {
    ++k;
    std::size_t row = row_insert(p, x);
    if (row == q.size()) q.emplace_back();
    q[row].push_back(k);
  }
  return {SYTableau(std::move(p)), SYTableau(std::move(q))};
}

Permutation rsk_word_inverse(const SYTableau& p_in, const SYTableau& q_in) {
  if (p_in.shape() != q_in.shape()) throw PreconditionViolation("RSK pair must have equal shapes");
  Grid p = p_in.rows();
  Grid q = q_in.rows();
  const std::size_t n = p_in.cell_count();
  std::vector<int> w(n);
  for (std::size_t k = n; k-- > 0;) {
    const std::size_t row = last_cell_row(q);
    q[row].pop_back();
    if (q[row].empty()) q.erase(q.begin() + static_cast<std::ptrdiff_t>(row));
    w[k] = reverse_bump(p, row);
  }
  return Permutation(std::move(w));
}

std::pair<SSYTableau, SSYTableau> rsk_matrix(const NonnegMatrix& m) {
  Grid p;
  Grid q;
  // Lexicographic two-line array: top index i first, then bottom index j.
  for (std::size_t i = 0; i < m.entries.size(); ++i) {
    for (std::size_t j = 0; j < m.entries[i].size(); ++j) {
      if (m.entries[i][j] < 0) throw PreconditionViolation("matrix entries must be nonnegative");
      for (int rep = 0; rep < m.entries[i][j]; ++rep) {
        std::size_t row = row_insert(p, static_cast<int>(j) + 1);
        if (row == q.size()) q.emplace_back();
        q[row].push_back(static_cast<int>(i) + 1);
      }
    }
  }
  return {SSYTableau(std::move(p)), SSYTableau(std::move(q))};
}

NonnegMatrix rsk_matrix_inverse(const SSYTableau& p_in, const SSYTableau& q_in, std::size_t rows, std::size_t cols) {
  if (p_in.shape() != q_in.shape()) throw PreconditionViolation("RSK pair must have equal shapes");
  Grid p = p_in.rows();
  Grid q = q_in.rows();
  NonnegMatrix m{Grid(rows, std::vector<int>(cols, 0))};
  for (std::size_t k = p_in.cell_count(); k-- > 0;) {
    const std::size_t row = last_cell_row(q);
    const int i = q[row].back();
    q[row].pop_back();
    if (q[row].empty()) q.erase(q.begin() + static_cast<std::ptrdiff_t>(row));
    const int j = reverse_bump(p, row);
    if (i < 1 || static_cast<std::size_t>(i) > rows || j < 1 || static_cast<std::size_t>(j) > cols) {
      throw PreconditionViolation("tableau contents do not fit the requested matrix size");
    }
    ++m.entries[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  }
  return m;
}

std::vector<int> ballot_sequence(const SYTableau& t) {
  std::vector<int> b(t.cell_count());
  for (std::size_t i = 0; i < t.rows().size(); ++i)
    for (int x : t.rows()[i]) b[static_cast<std::size_t>(x - 1)] = static_cast<int>(i) + 1;
  return b;
}

bool is_ballot(const std::vector<int>& seq) {
  std::vector<int> counts;
  for (int b : seq) {
    if (b < 1) return false;
    if (static_cast<std::size_t>(b) > counts.size()) counts.resize(static_cast<std::size_t>(b));
    ++counts[static_cast<std::size_t>(b - 1)];
    if (b > 1 && counts[static_cast<std::size_t>(b - 2)] < counts[static_cast<std::size_t>(b - 1)]) return false;
  }
  return true;
}

SYTableau from_ballot_sequence(const std::vector<int>& seq) {
  if (!is_ballot(seq)) throw PreconditionViolation("not a ballot sequence");
  Grid g;
  for (std::size_t m = 0; m < seq.size(); ++m) {
    const auto row = static_cast<std::size_t>(seq[m] - 1);
    if (row >= g.size()) g.resize(row + 1);
    g[row].push_back(static_cast<int>(m) + 1);
  }
  return SYTableau(std::move(g));
}

Matching tableau_to_matching(const SYTableau& t) {
  const Partition shape = t.shape();
  if (shape.length() != 2 || shape.parts()[0] != shape.parts()[1]) {
    throw ShapeViolation("tableau_to_matching needs shape (n,n), got " + shape.to_string());
  }
  std::vector<Matching::Edge> edges;
  std::vector<int> open;
  const auto b = ballot_sequence(t);
  for (std::size_t m = 0; m < b.size(); ++m) {
    const int v = static_cast<int>(m) + 1;
    if (b[m] == 1) {
      open.push_back(v);
    } else {
      edges.emplace_back(open.back(), v);
      open.pop_back();
    }
  }
  return Matching(static_cast<std::size_t>(shape.parts()[0]), std::move(edges));
}

SYTableau matching_to_tableau(const Matching& m) {
  if (!is_noncrossing(m)) throw PreconditionViolation("matching_to_tableau needs a noncrossing matching");
  std::vector<int> b(2 * m.edge_count());
  for (const auto& [lo, hi] : m.edges()) {
    b[static_cast<std::size_t>(lo - 1)] = 1;
    b[static_cast<std::size_t>(hi - 1)] = 2;
  }
  return from_ballot_sequence(b);
}

}  // namespace csplab
