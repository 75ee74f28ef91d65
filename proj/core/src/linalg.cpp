#include "rootsuper/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "rootsuper/errors.hpp"

namespace rootsuper {

Vector Vector::unit(std::size_t dim, std::size_t i) {
  Vector v(dim);
  v[i] = Rational(1);
  return v;
}

bool Vector::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

static void require_same_dim(const Vector& a, const Vector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("vector dimensions differ: " + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
  }
}

Vector& Vector::operator+=(const Vector& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Vector& Vector::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

Vector& Vector::add_scaled(const Rational& s, const Vector& o) {
  require_same_dim(*this, o);
  if (s.is_zero()) return *this;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!o.c_[i].is_zero()) c_[i] += s * o.c_[i];
  }
  return *this;
}

std::strong_ordering operator<=>(const Vector& a, const Vector& b) {
  if (a.dim() != b.dim()) return a.dim() <=> b.dim();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const Vector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + "]";
}

std::string format_combination(const Vector& v, const std::vector<std::string>& names) {
  // Compound names such as "(e1-e2)/2" are bracketed so the result stays unambiguous.
  auto term = [&](std::size_t i) {
    const std::string& n = names[i];
    const bool simple = std::all_of(n.begin(), n.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '*';
    });
    return simple ? n : "[" + n + "]";
  };
  mpz_class d = 1;
  for (const auto& x : v.coords()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.value().get_den_mpz_t());
  std::string body;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v[i].is_zero()) continue;
    const mpq_class scaled = v[i].value() * d;
    const mpz_class k = scaled.get_num();
    if (k == 1) {
      body += "+" + term(i);
    } else if (k == -1) {
      body += "-" + term(i);
    } else {
      body += (k > 0 ? "+" : "") + k.get_str() + term(i);
    }
  }
  if (body.empty()) return "0";
  if (body.front() == '+') body.erase(body.begin());
  if (d > 1) body = "(" + body + ")/" + d.get_str();
  return body;
}

GramForm::GramForm(Matrix entries) : g_(std::move(entries)) {
  const std::size_t n = g_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (g_[i].size() != n) throw DimensionError("Gram matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g_[i][j] != g_[j][i]) {
        throw Error("Gram matrix is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
}

GramForm GramForm::identity(std::size_t dim) {
  std::vector<Rational> d(dim, Rational(1));
  return diagonal(d);
}

GramForm GramForm::diagonal(const std::vector<Rational>& diag) {
  Matrix m(diag.size(), std::vector<Rational>(diag.size()));
  for (std::size_t i = 0; i < diag.size(); ++i) m[i][i] = diag[i];
  return GramForm(std::move(m));
}

Vector GramForm::apply(const Vector& v) const {
  if (v.dim() != dim()) throw DimensionError("vector does not match form dimension");
  Vector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    Rational acc;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (!g_[i][j].is_zero() && !v[j].is_zero()) acc += g_[i][j] * v[j];
    }
    out[i] = std::move(acc);
  }
  return out;
}

Rational GramForm::evaluate(const Vector& u, const Vector& v) const {
  if (u.dim() != dim() || v.dim() != dim()) throw DimensionError("vector does not match form dimension");
  return dot(u, apply(v));
}

GramForm GramForm::restrict_to(std::span<const Vector> basis) const {
  Matrix m(basis.size(), std::vector<Rational>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Vector gi = apply(basis[i]);
    for (std::size_t j = 0; j < basis.size(); ++j) m[j][i] = dot(basis[j], gi);
  }
  return GramForm(std::move(m));
}

Rational evaluate(const GramForm& form, const Vector& u, const Vector& v) { return form.evaluate(u, v); }

Rational dot(const Vector& u, const Vector& v) {
  require_same_dim(u, v);
  Rational acc;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    if (!u[i].is_zero() && !v[i].is_zero()) acc += u[i] * v[i];
  }
  return acc;
}

namespace {

// Incremental echelon basis used for rank and independence tests.
class Echelon {
 public:
  explicit Echelon(std::size_t dim) : dim_(dim) {}

  // Returns true when v was independent of the rows seen so far.
  bool insert(Vector v) {
    if (v.dim() != dim_) throw DimensionError("vectors of different dimensions");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational& c = v[pivots_[r]];
      if (!c.is_zero()) v.add_scaled(-c, rows_[r]);
    }
    for (std::size_t p = 0; p < dim_; ++p) {
      if (!v[p].is_zero()) {
        v *= v[p].inverse();
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
      }
    }
    return false;
  }

  [[nodiscard]] std::size_t size() const { return rows_.size(); }

 private:
  std::size_t dim_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

std::size_t rank(std::span<const Vector> vectors) { return independent_subset(vectors).size(); }

std::vector<std::size_t> independent_subset(std::span<const Vector> vectors) {
  std::vector<std::size_t> picked;
  if (vectors.empty()) return picked;
  Echelon ech(vectors.front().dim());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (ech.insert(vectors[i])) picked.push_back(i);
  }
  return picked;
}

std::vector<Vector> nullspace(const Matrix& m, std::size_t cols) {
  Matrix a = m;
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && a[sel][col].is_zero()) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[row], a[sel]);
    const Rational inv = a[row][col].inverse();
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      const Rational f = a[r][col];
      for (std::size_t c = 0; c < cols; ++c) a[r][c] -= f * a[row][c];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<Vector> basis;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector x(cols);
    x[free] = Rational(1);
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) x[pivot_cols[r]] = -a[r][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

SpanSolver::SpanSolver(std::span<const Vector> basis, std::size_t ambient_dim)
    : k_(basis.size()), n_(ambient_dim) {
  for (const auto& b : basis) {
    if (b.dim() != n_) throw DimensionError("basis vector has wrong dimension");
  }
  // Augmented [M | I] with the basis vectors as the columns of M.
  Matrix a(n_, std::vector<Rational>(k_ + n_));
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < k_; ++c) a[r][c] = basis[c][r];
    a[r][k_ + r] = Rational(1);
  }
  for (std::size_t col = 0; col < k_; ++col) {
    std::size_t sel = col;
    while (sel < n_ && a[sel][col].is_zero()) ++sel;
    if (sel == n_) throw Error("basis vectors are linearly dependent");
    std::swap(a[col], a[sel]);
    const Rational inv = a[col][col].inverse();
    for (auto& x : a[col]) x *= inv;
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rational f = a[r][col];
      for (std::size_t c = 0; c < k_ + n_; ++c) {
        if (!a[col][c].is_zero()) a[r][c] -= f * a[col][c];
      }
    }
  }
  for (std::size_t r = 0; r < n_; ++r) {
    std::vector<Rational> right(a[r].begin() + static_cast<std::ptrdiff_t>(k_), a[r].end());
    (r < k_ ? left_ : check_).push_back(std::move(right));
  }
}

static Rational row_dot(const std::vector<Rational>& row, const Vector& v) {
  Rational acc;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (!row[i].is_zero() && !v[i].is_zero()) acc += row[i] * v[i];
  }
  return acc;
}

bool SpanSolver::contains(const Vector& v) const {
  if (v.dim() != n_) throw DimensionError("vector has wrong dimension");
  return std::all_of(check_.begin(), check_.end(), [&](const auto& row) { return row_dot(row, v).is_zero(); });
}

std::optional<std::vector<Rational>> SpanSolver::coordinates(const Vector& v) const {
  if (!contains(v)) return std::nullopt;
  std::vector<Rational> out;
  out.reserve(k_);
  for (const auto& row : left_) out.push_back(row_dot(row, v));
  return out;
}

std::vector<Vector> radical(const GramForm& form, std::span<const Vector> basis) {
  if (independent_subset(basis).size() != basis.size()) throw Error("radical: basis is linearly dependent");
  const GramForm g = form.restrict_to(basis);
  std::vector<Vector> out;
  for (const auto& c : nullspace(g.entries(), basis.size())) {
    Vector v(form.dim());
    for (std::size_t i = 0; i < basis.size(); ++i) v.add_scaled(c[i], basis[i]);
    out.push_back(std::move(v));
  }
  return out;
}

bool is_nondegenerate(const GramForm& form) { return nullspace(form.entries(), form.dim()).empty(); }

std::vector<Vector> nondegenerate_extension(const GramForm& form, std::span<const Vector> ambient_basis,
                                            std::span<const Vector> w) {
  if (!radical(form, ambient_basis).empty()) throw Error("form is degenerate on the ambient space");
  std::vector<Vector> u(w.begin(), w.end());
  if (independent_subset(u).size() != u.size()) throw Error("nondegenerate_extension: W is linearly dependent");
  for (;;) {
    const auto rad = radical(form, u);
    if (rad.empty()) return u;
    const Vector& u1 = rad.front();
    auto x = std::find_if(ambient_basis.begin(), ambient_basis.end(),
                          [&](const Vector& b) { return !form.evaluate(u1, b).is_zero(); });
    if (x == ambient_basis.end()) throw Error("radical vector is orthogonal to the ambient basis");
    u.push_back(*x);
  }
}

IntMatrix hermite_normal_form(IntMatrix a) {
  if (a.empty()) return a;
  const std::size_t cols = a.front().size();
  std::size_t pivot = 0;
  for (std::size_t col = 0; col < cols && pivot < a.size(); ++col) {
    for (;;) {
      // Move the smallest nonzero entry of this column (at or below pivot) up.
      std::size_t best = a.size();
      for (std::size_t r = pivot; r < a.size(); ++r) {
        if (a[r][col] != 0 && (best == a.size() || abs(a[r][col]) < abs(a[best][col]))) best = r;
      }
      if (best == a.size()) break;
      std::swap(a[pivot], a[best]);
      bool done = true;
      for (std::size_t r = pivot + 1; r < a.size(); ++r) {
        if (a[r][col] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[r][col].get_mpz_t(), a[pivot][col].get_mpz_t());
        for (std::size_t c = col; c < cols; ++c) a[r][c] -= q * a[pivot][c];
        if (a[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (a[pivot][col] == 0) continue;
    if (a[pivot][col] < 0) {
      for (auto& x : a[pivot]) x = -x;
    }
    for (std::size_t r = 0; r < pivot; ++r) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a[r][col].get_mpz_t(), a[pivot][col].get_mpz_t());
      if (q != 0) {
        for (std::size_t c = col; c < cols; ++c) a[r][c] -= q * a[pivot][c];
      }
    }
    ++pivot;
  }
  a.resize(pivot);
  return a;
}

namespace {

mpz_class common_denominator(std::span<const Vector> a, std::span<const Vector> b = {}) {
  mpz_class d = 1;
  for (auto part : {a, b}) {
    for (const auto& v : part) {
      for (const auto& x : v.coords()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.value().get_den_mpz_t());
    }
  }
  return d;
}

IntMatrix scaled_rows(std::span<const Vector> vs, const mpz_class& d) {
  IntMatrix out;
  for (const auto& v : vs) {
    std::vector<mpz_class> row;
    for (const auto& x : v.coords()) {
      mpq_class s = x.value() * d;
      row.emplace_back(s.get_num());
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

bool same_lattice(std::span<const Vector> a, std::span<const Vector> b) {
  const mpz_class d = common_denominator(a, b);
  return hermite_normal_form(scaled_rows(a, d)) == hermite_normal_form(scaled_rows(b, d));
}

std::vector<Vector> lattice_basis(std::span<const Vector> generators) {
  const mpz_class d = common_denominator(generators);
  std::vector<Vector> out;
  for (const auto& row : hermite_normal_form(scaled_rows(generators, d))) {
    Vector v(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) v[i] = Rational(row[i], d);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace rootsuper
