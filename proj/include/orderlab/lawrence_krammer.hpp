#pragma once

#include <orderlab/braid.hpp>
#include <orderlab/laurent.hpp>

#include <functional>
#include <map>
#include <vector>

namespace orderlab {

// Lawrence-Krammer representation with exact Z[q^{+-1}, t^{+-1}] entries. The
// representation is faithful for every n, which makes matrix equality an exact
// word-problem oracle for braids.
class LawrenceKrammer {
 public:
  using Matrix = std::vector<std::vector<Laurent2>>;

  explicit LawrenceKrammer(int strands) : n_(strands) {
    if (strands < 2 || strands > 6)
      throw UsageError("LawrenceKrammer: supported for 2..6 strands");
    for (int i = 1; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j) basis_.emplace_back(i, j);
    dim_ = (int)basis_.size();
    for (int k = 1; k < n_; ++k) {
      gen_.push_back(generator_matrix(k));
      inv_.push_back(invert(gen_.back()));
    }
  }

  int dimension() const { return dim_; }

  Matrix word_matrix(const BraidWord& w) const {
    if (w.strands != n_) throw UsageError("LawrenceKrammer: strand count mismatch");
    Matrix m = identity_matrix();
    for (auto& [i, s] : w.letters)
      m = mul(m, s > 0 ? gen_[(std::size_t)(i - 1)] : inv_[(std::size_t)(i - 1)]);
    return m;
  }

  bool equal(const BraidWord& u, const BraidWord& v) const {
    return word_matrix(u) == word_matrix(v);
  }

  Matrix identity_matrix() const {
    Matrix m((std::size_t)dim_, std::vector<Laurent2>((std::size_t)dim_));
    for (int i = 0; i < dim_; ++i) m[(std::size_t)i][(std::size_t)i] = Laurent2::one();
    return m;
  }

  Matrix mul(const Matrix& a, const Matrix& b) const {
    Matrix out((std::size_t)dim_, std::vector<Laurent2>((std::size_t)dim_));
    for (int i = 0; i < dim_; ++i)
      for (int k = 0; k < dim_; ++k) {
        if (a[(std::size_t)i][(std::size_t)k].is_zero()) continue;
        for (int j = 0; j < dim_; ++j) {
          if (b[(std::size_t)k][(std::size_t)j].is_zero()) continue;
          out[(std::size_t)i][(std::size_t)j] =
              out[(std::size_t)i][(std::size_t)j] +
              a[(std::size_t)i][(std::size_t)k] * b[(std::size_t)k][(std::size_t)j];
        }
      }
    return out;
  }

 private:
  int index_of(int i, int j) const {
    for (int k = 0; k < dim_; ++k)
      if (basis_[(std::size_t)k] == std::pair{i, j}) return k;
    throw Error("LawrenceKrammer: bad basis pair");
  }

  // Krammer's action of sigma_k on the basis vector x_{i,j}, written as a column
  // convention: column (i,j) of the matrix holds the image coordinates.
  Matrix generator_matrix(int k) const {
    Matrix m((std::size_t)dim_, std::vector<Laurent2>((std::size_t)dim_));
    auto q = [](int e) { return Laurent2::mono(e, 0); };
    auto tq = [](int te, int qe) { return Laurent2::mono(qe, te); };
    auto add = [&](int row_i, int row_j, int col, const Laurent2& v) {
      m[(std::size_t)index_of(row_i, row_j)][(std::size_t)col] =
          m[(std::size_t)index_of(row_i, row_j)][(std::size_t)col] + v;
    };
    Laurent2 qm1 = q(1) - q(0);  // q - 1
    for (int col = 0; col < dim_; ++col) {
      auto [i, j] = basis_[(std::size_t)col];
      if (k < i - 1 || k > j) {
        add(i, j, col, Laurent2::one());
      } else if (k == i - 1) {
        add(i - 1, j, col, Laurent2::one());
        add(i, j, col, Laurent2::one() - q(1));  // (1 - q) x_{i,j}
      } else if (k == i && i < j - 1) {
        add(i, i + 1, col, tq(1, 1) * qm1);  // t q (q-1) x_{i,i+1}
        add(i + 1, j, col, q(1));
      } else if (k == i && i == j - 1) {
        add(i, j, col, tq(1, 2));  // t q^2
      } else if (i < k && k < j - 1) {
        add(i, j, col, Laurent2::one());
        add(k, k + 1, col, tq(1, k - i) * qm1 * qm1);  // t q^{k-i} (q-1)^2
      } else if (i < k && k == j - 1) {
        add(i, j - 1, col, Laurent2::one());
        add(j - 1, j, col, tq(1, j - i) * qm1);  // t q^{j-i} (q-1)
      } else if (k == j) {
        add(i, j, col, Laurent2::one() - q(1));
        add(i, j + 1, col, q(1));
      } else {
        throw Error("LawrenceKrammer: unhandled case");
      }
    }
    return m;
  }

  // determinant by Laplace expansion with a (row, column-mask) memo
  Laurent2 det(const Matrix& m) const {
    std::map<std::pair<int, unsigned>, Laurent2> memo;
    return det_rec(m, 0, (1u << dim_) - 1, memo);
  }

  Laurent2 det_rec(const Matrix& m, int row, unsigned cols,
                   std::map<std::pair<int, unsigned>, Laurent2>& memo) const {
    if (cols == 0) return Laurent2::one();
    auto key = std::pair{row, cols};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Laurent2 acc;
    int sign = 1;
    for (int c = 0; c < dim_; ++c) {
      if (!(cols & (1u << c))) continue;
      const Laurent2& entry = m[(std::size_t)row][(std::size_t)c];
      if (!entry.is_zero()) {
        Laurent2 sub = det_rec(m, row + 1, cols & ~(1u << c), memo);
        Laurent2 term = entry * sub;
        acc = sign > 0 ? acc + term : acc - term;
      }
      sign = -sign;
    }
    memo.emplace(key, acc);
    return acc;
  }

  Matrix invert(const Matrix& m) const {
    Laurent2 d = det(m);
    Laurent2 dinv = d.monomial_inverse();  // throws unless a unit monomial
    Matrix out((std::size_t)dim_, std::vector<Laurent2>((std::size_t)dim_));
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) {
        // cofactor C_{j,i} / det
        Matrix sub;
        for (int r = 0; r < dim_; ++r) {
          if (r == j) continue;
          std::vector<Laurent2> rowv;
          for (int c = 0; c < dim_; ++c) {
            if (c == i) continue;
            rowv.push_back(m[(std::size_t)r][(std::size_t)c]);
          }
          sub.push_back(std::move(rowv));
        }
        Laurent2 minor = det_small(sub);
        Laurent2 cof = ((i + j) % 2 == 0) ? minor : -minor;
        out[(std::size_t)i][(std::size_t)j] = cof * dinv;
      }
    return out;
  }

  static Laurent2 det_small(const Matrix& m) {
    int d = (int)m.size();
    if (d == 0) return Laurent2::one();
    std::map<std::pair<int, unsigned>, Laurent2> memo;
    std::function<Laurent2(int, unsigned)> rec = [&](int row, unsigned cols) -> Laurent2 {
      if (cols == 0) return Laurent2::one();
      auto key = std::pair{row, cols};
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
      Laurent2 acc;
      int sign = 1;
      for (int c = 0; c < d; ++c) {
        if (!(cols & (1u << c))) continue;
        const Laurent2& entry = m[(std::size_t)row][(std::size_t)c];
        if (!entry.is_zero()) {
          Laurent2 term = entry * rec(row + 1, cols & ~(1u << c));
          acc = sign > 0 ? acc + term : acc - term;
        }
        sign = -sign;
      }
      memo.emplace(key, acc);
      return acc;
    };
    return rec(0, (1u << d) - 1);
  }

  int n_;
  int dim_ = 0;
  std::vector<std::pair<int, int>> basis_;
  std::vector<Matrix> gen_, inv_;
};

}  // namespace orderlab
