#include "sphroot/linalg.hpp"

#include <sstream>

namespace sphroot {

VecQ to_rational(const VecZ& v) {
  VecQ r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = Rational(v(i));
  return r;
}

VecZ numerators_after_clearing(const VecQ& v) {
  Integer l = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) l = lcm(l, Integer(v(i).get_den()));
  VecZ r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    Rational s = v(i) * Rational(l);
    r(i) = s.get_num();
  }
  return r;
}

Integer mu_denominator(const VecQ& v) {
  Integer l = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) l = lcm(l, Integer(v(i).get_den()));
  return l;
}

VecZ primitive(const VecZ& v) {
  Integer g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
  if (g == 0 || g == 1) return v;
  VecZ r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = v(i) / g;
  return r;
}

VecZ primitive_of(const VecQ& v) { return primitive(numerators_after_clearing(v)); }

Rational dot(const VecQ& a, const VecQ& b) {
  Rational s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
  return s;
}

Rational dot(const VecZ& a, const VecQ& b) {
  Rational s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += Rational(a(i)) * b(i);
  return s;
}

Integer dot(const VecZ& a, const VecZ& b) {
  Integer s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
  return s;
}

bool lex_less(const VecZ& a, const VecZ& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return false;
}

bool lex_less(const VecQ& a, const VecQ& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return false;
}

namespace {
template <typename V>
std::string vec_to_string(const V& v) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v(i).get_str();
  }
  os << ")";
  return os.str();
}
}  // namespace

std::string to_string(const VecZ& v) { return vec_to_string(v); }
std::string to_string(const VecQ& v) { return vec_to_string(v); }

int rank_of(MatQ a) {
  int rank = 0;
  Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = row; r < rows; ++r) {
      if (a(r, col) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    a.row(piv).swap(a.row(row));
    for (Eigen::Index r = row + 1; r < rows; ++r) {
      if (a(r, col) != 0) {
        Rational f = a(r, col) / a(row, col);
        for (Eigen::Index c = col; c < cols; ++c) a(r, c) -= f * a(row, c);
      }
    }
    ++row;
    ++rank;
  }
  return rank;
}

std::optional<VecQ> solve(const MatQ& a, const VecQ& b) {
  Eigen::Index rows = a.rows(), cols = a.cols();
  MatQ m(rows, cols + 1);
  m.leftCols(cols) = a;
  m.col(cols) = b;
  std::vector<Eigen::Index> pivot_col;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = row; r < rows; ++r) {
      if (m(r, col) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    m.row(piv).swap(m.row(row));
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r != row && m(r, col) != 0) {
        Rational f = m(r, col) / m(row, col);
        for (Eigen::Index c = col; c <= cols; ++c) m(r, c) -= f * m(row, c);
      }
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (Eigen::Index r = row; r < rows; ++r) {
    if (m(r, cols) != 0) return std::nullopt;
  }
  VecQ x = VecQ::Zero(cols);
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(pivot_col.size()); ++i) {
    x(pivot_col[i]) = m(i, cols) / m(i, pivot_col[i]);
  }
  return x;
}

MatQ kernel_basis(const MatQ& a) {
  Eigen::Index rows = a.rows(), cols = a.cols();
  MatQ m = a;
  std::vector<Eigen::Index> pivot_col;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = row; r < rows; ++r) {
      if (m(r, col) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    m.row(piv).swap(m.row(row));
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r != row && m(r, col) != 0) {
        Rational f = m(r, col) / m(row, col);
        for (Eigen::Index c = col; c < cols; ++c) m(r, c) -= f * m(row, c);
      }
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < cols; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  MatQ k(cols, static_cast<Eigen::Index>(free_cols.size()));
  for (Eigen::Index j = 0; j < k.cols(); ++j) {
    VecQ x = VecQ::Zero(cols);
    x(free_cols[j]) = 1;
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(pivot_col.size()); ++i) {
      x(pivot_col[i]) = -m(i, free_cols[j]) / m(i, pivot_col[i]);
    }
    k.col(j) = x;
  }
  return k;
}

namespace {

// Elementary row/column transforms keeping u * a * v = d in sync.
struct SmithWork {
  MatZ d, u, v;  // u tracks row ops, v column ops
  void swap_rows(Eigen::Index i, Eigen::Index j) {
    d.row(i).swap(d.row(j));
    u.row(i).swap(u.row(j));
  }
  void swap_cols(Eigen::Index i, Eigen::Index j) {
    d.col(i).swap(d.col(j));
    v.col(i).swap(v.col(j));
  }
  void add_row(Eigen::Index dst, Eigen::Index src, const Integer& f) {
    d.row(dst) += f * d.row(src);
    u.row(dst) += f * u.row(src);
  }
  void add_col(Eigen::Index dst, Eigen::Index src, const Integer& f) {
    d.col(dst) += f * d.col(src);
    v.col(dst) += f * v.col(src);
  }
  void negate_row(Eigen::Index i) {
    d.row(i) = -d.row(i);
    u.row(i) = -u.row(i);
  }
};

}  // namespace

SmithForm smith_form(const MatZ& a) {
  Eigen::Index rows = a.rows(), cols = a.cols();
  SmithWork w;
  w.d = a;
  w.u = MatZ::Identity(rows, rows);
  w.v = MatZ::Identity(cols, cols);

  Eigen::Index t = 0;
  Eigen::Index n = std::min(rows, cols);
  while (t < n) {
    // find pivot: smallest nonzero |entry| in the remaining block
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = t; i < rows; ++i) {
      for (Eigen::Index j = t; j < cols; ++j) {
        if (w.d(i, j) != 0) {
          if (pi < 0 || cmp(abs(w.d(i, j)), abs(w.d(pi, pj))) < 0) {
            pi = i;
            pj = j;
          }
        }
      }
    }
    if (pi < 0) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    bool clean = true;
    for (Eigen::Index i = t + 1; i < rows; ++i) {
      if (w.d(i, t) != 0) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), w.d(i, t).get_mpz_t(), w.d(t, t).get_mpz_t());
        w.add_row(i, t, -q);
        if (w.d(i, t) != 0) clean = false;
      }
    }
    for (Eigen::Index j = t + 1; j < cols; ++j) {
      if (w.d(t, j) != 0) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), w.d(t, j).get_mpz_t(), w.d(t, t).get_mpz_t());
        w.add_col(j, t, -q);
        if (w.d(t, j) != 0) clean = false;
      }
    }
    if (!clean) continue;  // re-pick a smaller pivot

    // divisibility sweep: pivot must divide the whole remaining block
    bool divides_all = true;
    for (Eigen::Index i = t + 1; i < rows && divides_all; ++i) {
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (w.d(i, j) % w.d(t, t) != 0) {
          w.add_row(t, i, 1);
          divides_all = false;
          break;
        }
      }
    }
    if (!divides_all) continue;
    if (w.d(t, t) < 0) w.negate_row(t);
    ++t;
  }

  SmithForm out;
  out.d = w.d;
  out.u = w.u;
  out.v = w.v;
  out.rank = static_cast<int>(t);
  // small unimodular inverses via exact rational solve
  auto invert_unimodular = [](const MatZ& m) {
    Eigen::Index k = m.rows();
    MatQ mq(k, k), id = MatQ::Identity(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
      for (Eigen::Index j = 0; j < k; ++j) mq(i, j) = Rational(m(i, j));
    MatZ inv(k, k);
    for (Eigen::Index j = 0; j < k; ++j) {
      auto col = solve(mq, id.col(j));
      for (Eigen::Index i = 0; i < k; ++i) inv(i, j) = col->operator()(i).get_num();
    }
    return inv;
  };
  out.u_inv = invert_unimodular(out.u);
  out.v_inv = invert_unimodular(out.v);
  return out;
}

MatZ hnf_columns(const MatZ& a) {
  MatZ m = a;
  Eigen::Index rows = m.rows(), cols = m.cols();
  std::vector<Eigen::Index> colid(cols);
  for (Eigen::Index j = 0; j < cols; ++j) colid[j] = j;
  Eigen::Index j = 0;
  for (Eigen::Index i = 0; i < rows; ++i) {
    Eigen::Index found = -1;
    for (Eigen::Index l = j; l < cols; ++l) {
      if (m(i, colid[l]) != 0) {
        found = l;
        break;
      }
    }
    if (found < 0) continue;
    std::swap(colid[j], colid[found]);
    if (m(i, colid[j]) < 0) m.col(colid[j]) = -m.col(colid[j]);
    for (Eigen::Index k = j + 1; k < cols; ++k) {
      if (m(i, colid[k]) == 0) continue;
      if (m(i, colid[k]) < 0) m.col(colid[k]) = -m.col(colid[k]);
      while (m(i, colid[j]) > 0 && m(i, colid[k]) > 0) {
        Integer t = m(i, colid[j]) / m(i, colid[k]);
        if (t != 0) m.col(colid[j]) -= m.col(colid[k]) * t;
        std::swap(colid[j], colid[k]);
      }
    }
    for (Eigen::Index k = 0; k < j; ++k) {
      Integer t;
      mpz_fdiv_q(t.get_mpz_t(), m(i, colid[k]).get_mpz_t(), m(i, colid[j]).get_mpz_t());
      if (t != 0) m.col(colid[k]) -= m.col(colid[j]) * t;
    }
    ++j;
  }
  MatZ out(rows, j);
  for (Eigen::Index c = 0; c < j; ++c) out.col(c) = m.col(colid[c]);
  return out;
}

std::optional<VecZ> solve_integer(const MatZ& a, const VecZ& b) {
  SmithForm s = smith_form(a);
  VecZ c = s.u * b;
  VecZ y = VecZ::Zero(a.cols());
  for (Eigen::Index i = 0; i < a.cols() && i < a.rows(); ++i) {
    if (i < s.rank) {
      if (c(i) % s.d(i, i) != 0) return std::nullopt;
      y(i) = c(i) / s.d(i, i);
    }
  }
  for (Eigen::Index i = s.rank; i < a.rows(); ++i) {
    if (c(i) != 0) return std::nullopt;
  }
  return VecZ(s.v * y);
}

MatZ integer_kernel(const MatZ& a) {
  SmithForm s = smith_form(a);
  Eigen::Index cols = a.cols();
  MatZ k(cols, cols - s.rank);
  for (Eigen::Index j = s.rank; j < cols; ++j) k.col(j - s.rank) = s.v.col(j);
  return k;
}

}  // namespace sphroot
