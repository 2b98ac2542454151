#include "invqm/linalg.hpp"

#include <algorithm>

namespace invqm {

MatQ to_rational(MatZ const& m) {
  MatQ q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      q(i, j) = Rat(m(i, j));
    }
  }
  return q;
}

MatZ to_integer(MatQ const& m) {
  MatZ z(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integral(m(i, j))) {
        throw PreconditionError("matrix entry " + to_string(m(i, j)) + " is not an integer");
      }
      z(i, j) = m(i, j).get_num();
    }
  }
  return z;
}

VecQ apply(MatQ const& m, VecQ const& v) {
  if (v.size() != m.cols()) {
    throw PreconditionError("matrix-vector dimension mismatch");
  }
  VecQ out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out[i] += m(i, j) * v[j];
    }
  }
  return out;
}

namespace {

  // Scales each row by the lcm of its denominators.
  MatZ clear_row_denominators(MatQ const& m) {
    MatZ z(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Int l = 1;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
      }
      for (std::size_t j = 0; j < m.cols(); ++j) {
        z(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
      }
    }
    return z;
  }

  // Fraction-free elimination in place; returns the rank. Every division is
  // exact because each entry is a minor of the original matrix.
  std::size_t bareiss(MatZ& m, Int* det_sign_out = nullptr) {
    std::size_t r = 0;
    Int prev = 1;
    int sign = 1;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
      std::size_t p = r;
      while (p < m.rows() && m(p, c) == 0) {
        ++p;
      }
      if (p == m.rows()) {
        continue;
      }
      if (p != r) {
        m.swap_rows(p, r);
        sign = -sign;
      }
      for (std::size_t i = r + 1; i < m.rows(); ++i) {
        for (std::size_t j = c + 1; j < m.cols(); ++j) {
          Int t = m(r, c) * m(i, j) - m(i, c) * m(r, j);
          mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
          m(i, j) = std::move(t);
        }
        m(i, c) = 0;
      }
      prev = m(r, c);
      ++r;
    }
    if (det_sign_out != nullptr) {
      *det_sign_out = sign;
    }
    return r;
  }

  Int content(VecQ const& v) {
    Int g = 0;
    for (auto const& x : v) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
    }
    return g;
  }

}  // namespace

std::size_t rank(MatZ const& m) {
  MatZ work = m;
  return bareiss(work);
}

std::size_t rank(MatQ const& m) {
  MatZ work = clear_row_denominators(m);
  return bareiss(work);
}

Int determinant(MatZ const& m) {
  if (!m.is_square()) {
    throw PreconditionError("determinant of a non-square matrix");
  }
  if (m.rows() == 0) {
    return 1;
  }
  MatZ work = m;
  Int sign;
  if (bareiss(work, &sign) < m.rows()) {
    return 0;
  }
  return sign * work(m.rows() - 1, m.cols() - 1);
}

std::pair<MatQ, std::vector<std::size_t>> rref(MatQ const& m) {
  MatQ r = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < r.cols() && row < r.rows(); ++c) {
    std::size_t p = row;
    while (p < r.rows() && r(p, c) == 0) {
      ++p;
    }
    if (p == r.rows()) {
      continue;
    }
    r.swap_rows(p, row);
    Rat const inv = 1 / r(row, c);
    for (std::size_t j = c; j < r.cols(); ++j) {
      r(row, j) *= inv;
    }
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, c) == 0) {
        continue;
      }
      Rat const factor = r(i, c);
      for (std::size_t j = c; j < r.cols(); ++j) {
        r(i, j) -= factor * r(row, j);
      }
    }
    pivots.push_back(c);
    ++row;
  }
  return {std::move(r), std::move(pivots)};
}

std::vector<VecQ> kernel_basis(MatQ const& m) {
  auto const [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) {
    is_pivot[c] = true;
  }
  std::vector<VecQ> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) {
      continue;
    }
    VecQ v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      v[pivots[k]] = -r(k, free);
    }
    Int l = 1;
    for (auto const& x : v) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
    for (auto& x : v) {
      x *= l;
    }
    Int const g = content(v);
    for (auto& x : v) {
      x /= g;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

VecZ SmithForm::diagonal() const {
  VecZ d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) {
    d.push_back(D(i, i));
  }
  return d;
}

namespace {

  void row_combine(MatZ& m, std::size_t target, std::size_t source, Int const& factor) {
    // row_target -= factor * row_source
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(source, j) != 0) {
        m(target, j) -= factor * m(source, j);
      }
    }
  }

  void col_combine(MatZ& m, std::size_t target, std::size_t source, Int const& factor) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (m(i, source) != 0) {
        m(i, target) -= factor * m(i, source);
      }
    }
  }

  Int floor_div(Int const& a, Int const& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }

}  // namespace

SmithForm smith_normal_form(MatZ const& a) {
  std::size_t const m = a.rows();
  std::size_t const n = a.cols();
  SmithForm s{MatZ::identity(m), a, MatZ::identity(n)};
  MatZ& d = s.D;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = m;
      std::size_t pj = n;
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (d(i, j) != 0 && (pi == m || abs(d(i, j)) < abs(d(pi, pj)))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == m) {
        return s;
      }
      if (pi != t) {
        d.swap_rows(pi, t);
        s.U.swap_rows(pi, t);
      }
      if (pj != t) {
        d.swap_cols(pj, t);
        s.V.swap_cols(pj, t);
      }

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) != 0) {
          Int const q = floor_div(d(i, t), d(t, t));
          row_combine(d, i, t, q);
          row_combine(s.U, i, t, q);
          clean = clean && d(i, t) == 0;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) != 0) {
          Int const q = floor_div(d(t, j), d(t, t));
          col_combine(d, j, t, q);
          col_combine(s.V, j, t, q);
          clean = clean && d(t, j) == 0;
        }
      }
      if (!clean) {
        continue;
      }

      // Enforce divisibility: pull a non-multiple into the pivot row.
      std::size_t bad_row = m;
      for (std::size_t i = t + 1; i < m && bad_row == m; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
        }
      }
      if (bad_row == m) {
        break;
      }
      row_combine(d, t, bad_row, Int(-1));
      row_combine(s.U, t, bad_row, Int(-1));
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) {
        d(t, j) = -d(t, j);
      }
      for (std::size_t j = 0; j < m; ++j) {
        s.U(t, j) = -s.U(t, j);
      }
    }
  }
  return s;
}

std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
  if (i < 1 || j <= i || j > n) {
    throw PreconditionError("invalid pair (" + std::to_string(i) + ", " + std::to_string(j)
                            + ") for rank " + std::to_string(n));
  }
  // Pairs starting with 1..i-1 precede (i, *).
  std::size_t const before = (i - 1) * n - (i - 1) * i / 2;
  return before + (j - i - 1);
}

std::vector<std::pair<std::size_t, std::size_t>> pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(choose2(n));
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      out.emplace_back(i, j);
    }
  }
  return out;
}

namespace {
  template <typename T>
  Matrix<T> exterior_square_impl(Matrix<T> const& a) {
    if (!a.is_square()) {
      throw PreconditionError("exterior square of a non-square matrix");
    }
    auto const ps = pairs(a.rows());
    Matrix<T> w(ps.size(), ps.size());
    for (std::size_t r = 0; r < ps.size(); ++r) {
      auto const [i, j] = ps[r];
      for (std::size_t c = 0; c < ps.size(); ++c) {
        auto const [k, l] = ps[c];
        w(r, c) = a(i - 1, k - 1) * a(j - 1, l - 1) - a(i - 1, l - 1) * a(j - 1, k - 1);
      }
    }
    return w;
  }
}  // namespace

MatQ exterior_square(MatQ const& a) { return exterior_square_impl(a); }
MatZ exterior_square(MatZ const& a) { return exterior_square_impl(a); }

MatZ symplectic_form(std::size_t l) {
  MatZ j(2 * l, 2 * l);
  for (std::size_t i = 0; i < l; ++i) {
    j(i, l + i) = 1;
    j(l + i, i) = -1;
  }
  return j;
}

bool is_symplectic(MatZ const& a) {
  if (!a.is_square() || a.rows() % 2 != 0) {
    throw PreconditionError("symplectic check needs an even-dimensional square matrix");
  }
  MatZ const j = symplectic_form(a.rows() / 2);
  return a.transpose() * j * a == j;
}

std::size_t fixed_space_dim(MatQ const& a) {
  if (!a.is_square()) {
    throw PreconditionError("fixed space of a non-square matrix");
  }
  return a.cols() - rank(MatQ::identity(a.rows()) - a);
}

}  // namespace invqm
