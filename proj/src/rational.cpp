#include "orbita/rational.hpp"

#include <sstream>

namespace orbita {

std::string rat_to_string(const Rat& x) {
  std::ostringstream os;
  os << numerator(x);
  if (denominator(x) != 1) os << "/" << denominator(x);
  return os.str();
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_neg(const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vec vec_scale(const Rat& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool vec_is_zero(const Vec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

std::string vec_to_string(const Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += rat_to_string(v[i]);
  }
  return s + "]";
}

Vec mat_vec(const Mat& m, const Vec& v) {
  Vec r(m.size(), Rat(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
  return r;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Mat r(n, Vec(m, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
  return r;
}

Mat mat_identity(std::size_t n) {
  Mat r(n, Vec(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

Rat mat_det(Mat m) {
  std::size_t n = m.size();
  Rat det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rat f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

std::optional<Mat> mat_inverse(Mat m) {
  std::size_t n = m.size();
  Mat inv = mat_identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Rat d = m[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      m[col][c] /= d;
      inv[col][c] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        m[r][c] -= f * m[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

std::optional<Vec> solve_linear(Mat m, Vec rhs) {
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[row]);
    std::swap(rhs[piv], rhs[row]);
    Rat d = m[row][col];
    for (std::size_t c = col; c < cols; ++c) m[row][c] /= d;
    rhs[row] /= d;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
      rhs[r] -= f * rhs[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r)
    if (rhs[r] != 0) return std::nullopt;
  Vec x(cols, Rat(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = rhs[i];
  return x;
}

Vec primitive_ray(const Vec& v) {
  Int lcm_den = 1;
  for (const auto& x : v) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
  std::vector<Int> w;
  Int g = 0;
  for (const auto& x : v) {
    Int e = numerator(x) * (lcm_den / denominator(x));
    w.push_back(e);
    g = boost::multiprecision::gcd(g, e);
  }
  if (g == 0) return Vec(v.size(), Rat(0));
  int lead = 1;
  for (const auto& e : w) {
    if (e != 0) {
      lead = e > 0 ? 1 : -1;
      break;
    }
  }
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(lead * w[i], g);
  return r;
}

Rat rat_sqrt_upper(const Rat& x, unsigned bits) {
  if (x < 0) throw std::domain_error("sqrt of negative rational");
  if (x == 0) return Rat(0);
  Int p = numerator(x), q = denominator(x);
  Int scale = Int(1) << bits;
  Int n = p * q * scale * scale;
  Int s = boost::multiprecision::sqrt(n);  // floor
  if (s * s == n) return Rat(s, q * scale);
  return Rat(s + 1, q * scale);
}

Rat rat_sqrt_lower(const Rat& x, unsigned bits) {
  if (x < 0) throw std::domain_error("sqrt of negative rational");
  if (x == 0) return Rat(0);
  Int p = numerator(x), q = denominator(x);
  Int scale = Int(1) << bits;
  Int n = p * q * scale * scale;
  Int s = boost::multiprecision::sqrt(n);
  return Rat(s, q * scale);
}

}  // namespace orbita
