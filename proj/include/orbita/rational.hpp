#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbita {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Coordinate vector in the simple-root basis of the ambient torus.
using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

std::string rat_to_string(const Rat& x);
Rat parse_rat(const std::string& s);

// Lexicographic order, used as the canonical key order everywhere.
struct VecLess {
  bool operator()(const Vec& a, const Vec& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);
Vec vec_scale(const Rat& c, const Vec& a);
bool vec_is_zero(const Vec& a);
std::string vec_to_string(const Vec& v);

Vec mat_vec(const Mat& m, const Vec& v);
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_identity(std::size_t n);
Rat mat_det(Mat m);
std::optional<Mat> mat_inverse(Mat m);

// Solves m*x = rhs exactly; empty optional if inconsistent or singular.
std::optional<Vec> solve_linear(Mat m, Vec rhs);

// Reduce an integer vector to its primitive representative (gcd 1, first
// nonzero entry positive). Rational input is cleared of denominators first.
Vec primitive_ray(const Vec& v);

// Rational bounds on sqrt(x): lower <= sqrt(x) <= upper, tight to 2^-bits.
// Exact when x is the square of a rational.
Rat rat_sqrt_upper(const Rat& x, unsigned bits = 32);
Rat rat_sqrt_lower(const Rat& x, unsigned bits = 32);

}  // namespace orbita
