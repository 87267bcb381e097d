#include "orbita/feasibility.hpp"

#include <algorithm>
#include <map>

namespace orbita {

namespace {

// Normalized key used to deduplicate constraints between elimination steps.
struct ConKey {
  Vec coeffs;
  Rat bound;
  bool strict;
  bool operator<(const ConKey& o) const {
    VecLess less;
    if (less(coeffs, o.coeffs)) return true;
    if (less(o.coeffs, coeffs)) return false;
    if (bound != o.bound) return bound < o.bound;
    return strict < o.strict;
  }
};

std::vector<LinearConstraint> dedupe(const std::vector<LinearConstraint>& cons) {
  std::map<ConKey, bool> seen;
  std::vector<LinearConstraint> out;
  for (const auto& c : cons) {
    Rat scale(0);
    for (const auto& x : c.coeffs)
      if (x != 0) {
        scale = abs(x);
        break;
      }
    if (scale == 0) scale = c.bound != 0 ? abs(c.bound) : Rat(1);
    LinearConstraint n = c;
    for (auto& x : n.coeffs) x /= scale;
    n.bound /= scale;
    ConKey key{n.coeffs, n.bound, n.strict};
    if (seen.emplace(key, true).second) out.push_back(n);
  }
  return out;
}

}  // namespace

std::optional<Vec> feasible_point(const std::vector<LinearConstraint>& constraints,
                                  std::size_t num_vars) {
  // levels[k] holds constraints involving only variables 0..k-1.
  std::vector<std::vector<LinearConstraint>> levels(num_vars + 1);
  levels[num_vars] = constraints;
  for (auto& c : levels[num_vars]) c.coeffs.resize(num_vars, Rat(0));

  for (std::size_t k = num_vars; k > 0; --k) {
    std::size_t v = k - 1;
    std::vector<LinearConstraint> lower, upper, rest;
    for (const auto& c : levels[k]) {
      if (c.coeffs[v] > 0)
        lower.push_back(c);
      else if (c.coeffs[v] < 0)
        upper.push_back(c);
      else
        rest.push_back(c);
    }
    // Combine each lower bound with each upper bound of x_v.
    for (const auto& lo : lower) {
      for (const auto& hi : upper) {
        LinearConstraint c;
        c.coeffs.assign(num_vars, Rat(0));
        Rat a = lo.coeffs[v];    // > 0
        Rat b = -hi.coeffs[v];   // > 0
        for (std::size_t j = 0; j < v; ++j)
          c.coeffs[j] = b * lo.coeffs[j] + a * hi.coeffs[j];
        c.bound = b * lo.bound + a * hi.bound;
        c.strict = lo.strict || hi.strict;
        rest.push_back(c);
      }
    }
    levels[k - 1] = dedupe(rest);
  }

  for (const auto& c : levels[0]) {
    // Constant constraint 0 >= bound (or >).
    if (c.bound > 0) return std::nullopt;
    if (c.bound == 0 && c.strict) return std::nullopt;
  }

  // Back-substitute, picking a value inside each variable's interval.
  Vec x(num_vars, Rat(0));
  for (std::size_t k = 1; k <= num_vars; ++k) {
    std::size_t v = k - 1;
    bool has_lo = false, has_hi = false, lo_strict = false, hi_strict = false;
    Rat lo(0), hi(0);
    for (const auto& c : levels[k]) {
      if (c.coeffs[v] == 0) continue;
      Rat rhs = c.bound;
      for (std::size_t j = 0; j < v; ++j) rhs -= c.coeffs[j] * x[j];
      Rat val = rhs / c.coeffs[v];
      if (c.coeffs[v] > 0) {
        if (!has_lo || val > lo) {
          lo = val;
          lo_strict = c.strict;
          has_lo = true;
        } else if (val == lo) {
          lo_strict = lo_strict || c.strict;
        }
      } else {
        if (!has_hi || val < hi) {
          hi = val;
          hi_strict = c.strict;
          has_hi = true;
        } else if (val == hi) {
          hi_strict = hi_strict || c.strict;
        }
      }
    }
    if (!has_lo && !has_hi) {
      x[v] = 0;
    } else if (has_lo && !has_hi) {
      x[v] = lo_strict ? lo + 1 : lo;
    } else if (!has_lo && has_hi) {
      x[v] = hi_strict ? hi - 1 : hi;
    } else {
      if (lo > hi) return std::nullopt;
      if (lo == hi) {
        if (lo_strict || hi_strict) return std::nullopt;
        x[v] = lo;
      } else {
        x[v] = (lo + hi) / 2;
      }
    }
  }
  return x;
}

}  // namespace orbita
