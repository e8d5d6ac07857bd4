#include "knotforge/laurent.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace knotforge {

Laurent Laurent::term(int exponent, long long coefficient) {
  Laurent p;
  if (coefficient != 0) p.coeffs_[exponent] = coefficient;
  return p;
}

Laurent Laurent::from_coeffs(std::map<int, long long> coeffs) {
  Laurent p;
  p.coeffs_ = std::move(coeffs);
  for (auto it = p.coeffs_.begin(); it != p.coeffs_.end();) {
    it = (it->second == 0) ? p.coeffs_.erase(it) : std::next(it);
  }
  return p;
}

long long Laurent::coeff(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? 0 : it->second;
}

int Laurent::min_exponent() const {
  if (is_zero()) throw std::logic_error("min_exponent of zero polynomial");
  return coeffs_.begin()->first;
}

int Laurent::max_exponent() const {
  if (is_zero()) throw std::logic_error("max_exponent of zero polynomial");
  return coeffs_.rbegin()->first;
}

Laurent Laurent::operator-() const {
  Laurent p;
  for (const auto& [e, c] : coeffs_) p.coeffs_[e] = -c;
  return p;
}

Laurent& Laurent::operator+=(const Laurent& rhs) {
  for (const auto& [e, c] : rhs.coeffs_) {
    long long v = coeff(e) + c;
    if (v == 0) {
      coeffs_.erase(e);
    } else {
      coeffs_[e] = v;
    }
  }
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& rhs) { return *this += -rhs; }

Laurent operator*(const Laurent& lhs, const Laurent& rhs) {
  std::map<int, long long> out;
  for (const auto& [ea, ca] : lhs.coeffs_) {
    for (const auto& [eb, cb] : rhs.coeffs_) {
      out[ea + eb] += ca * cb;
    }
  }
  return Laurent::from_coeffs(std::move(out));
}

Laurent Laurent::shifted(int shift) const {
  Laurent p;
  for (const auto& [e, c] : coeffs_) p.coeffs_[e + shift] = c;
  return p;
}

Laurent Laurent::reflected() const {
  Laurent p;
  for (const auto& [e, c] : coeffs_) p.coeffs_[-e] = c;
  return p;
}

Laurent Laurent::canonical() const {
  if (is_zero()) return *this;
  Laurent p = shifted(-min_exponent());
  if (p.coeffs_.rbegin()->second < 0) p = -p;
  return p;
}

long long Laurent::eval_at(long long t) const {
  if (is_zero()) return 0;
  if (min_exponent() < 0) throw std::domain_error("eval_at needs nonnegative exponents");
  long long acc = 0;
  for (int e = max_exponent(); e >= 0; --e) {
    acc = acc * t + coeff(e);
  }
  return acc;
}

std::string Laurent::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto [e, c] = *it;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    long long a = c < 0 ? -c : c;
    if (a != 1 || e == 0) os << a;
    if (e != 0) {
      os << "t";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

bool poly_equal_up_to_units(const Laurent& p, const Laurent& q) {
  const Laurent cp = p.canonical();
  return cp == q.canonical() || cp == q.reflected().canonical();
}

Laurent laurent_div_exact(const Laurent& p, const Laurent& q) {
  if (q.is_zero()) throw std::domain_error("division by zero polynomial");
  if (p.is_zero()) return Laurent::zero();

  const int shift = p.min_exponent() - q.min_exponent();
  // Dense copies with minimum exponent zero.
  auto dense = [](const Laurent& f) {
    std::vector<long long> v(static_cast<size_t>(f.max_exponent() - f.min_exponent()) + 1, 0);
    for (const auto& [e, c] : f.coeffs()) v[static_cast<size_t>(e - f.min_exponent())] = c;
    return v;
  };
  std::vector<long long> r = dense(p);
  const std::vector<long long> d = dense(q);

  std::map<int, long long> quot;
  auto degree = [](const std::vector<long long>& v) {
    int deg = static_cast<int>(v.size()) - 1;
    while (deg >= 0 && v[static_cast<size_t>(deg)] == 0) --deg;
    return deg;
  };

  int rdeg = degree(r);
  const int ddeg = degree(d);
  while (rdeg >= ddeg) {
    const long long lead_r = r[static_cast<size_t>(rdeg)];
    const long long lead_d = d[static_cast<size_t>(ddeg)];
    if (lead_r % lead_d != 0) throw std::domain_error("laurent division is not exact");
    const long long f = lead_r / lead_d;
    const int off = rdeg - ddeg;
    for (int i = 0; i <= ddeg; ++i) {
      r[static_cast<size_t>(i + off)] -= f * d[static_cast<size_t>(i)];
    }
    quot[off] += f;
    rdeg = degree(r);
  }
  if (rdeg >= 0) throw std::domain_error("laurent division is not exact");
  return Laurent::from_coeffs(std::move(quot)).shifted(shift);
}

Laurent laurent_det(std::vector<std::vector<Laurent>> m) {
  const size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("laurent_det: matrix not square");
  }
  if (n == 0) return Laurent::one();

  int sign = 1;
  Laurent prev = Laurent::one();
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t pivot = k;
    while (pivot < n && m[pivot][k].is_zero()) ++pivot;
    if (pivot == n) return Laurent::zero();
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = laurent_div_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = Laurent::zero();
    }
    prev = m[k][k];
  }
  Laurent det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

}  // namespace knotforge
