#include "framecoh/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace framecoh {

namespace {

void require_two_rows(Index m, const char* what) {
  if (m < 2) throw std::invalid_argument(std::string(what) + ": bound undefined for M < 2");
}

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

double welch_bound(Index m, Index n) {
  if (m < 1 || n < 2) throw std::invalid_argument("welch_bound: need M >= 1 and N >= 2");
  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);
  const double ratio = (nd - md) / (md * (nd - 1.0));
  return std::copysign(std::sqrt(std::abs(ratio)), ratio);
}

double complex_bound(Index m, double n) {
  require_two_rows(m, "complex_bound");
  return 1.0 - 2.0 * std::pow(n, -1.0 / static_cast<double>(m - 1));
}

double half_integer_gamma(unsigned k) {
  if (k == 0) throw std::invalid_argument("half_integer_gamma: k must be >= 1");
  double g = (k % 2 == 0) ? 1.0 : std::sqrt(std::numbers::pi);
  for (unsigned j = (k % 2 == 0) ? 2 : 1; j + 2 <= k; j += 2) g *= 0.5 * j;
  return g;
}

double log_half_integer_gamma(unsigned k) {
  if (k == 0) throw std::invalid_argument("log_half_integer_gamma: k must be >= 1");
  double g = (k % 2 == 0) ? 0.0 : 0.5 * std::log(std::numbers::pi);
  for (unsigned j = (k % 2 == 0) ? 2 : 1; j + 2 <= k; j += 2) g += std::log(0.5 * j);
  return g;
}

double real_bound(Index m, double n) {
  require_two_rows(m, "real_bound");
  const auto k = static_cast<unsigned>(m);
  const double dim = static_cast<double>(m - 1);
  const double log_inner = std::log(dim) - std::log(n) - 0.5 * std::log(std::numbers::pi) +
                           log_half_integer_gamma(k - 1) - log_half_integer_gamma(k);
  return std::cos(std::numbers::pi * std::exp(log_inner / dim));
}

double bound_3d(Index n) {
  if (n < 1) throw std::invalid_argument("bound_3d: N must be >= 1");
  const double nd = static_cast<double>(n);
  return 1.0 - 4.0 / nd + 2.0 / (nd * nd);
}

double best_lower_bound(Index m, Index n, ScalarField field) {
  double best = welch_bound(m, n);
  if (m >= 2) {
    best = std::max(best, complex_bound(m, static_cast<double>(n)));
    if (field == ScalarField::Real) best = std::max(best, real_bound(m, static_cast<double>(n)));
  }
  if (m == 3 && field == ScalarField::Real) best = std::max(best, bound_3d(n));
  return best;
}

BoundTable bound_table(Index m, Index n_first, Index n_last) {
  if (n_first > n_last) throw std::invalid_argument("bound_table: empty N range");
  if (n_first < 2) throw std::invalid_argument("bound_table: N must be >= 2");
  BoundTable table{m, {}};
  for (Index n = n_first; n <= n_last; ++n) {
    BoundRow row;
    row.n = n;
    row.welch = welch_bound(m, n);
    if (m >= 2) {
      row.complex = complex_bound(m, static_cast<double>(n));
      row.real = real_bound(m, static_cast<double>(n));
    }
    if (m == 3) row.three_d = bound_3d(n);
    table.rows.push_back(row);
  }
  return table;
}

std::string to_csv(const BoundTable& table) {
  std::string out = "N,welch,complex,real,three_d\n";
  const auto opt = [](const std::optional<double>& v) { return v ? fmt12(*v) : std::string(); };
  for (const auto& r : table.rows) {
    out += std::to_string(r.n) + ',' + fmt12(r.welch) + ',' + opt(r.complex) + ',' + opt(r.real) + ',' +
           opt(r.three_d) + '\n';
  }
  return out;
}

std::string to_text(const BoundTable& table) {
  const auto cell = [](const std::optional<double>& v) {
    char buf[40];
    if (!v) {
      std::snprintf(buf, sizeof buf, "%16s", "-");
    } else {
      std::snprintf(buf, sizeof buf, "%14.9f%s", *v, *v <= 0.0 ? " *" : "  ");
    }
    return std::string(buf);
  };
  std::string out = "M = " + std::to_string(table.m) + "  (* = vacuous, bound <= 0)\n";
  char head[128];
  std::snprintf(head, sizeof head, "%5s%16s%16s%16s%16s\n", "N", "welch", "complex", "real", "three_d");
  out += head;
  for (const auto& r : table.rows) {
    char n[16];
    std::snprintf(n, sizeof n, "%5lld", static_cast<long long>(r.n));
    out += n + cell(r.welch) + cell(r.complex) + cell(r.real) + cell(r.three_d) + '\n';
  }
  return out;
}

}  // namespace framecoh
