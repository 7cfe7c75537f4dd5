#include "dnacode/series.hpp"

#include <algorithm>
#include <string>

#include "dnacode/errors.hpp"

namespace dnacode {

TruncatedSeries::TruncatedSeries(std::size_t max_degree) : coeffs_(max_degree + 1) {}

TruncatedSeries TruncatedSeries::run_lengths(unsigned max_run, std::size_t max_degree) {
  TruncatedSeries t(max_degree);
  const std::size_t top = std::min<std::size_t>(max_run, max_degree);
  for (std::size_t i = 1; i <= top; ++i) t.coeffs_[i] = 1;
  return t;
}

const BigCount& TruncatedSeries::coefficient(std::size_t degree) const {
  if (degree > max_degree()) {
    throw DomainError("coefficient of x^" + std::to_string(degree) +
                      " requested past truncation degree " + std::to_string(max_degree()));
  }
  return coeffs_[degree];
}

void TruncatedSeries::set_coefficient(std::size_t degree, BigCount value) {
  if (degree > max_degree()) throw DomainError("degree past truncation");
  coeffs_[degree] = std::move(value);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  if (other.max_degree() < max_degree()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const BigCount& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  const std::size_t top = std::min(lhs.max_degree(), rhs.max_degree());
  TruncatedSeries out(top);
  for (std::size_t i = 0; i <= top; ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= top; ++j) {
      if (!rhs.coeffs_[j].is_zero()) out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::quasi_inverse() const {
  if (!coeffs_[0].is_zero()) throw DomainError("quasi-inverse needs a zero constant term");
  // g = 1 + f g  =>  g_n = sum_{k=1..n} f_k g_{n-k}
  TruncatedSeries g(max_degree());
  g.coeffs_[0] = 1;
  for (std::size_t n = 1; n <= max_degree(); ++n) {
    BigCount acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (!coeffs_[k].is_zero()) acc += coeffs_[k] * g.coeffs_[n - k];
    }
    g.coeffs_[n] = std::move(acc);
  }
  return g;
}

BiSeries::BiSeries(unsigned max_x_degree) : max_x_(max_x_degree) {}

BiSeries BiSeries::constant(const BigCount& value, unsigned max_x_degree) {
  BiSeries s(max_x_degree);
  s.add_term(0, 0, value);
  return s;
}

BiSeries BiSeries::run_lengths(unsigned max_run, unsigned max_x_degree, bool weight_per_symbol) {
  BiSeries s(max_x_degree);
  const unsigned top = std::min(max_run, max_x_degree);
  for (unsigned i = 1; i <= top; ++i) s.add_term(i, weight_per_symbol ? i : 0, 1);
  return s;
}

void BiSeries::add_term(unsigned x_degree, unsigned y_degree, const BigCount& value) {
  if (x_degree > max_x_ || value.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Exponent{x_degree, y_degree}, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BigCount BiSeries::coefficient(unsigned x_degree, unsigned y_degree) const {
  if (x_degree > max_x_) {
    throw DomainError("coefficient of x^" + std::to_string(x_degree) +
                      " requested past truncation degree " + std::to_string(max_x_));
  }
  const auto it = terms_.find(Exponent{x_degree, y_degree});
  return it == terms_.end() ? BigCount(0) : it->second;
}

BiSeries::Terms::const_iterator BiSeries::slice_begin(unsigned x_degree) const {
  return terms_.lower_bound(Exponent{x_degree, 0});
}

std::vector<BigCount> BiSeries::x_slice(unsigned x_degree) const {
  if (x_degree > max_x_) throw DomainError("x-slice past truncation degree");
  std::vector<BigCount> out(x_degree + 1);
  for (auto it = slice_begin(x_degree); it != terms_.end() && it->first.first == x_degree; ++it) {
    if (it->first.second >= out.size()) out.resize(it->first.second + 1);
    out[it->first.second] = it->second;
  }
  return out;
}

BiSeries& BiSeries::operator+=(const BiSeries& other) {
  max_x_ = std::min(max_x_, other.max_x_);
  terms_.erase(terms_.upper_bound(Exponent{max_x_, ~0u}), terms_.end());
  for (const auto& [e, c] : other.terms_) add_term(e.first, e.second, c);
  return *this;
}

BiSeries& BiSeries::operator*=(const BigCount& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

BiSeries operator*(const BiSeries& lhs, const BiSeries& rhs) {
  BiSeries out(std::min(lhs.max_x_, rhs.max_x_));
  for (const auto& [ea, ca] : lhs.terms_) {
    if (ea.first > out.max_x_) break;
    const unsigned room = out.max_x_ - ea.first;
    for (const auto& [eb, cb] : rhs.terms_) {
      if (eb.first > room) break;
      out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    }
  }
  return out;
}

BiSeries BiSeries::quasi_inverse() const {
  if (!terms_.empty() && terms_.begin()->first.first == 0) {
    throw DomainError("quasi-inverse needs every term to have positive x-degree");
  }
  // g = 1 + f g, filled one x-degree at a time; slice d only reads slices < d.
  BiSeries g = constant(1, max_x_);
  for (unsigned d = 1; d <= max_x_; ++d) {
    for (const auto& [ef, cf] : terms_) {
      if (ef.first > d) break;
      const unsigned source = d - ef.first;
      for (auto it = g.slice_begin(source); it != g.terms_.end() && it->first.first == source; ++it) {
        g.add_term(d, it->first.second + ef.second, cf * it->second);
      }
    }
  }
  return g;
}

}  // namespace dnacode
