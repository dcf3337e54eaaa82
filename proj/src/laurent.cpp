#include "threepage/laurent.hpp"

#include <algorithm>
#include <stdexcept>

#include "threepage/kernels.hpp"

namespace threepage {

LaurentPoly::LaurentPoly(std::int64_t constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

LaurentPoly LaurentPoly::monomial(std::int64_t coefficient, int exponent) {
  LaurentPoly p(coefficient);
  if (!p.is_zero()) p.low_ = exponent;
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<int, std::int64_t>>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p.add_scaled(LaurentPoly(c), 1, e);
  return p;
}

std::int64_t LaurentPoly::coefficient(int exponent) const {
  const int i = exponent - low_;
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

std::vector<std::pair<int, std::int64_t>> LaurentPoly::terms() const {
  std::vector<std::pair<int, std::int64_t>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
  return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

LaurentPoly LaurentPoly::mirrored() const {
  LaurentPoly p;
  if (is_zero()) return p;
  p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  p.low_ = -max_exponent();
  return p;
}

void LaurentPoly::trim() {
  const auto& k = kernels::active();
  const std::size_t lead = k.first_nonzero(coeffs_.data(), coeffs_.size());
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t end = coeffs_.size();
  while (coeffs_[end - 1] == 0) --end;
  coeffs_.resize(end);
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
}

void LaurentPoly::add_scaled(const LaurentPoly& src, std::int64_t k, int shift) {
  if (src.is_zero() || k == 0) return;
  if (&src == this) {
    const LaurentPoly copy = src;
    add_scaled(copy, k, shift);
    return;
  }
  const int src_low = src.low_ + shift;
  const int src_high = src_low + static_cast<int>(src.coeffs_.size()) - 1;
  if (is_zero()) {
    low_ = src_low;
    coeffs_.assign(src.coeffs_.size(), 0);
  } else {
    const int new_low = std::min(low_, src_low);
    const int new_high = std::max(max_exponent(), src_high);
    if (new_low < low_) coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - new_low), 0);
    low_ = new_low;
    coeffs_.resize(static_cast<std::size_t>(new_high - new_low + 1), 0);
  }
  std::int64_t* dst = coeffs_.data() + (src_low - low_);
  const auto& kern = kernels::active();
  if (k == 1)
    kern.add(dst, src.coeffs_.data(), src.coeffs_.size());
  else if (k == -1)
    kern.sub(dst, src.coeffs_.data(), src.coeffs_.size());
  else
    kern.axpy(dst, src.coeffs_.data(), src.coeffs_.size(), k);
  if (coeffs_.front() == 0 || coeffs_.back() == 0) trim();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  add_scaled(o, 1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  add_scaled(o, -1);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const LaurentPoly& small = a.coeffs_.size() <= b.coeffs_.size() ? a : b;
  const LaurentPoly& large = &small == &a ? b : a;
  LaurentPoly out;
  out.low_ = small.low_ + large.low_;
  out.coeffs_.assign(small.coeffs_.size() + large.coeffs_.size() - 1, 0);
  const auto& kern = kernels::active();
  for (std::size_t i = 0; i < small.coeffs_.size(); ++i)
    if (small.coeffs_[i] != 0)
      kern.axpy(out.coeffs_.data() + i, large.coeffs_.data(), large.coeffs_.size(), small.coeffs_[i]);
  out.trim();
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) throw std::domain_error("negative power of a Laurent polynomial");
  LaurentPoly out(1);
  for (int i = 0; i < k; ++i) out *= *this;
  return out;
}

std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b) {
  // Compare from the highest exponent down so the order follows the printed form.
  const auto ta = a.terms();
  const auto tb = b.terms();
  return std::lexicographical_compare_three_way(ta.rbegin(), ta.rend(), tb.rbegin(), tb.rend());
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  const auto t = terms();
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    const auto [e, c] = *it;
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += "A";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

const LaurentPoly& loop_value() {
  static const LaurentPoly delta = LaurentPoly::from_terms({{2, -1}, {-2, -1}});
  return delta;
}

}  // namespace threepage
