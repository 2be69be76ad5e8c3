#include "floer/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace floer {

namespace {

std::string power_string(char var, int k) {
  if (k == 0) return "";
  if (k == 1) return std::string(1, var);
  return std::string(1, var) + "^" + std::to_string(k);
}

}  // namespace

std::string Monomial::to_string() const {
  if (is_one()) return "1";
  return power_string('U', u_exp) + power_string('V', v_exp);
}

PolyUV::PolyUV(std::vector<Monomial> terms) {
  std::sort(terms.begin(), terms.end());
  // pairs cancel in characteristic 2
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) terms_.push_back(terms[i]);
    i = j;
  }
}

bool PolyUV::has_constant_term() const {
  return !terms_.empty() && terms_.front().is_one();
}

void PolyUV::toggle(const Monomial& m) {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m);
  if (it != terms_.end() && *it == m) {
    terms_.erase(it);
  } else {
    terms_.insert(it, m);
  }
}

PolyUV& PolyUV::operator+=(const PolyUV& o) {
  std::vector<Monomial> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::set_symmetric_difference(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
                                std::back_inserter(out));
  terms_ = std::move(out);
  return *this;
}

PolyUV operator*(const PolyUV& a, const PolyUV& b) {
  std::vector<Monomial> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) prod.push_back(x * y);
  }
  return PolyUV(std::move(prod));
}

PolyUV PolyUV::swapped() const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const auto& m : terms_) out.push_back({m.v_exp, m.u_exp});
  return PolyUV(std::move(out));
}

std::string PolyUV::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& m : terms_) {
    if (!s.empty()) s += " + ";
    s += m.to_string();
  }
  return s;
}

WPoly WPoly::monomial(int k) {
  if (k < 0) throw std::invalid_argument("negative exponent in WPoly::monomial");
  WPoly p;
  p.flip(k);
  return p;
}

bool WPoly::is_monomial() const {
  int count = 0;
  for (auto w : words_) count += std::popcount(w);
  return count == 1;
}

int WPoly::degree() const {
  if (words_.empty()) return -1;
  const auto top = words_.back();
  return static_cast<int>(64 * (words_.size() - 1)) + 63 - std::countl_zero(top);
}

int WPoly::valuation() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return static_cast<int>(64 * i) + std::countr_zero(words_[i]);
  }
  return -1;
}

bool WPoly::coeff(int k) const {
  if (k < 0) return false;
  const auto word = static_cast<std::size_t>(k / 64);
  if (word >= words_.size()) return false;
  return ((words_[word] >> (k % 64)) & 1U) != 0;
}

void WPoly::flip(int k) {
  const auto word = static_cast<std::size_t>(k / 64);
  if (word >= words_.size()) words_.resize(word + 1, 0);
  words_[word] ^= (std::uint64_t{1} << (k % 64));
  trim();
}

void WPoly::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

WPoly& WPoly::operator+=(const WPoly& o) {
  if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
  for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] ^= o.words_[i];
  trim();
  return *this;
}

WPoly operator*(const WPoly& a, const WPoly& b) {
  WPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  const int da = a.degree();
  for (int i = 0; i <= da; ++i) {
    if (a.coeff(i)) out += b.shifted_up(i);
  }
  return out;
}

WPoly WPoly::truncated(int n) const {
  if (n <= 0 || degree() < n) return *this;
  WPoly out = *this;
  const auto full = static_cast<std::size_t>(n / 64);
  out.words_.resize(full + 1, 0);
  const int rem = n % 64;
  out.words_[full] &= rem == 0 ? 0 : ((std::uint64_t{1} << rem) - 1);
  out.trim();
  return out;
}

WPoly WPoly::shifted_up(int k) const {
  if (k == 0 || is_zero()) return *this;
  WPoly out;
  const auto word_shift = static_cast<std::size_t>(k / 64);
  const int bit_shift = k % 64;
  out.words_.assign(words_.size() + word_shift + 1, 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out.words_[i + word_shift] ^= words_[i] << bit_shift;
    if (bit_shift != 0) out.words_[i + word_shift + 1] ^= words_[i] >> (64 - bit_shift);
  }
  out.trim();
  return out;
}

WPoly WPoly::shifted_down(int k) const {
  if (k == 0 || is_zero()) return *this;
  if (valuation() < k) throw std::logic_error("WPoly::shifted_down: not divisible");
  WPoly out;
  const int deg = degree();
  for (int i = k; i <= deg; ++i) {
    if (coeff(i)) out.flip(i - k);
  }
  return out;
}

WPoly WPoly::inverse_mod(int n) const {
  if (!coeff(0)) throw std::domain_error("WPoly::inverse_mod: not a unit");
  // b_0 = 1, b_i = sum_{j=1..i} a_j b_{i-j}
  std::vector<bool> b(static_cast<std::size_t>(std::max(n, 1)), false);
  b[0] = true;
  for (int i = 1; i < n; ++i) {
    bool acc = false;
    for (int j = 1; j <= i; ++j) {
      if (coeff(j) && b[static_cast<std::size_t>(i - j)]) acc = !acc;
    }
    b[static_cast<std::size_t>(i)] = acc;
  }
  WPoly out;
  for (int i = 0; i < n; ++i) {
    if (b[static_cast<std::size_t>(i)]) out.flip(i);
  }
  return out;
}

std::string WPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string s;
  const int deg = degree();
  for (int i = 0; i <= deg; ++i) {
    if (!coeff(i)) continue;
    if (!s.empty()) s += " + ";
    s += i == 0 ? std::string("1") : power_string(var, i);
  }
  return s;
}

}  // namespace floer
