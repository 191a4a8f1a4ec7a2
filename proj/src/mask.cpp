#include "theoria/mask.hpp"

#include <algorithm>

namespace theoria {

char mask_letter_char(MaskLetter l) {
  switch (l) {
    case MaskLetter::Free: return 'F';
    case MaskLetter::Fixed0: return '0';
    case MaskLetter::Fixed1: return '1';
  }
  return '?';
}

MaskWord mask_word_from_string(const std::string& s) {
  MaskWord w;
  w.reserve(s.size());
  for (char c : s) {
    if (c == 'F' || c == 'f')
      w.push_back(MaskLetter::Free);
    else if (c == '0')
      w.push_back(MaskLetter::Fixed0);
    else if (c == '1')
      w.push_back(MaskLetter::Fixed1);
    else
      fail(Errc::MalformedMask, std::string("bad mask character '") + c + "'");
  }
  return w;
}

std::string mask_word_to_string(const MaskWord& w) {
  std::string s;
  s.reserve(w.size());
  for (MaskLetter l : w) s.push_back(mask_letter_char(l));
  return s;
}

namespace {

std::size_t primitive_root_len(const MaskWord& w) {
  for (std::size_t d = 1; d <= w.size(); ++d) {
    if (w.size() % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < w.size() && ok; ++i) ok = (w[i] == w[i % d]);
    if (ok) return d;
  }
  return w.size();
}

}  // namespace

CubeMask::CubeMask(MaskWord prefix, MaskWord period) {
  if (period.empty()) fail(Errc::MalformedMask, "mask period must be nonempty");
  period.resize(primitive_root_len(period));
  while (!prefix.empty() && prefix.back() == period.back()) {
    prefix.pop_back();
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
  }
  if (std::find(period.begin(), period.end(), MaskLetter::Free) == period.end())
    fail(Errc::MalformedMask, "cube mask needs infinitely many Free positions (an F in the period)");
  prefix_ = std::move(prefix);
  period_ = std::move(period);
}

CubeMask CubeMask::parse(const std::string& text) {
  auto tilde = text.find('~');
  if (tilde == std::string::npos) fail(Errc::MalformedMask, "mask literal needs '~': " + text);
  return CubeMask(mask_word_from_string(text.substr(0, tilde)),
                  mask_word_from_string(text.substr(tilde + 1)));
}

MaskLetter CubeMask::at(std::uint64_t i) const {
  if (i < prefix_.size()) return prefix_[i];
  return period_[(i - prefix_.size()) % period_.size()];
}

std::string CubeMask::str() const {
  return mask_word_to_string(prefix_) + "~" + mask_word_to_string(period_);
}

bool CubeMask::period_has(MaskLetter l) const {
  return std::find(period_.begin(), period_.end(), l) != period_.end();
}

bool CubeMask::consistent(const TheoryPoint& p, std::uint64_t pos) const {
  switch (at(pos)) {
    case MaskLetter::Free: return true;
    case MaskLetter::Fixed0: return !p.bit_at(pos);
    case MaskLetter::Fixed1: return p.bit_at(pos);
  }
  return false;
}

CubeMask::Violations CubeMask::violations(const TheoryPoint& p) const {
  Violations out;
  std::uint64_t pre = std::max<std::uint64_t>(prefix_.size(), p.prefix().size());
  std::uint64_t l = lcm_guarded(period_.size(), p.period().size());
  for (std::uint64_t i = 0; i < pre + l; ++i) {
    if (consistent(p, i)) continue;
    if (i < pre) {
      out.positions.push_back(i);
    } else if (!out.periodic) {
      out.periodic = true;
      out.first_periodic = i;
    }
  }
  return out;
}

bool CubeMask::contains(const TheoryPoint& p) const {
  auto v = violations(p);
  return v.positions.empty() && !v.periodic;
}

std::uint64_t CubeMask::fixed_position(std::uint64_t k) const {
  std::vector<std::uint64_t> pre_fixed, per_fixed;
  for (std::uint64_t i = 0; i < prefix_.size(); ++i)
    if (prefix_[i] != MaskLetter::Free) pre_fixed.push_back(i);
  for (std::uint64_t i = 0; i < period_.size(); ++i)
    if (period_[i] != MaskLetter::Free) per_fixed.push_back(i);
  if (k < pre_fixed.size()) return pre_fixed[k];
  if (per_fixed.empty()) fail(Errc::MalformedMask, "mask period has no fixed positions");
  std::uint64_t k2 = k - pre_fixed.size();
  return prefix_.size() + (k2 / per_fixed.size()) * period_.size() + per_fixed[k2 % per_fixed.size()];
}

std::optional<std::uint64_t> CubeMask::fixed_index_of(std::uint64_t pos) const {
  if (at(pos) == MaskLetter::Free) return std::nullopt;
  std::uint64_t k = 0;
  if (pos < prefix_.size()) {
    for (std::uint64_t i = 0; i < pos; ++i)
      if (prefix_[i] != MaskLetter::Free) ++k;
    return k;
  }
  for (MaskLetter l : prefix_)
    if (l != MaskLetter::Free) ++k;
  std::uint64_t per_fixed = 0;
  for (MaskLetter l : period_)
    if (l != MaskLetter::Free) ++per_fixed;
  std::uint64_t off = pos - prefix_.size();
  k += (off / period_.size()) * per_fixed;
  for (std::uint64_t i = 0; i < off % period_.size(); ++i)
    if (period_[i] != MaskLetter::Free) ++k;
  return k;
}

std::uint64_t CubeMask::free_position(std::uint64_t k) const {
  std::vector<std::uint64_t> pre_free, per_free;
  for (std::uint64_t i = 0; i < prefix_.size(); ++i)
    if (prefix_[i] == MaskLetter::Free) pre_free.push_back(i);
  for (std::uint64_t i = 0; i < period_.size(); ++i)
    if (period_[i] == MaskLetter::Free) per_free.push_back(i);
  if (k < pre_free.size()) return pre_free[k];
  std::uint64_t k2 = k - pre_free.size();
  return prefix_.size() + (k2 / per_free.size()) * period_.size() + per_free[k2 % per_free.size()];
}

TheoryPoint CubeMask::dense_point(std::uint64_t j) const {
  // Default pattern: fixed letters as themselves, free coordinates 0;
  // that is periodic with the mask period. Low bits of j land on the
  // leading free coordinates.
  std::uint64_t top = 0;
  for (std::uint64_t b = 0; b < 64; ++b)
    if (j >> b & 1) top = free_position(b) + 1;
  // Keep the point's period aligned with the mask period phase.
  std::uint64_t pre_len = prefix_.size();
  if (top > pre_len)
    pre_len += (top - prefix_.size() + period_.size() - 1) / period_.size() * period_.size();
  Bits pre(pre_len, false);
  std::uint64_t free_seen = 0;
  for (std::uint64_t i = 0; i < pre_len; ++i) {
    MaskLetter l = at(i);
    if (l == MaskLetter::Fixed1) {
      pre[i] = true;
    } else if (l == MaskLetter::Free) {
      pre[i] = free_seen < 64 && ((j >> free_seen) & 1) != 0;
      ++free_seen;
    }
  }
  Bits per(period_.size(), false);
  for (std::uint64_t i = 0; i < period_.size(); ++i) per[i] = (period_[i] == MaskLetter::Fixed1);
  return TheoryPoint(std::move(pre), std::move(per));
}

std::optional<std::uint64_t> CubeMask::dense_index_of(const TheoryPoint& p) const {
  if (!contains(p)) return std::nullopt;
  // Finitely supported: free coordinates in the joint periodic zone must be 0.
  std::uint64_t pre = std::max<std::uint64_t>(prefix_.size(), p.prefix().size());
  std::uint64_t l = lcm_guarded(period_.size(), p.period().size());
  for (std::uint64_t i = pre; i < pre + l; ++i)
    if (at(i) == MaskLetter::Free && p.bit_at(i)) return std::nullopt;
  std::uint64_t j = 0;
  for (std::uint64_t k = 0;; ++k) {
    std::uint64_t pos = free_position(k);
    if (pos >= pre) break;
    if (p.bit_at(pos)) {
      if (k >= 64) fail(Errc::CapExceeded, "dense enumeration index exceeds 64 bits");
      j |= (std::uint64_t{1} << k);
    }
  }
  return j;
}

}  // namespace theoria
