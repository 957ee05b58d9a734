#include "mudef/trace/interval_set.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace mudef::trace {

namespace {

constexpr std::string_view kUnion = "\xE2\x88\xAA";  // U+222A
constexpr std::string_view kEmpty = "\xE2\x88\x85";  // U+2205

void skip_space(std::string_view& s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
}

double parse_number(std::string_view token, std::string_view whole) {
  while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
  while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw std::invalid_argument("interval set '" + std::string(whole) + "': bad number '" +
                                std::string(token) + "'");
  }
  return value;
}

std::string format_number(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

}  // namespace

IntervalSet::IntervalSet(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  for (const auto& iv : intervals_) {
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi)) {
      throw std::invalid_argument("interval endpoints must be finite");
    }
    if (!(iv.lo < iv.hi)) throw std::invalid_argument("interval needs lo < hi");
  }
  std::sort(intervals_.begin(), intervals_.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (std::size_t i = 1; i < intervals_.size(); ++i) {
    if (intervals_[i].lo <= intervals_[i - 1].hi) {
      throw std::invalid_argument("intervals of a set must be pairwise disjoint");
    }
  }
}

IntervalSet IntervalSet::parse(std::string_view text) {
  std::string_view s = text;
  skip_space(s);
  if (s == "{}" || s == kEmpty) return IntervalSet();
  std::vector<Interval> out;
  while (true) {
    skip_space(s);
    if (s.empty() || s.front() != '[') {
      throw std::invalid_argument("interval set '" + std::string(text) + "': expected '['");
    }
    const auto close = s.find(']');
    if (close == std::string_view::npos) {
      throw std::invalid_argument("interval set '" + std::string(text) + "': missing ']'");
    }
    const std::string_view body = s.substr(1, close - 1);
    const auto comma = body.find(',');
    if (comma == std::string_view::npos) {
      throw std::invalid_argument("interval set '" + std::string(text) + "': expected 'a,b'");
    }
    out.push_back({parse_number(body.substr(0, comma), text), parse_number(body.substr(comma + 1), text)});
    s.remove_prefix(close + 1);
    skip_space(s);
    if (s.empty()) break;
    if (s.front() == '+') {
      s.remove_prefix(1);
    } else if (s.substr(0, kUnion.size()) == kUnion) {
      s.remove_prefix(kUnion.size());
    } else {
      throw std::invalid_argument("interval set '" + std::string(text) + "': expected '+' or '∪'");
    }
  }
  return IntervalSet(std::move(out));
}

bool IntervalSet::contains_zero() const {
  return std::any_of(intervals_.begin(), intervals_.end(),
                     [](const Interval& iv) { return iv.lo <= 0.0 && 0.0 <= iv.hi; });
}

double IntervalSet::sup_abs() const {
  double m = 0.0;
  for (const auto& iv : intervals_) m = std::max({m, std::abs(iv.lo), std::abs(iv.hi)});
  return m;
}

IntervalSet IntervalSet::reflected() const {
  std::vector<Interval> out;
  out.reserve(intervals_.size());
  for (const auto& iv : intervals_) out.push_back({-iv.hi, -iv.lo});
  return IntervalSet(std::move(out));
}

std::vector<Interval> IntervalSet::split_at_zero() const {
  std::vector<Interval> out;
  for (const auto& iv : intervals_) {
    if (iv.lo < 0.0 && iv.hi > 0.0) {
      out.push_back({iv.lo, 0.0});
      out.push_back({0.0, iv.hi});
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

std::string IntervalSet::to_string() const {
  if (intervals_.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (i > 0) out += "+";
    out += "[" + format_number(intervals_[i].lo) + "," + format_number(intervals_[i].hi) + "]";
  }
  return out;
}

}  // namespace mudef::trace
