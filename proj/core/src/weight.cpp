#include "flagpoly/weight.hpp"

#include <charconv>
#include <sstream>

#include "flagpoly/errors.hpp"

namespace flagpoly {

Weight::Weight(std::vector<long> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw UsageError("weight needs at least one entry");
  for (std::size_t l = 0; l + 1 < entries_.size(); ++l) {
    if (entries_[l] < entries_[l + 1]) {
      std::ostringstream msg;
      msg << "weight is not dominant: lambda_" << l + 1 << " = " << entries_[l] << " < lambda_" << l + 2
          << " = " << entries_[l + 1];
      throw UsageError(msg.str());
    }
  }
}

Weight Weight::parse(std::string_view text) {
  std::vector<long> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view part = text.substr(pos, comma - pos);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    long v = 0;
    auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || end != part.data() + part.size()) {
      throw UsageError("cannot parse weight entry '" + std::string(part) + "'");
    }
    values.push_back(v);
    pos = comma + 1;
  }
  return Weight(std::move(values));
}

bool Weight::is_strict() const {
  for (std::size_t l = 0; l + 1 < entries_.size(); ++l) {
    if (entries_[l] == entries_[l + 1]) return false;
  }
  return true;
}

Weight Weight::scaled(long m) const {
  if (m < 0) throw UsageError("weight scale must be nonnegative");
  std::vector<long> e = entries_;
  for (auto& x : e) x *= m;
  return Weight(std::move(e));
}

RatVector Weight::to_rational() const {
  RatVector out;
  for (long x : entries_) out.emplace_back(x);
  return out;
}

std::string Weight::to_string() const {
  std::string out = "(";
  for (std::size_t l = 0; l < entries_.size(); ++l) {
    if (l) out += ",";
    out += std::to_string(entries_[l]);
  }
  return out + ")";
}

Weight fundamental_weight(std::size_t n, std::size_t r) {
  if (r == 0 || r >= n) throw UsageError("fundamental weight index must lie in 1..n-1");
  std::vector<long> e(n, 0);
  for (std::size_t l = 0; l < r; ++l) e[l] = 1;
  return Weight(std::move(e));
}

std::vector<Weight> dominant_weights(std::size_t n, long spread) {
  if (n == 0) throw UsageError("n must be positive");
  std::vector<Weight> out;
  std::vector<long> e(n, 0);
  // Enumerate weakly decreasing sequences from position 0.
  auto rec = [&](auto&& self, std::size_t pos, long cap) -> void {
    if (pos + 1 == n) {
      e[pos] = 0;
      out.emplace_back(e);
      return;
    }
    for (long v = cap; v >= 0; --v) {
      e[pos] = v;
      self(self, pos + 1, v);
    }
  };
  rec(rec, 0, spread);
  return out;
}

}  // namespace flagpoly
