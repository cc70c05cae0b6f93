#include "jordan/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "jordan/error.hpp"

namespace jordan {

Partition::Partition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InvalidPartition("partition must have at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw InvalidPartition("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidPartition("partition parts must be weakly decreasing");
    n_ += parts_[i];
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<std::size_t> parts;
  std::string digits;
  auto flush = [&] {
    if (digits.empty()) return;
    if (digits.size() > 6) throw InvalidPartition("part too large: " + digits);
    parts.push_back(std::stoul(digits));
    digits.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
    } else if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      throw ParseError("unexpected character in partition: '" + std::string(text) + "'");
    }
  }
  flush();
  return Partition(std::move(parts));
}

bool Partition::has_distinct_parts() const {
  return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

std::string Partition::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::vector<Partition> partitions(std::size_t n) {
  if (n == 0) throw InvalidPartition("partitions of 0 are not indexed");
  std::vector<Partition> out;
  std::vector<std::size_t> current;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t remaining, std::size_t max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::size_t centralizer_dim(const Partition& p) {
  std::size_t total = 0;
  for (auto a : p.parts())
    for (auto b : p.parts()) total += std::min(a, b);
  return total;
}

std::size_t fiber_dim_formula(const Partition& p) {
  std::vector<std::size_t> ascending(p.parts().rbegin(), p.parts().rend());
  const std::size_t r = ascending.size();
  std::size_t total = 0;
  for (std::size_t i = 0; i < r; ++i) total += (2 * (r - i) - 1) * ascending[i];
  return total;
}

}  // namespace jordan
