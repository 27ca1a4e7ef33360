#include "slelab/algebra/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace slelab::algebra {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) {
      throw std::invalid_argument("Partition: parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("Partition: parts must be non-increasing");
    }
  }
  level_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::tail() const {
  if (parts_.empty()) {
    throw std::logic_error("Partition::tail on empty partition");
  }
  return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

Partition Partition::prepend(int k) const {
  std::vector<int> p;
  p.reserve(parts_.size() + 1);
  p.push_back(k);
  p.insert(p.end(), parts_.begin(), parts_.end());
  return Partition(std::move(p));
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) {
      os << ',';
    }
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    current.push_back(k);
    generate(remaining - k, k, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int level) {
  if (level < 0) {
    return {};
  }
  std::vector<Partition> out;
  std::vector<int> current;
  generate(level, level, current, out);
  return out;
}

}  // namespace slelab::algebra
