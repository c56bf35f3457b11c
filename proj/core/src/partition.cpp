#include "rooksa/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rooksa {

IntegerPartition::IntegerPartition(std::vector<int> parts)
    : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) {
      throw std::invalid_argument("IntegerPartition: parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("IntegerPartition: parts must be decreasing");
    }
  }
}

IntegerPartition IntegerPartition::of(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  while (!parts.empty() && parts.back() == 0) {
    parts.pop_back();
  }
  return IntegerPartition(std::move(parts));
}

int IntegerPartition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string IntegerPartition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(parts_[i]);
  }
  out += ')';
  return out;
}

IntegerPartition IntegerPartition::parse(const std::string& text) {
  std::string body = text;
  std::size_t b = body.find_first_not_of(" \t");
  std::size_t e = body.find_last_not_of(" \t");
  if (b == std::string::npos) {
    return IntegerPartition{};
  }
  body = body.substr(b, e - b + 1);
  if (!body.empty() && body.front() == '(' && body.back() == ')') {
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> parts;
  std::stringstream ss(body);
  std::string field;
  while (std::getline(ss, field, ',')) {
    std::size_t fb = field.find_first_not_of(" \t");
    std::size_t fe = field.find_last_not_of(" \t");
    if (fb == std::string::npos) {
      throw std::invalid_argument("IntegerPartition: empty part in '" + text + "'");
    }
    field = field.substr(fb, fe - fb + 1);
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(field, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != field.size() || v < 1) {
      throw std::invalid_argument("IntegerPartition: bad part '" + field + "'");
    }
    parts.push_back(v);
  }
  return IntegerPartition(std::move(parts));
}

std::ostream& operator<<(std::ostream& os, const IntegerPartition& p) {
  return os << p.to_string();
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& prefix,
                     std::vector<IntegerPartition>& out) {
  if (remaining == 0) {
    out.push_back(IntegerPartition(prefix));
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    emit_partitions(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

std::vector<IntegerPartition> partitions(int k) {
  if (k < 0) {
    throw std::invalid_argument("partitions: negative weight");
  }
  std::vector<IntegerPartition> out;
  std::vector<int> prefix;
  emit_partitions(k, k == 0 ? 1 : k, prefix, out);
  return out;
}

} // namespace rooksa
