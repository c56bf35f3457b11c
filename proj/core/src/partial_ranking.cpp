#include "rooksa/partial_ranking.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rooksa {

namespace {

void check_size(int n) {
  if (n < 0) {
    throw std::invalid_argument("PartialRanking: negative ambient size");
  }
}

} // namespace

PartialRanking PartialRanking::null_map(int n) {
  check_size(n);
  PartialRanking s;
  s.n_ = n;
  s.images_.assign(static_cast<std::size_t>(n), 0);
  return s;
}

PartialRanking PartialRanking::identity(int n) {
  PartialRanking s = null_map(n);
  for (int i = 1; i <= n; ++i) {
    s.images_[static_cast<std::size_t>(i - 1)] = i;
  }
  return s;
}

PartialRanking PartialRanking::from_images(int n, std::vector<int> images) {
  check_size(n);
  if (static_cast<int>(images.size()) != n) {
    throw std::invalid_argument("PartialRanking: image list has wrong length");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : images) {
    if (v < 0 || v > n) {
      throw std::invalid_argument("PartialRanking: image out of range");
    }
    if (v != 0) {
      if (seen[static_cast<std::size_t>(v)]) {
        throw std::invalid_argument("PartialRanking: images are not injective");
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  PartialRanking s;
  s.n_ = n;
  s.images_ = std::move(images);
  return s;
}

PartialRanking PartialRanking::from_pairs(
    int n, const std::vector<std::pair<int, int>>& maps) {
  std::vector<int> images(static_cast<std::size_t>(n), 0);
  for (auto [i, j] : maps) {
    if (i < 1 || i > n) {
      throw std::invalid_argument("PartialRanking: domain point out of range");
    }
    if (images[static_cast<std::size_t>(i - 1)] != 0) {
      throw std::invalid_argument("PartialRanking: repeated domain point");
    }
    images[static_cast<std::size_t>(i - 1)] = j;
  }
  return from_images(n, std::move(images));
}

int PartialRanking::rank() const {
  return static_cast<int>(
      std::count_if(images_.begin(), images_.end(), [](int v) { return v != 0; }));
}

bool PartialRanking::defined(int i) const { return image(i) != 0; }

int PartialRanking::image(int i) const {
  if (i < 1 || i > n_) {
    return 0;
  }
  return images_[static_cast<std::size_t>(i - 1)];
}

std::vector<int> PartialRanking::dom() const {
  std::vector<int> d;
  for (int i = 1; i <= n_; ++i) {
    if (defined(i)) {
      d.push_back(i);
    }
  }
  return d;
}

std::vector<int> PartialRanking::ran() const {
  std::vector<int> r;
  for (int v : images_) {
    if (v != 0) {
      r.push_back(v);
    }
  }
  std::sort(r.begin(), r.end());
  return r;
}

bool PartialRanking::is_idempotent() const {
  for (int i = 1; i <= n_; ++i) {
    if (defined(i) && image(i) != i) {
      return false;
    }
  }
  return true;
}

std::string PartialRanking::to_string() const {
  std::string out = "[";
  for (int i = 1; i <= n_; ++i) {
    if (i > 1) {
      out += ',';
    }
    if (defined(i)) {
      out += std::to_string(image(i));
    } else {
      out += '-';
    }
  }
  out += ']';
  return out;
}

PartialRanking PartialRanking::parse(const std::string& text) {
  std::size_t first = text.find_first_not_of(" \t");
  std::size_t last = text.find_last_not_of(" \t");
  if (first == std::string::npos || text[first] != '[' || text[last] != ']') {
    throw std::invalid_argument("PartialRanking: expected bracket list, got '" +
                                text + "'");
  }
  std::string body = text.substr(first + 1, last - first - 1);
  std::vector<int> images;
  if (body.find_first_not_of(" \t") != std::string::npos) {
    std::stringstream ss(body);
    std::string field;
    while (std::getline(ss, field, ',')) {
      std::size_t b = field.find_first_not_of(" \t");
      std::size_t e = field.find_last_not_of(" \t");
      if (b == std::string::npos) {
        throw std::invalid_argument("PartialRanking: empty entry in '" + text + "'");
      }
      field = field.substr(b, e - b + 1);
      if (field == "-") {
        images.push_back(0);
      } else {
        std::size_t pos = 0;
        int v = 0;
        try {
          v = std::stoi(field, &pos);
        } catch (const std::exception&) {
          pos = 0;
        }
        if (pos != field.size() || v <= 0) {
          throw std::invalid_argument("PartialRanking: bad entry '" + field +
                                      "' in '" + text + "'");
        }
        images.push_back(v);
      }
    }
    if (body.back() == ',') {
      throw std::invalid_argument("PartialRanking: trailing comma in '" + text + "'");
    }
  }
  int n = static_cast<int>(images.size());
  return from_images(n, std::move(images));
}

std::ostream& operator<<(std::ostream& os, const PartialRanking& s) {
  return os << s.to_string();
}

PartialRanking compose(const PartialRanking& s, const PartialRanking& t) {
  if (s.n() != t.n()) {
    throw std::invalid_argument("compose: mismatched ambient sizes");
  }
  std::vector<int> images(static_cast<std::size_t>(t.n()), 0);
  for (int x = 1; x <= t.n(); ++x) {
    int mid = t.image(x);
    if (mid != 0) {
      images[static_cast<std::size_t>(x - 1)] = s.image(mid);
    }
  }
  return PartialRanking::from_images(t.n(), std::move(images));
}

PartialRanking inverse(const PartialRanking& s) {
  std::vector<int> images(static_cast<std::size_t>(s.n()), 0);
  for (int x = 1; x <= s.n(); ++x) {
    if (s.defined(x)) {
      images[static_cast<std::size_t>(s.image(x) - 1)] = x;
    }
  }
  return PartialRanking::from_images(s.n(), std::move(images));
}

bool leq(const PartialRanking& t, const PartialRanking& s) {
  if (t.n() != s.n()) {
    throw std::invalid_argument("leq: mismatched ambient sizes");
  }
  for (int i = 1; i <= t.n(); ++i) {
    if (t.defined(i) && t.image(i) != s.image(i)) {
      return false;
    }
  }
  return true;
}

std::vector<PartialRanking> sub_rankings(const PartialRanking& s) {
  std::vector<int> d = s.dom();
  int k = static_cast<int>(d.size());
  std::vector<PartialRanking> out;
  out.reserve(static_cast<std::size_t>(1) << k);
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<std::pair<int, int>> maps;
    for (int i = 0; i < k; ++i) {
      if (mask & (1u << i)) {
        int x = d[static_cast<std::size_t>(i)];
        maps.emplace_back(x, s.image(x));
      }
    }
    out.push_back(PartialRanking::from_pairs(s.n(), maps));
  }
  return out;
}

int mobius(const PartialRanking& t, const PartialRanking& s) {
  if (!leq(t, s)) {
    throw std::invalid_argument("mobius: elements are not comparable");
  }
  return (s.rank() - t.rank()) % 2 == 0 ? 1 : -1;
}

PartialRanking order_preserving_bijection(int n, int k,
                                          const std::vector<int>& targets) {
  if (static_cast<int>(targets.size()) != k) {
    throw std::invalid_argument("order_preserving_bijection: |A| != k");
  }
  std::vector<int> sorted = targets;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::pair<int, int>> maps;
  maps.reserve(sorted.size());
  for (int i = 0; i < k; ++i) {
    maps.emplace_back(i + 1, sorted[static_cast<std::size_t>(i)]);
  }
  return PartialRanking::from_pairs(n, maps);
}

Permutation::Permutation(PartialRanking p) : p_(std::move(p)) {
  if (!p_.is_total()) {
    throw std::invalid_argument("Permutation: not a total bijection");
  }
}

Permutation Permutation::identity(int k) {
  return Permutation(PartialRanking::identity(k));
}

Permutation Permutation::from_one_line(std::vector<int> images) {
  int k = static_cast<int>(images.size());
  return Permutation(PartialRanking::from_images(k, std::move(images)));
}

std::ostream& operator<<(std::ostream& os, const Permutation& s) {
  return os << s.to_string();
}

Permutation compose(const Permutation& s, const Permutation& t) {
  return Permutation(compose(s.ranking(), t.ranking()));
}

Permutation inverse(const Permutation& s) {
  return Permutation(inverse(s.ranking()));
}

Permutation perm_type(const PartialRanking& s) {
  std::vector<int> d = s.dom();
  std::vector<int> r = s.ran();
  int k = static_cast<int>(d.size());
  std::vector<int> images(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i) {
    int value = s.image(d[static_cast<std::size_t>(i)]);
    auto it = std::lower_bound(r.begin(), r.end(), value);
    images[static_cast<std::size_t>(i)] = static_cast<int>(it - r.begin()) + 1;
  }
  return Permutation::from_one_line(std::move(images));
}

} // namespace rooksa
