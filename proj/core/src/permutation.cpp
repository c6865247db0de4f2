#include "wg/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "wg/errors.hpp"

namespace wg {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<bool> seen(n, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v - 1])
      throw std::invalid_argument("permutation: image list is not a bijection");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("permutation: negative degree");
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

namespace {

std::vector<std::vector<int>> parse_cycles(const std::string& text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::invalid_argument("permutation: expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    skip_space();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("permutation: bad cycle element");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      cycle.push_back(v);
      skip_space();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_space();
      }
    }
    if (i == text.size())
      throw std::invalid_argument("permutation: unterminated cycle");
    ++i;  // ')'
    cycles.push_back(std::move(cycle));
    skip_space();
  }
  return cycles;
}

}  // namespace

Permutation Permutation::parse(const std::string& text, int degree) {
  std::size_t first = text.find_first_not_of(" \t");
  if (first == std::string::npos)
    throw std::invalid_argument("permutation: empty string");

  if (text[first] == '(') {
    auto cycles = parse_cycles(text);
    int max_elem = 0;
    for (const auto& c : cycles)
      for (int v : c) {
        if (v < 1) throw std::invalid_argument("permutation: elements start at 1");
        max_elem = std::max(max_elem, v);
      }
    int n = std::max(degree, max_elem);
    Permutation result = identity(n);
    for (const auto& c : cycles) {
      std::vector<bool> seen(n, false);
      std::vector<int> img(n);
      std::iota(img.begin(), img.end(), 1);
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (seen[c[k] - 1])
          throw std::invalid_argument("permutation: repeated element in cycle");
        seen[c[k] - 1] = true;
        img[c[k] - 1] = c[(k + 1) % c.size()];
      }
      result = compose(result, Permutation(std::move(img)));
    }
    return result;
  }

  std::vector<int> images;
  std::string token;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    token = text.substr(start, comma == std::string::npos ? std::string::npos
                                                          : comma - start);
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(token, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("permutation: bad image '" + token + "'");
    }
    while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
    if (pos != token.size())
      throw std::invalid_argument("permutation: bad image '" + token + "'");
    images.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (degree > 0 && static_cast<int>(images.size()) != degree)
    throw std::invalid_argument("permutation: degree mismatch");
  return Permutation(std::move(images));
}

Permutation Permutation::with_cycle_type(const Partition& type) {
  std::vector<int> img(type.sum());
  int base = 0;
  for (int i = 0; i < type.length(); ++i) {
    const int len = type.part(i);
    for (int k = 0; k < len; ++k) img[base + k] = base + 1 + (k + 1) % len;
    base += len;
  }
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    img[images_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(img));
}

Partition Permutation::cycle_type() const {
  std::vector<bool> seen(images_.size(), false);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = images_[j] - 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return Partition(std::move(lengths));
}

int Permutation::sign() const {
  std::vector<bool> seen(images_.size(), false);
  int parity = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = images_[j] - 1;
      ++len;
    }
    parity ^= (len - 1) & 1;
  }
  return parity ? -1 : 1;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(images_[i]);
  }
  return s;
}

std::string Permutation::to_cycle_string() const {
  std::vector<bool> seen(images_.size(), false);
  std::string s;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == static_cast<int>(i) + 1) continue;
    s += '(';
    std::size_t j = i;
    bool head = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!head) s += ' ';
      s += std::to_string(j + 1);
      head = false;
      j = images_[j] - 1;
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> img(p.degree());
  for (int k = 1; k <= p.degree(); ++k) img[k - 1] = p(q(k));
  return Permutation(std::move(img));
}

std::vector<Permutation> all_permutations(int n) {
  if (n < 1) throw std::invalid_argument("all_permutations: n must be positive");
  if (n > 10)
    throw unsupported_scale_error("all_permutations: n > 10 not supported");
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace wg
