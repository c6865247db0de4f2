#include "wg/partition.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "wg/errors.hpp"

namespace wg {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition: parts must be weakly decreasing");
    sum_ += parts_[i];
  }
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(token, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("partition: bad part '" + token + "'");
    }
    while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
    if (pos != token.size())
      throw std::invalid_argument("partition: bad part '" + token + "'");
    parts.push_back(value);
  }
  if (parts.empty()) throw std::invalid_argument("partition: empty string");
  return Partition(std::move(parts));
}

Partition Partition::doubled() const {
  std::vector<int> out(parts_);
  for (int& p : out) p *= 2;
  return Partition(std::move(out));
}

Partition Partition::interleaved() const {
  std::vector<int> out;
  out.reserve(parts_.size() * 2);
  for (int p : parts_) {
    out.push_back(p);
    out.push_back(p);
  }
  return Partition(std::move(out));
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition();
  std::vector<int> out(parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++out[j];
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

namespace {

void enumerate(int remaining, int max_part, std::vector<int>& stack,
               std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(stack));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    stack.push_back(p);
    enumerate(remaining - p, p, stack, out);
    stack.pop_back();
  }
}

struct PartitionLists {
  std::map<int, std::unique_ptr<std::vector<Partition>>> lists;
  std::map<int, std::map<Partition, int>> indices;
  std::mutex mu;
};

PartitionLists& lists() {
  static PartitionLists* instance = new PartitionLists;
  return *instance;
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
  if (n < 1) throw std::invalid_argument("partitions_of: n must be positive");
  auto& store = lists();
  std::lock_guard<std::mutex> lock(store.mu);
  auto it = store.lists.find(n);
  if (it == store.lists.end()) {
    auto list = std::make_unique<std::vector<Partition>>();
    std::vector<int> stack;
    enumerate(n, n, stack, *list);
    auto& index = store.indices[n];
    for (std::size_t i = 0; i < list->size(); ++i)
      index[(*list)[i]] = static_cast<int>(i);
    it = store.lists.emplace(n, std::move(list)).first;
  }
  return *it->second;
}

int partition_index(int n, const Partition& p) {
  if (p.sum() != n)
    throw std::invalid_argument("partition_index: size mismatch");
  partitions_of(n);
  auto& store = lists();
  std::lock_guard<std::mutex> lock(store.mu);
  return store.indices.at(n).at(p);
}

Int centralizer_order(const Partition& mu) {
  Int z = 1;
  int run = 0;
  for (int i = 0; i < mu.length(); ++i) {
    ++run;
    z *= mu.part(i);
    if (i + 1 == mu.length() || mu.part(i + 1) != mu.part(i)) {
      z *= factorial(run);
      run = 0;
    }
  }
  return z;
}

namespace {

long long to_long_checked(const Int& v, const char* what) {
  if (!v.fits_slong_p())
    throw unsupported_scale_error(std::string(what) + ": value overflows");
  return v.get_si();
}

}  // namespace

long long conjugacy_class_size(const Partition& mu) {
  Int size = factorial(mu.sum()) / centralizer_order(mu);
  return to_long_checked(size, "conjugacy_class_size");
}

long long irrep_dimension(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  Int hooks = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda.part(i); ++j)
      hooks *= (lambda.part(i) - j) + (conj.part(j) - i) - 1;
  Int dim = factorial(lambda.sum()) / hooks;
  return to_long_checked(dim, "irrep_dimension");
}

}  // namespace wg
