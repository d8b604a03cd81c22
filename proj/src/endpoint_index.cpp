#include "intershift/endpoint_index.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace intershift {
namespace {

std::vector<double> compress(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

void EndpointIndex::Fenwick::add(std::size_t pos, long delta) {
  for (std::size_t i = pos + 1; i < tree_.size(); i += i & (~i + 1)) tree_[i] += delta;
}

long EndpointIndex::Fenwick::prefix(std::size_t count) const {
  long s = 0;
  for (std::size_t i = count; i > 0; i -= i & (~i + 1)) s += tree_[i];
  return s;
}

std::size_t EndpointIndex::Fenwick::lower_bound(long k) const {
  std::size_t pos = 0;
  std::size_t step = 1;
  while (step * 2 < tree_.size()) step *= 2;
  for (; step > 0; step /= 2) {
    if (pos + step < tree_.size() && tree_[pos + step] < k) {
      pos += step;
      k -= tree_[pos];
    }
  }
  return pos;
}

EndpointIndex::EndpointIndex(std::vector<double> universe)
    : values_(compress(std::move(universe))),
      all_(values_.size()),
      lefts_(values_.size()),
      rights_(values_.size()) {}

std::size_t EndpointIndex::slot(double value) const {
  auto it = std::lower_bound(values_.begin(), values_.end(), value);
  if (it == values_.end() || *it != value) {
    throw std::invalid_argument("endpoint outside the index universe");
  }
  return static_cast<std::size_t>(it - values_.begin());
}

void EndpointIndex::insert(const Interval& interval) {
  const auto l = slot(interval.left());
  const auto r = slot(interval.right());
  all_.add(l, 1);
  all_.add(r, 1);
  lefts_.add(l, 1);
  rights_.add(r, 1);
  size_ += 2;
}

void EndpointIndex::erase(const Interval& interval) {
  const auto l = slot(interval.left());
  const auto r = slot(interval.right());
  all_.add(l, -1);
  all_.add(r, -1);
  lefts_.add(l, -1);
  rights_.add(r, -1);
  size_ -= 2;
}

double EndpointIndex::select(std::size_t k) const {
  if (k < 1 || k > size_) {
    throw std::out_of_range("select(" + std::to_string(k) + ") on " + std::to_string(size_) +
                            " endpoints");
  }
  return values_[all_.lower_bound(static_cast<long>(k))];
}

std::size_t EndpointIndex::count_below(double x) const {
  return static_cast<std::size_t>(std::lower_bound(values_.begin(), values_.end(), x) -
                                  values_.begin());
}

std::size_t EndpointIndex::count_at_most(double x) const {
  return static_cast<std::size_t>(std::upper_bound(values_.begin(), values_.end(), x) -
                                  values_.begin());
}

std::size_t EndpointIndex::rank(double x) const {
  return static_cast<std::size_t>(all_.prefix(count_below(x)));
}

std::size_t EndpointIndex::count_between(double a, double b) const {
  if (!(a < b)) return 0;
  return static_cast<std::size_t>(all_.prefix(count_below(b)) - all_.prefix(count_at_most(a)));
}

std::size_t EndpointIndex::count_right_below(double x) const {
  return static_cast<std::size_t>(rights_.prefix(count_below(x)));
}

std::size_t EndpointIndex::count_left_above(double x) const {
  return static_cast<std::size_t>(lefts_.prefix(values_.size()) - lefts_.prefix(count_at_most(x)));
}

}  // namespace intershift
