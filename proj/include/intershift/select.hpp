#pragma once

// Order-statistic selection. The median-of-medians routine gives a worst-case
// linear bound; the introselect mode defers to std::nth_element, which is
// linear in expectation.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <iterator>
#include <utility>

namespace intershift {

enum class SelectionMode { kMedianOfMedians, kIntroselect };

namespace detail {

template <std::random_access_iterator It, class Compare>
void insertion_sort(It first, It last, Compare comp) {
  for (It i = first; i != last; ++i) {
    for (It j = i; j != first && comp(*j, *std::prev(j)); --j) std::iter_swap(j, std::prev(j));
  }
}

template <std::random_access_iterator It, class Compare>
void median_of_medians_select(It first, It nth, It last, Compare comp);

// Collects the median of every group of five at the front of the range and
// returns the median of those medians.
template <std::random_access_iterator It, class Compare>
std::iter_value_t<It> pivot_of_medians(It first, It last, Compare comp) {
  It out = first;
  for (It g = first; g < last; g += std::min<std::ptrdiff_t>(5, last - g)) {
    It g_end = g + std::min<std::ptrdiff_t>(5, last - g);
    insertion_sort(g, g_end, comp);
    std::iter_swap(out++, g + (g_end - g - 1) / 2);
  }
  const auto medians = out - first;
  It mid = first + (medians - 1) / 2;
  median_of_medians_select(first, mid, out, comp);
  return *mid;
}

template <std::random_access_iterator It, class Compare>
void median_of_medians_select(It first, It nth, It last, Compare comp) {
  while (last - first > 5) {
    const auto pivot = pivot_of_medians(first, last, comp);
    // Three-way partition: [first, lt) < pivot, [lt, gt) == pivot, [gt, last) > pivot.
    It lt = first, i = first, gt = last;
    while (i < gt) {
      if (comp(*i, pivot)) {
        std::iter_swap(lt++, i++);
      } else if (comp(pivot, *i)) {
        std::iter_swap(i, --gt);
      } else {
        ++i;
      }
    }
    if (nth < lt) {
      last = lt;
    } else if (nth >= gt) {
      first = gt;
    } else {
      return;
    }
  }
  insertion_sort(first, last, comp);
}

}  // namespace detail

/// Rearranges [first, last) so that *nth is the element a full sort would put
/// there, with no element after nth ordered before it and vice versa.
template <std::random_access_iterator It, class Compare = std::less<>>
void select_nth(It first, It nth, It last, SelectionMode mode = SelectionMode::kMedianOfMedians,
                Compare comp = {}) {
  if (first == last || nth == last) return;
  if (mode == SelectionMode::kIntroselect) {
    std::nth_element(first, nth, last, comp);
  } else {
    detail::median_of_medians_select(first, nth, last, comp);
  }
}

}  // namespace intershift
