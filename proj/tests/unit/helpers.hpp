#ifndef DAUBLET_TEST_HELPERS_HPP
#define DAUBLET_TEST_HELPERS_HPP

#include <algorithm>

#include "daublet/closed_form.hpp"
#include "daublet/types.hpp"

namespace daublet {

inline SumOfSines sort_by_frequency(SumOfSines model) {
  std::stable_sort(model.terms.begin(), model.terms.end(),
                   [](const SineTerm& a, const SineTerm& b) {
                     return a.frequency < b.frequency;
                   });
  return model;
}

inline SumOfSines canonical_sorted_db4() {
  return sort_by_frequency(preset({Family::db4, Kind::wavelet}));
}

}  // namespace daublet

#endif
