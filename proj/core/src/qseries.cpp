#include "trisq/qseries.hpp"

namespace trisq {

template class Series<Rational>;
template class Series<Integer>;

}  // namespace trisq
