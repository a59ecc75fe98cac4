#include "bertrand/stability.hpp"

namespace bertrand::stability {

namespace {

BigRational Q(long n, long d = 1) {
  BigRational q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace

// Published sample points on the k1 = k2 = k slice: (c1, c2, k), stable,
// and the signs of the two boundary polynomials.
const std::vector<SampleRow>& sample_table(ExactAlpha a) {
  static const std::vector<SampleRow> half{
      {Q(1), Q(1, 4), Q(1), true, 1, 1},
      {Q(1), Q(5, 16), Q(1), true, 1, 1},
      {Q(1), Q(1, 4), Q(7), false, -1, 1},
      {Q(1), Q(5, 16), Q(10), false, -1, 1},
      {Q(1), Q(1, 4), Q(29), false, -1, -1},
      {Q(1), Q(5, 16), Q(30), false, -1, -1},
      {Q(1), Q(1, 4), Q(51), false, 1, -1},
      {Q(1), Q(5, 16), Q(51), false, 1, -1},
      {Q(1), Q(1, 2), Q(1), true, 1, 1},
      {Q(1), Q(7, 8), Q(1), true, 1, 1},
      {Q(1), Q(1, 2), Q(18), false, -1, 1},
      {Q(1), Q(7, 8), Q(38), false, -1, 1},
      {Q(1), Q(1, 2), Q(35), false, -1, -1},
      {Q(1), Q(7, 8), Q(51), false, -1, -1},
      {Q(1), Q(1, 2), Q(53), false, 1, -1},
      {Q(1), Q(7, 8), Q(65), false, 1, -1},
      {Q(1), Q(9, 8), Q(1), true, 1, 1},
      {Q(1), Q(2), Q(1), true, 1, 1},
      {Q(1), Q(9, 8), Q(49), false, -1, 1},
      {Q(1), Q(2), Q(70), false, -1, 1},
      {Q(1), Q(9, 8), Q(66), false, -1, -1},
      {Q(1), Q(2), Q(140), false, -1, -1},
      {Q(1), Q(9, 8), Q(83), false, 1, -1},
      {Q(1), Q(2), Q(209), false, 1, -1},
      {Q(1), Q(3), Q(1), true, 1, 1},
      {Q(1), Q(4), Q(1), true, 1, 1},
      {Q(1), Q(3), Q(91), false, -1, 1},
      {Q(1), Q(4), Q(112), false, -1, 1},
      {Q(1), Q(3), Q(272), false, -1, -1},
      {Q(1), Q(4), Q(462), false, -1, -1},
      {Q(1), Q(3), Q(453), false, 1, -1},
      {Q(1), Q(4), Q(811), false, 1, -1},
  };
  static const std::vector<SampleRow> third{
      {Q(1), Q(1, 4), Q(1, 512), true, -1, 1},
      {Q(1), Q(3, 8), Q(1, 128), true, -1, 1},
      {Q(1), Q(1, 4), Q(1), true, 1, 1},
      {Q(1), Q(3, 8), Q(1), true, 1, 1},
      {Q(1), Q(1, 4), Q(34), false, -1, 1},
      {Q(1), Q(3, 8), Q(64), false, -1, 1},
      {Q(1), Q(1, 4), Q(153), false, -1, -1},
      {Q(1), Q(3, 8), Q(175), false, -1, -1},
      {Q(1), Q(1, 4), Q(273), false, 1, -1},
      {Q(1), Q(3, 8), Q(287), false, 1, -1},
      {Q(1), Q(5, 8), Q(1, 32), true, -1, 1},
      {Q(1), Q(7, 8), Q(1, 128), true, -1, 1},
      {Q(1), Q(5, 8), Q(1), true, 1, 1},
      {Q(1), Q(7, 8), Q(1), true, 1, 1},
      {Q(1), Q(5, 8), Q(145), false, -1, 1},
      {Q(1), Q(7, 8), Q(244), false, -1, 1},
      {Q(1), Q(5, 8), Q(231), false, -1, -1},
      {Q(1), Q(7, 8), Q(302), false, -1, -1},
      {Q(1), Q(5, 8), Q(317), false, 1, -1},
      {Q(1), Q(7, 8), Q(361), false, 1, -1},
      {Q(1), Q(5, 4), Q(1, 32), true, -1, 1},
      {Q(1), Q(3, 2), Q(1, 16), true, -1, 1},
      {Q(1), Q(5, 4), Q(1), true, 1, 1},
      {Q(1), Q(3, 2), Q(1), true, 1, 1},
      {Q(1), Q(5, 4), Q(335), false, -1, 1},
      {Q(1), Q(3, 2), Q(362), false, -1, 1},
      {Q(1), Q(5, 4), Q(436), false, -1, -1},
      {Q(1), Q(3, 2), Q(544), false, -1, -1},
      {Q(1), Q(5, 4), Q(538), false, 1, -1},
      {Q(1), Q(3, 2), Q(726), false, 1, -1},
      {Q(1), Q(2), Q(1, 16), true, -1, 1},
      {Q(1), Q(3), Q(1, 16), true, -1, 1},
      {Q(1), Q(2), Q(1), true, 1, 1},
      {Q(1), Q(3), Q(1), true, 1, 1},
      {Q(1), Q(2), Q(403), false, -1, 1},
      {Q(1), Q(3), Q(471), false, -1, 1},
      {Q(1), Q(2), Q(804), false, -1, -1},
      {Q(1), Q(3), Q(1503), false, -1, -1},
      {Q(1), Q(2), Q(1205), false, 1, -1},
      {Q(1), Q(3), Q(2536), false, 1, -1},
  };
  return a == ExactAlpha::Half ? half : third;
}

}  // namespace bertrand::stability
