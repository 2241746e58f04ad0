#pragma once

#include "yq/yangian.hpp"

namespace yq {

// Shifted tensor product V1 (x)_s V2. Fields:
//   xi(u)  -> xi_1(u-s) (x) xi_2(u)
//   x^+(u) -> x^+_1(u-s) (x) 1 + principal parts over sigma(x^+_2) of
//             (1/(u-v)) xi_1(v-s) (x) x^+_2(v)
//   x^-(u) -> principal parts over s + sigma(x^-_1) of
//             (1/(u-v)) x^-_1(v-s) (x) xi_2(v) + 1 (x) x^-_2(u)
// Precondition: (sigma(V1)+s) and sigma(V2) separated by at least margin.
YangianRep ytensor(const YangianRep& V1, const YangianRep& V2, cplx s,
                   double margin = 1e-6);

// Relative defect of the two bracketings of a triple product, evaluated on
// all generator fields at sample points.
double check_associativity(const YangianRep& V1, const YangianRep& V2, const YangianRep& V3,
                           cplx s1, cplx s2, int nsamples = 4);

}  // namespace yq
