/*
   Copyright 2026 The divalg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DIVALG_VERIFY_PERIOD_FIELDS_HPP
#define DIVALG_VERIFY_PERIOD_FIELDS_HPP

#include <vector>

#include "divalg/numberfield.hpp"

namespace divalg::oracle {

/// The degree-d subfield of Q(zeta_p) generated by the Gaussian period
/// eta_0 = sum of zeta^h over the index-d subgroup h of (Z/pZ)^x, with
/// sigma(eta_j) = eta_{j+1}. Requires p prime and d | p - 1.
/// Computed exactly in Z[x]/(x^p - 1).
FieldPtr gaussian_period_field(long d, long p);

/// t^3 + t^2 - 2t - 1 with sigma(t) = t^2 - 2.
FieldPtr cubic7_field();

/// One cyclic field per degree 2..12: quadratic, cubic7, prime cyclotomic
/// where d + 1 is prime, Gaussian periods otherwise.
FieldPtr reference_field(long d);

}  // namespace divalg::oracle

#endif  // DIVALG_VERIFY_PERIOD_FIELDS_HPP
