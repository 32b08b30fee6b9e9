/*
   Copyright 2026 The pfaffcone Authors

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

#ifndef PFAFFCONE_PFAFFCONE_HPP
#define PFAFFCONE_PFAFFCONE_HPP

#include "coeff.hpp"
#include "hsiang.hpp"
#include "minimality.hpp"
#include "monomial.hpp"
#include "poly_matrix.hpp"
#include "polynomial.hpp"
#include "polynomial_io.hpp"
#include "report.hpp"
#include "singular.hpp"
#include "skew.hpp"
#include "version.hpp"

#endif  // PFAFFCONE_PFAFFCONE_HPP
