/*
   Copyright 2026 The fqcodes authors

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

#ifndef FQCODES_FQCODES_HPP
#define FQCODES_FQCODES_HPP

#include "decode.hpp"
#include "evaluation_code.hpp"
#include "families.hpp"
#include "galois.hpp"
#include "io.hpp"
#include "linear_code.hpp"
#include "lrc.hpp"
#include "matrix.hpp"
#include "multipoly.hpp"
#include "rng.hpp"
#include "unipoly.hpp"

#endif  // FQCODES_FQCODES_HPP
