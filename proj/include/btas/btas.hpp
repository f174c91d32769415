// Copyright 2026 The BTAS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BTAS_BTAS_HPP_
#define BTAS_BTAS_HPP_

#include "btas/apsp.hpp"
#include "btas/bench.hpp"
#include "btas/error.hpp"
#include "btas/graph_io.hpp"
#include "btas/matrix.hpp"
#include "btas/semiring.hpp"

#endif  // BTAS_BTAS_HPP_
