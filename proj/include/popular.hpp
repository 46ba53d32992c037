// Copyright 2026 The Authors.
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

#ifndef POPULAR_HPP_
#define POPULAR_HPP_

#include "popular/element_set.hpp"
#include "popular/error.hpp"
#include "popular/generators.hpp"
#include "popular/instance.hpp"
#include "popular/instance_io.hpp"
#include "popular/intersection.hpp"
#include "popular/matroid.hpp"
#include "popular/oracle.hpp"
#include "popular/reductions.hpp"
#include "popular/solver.hpp"

#endif  // POPULAR_HPP_
