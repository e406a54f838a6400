// Copyright 2026 The perfmatch Authors.
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

#pragma once

#include "perfmatch/bounds.hpp"
#include "perfmatch/circulant.hpp"
#include "perfmatch/corpus.hpp"
#include "perfmatch/decomposition.hpp"
#include "perfmatch/embedding.hpp"
#include "perfmatch/errors.hpp"
#include "perfmatch/fullerene.hpp"
#include "perfmatch/graph.hpp"
#include "perfmatch/io.hpp"
#include "perfmatch/leapfrog.hpp"
#include "perfmatch/matching.hpp"
#include "perfmatch/matrix.hpp"
#include "perfmatch/numeric.hpp"
#include "perfmatch/pfaffian.hpp"
#include "perfmatch/polynomial.hpp"
#include "perfmatch/report.hpp"
