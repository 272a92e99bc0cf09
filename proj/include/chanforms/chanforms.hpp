// Copyright 2026 The chanforms Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "chanforms/analysis.hpp"
#include "chanforms/basis.hpp"
#include "chanforms/canonical.hpp"
#include "chanforms/complex_matrix.hpp"
#include "chanforms/density.hpp"
#include "chanforms/eigen.hpp"
#include "chanforms/errors.hpp"
#include "chanforms/forms.hpp"
#include "chanforms/random.hpp"
#include "chanforms/zoo.hpp"
