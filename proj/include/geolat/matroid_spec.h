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

#ifndef GEOLAT_MATROID_SPEC_H_
#define GEOLAT_MATROID_SPEC_H_

#include <string>

#include "json.hpp"

#include "geolat/matroid.h"

namespace geolat {

// Reader/writer for "matroid-spec v1" JSON documents, e.g.
//   {"kind":"uniform","rank":3,"elements":4}
//   {"kind":"graphic","vertices":4,"edges":[[1,2],[1,3]]}
//   {"kind":"linear","prime":3,"vectors":[[1,0,0],[0,1,0]]}
//   {"kind":"flats","ground":4,"flats":[[],[1],[2],[1,2]]}
// Atom and vertex indices are 1-based. Any problem raises InputError.
Matroid matroid_from_json(const nlohmann::json& doc, const Limits& limits = {});
Matroid load_matroid_spec(const std::string& path, const Limits& limits = {});
nlohmann::json matroid_to_json(const Matroid& m);

}  // namespace geolat

#endif  // GEOLAT_MATROID_SPEC_H_
